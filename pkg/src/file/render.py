# Copyright (c) Opendatalab. All rights reserved.

"""表示与分解结果的文本输出（plain / cas / json）及其反向解析"""

import json
import re
from typing import Any, Dict, List, Sequence

from src.decompose.models import DecompositionTree, spell_to_text
from src.graph.core import Edge
from src.group.models import Generator, GroupPresentation, PresentationKind
from src.group.words import Word, as_commutator
from src.utils.errors import GraphParseError, MalformedLineError

PRESENTATION_FORMATS = ("plain", "cas", "json")
CAS_PATTERN = re.compile(r"^Group<(?P<gens>[^|]*)\|(?P<rels>[^>]*)>$")


def _letters(letters: Sequence[int], names: Sequence[str], sep: str = " ") -> str:
    if not letters:
        return "1"
    out = []
    for x in letters:
        name = names[abs(x) - 1]
        out.append(name if x > 0 else f"{name}^-1")
    return sep.join(out)


def _plain_relator(r: Word, names: Sequence[str]) -> str:
    a, b = as_commutator(r.letters)
    if a:
        return f"[{_letters(a, names)},{_letters(b, names)}]"
    return _letters(r.letters, names)


def emit_presentation(p: GroupPresentation, fmt: str = "plain") -> str:
    names = p.generator_names
    if fmt == "plain":
        lines = []
        status = p.metadata.get("simply_connected")
        if status is not None and status != "yes":
            lines.append(f"# simply connected: {status} (hypothesis not verified)")
        lines.append("gens: " + ", ".join(names))
        lines.extend(f"rel: {_plain_relator(r, names)}" for r in p.relators)
        return "\n".join(lines) + "\n"
    if fmt == "cas":
        rels = ", ".join(_letters(r.letters, names, sep="*") for r in p.relators)
        return f"Group<{', '.join(names)} | {rels}>\n"
    if fmt == "json":
        return json.dumps(p.to_dict(), ensure_ascii=False, indent=2) + "\n"
    raise ValueError(f"unknown presentation format {fmt!r}")


def _parse_letters(text: str, index: Dict[str, int], line: int, sep: str = None) -> Word:
    text = text.strip()
    if text in ("", "1"):
        return Word()
    letters = []
    for token in text.split(sep):
        token = token.strip()
        name, inverse = (token[:-3], True) if token.endswith("^-1") else (token, False)
        if name not in index:
            raise MalformedLineError(f"unknown generator {name!r}", line)
        letters.append(-(index[name] + 1) if inverse else index[name] + 1)
    return Word(tuple(letters))


def _parse_plain(text: str) -> GroupPresentation:
    names: List[str] = []
    index: Dict[str, int] = {}
    relators: List[Word] = []
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("gens:"):
            names = [x.strip() for x in line[len("gens:"):].split(",") if x.strip()]
            index = {name: i for i, name in enumerate(names)}
        elif line.startswith("rel:"):
            body = line[len("rel:"):].strip()
            if body.startswith("[") and body.endswith("]"):
                left, comma, right = body[1:-1].partition(",")
                if not comma:
                    raise MalformedLineError("commutator needs two entries", number)
                a, b = _parse_letters(left, index, number), _parse_letters(right, index, number)
                relators.append(a * b * a.inverse() * b.inverse())
            else:
                relators.append(_parse_letters(body, index, number))
        else:
            raise MalformedLineError(f"unexpected line {line!r}", number)
    return GroupPresentation(tuple(Generator(n) for n in names), tuple(relators))


def _parse_cas(text: str) -> GroupPresentation:
    match = CAS_PATTERN.match(text.strip())
    if match is None:
        raise MalformedLineError("expected Group<gens | rels>", 1)
    names = [x.strip() for x in match.group("gens").split(",") if x.strip()]
    index = {name: i for i, name in enumerate(names)}
    relators = tuple(_parse_letters(r, index, 1, sep="*") for r in match.group("rels").split(",") if r.strip())
    return GroupPresentation(tuple(Generator(n) for n in names), relators)


def _parse_json(text: str) -> GroupPresentation:
    data = json.loads(text)
    generators = []
    for item in data["generators"]:
        edge = item.get("edge")
        generators.append(Generator(item["name"], Edge.of(*edge) if edge else None, item.get("vertex")))
    relators = tuple(Word(tuple(r)) for r in data["relators"])
    return GroupPresentation(tuple(generators), relators, PresentationKind(data["kind"]), data.get("metadata", {}))


def parse_presentation(text: str, fmt: str = "plain") -> GroupPresentation:
    """读回 emit_presentation 的输出；plain 与 cas 只恢复生成元名称与关系子"""
    if fmt == "plain":
        return _parse_plain(text)
    if fmt == "cas":
        return _parse_cas(text)
    if fmt == "json":
        try:
            return _parse_json(text)
        except (KeyError, ValueError) as exc:
            raise GraphParseError(f"malformed presentation JSON: {exc}") from exc
    raise ValueError(f"unknown presentation format {fmt!r}")


def emit_decomposition(d: DecompositionTree, fmt: str = "plain") -> str:
    if fmt == "json":
        return json.dumps(d.to_dict(), ensure_ascii=False, indent=2) + "\n"
    lines = [
        f"H = {d.expression()}",
        f"  = {d.expression(detailed=True)}",
        f"witness tree: {', '.join(d.witness_tree.names()) if d.witness_tree is not None else '-'}",
        f"Z^2 leaves: {d.z2_leaf_count}",
    ]
    for step, peel in enumerate(d.peels, 1):
        tri = ", ".join(peel.z2.metadata.get("triangle", []))
        lines.append(f"step {step}: peel ({tri}), glue {spell_to_text(peel.left_word)} = {spell_to_text(peel.right_word)}")
    for k, leaf in enumerate(d.leaves(), 1):
        lines.append(f"leaf {k} {leaf.label}:")
        lines.extend("  " + x for x in emit_presentation(leaf.presentation, "plain").splitlines())
    return "\n".join(lines) + "\n"


def render_report(report: Dict[str, Any], indent: int = 0) -> str:
    """嵌套字典的缩进文本形式，键顺序保持插入顺序"""
    lines = []
    pad = "  " * indent
    for key, value in report.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_report(value, indent + 1).rstrip("\n"))
        elif isinstance(value, (list, tuple)):
            lines.append(f"{pad}{key}: {', '.join(str(x) for x in value) if value else '-'}")
        else:
            lines.append(f"{pad}{key}: {'-' if value is None else value}")
    return "\n".join(x for x in lines if x) + "\n"
