# Copyright (c) Opendatalab. All rights reserved.

"""图文件解析：边表格式与 DOT 子集"""

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from loguru import logger

from src.graph.core import Edge, SimplicialGraph
from src.graph.trees import SpanningTree
from src.utils.errors import (DuplicateEdgeError, DuplicateVertexError, EmptyInputError, GraphParseError,
                              InvalidTreeError, LoopError, MalformedLineError, UnknownVertexError)

NAME_PATTERN = re.compile(r"^[A-Za-z0-9_]+$")
DOT_HEADER = re.compile(r"^\s*(strict\s+)?graph\b[^{]*\{", re.IGNORECASE)
DOT_ATTRIBUTES = re.compile(r"\[[^\]]*\]")


@dataclass
class GraphDocument:
    """解析结果：图、顶点名表以及来源"""
    graph: SimplicialGraph
    names: Tuple[str, ...]
    source: str = "<string>"
    fmt: str = "edges"

    def to_text(self) -> str:
        """规范边表形式：顶点头行加按字典序排列的边"""
        lines = ["vertices: " + " ".join(self.names)]
        lines.extend(f"{self.names[e.lo]} {self.names[e.hi]}" for e in self.graph.edges)
        return "\n".join(lines) + "\n"


class _Builder:
    """按首次出现（或顶点头行）给顶点编号，同时检查自环与重边"""

    def __init__(self):
        self.names: List[str] = []
        self.index: Dict[str, int] = {}
        self.edges: Dict[Edge, int] = {}
        self.fixed = False

    def declare(self, name: str, line: int) -> int:
        if not NAME_PATTERN.match(name):
            raise MalformedLineError(f"invalid vertex name {name!r}", line)
        if name not in self.index:
            if self.fixed:
                raise UnknownVertexError(f"vertex {name!r} is not in the vertices header", line)
            self.index[name] = len(self.names)
            self.names.append(name)
        return self.index[name]

    def header(self, names: List[str], line: int) -> None:
        for name in names:
            if name in self.index:
                raise DuplicateVertexError(f"vertex {name!r} listed twice in the header", line)
            self.declare(name, line)
        self.fixed = True

    def edge(self, u: str, v: str, line: int) -> None:
        if u == v:
            raise LoopError(f"loop at vertex {u!r}", line)
        a, b = self.declare(u, line), self.declare(v, line)
        edge = Edge.of(a, b)
        if edge in self.edges:
            raise DuplicateEdgeError(f"edge {u} {v} already given on line {self.edges[edge]}", line)
        self.edges[edge] = line

    def build(self, source: str, fmt: str) -> GraphDocument:
        if not self.names:
            raise EmptyInputError("input contains no vertices")
        graph = SimplicialGraph(len(self.names), self.edges.keys(), self.names)
        logger.info(f"读取图 {source}：{graph.vertex_count} 个顶点，{len(graph.edges)} 条边")
        return GraphDocument(graph, tuple(self.names), source, fmt)


def _parse_edges(text: str, source: str) -> GraphDocument:
    builder = _Builder()
    seen_content = False
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("vertices:"):
            if seen_content:
                raise MalformedLineError("the vertices header must come before every edge", number)
            builder.header(line[len("vertices:"):].split(), number)
            seen_content = True
            continue
        seen_content = True
        tokens = line.split()
        if len(tokens) != 2:
            raise MalformedLineError(f"expected two vertex names, got {len(tokens)}", number)
        builder.edge(tokens[0], tokens[1], number)
    return builder.build(source, "edges")


def _parse_dot(text: str, source: str) -> GraphDocument:
    """只认无向图：`graph [name] { a -- b -- c; d; }`，属性方括号忽略"""
    builder = _Builder()
    opened = closed = False
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("//", 1)[0].strip()
        if not line or line.startswith("#"):
            continue
        if not opened:
            match = DOT_HEADER.match(line)
            if match is None:
                raise MalformedLineError("expected `graph {` header", number)
            opened = True
            line = line[match.end():]
        if "}" in line:
            line, closed = line.split("}", 1)[0], True
        for statement in DOT_ATTRIBUTES.sub("", line).split(";"):
            statement = statement.strip()
            if not statement or "=" in statement or statement.split()[0] in ("node", "edge", "graph"):
                continue
            if "->" in statement:
                raise MalformedLineError("directed edges are not supported", number)
            parts = [p.strip().strip('"') for p in statement.split("--")]
            if len(parts) == 1:
                builder.declare(parts[0], number)
            for u, v in zip(parts, parts[1:]):
                builder.edge(u, v, number)
        if closed:
            break
    if not opened:
        raise EmptyInputError("input contains no graph")
    return builder.build(source, "dot")


def parse_graph(text: str, fmt: str = "edges", source: str = "<string>") -> GraphDocument:
    if fmt == "dot":
        return _parse_dot(text, source)
    if fmt != "edges":
        raise ValueError(f"unknown graph format {fmt!r}")
    return _parse_edges(text, source)


def guess_format(path: str) -> str:
    return "dot" if Path(path).suffix.lower() in (".dot", ".gv") else "edges"


def load_graph(path: str, fmt: Optional[str] = None) -> GraphDocument:
    """从文件读取；未指定格式时按后缀判断"""
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except UnicodeDecodeError as e:
        raise GraphParseError(f"{path}: not valid UTF-8 at byte {e.start}")
    return parse_graph(text, fmt or guess_format(path), source=path)


def parse_tree_spec(g: SimplicialGraph, text: str) -> SpanningTree:
    """解析 `e1,e3,...` 或 `u-v,...` 形式的生成树；e<k> 指根图边表中的第 k 条边"""
    by_label = {}
    for e in g.edges:
        by_label[(g.label(e.lo), g.label(e.hi))] = e
        by_label[(g.label(e.hi), g.label(e.lo))] = e
    root = g.root
    edges = []
    for token in re.split(r"[,\s]+", text.strip()):
        if not token:
            continue
        if "-" in token:
            u, _, v = token.partition("-")
            edge = by_label.get((u, v))
        elif re.fullmatch(r"e\d+", token) and 1 <= int(token[1:]) <= len(root.edges):
            edge = g.from_host_edge(root.edges[int(token[1:]) - 1])
        else:
            edge = None
        if edge is None:
            raise InvalidTreeError(f"tree edge {token!r} is not an edge of the graph")
        edges.append(edge)
    if len(set(edges)) != len(edges):
        raise InvalidTreeError("tree edge listed twice")
    return SpanningTree(g, tuple(edges))


def safe_stem(file_path: str) -> str:
    """安全地获取文件名的stem部分"""
    stem = Path(file_path).stem
    return re.sub(r'[^\w.\u4e00-\u9fff]', '_', stem)
