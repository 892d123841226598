# Copyright (c) Opendatalab. All rights reserved.

"""有界的贪心 Tietze 化简：反复消去在某个关系子中恰好出现一次的生成元"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from loguru import logger

from src.group.models import GroupPresentation, PresentationKind
from src.group.words import Word, cyclic_normal_form, cyclic_reduce, substitute


@dataclass
class TietzeResult:
    presentation: GroupPresentation
    moves: int
    exhausted: bool
    eliminated: List[str] = field(default_factory=list)


def _tidy(relators: List[Word]) -> List[Word]:
    """循环约化、去掉空字，并按正规形式去重"""
    seen = set()
    out = []
    for r in relators:
        r = cyclic_reduce(r)
        if not r:
            continue
        key = cyclic_normal_form(r.letters)
        if key in seen:
            continue
        seen.add(key)
        out.append(r)
    return out


def _find_elimination(relators: List[Word]) -> Optional[Tuple[int, int]]:
    """返回 (关系子下标, 生成元编号)：该生成元在此关系子中恰好出现一次"""
    order = sorted(range(len(relators)), key=lambda k: (len(relators[k]), k))
    for k in order:
        counts = {}
        for i, _ in relators[k].pairs():
            counts[i] = counts.get(i, 0) + 1
        for i in sorted(counts):
            if counts[i] == 1:
                return k, i
    return None


def _solve(relator: Word, gen: int) -> Word:
    """把关系子 u x^e v = 1 解成 x 关于其余字母的表达式"""
    letters = list(relator.letters)
    pos = next(p for p, x in enumerate(letters) if abs(x) - 1 == gen)
    rotated = Word(tuple(letters[pos:] + letters[:pos]))
    rest = Word(rotated.letters[1:])
    # x^e · rest = 1  =>  x^e = rest^-1
    return rest.inverse() if rotated.letters[0] > 0 else rest


def _drop_generator(w: Word, gen: int) -> Word:
    """删去生成元 gen 后，编号大于它的生成元前移一位"""
    out = []
    for x in w.letters:
        if abs(x) - 1 > gen:
            x = x - 1 if x > 0 else x + 1
        out.append(x)
    return Word(tuple(out))


def simplify_presentation(p: GroupPresentation, budget: int) -> TietzeResult:
    generators = list(p.generators)
    relators = _tidy(list(p.relators))
    moves = 0
    eliminated: List[str] = []

    while True:
        found = _find_elimination(relators)
        if found is None:
            break
        k, gen = found
        cost = len(relators)
        if moves + cost > budget:
            logger.debug(f"Tietze 化简预算耗尽（已用 {moves} 步）")
            result = GroupPresentation(tuple(generators), tuple(relators), PresentationKind.GENERIC)
            return TietzeResult(result, moves, True, eliminated)
        moves += cost
        value = _solve(relators[k], gen)
        rest = [substitute(r, gen, value) for idx, r in enumerate(relators) if idx != k]
        shifted = [_drop_generator(r, gen) for r in rest]
        eliminated.append(generators[gen].name)
        del generators[gen]
        relators = _tidy(shifted)

    result = GroupPresentation(tuple(generators), tuple(relators), PresentationKind.GENERIC)
    return TietzeResult(result, moves, False, eliminated)
