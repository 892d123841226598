# Copyright (c) Opendatalab. All rights reserved.

"""Bestvina–Brady 群的 Dicks–Leary 表示、Papadima–Suciu 表示以及 RAAG 表示"""

from typing import TYPE_CHECKING, List, Optional

from loguru import logger

from src.graph.core import Edge, SimplicialGraph
from src.graph.trees import SpanningTree
from src.group.models import Generator, GroupPresentation, PresentationKind
from src.group.raag import RaagNormalizer
from src.group.words import (Word, commutator, free_reduce, normal_form, single_commutator_pair,
                             substitute)
from src.utils.errors import DisconnectedGraphError, GraphError, InvalidTreeError

if TYPE_CHECKING:
    from src.complex.models import SimplyConnectedVerdict


def _verdict_status(verdict: Optional["SimplyConnectedVerdict"]) -> str:
    return verdict.status.value if verdict is not None else "unchecked"


def dicks_leary(g: SimplicialGraph, verdict: Optional["SimplyConnectedVerdict"] = None) -> GroupPresentation:
    """每条边一个生成元；每个有向三角形 (e, f, g) 给出 efe^-1f^-1 与 efg^-1"""
    if not g.is_connected():
        raise DisconnectedGraphError("Dicks-Leary presentation needs a connected graph")
    generators = tuple(Generator(g.edge_name(e), g.to_host_edge(e)) for e in g.edges)
    relators: List[Word] = []
    for tri in g.triangles:
        e, f, h = (Word.letter(g.edge_index(x)) for x in tri.edges)
        relators.append(e * f * e.inverse() * f.inverse())
        relators.append(e * f * h.inverse())
    return GroupPresentation(generators, tuple(relators), PresentationKind.DICKS_LEARY,
                             {"simply_connected": _verdict_status(verdict)})


def tree_path_word(g: SimplicialGraph, t: SpanningTree, e: Edge) -> Word:
    """沿树中从 lo(e) 到 hi(e) 的唯一路径拼出的字，字母为 t.edges 中的位置

    行走方向与树边的规范方向（lo → hi）一致时指数为 +1，否则为 -1。
    """
    if e not in g.edge_set:
        raise GraphError(f"edge ({e.lo}, {e.hi}) is not in the graph")
    if t.host != g:
        raise InvalidTreeError("spanning tree belongs to a different graph")
    if t.contains(e):
        return Word.letter(t.index_of(e))
    path = t.path(e.lo, e.hi)
    pairs = []
    for u, v in zip(path, path[1:]):
        pairs.append((t.index_of(Edge.of(u, v)), 1 if u < v else -1))
    return Word.from_pairs(pairs)


def _reindex(w: Word, positions: dict) -> Word:
    return Word.from_pairs([(positions[i], e) for i, e in w.pairs()])


def papadima_suciu(g: SimplicialGraph, t: SpanningTree, order: str = "lex",
                   verdict: Optional["SimplyConnectedVerdict"] = None) -> GroupPresentation:
    """以生成树的边为生成元的表示

    从 Dicks-Leary 表示出发依次消去非树边生成元（代入其树路径字），自由约化，
    去掉空字与循环意义下的重复，单生成元交换子统一写成 [x,y]（x 在前），
    最后去掉在这些交换关系定义的 RAAG 中已经平凡的关系子（它们是其余关系子的推论）。
    """
    if t.host != g:
        raise InvalidTreeError("spanning tree belongs to a different graph")
    dl = dicks_leary(g, verdict)

    tree_dl_index = {g.edge_index(e): pos for pos, e in enumerate(t.edges)}
    non_tree = [i for i, e in enumerate(g.edges) if not t.contains(e)]
    if order == "reverse":
        non_tree.reverse()
    elif order != "lex":
        raise ValueError(f"unknown elimination order {order!r}")

    relators = list(dl.relators)
    for i in non_tree:
        path = tree_path_word(g, t, g.edges[i])
        replacement = Word.from_pairs([(g.edge_index(t.edges[p]), e) for p, e in path.pairs()])
        relators = [substitute(r, i, replacement) for r in relators]

    cleaned: List[Word] = []
    seen = set()
    for r in relators:
        r = free_reduce(r)
        if not r:
            continue
        r = _reindex(r, tree_dl_index)
        pair = single_commutator_pair(r)
        if pair != (-1, -1):
            r = commutator(Word.letter(pair[0]), Word.letter(pair[1]))
        key = normal_form(r)
        if key in seen:
            continue
        seen.add(key)
        cleaned.append(r)

    pairs = [single_commutator_pair(r) for r in cleaned]
    normalizer = RaagNormalizer(len(t.edges), [p for p in pairs if p != (-1, -1)])
    kept = [r for r, p in zip(cleaned, pairs) if p != (-1, -1) or not normalizer.is_trivial(r)]
    if len(kept) < len(cleaned):
        logger.debug(f"Papadima-Suciu 表示去掉 {len(cleaned) - len(kept)} 个可由交换子推出的关系子")

    generators = tuple(Generator(g.edge_name(e), g.to_host_edge(e)) for e in t.edges)
    metadata = {
        "simply_connected": _verdict_status(verdict),
        "tree": t.names(),
        "implied_relators_dropped": len(cleaned) - len(kept),
    }
    return GroupPresentation(generators, tuple(kept), PresentationKind.PAPADIMA_SUCIU, metadata)


def raag_presentation(g: SimplicialGraph) -> GroupPresentation:
    """A_Γ：每个顶点一个生成元，每条边一个交换子"""
    generators = tuple(Generator(g.label(v), vertex=g.to_host(v)) for v in range(g.vertex_count))
    relators = tuple(commutator(Word.letter(e.lo), Word.letter(e.hi)) for e in g.edges)
    return GroupPresentation(generators, relators, PresentationKind.RAAG)
