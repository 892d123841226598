# Copyright (c) Opendatalab. All rights reserved.

"""图类识别：特殊 / 超特殊三角剖分，团分离的连通分裂"""

from collections import Counter
from typing import Dict, List, Optional, Set

from loguru import logger

from src.classify.models import Ear, ExtraSpecialTriangulation, SpecialTriangulation, SplittingWitness
from src.complex.flag import build_flag_complex
from src.graph.core import Edge, SimplicialGraph, Triangle, induced_subgraph
from src.utils.errors import DisconnectedGraphError


def _triangle_counts(g: SimplicialGraph) -> Counter:
    counts = Counter({e: 0 for e in g.edges})
    for tri in g.triangles:
        counts.update(tri.edges)
    return counts


def recognize_special_triangulation(g: SimplicialGraph) -> Optional[SpecialTriangulation]:
    """反向剥耳：反复删去编号最小的、两个邻点相邻的二度顶点，剩下一个三角形即成功"""
    if g.vertex_count < 3:
        return None
    counts = _triangle_counts(g)
    if any(c == 0 or c > 2 for c in counts.values()):
        return None

    adjacency: Dict[int, Set[int]] = {v: set(g.neighbors(v)) for v in range(g.vertex_count)}
    ears: List[Ear] = []
    while len(adjacency) > 3:
        apex = None
        for v in sorted(adjacency):
            if len(adjacency[v]) == 2:
                a, b = sorted(adjacency[v])
                if b in adjacency[a]:
                    apex = v
                    break
        if apex is None:
            return None
        for w in adjacency.pop(apex):
            adjacency[w].discard(apex)
        ears.append(Ear(apex, Edge(a, b)))

    a, b, c = sorted(adjacency)
    if not (b in adjacency[a] and c in adjacency[a] and c in adjacency[b]):
        return None
    return SpecialTriangulation(Triangle(a, b, c), tuple(ears))


def _boundary_edges(g: SimplicialGraph) -> List[Edge]:
    return sorted(e for e, c in _triangle_counts(g).items() if c == 1)


def recognize_extra_special_triangulation(g: SimplicialGraph) -> Optional[ExtraSpecialTriangulation]:
    """一次删去全部候选耳顶点，剩余部分须为特殊三角剖分且其边界边与耳朵一一对应"""
    candidates = []
    for v in range(g.vertex_count):
        if g.degree(v) == 2:
            a, b = sorted(g.neighbors(v))
            if g.has_edge(a, b):
                candidates.append(Ear(v, Edge(a, b)))
    if not candidates:
        return None
    apexes = {ear.apex for ear in candidates}
    if any(ear.base.lo in apexes or ear.base.hi in apexes for ear in candidates):
        return None

    core_vertices = [v for v in range(g.vertex_count) if v not in apexes]
    core = induced_subgraph(g, core_vertices)
    special = recognize_special_triangulation(core)
    if special is None:
        return None

    def lift(v: int) -> int:
        return core_vertices[v]

    boundary = [Edge(lift(e.lo), lift(e.hi)) for e in _boundary_edges(core)]
    bases = [ear.base for ear in candidates]
    if len(bases) != len(set(bases)) or set(bases) != set(boundary):
        logger.debug("耳朵与核心边界边不能一一对应")
        return None

    lifted = SpecialTriangulation(
        Triangle.of(*(lift(v) for v in special.base.vertices)),
        tuple(Ear(lift(e.apex), Edge(lift(e.base.lo), lift(e.base.hi))) for e in special.ears),
    )
    return ExtraSpecialTriangulation(frozenset(core_vertices), lifted, tuple(candidates))


def find_clique_splitting(g: SimplicialGraph, min_clique: int = 3) -> Optional[SplittingWitness]:
    """按（团大小递增、字典序）扫描团，找到第一个删去后使图不连通的团"""
    if not g.is_connected():
        raise DisconnectedGraphError("clique splitting needs a connected graph")
    complex_ = build_flag_complex(g)
    everything = set(range(g.vertex_count))
    for size in range(max(min_clique, 1), complex_.dimension + 2):
        for clique in complex_.simplices(size - 1):
            rest = sorted(everything - set(clique))
            if not rest:
                continue
            pieces = induced_subgraph(g, rest).components()
            if len(pieces) < 2:
                continue
            first = {rest[i] for i in pieces[0]}
            others = {rest[i] for piece in pieces[1:] for i in piece}
            witness = SplittingWitness(
                gamma1=frozenset(first | set(clique)),
                gamma2=frozenset(others | set(clique)),
                gamma3=frozenset(clique),
                clique_size=size,
            )
            logger.info(f"找到分离团 {[g.label(v) for v in clique]}")
            return witness
    return None
