# Copyright (c) Opendatalab. All rights reserved.

"""旗复形单连通性的三值判定

策略 A：2-骨架的贪心初等塌缩（自由边带走其唯一三角形），再剥叶子直到剩一个点。
策略 B：边道路群的表示（1-骨架 BFS 生成树，非树边为生成元，三角形为关系子），
做有界 Tietze 化简；化简为空即单连通。否则用 ∂2 的 Smith 标准形计算 H1，
H1 非零即给出否定证书；都不成立时结果为 unknown。
"""

from collections import defaultdict
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx
from loguru import logger

from src.complex.models import FlagComplex, SimplyConnectedVerdict, VerdictStatus
from src.graph.core import Edge
from src.group.abelian import smith_diagonal
from src.group.models import AbelianInvariants, Generator, GroupPresentation, PresentationKind
from src.group.tietze import simplify_presentation
from src.group.words import Word
from src.utils.helpers import resolve_budget


def homology_h1(c: FlagComplex) -> AbelianInvariants:
    """H1 = ker ∂1 / im ∂2，挠部分来自 ∂2 的不变因子"""
    vertices, edges, triangles = c.simplices(0), c.simplices(1), c.simplices(2)
    index = {e: i for i, e in enumerate(edges)}
    d1 = []
    for a, b in edges:
        row = [0] * len(vertices)
        row[a] -= 1
        row[b] += 1
        d1.append(row)
    d2 = []
    for a, b, x in triangles:
        row = [0] * len(edges)
        row[index[(a, b)]] += 1
        row[index[(b, x)]] += 1
        row[index[(a, x)]] -= 1
        d2.append(row)
    rank1, _ = smith_diagonal(d1, len(vertices))
    rank2, torsion = smith_diagonal(d2, len(edges))
    return AbelianInvariants(free_rank=len(edges) - rank1 - rank2, torsion=torsion)


def _collapse(c: FlagComplex, budget: int) -> Tuple[Optional[bool], List[Dict[str, Any]], int]:
    """返回 (是否塌缩为一点 / 预算耗尽时为 None, 塌缩序列, 已用步数)"""
    triangles = set(c.simplices(2))
    edges = set(c.simplices(1))
    vertices = set(v for (v,) in c.simplices(0))
    cofaces = defaultdict(set)
    for t in triangles:
        a, b, x = t
        for e in ((a, b), (b, x), (a, x)):
            cofaces[e].add(t)

    steps: List[Dict[str, Any]] = []
    moves = 0
    while triangles:
        free = [e for e in sorted(edges) if len(cofaces[e]) == 1]
        if not free:
            return False, steps, moves
        if moves >= budget:
            return None, steps, moves
        e = free[0]
        t = next(iter(cofaces[e]))
        a, b, x = t
        for side in ((a, b), (b, x), (a, x)):
            cofaces[side].discard(t)
        triangles.discard(t)
        edges.discard(e)
        steps.append({"face": list(e), "coface": list(t)})
        moves += 1

    degree = defaultdict(int)
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    while len(vertices) > 1:
        leaves = [v for v in sorted(vertices) if degree[v] == 1]
        if not leaves:
            return False, steps, moves
        if moves >= budget:
            return None, steps, moves
        v = leaves[0]
        e = next(x for x in sorted(edges) if v in x)
        edges.discard(e)
        vertices.discard(v)
        degree[e[0]] -= 1
        degree[e[1]] -= 1
        steps.append({"face": [v], "coface": list(e)})
        moves += 1
    return len(vertices) == 1 and not edges, steps, moves


def check_collapse_certificate(c: FlagComplex, steps: List[Dict[str, Any]]) -> bool:
    """独立重放塌缩序列：每一步的 face 必须恰为 coface 的唯一余面，最终剩一个点"""
    alive = set(c.simplices(0)) | set(c.simplices(1)) | set(c.simplices(2))
    for step in steps:
        face, coface = tuple(step["face"]), tuple(step["coface"])
        if face not in alive or coface not in alive or not set(face) < set(coface):
            return False
        if len(coface) != len(face) + 1:
            return False
        others = [s for s in alive if len(s) == len(face) + 1 and set(face) < set(s)]
        if others != [coface]:
            return False
        alive.discard(face)
        alive.discard(coface)
    return len(alive) == 1


def edge_path_presentation(c: FlagComplex) -> Tuple[GroupPresentation, List[Edge]]:
    """π1 的边道路群表示；返回表示与所用 BFS 生成树"""
    g = c.host
    tree = sorted(Edge.of(u, v) for u, v in nx.bfs_edges(g.to_networkx(), 0))
    tree_set = set(tree)
    non_tree = [e for e in g.edges if e not in tree_set]
    position = {e: i for i, e in enumerate(non_tree)}
    relators = []
    for a, b, x in c.simplices(2):
        pairs = []
        for e, sign in ((Edge(a, b), 1), (Edge(b, x), 1), (Edge(a, x), -1)):
            if e in position:
                pairs.append((position[e], sign))
        relators.append(Word.from_pairs(pairs))
    generators = tuple(Generator(g.edge_name(e), g.to_host_edge(e)) for e in non_tree)
    return GroupPresentation(generators, tuple(relators), PresentationKind.GENERIC), tree


def is_simply_connected(c: FlagComplex, budget: Optional[int] = None) -> SimplyConnectedVerdict:
    budget = resolve_budget(budget)
    g = c.host
    if g.vertex_count == 0:
        return SimplyConnectedVerdict(VerdictStatus.NO, "disconnected", "empty complex", {"components": 0})
    components = g.components()
    if len(components) > 1:
        logger.info(f"旗复形不连通：{len(components)} 个分支")
        return SimplyConnectedVerdict(VerdictStatus.NO, "disconnected",
                                      f"disconnected: {len(components)} components",
                                      {"components": len(components)})

    collapsed, steps, used = _collapse(c, budget)
    if collapsed:
        f = c.f_vector + (0, 0, 0)
        euler = f[0] - f[1] + f[2]
        logger.info(f"塌缩成功，共 {len(steps)} 步")
        return SimplyConnectedVerdict(
            VerdictStatus.YES, "collapse",
            f"2-skeleton collapses to a point in {len(steps)} elementary collapses",
            {"collapses": steps, "euler_characteristic_2_skeleton": euler},
        )

    presentation, tree = edge_path_presentation(c)
    result = simplify_presentation(presentation, max(budget - used, 0))
    used += result.moves
    if not result.exhausted and not result.presentation.generators:
        logger.info(f"Tietze 化简得到平凡群，共 {result.moves} 步")
        return SimplyConnectedVerdict(
            VerdictStatus.YES, "tietze",
            f"edge-path group trivialised by {len(result.eliminated)} generator eliminations",
            {"tree": [g.edge_name(e) for e in tree], "eliminated": result.eliminated},
        )

    h1 = homology_h1(c)
    if not h1.is_trivial:
        logger.info(f"H1 = {h1}，不是单连通")
        return SimplyConnectedVerdict(VerdictStatus.NO, "homology", f"H1 = {h1} is nonzero", h1.to_dict())

    logger.warning(f"单连通性未能判定（已用 {used} 步，预算 {budget}）")
    return SimplyConnectedVerdict(
        VerdictStatus.UNKNOWN, "exhausted",
        "no collapse to a point, Tietze simplification stalled, H1 vanishes",
        {"moves_used": used, "budget": budget,
         "remaining_generators": list(result.presentation.generator_names)},
    )
