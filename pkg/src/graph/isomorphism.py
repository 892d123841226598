# Copyright (c) Opendatalab. All rights reserved.

"""图同构：度数细化 + 回溯，用于锥图的同构判定与测试"""

from collections import Counter
from typing import Dict, List, Optional

from src.graph.core import SimplicialGraph, VertexId


def _signature(g: SimplicialGraph, v: VertexId):
    return (g.degree(v), tuple(sorted(g.degree(w) for w in g.neighbors(v))))


def _search_order(g: SimplicialGraph) -> List[VertexId]:
    """度数大的顶点优先，其后尽量沿已访问顶点的邻居扩展"""
    remaining = set(range(g.vertex_count))
    order: List[VertexId] = []
    while remaining:
        start = max(remaining, key=lambda v: (g.degree(v), -v))
        frontier = [start]
        while frontier:
            v = frontier.pop(0)
            if v not in remaining:
                continue
            remaining.discard(v)
            order.append(v)
            nxt = sorted((w for w in g.neighbors(v) if w in remaining), key=lambda w: (-g.degree(w), w))
            frontier.extend(nxt)
    return order


def graphs_isomorphic(g1: SimplicialGraph, g2: SimplicialGraph) -> Optional[Dict[VertexId, VertexId]]:
    """返回 Γ1 → Γ2 的同构映射，不同构时返回 None"""
    if g1.vertex_count != g2.vertex_count or len(g1.edges) != len(g2.edges):
        return None
    sig1 = [_signature(g1, v) for v in range(g1.vertex_count)]
    sig2 = [_signature(g2, v) for v in range(g2.vertex_count)]
    if Counter(sig1) != Counter(sig2):
        return None

    order = _search_order(g1)
    mapping: Dict[VertexId, VertexId] = {}
    used = set()

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        for w in range(g2.vertex_count):
            if w in used or sig2[w] != sig1[v]:
                continue
            if any(g1.has_edge(v, u) != g2.has_edge(w, mapping[u]) for u in mapping):
                continue
            mapping[v] = w
            used.add(w)
            if extend(pos + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if extend(0) else None
