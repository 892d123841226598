# Copyright (c) Opendatalab. All rights reserved.

"""生成树：表示、按字典序枚举、Kirchhoff 计数"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, FrozenSet, Iterable, Iterator, List, Optional, Tuple

import networkx as nx
from loguru import logger
from sympy import Matrix

from src.graph.core import Edge, SimplicialGraph, VertexId
from src.utils.errors import DisconnectedGraphError, EnumerationMismatchError, InvalidTreeError
from src.utils.helpers import resolve_tree_cap


class DisjointSet:
    """带回滚的并查集（按大小合并，不做路径压缩）"""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size
        self.components = size
        self._history: List[Optional[Tuple[int, int]]] = []

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            self._history.append(None)
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.components -= 1
        self._history.append((ra, rb))
        return True

    def rollback(self):
        change = self._history.pop()
        if change is None:
            return
        ra, rb = change
        self.parent[rb] = rb
        self.size[ra] -= self.size[rb]
        self.components += 1

    def copy(self) -> "DisjointSet":
        clone = DisjointSet(0)
        clone.parent = list(self.parent)
        clone.size = list(self.size)
        clone.components = self.components
        return clone


@dataclass(frozen=True)
class SpanningTree:
    """宿主图的生成树，边按字典序保存"""
    host: SimplicialGraph = field(repr=False)
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        edges = tuple(sorted(set(self.edges)))
        object.__setattr__(self, "edges", edges)
        n = self.host.vertex_count
        if n == 0:
            raise InvalidTreeError("empty graph has no spanning tree")
        for e in edges:
            if e not in self.host.edge_set:
                raise InvalidTreeError(f"tree edge {self.host.edge_label(e)} is not in the graph")
        if len(edges) != n - 1:
            raise InvalidTreeError(f"a spanning tree needs {n - 1} edges, got {len(edges)}")
        dsu = DisjointSet(n)
        for e in edges:
            if not dsu.union(e.lo, e.hi):
                raise InvalidTreeError(f"tree edges contain a cycle through {self.host.edge_label(e)}")

    @cached_property
    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self.edges)

    @cached_property
    def _positions(self):
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def tree_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.host.vertex_count))
        graph.add_edges_from(e.vertices for e in self.edges)
        return graph

    def contains(self, e: Edge) -> bool:
        return e in self.edge_set

    def index_of(self, e: Edge) -> int:
        try:
            return self._positions[e]
        except KeyError:
            raise InvalidTreeError(f"edge {self.host.edge_label(e)} is not a tree edge") from None

    def path(self, u: VertexId, v: VertexId) -> List[VertexId]:
        """树中 u 到 v 的唯一路径（顶点序列）"""
        return nx.shortest_path(self.tree_graph, u, v)

    def names(self) -> List[str]:
        return [self.host.edge_name(e) for e in self.edges]

    def restrict_to(self, sub: SimplicialGraph) -> "SpanningTree":
        """把落在子图内的树边搬到子图坐标"""
        kept = []
        for e in self.edges:
            local = sub.from_host_edge(self.host.to_host_edge(e))
            if local is not None:
                kept.append(local)
        return SpanningTree(sub, tuple(kept))


Admissible = Callable[[int, List[bool]], bool]


class TreeBacktracker:
    """按边的字典序做“先选后不选”的回溯，依字典序产生所有生成树

    admissible(idx, chosen) 在决定第 idx 条边之后调用，返回 False 时剪枝。
    """

    def __init__(self, g: SimplicialGraph):
        if not g.is_connected():
            raise DisconnectedGraphError("spanning trees need a connected graph")
        self.graph = g
        self.edges = g.edges
        self.needed = g.vertex_count - 1

    def walk(self, admissible: Optional[Admissible] = None) -> Iterator[Tuple[bool, ...]]:
        dsu = DisjointSet(self.graph.vertex_count)
        chosen: List[bool] = []
        yield from self._descend(0, 0, dsu, chosen, admissible)

    def _can_finish(self, idx: int, dsu: DisjointSet) -> bool:
        trial = dsu.copy()
        for e in self.edges[idx:]:
            trial.union(e.lo, e.hi)
            if trial.components == 1:
                return True
        return trial.components == 1

    def _descend(self, idx, count, dsu, chosen, admissible):
        if idx == len(self.edges):
            if count == self.needed:
                yield tuple(chosen)
            return
        e = self.edges[idx]
        separate = dsu.find(e.lo) != dsu.find(e.hi)

        if separate and count < self.needed:
            dsu.union(e.lo, e.hi)
            chosen.append(True)
            if admissible is None or admissible(idx, chosen):
                yield from self._descend(idx + 1, count + 1, dsu, chosen, admissible)
            chosen.pop()
            dsu.rollback()

        if not separate or self._can_finish(idx + 1, dsu):
            chosen.append(False)
            if admissible is None or admissible(idx, chosen):
                yield from self._descend(idx + 1, count, dsu, chosen, admissible)
            chosen.pop()


def tree_from_flags(g: SimplicialGraph, flags: Iterable[bool]) -> SpanningTree:
    return SpanningTree(g, tuple(e for e, keep in zip(g.edges, flags) if keep))


class SpanningTreeStream:
    """惰性生成树流；达到上限时停止并置 overflow"""

    def __init__(self, g: SimplicialGraph, cap: int):
        self.graph = g
        self.cap = cap
        self.overflow = False
        self.emitted = 0
        self._walker = TreeBacktracker(g)

    def __iter__(self) -> Iterator[SpanningTree]:
        for flags in self._walker.walk():
            if self.emitted >= self.cap:
                self.overflow = True
                logger.warning(f"生成树枚举达到上限 {self.cap}，结果被截断")
                return
            self.emitted += 1
            yield tree_from_flags(self.graph, flags)


def enumerate_spanning_trees(g: SimplicialGraph, cap: Optional[int] = None) -> SpanningTreeStream:
    return SpanningTreeStream(g, resolve_tree_cap(cap))


def kirchhoff_count(g: SimplicialGraph) -> int:
    """矩阵树定理：Laplacian 去掉一行一列后的行列式（精确整数）"""
    n = g.vertex_count
    if n == 0:
        return 0
    if n == 1:
        return 1
    laplacian = Matrix.zeros(n, n)
    for e in g.edges:
        laplacian[e.lo, e.lo] += 1
        laplacian[e.hi, e.hi] += 1
        laplacian[e.lo, e.hi] -= 1
        laplacian[e.hi, e.lo] -= 1
    return int(laplacian[1:, 1:].det(method="bareiss"))


def count_spanning_trees(g: SimplicialGraph) -> int:
    """穷举计数，并与 Kirchhoff 计数核对"""
    total = sum(1 for _ in TreeBacktracker(g).walk())
    expected = kirchhoff_count(g)
    if total != expected:
        raise EnumerationMismatchError(f"enumerated {total} spanning trees, Kirchhoff count is {expected}")
    logger.debug(f"生成树计数 {total} 与 Kirchhoff 计数一致")
    return total
