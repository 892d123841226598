# Copyright (c) Opendatalab. All rights reserved.

"""单纯图（无自环、无重边的有限无向图）及其子图运算"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from src.utils.errors import GraphError

VertexId = int


@dataclass(frozen=True, order=True)
class Edge:
    """无向边，规范形式 lo < hi；方向 lo → hi"""
    lo: VertexId
    hi: VertexId

    def __post_init__(self):
        if self.lo < 0 or self.hi <= self.lo:
            raise GraphError(f"invalid edge ({self.lo}, {self.hi}): need 0 <= lo < hi")

    @classmethod
    def of(cls, u: VertexId, v: VertexId) -> "Edge":
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        return cls(min(u, v), max(u, v))

    @property
    def vertices(self) -> Tuple[VertexId, VertexId]:
        return (self.lo, self.hi)

    def other(self, v: VertexId) -> VertexId:
        if v == self.lo:
            return self.hi
        if v == self.hi:
            return self.lo
        raise GraphError(f"vertex {v} is not an endpoint of ({self.lo}, {self.hi})")

    def __contains__(self, v: VertexId) -> bool:
        return v == self.lo or v == self.hi


@dataclass(frozen=True, order=True)
class Triangle:
    """三角形 a < b < c，边三元组 (e, f, g) = (ab, bc, ac)"""
    a: VertexId
    b: VertexId
    c: VertexId

    def __post_init__(self):
        if not (0 <= self.a < self.b < self.c):
            raise GraphError(f"invalid triangle ({self.a}, {self.b}, {self.c})")

    @classmethod
    def of(cls, u: VertexId, v: VertexId, w: VertexId) -> "Triangle":
        a, b, c = sorted((u, v, w))
        return cls(a, b, c)

    @property
    def vertices(self) -> Tuple[VertexId, VertexId, VertexId]:
        return (self.a, self.b, self.c)

    @property
    def edges(self) -> Tuple[Edge, Edge, Edge]:
        return (Edge(self.a, self.b), Edge(self.b, self.c), Edge(self.a, self.c))

    def apex(self, edge: Edge) -> VertexId:
        """与给定边相对的顶点"""
        rest = [v for v in self.vertices if v not in edge]
        if len(rest) != 1:
            raise GraphError(f"edge ({edge.lo}, {edge.hi}) is not a side of {self.vertices}")
        return rest[0]


class SimplicialGraph:
    """单纯图

    顶点为 0..n-1，边按字典序存储。由 induced_subgraph 产生的子图记录
    到根图的顶点映射 host_map，从而可以在同一宿主内做交集，且生成元命名
    (e<k>) 在所有子图中保持一致。
    """

    def __init__(self, vertex_count: int, edges: Iterable = (), labels: Optional[Sequence[str]] = None,
                 host: Optional["SimplicialGraph"] = None, host_map: Optional[Sequence[VertexId]] = None):
        if vertex_count < 0:
            raise GraphError(f"negative vertex count {vertex_count}")
        self.vertex_count = vertex_count

        edge_set = set()
        for item in edges:
            edge = item if isinstance(item, Edge) else Edge.of(*item)
            if edge.hi >= vertex_count:
                raise GraphError(f"edge ({edge.lo}, {edge.hi}) out of range for {vertex_count} vertices")
            if edge in edge_set:
                raise GraphError(f"duplicate edge ({edge.lo}, {edge.hi})")
            edge_set.add(edge)
        self.edges: Tuple[Edge, ...] = tuple(sorted(edge_set))
        self.edge_set: FrozenSet[Edge] = frozenset(edge_set)
        self._edge_index: Dict[Edge, int] = {e: i for i, e in enumerate(self.edges)}

        adjacency: List[set] = [set() for _ in range(vertex_count)]
        for e in self.edges:
            adjacency[e.lo].add(e.hi)
            adjacency[e.hi].add(e.lo)
        self._adjacency = tuple(frozenset(a) for a in adjacency)

        if labels is None:
            labels = [f"v{i + 1}" for i in range(vertex_count)]
        if len(labels) != vertex_count:
            raise GraphError(f"expected {vertex_count} labels, got {len(labels)}")
        self.labels: Tuple[str, ...] = tuple(str(x) for x in labels)

        if (host is None) != (host_map is None):
            raise GraphError("host and host_map must be given together")
        if host_map is not None and len(host_map) != vertex_count:
            raise GraphError("host_map must cover every vertex")
        self.host = host
        self.host_map: Optional[Tuple[VertexId, ...]] = tuple(host_map) if host_map is not None else None
        self._from_host: Optional[Dict[VertexId, VertexId]] = None
        self._triangles: Optional[Tuple[Triangle, ...]] = None

    # ---- 宿主坐标 ----

    @property
    def root(self) -> "SimplicialGraph":
        return self.host if self.host is not None else self

    def to_host(self, v: VertexId) -> VertexId:
        return self.host_map[v] if self.host_map is not None else v

    def to_host_edge(self, e: Edge) -> Edge:
        return Edge.of(self.to_host(e.lo), self.to_host(e.hi))

    def from_host(self, v: VertexId) -> Optional[VertexId]:
        if self.host_map is None:
            return v if 0 <= v < self.vertex_count else None
        if self._from_host is None:
            self._from_host = {h: i for i, h in enumerate(self.host_map)}
        return self._from_host.get(v)

    def from_host_edge(self, e: Edge) -> Optional[Edge]:
        lo, hi = self.from_host(e.lo), self.from_host(e.hi)
        if lo is None or hi is None:
            return None
        local = Edge.of(lo, hi)
        return local if local in self.edge_set else None

    # ---- 基本查询 ----

    def neighbors(self, v: VertexId) -> FrozenSet[VertexId]:
        return self._adjacency[v]

    def degree(self, v: VertexId) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return u != v and v in self._adjacency[u]

    def edge_index(self, e: Edge) -> int:
        try:
            return self._edge_index[e]
        except KeyError:
            raise GraphError(f"edge ({e.lo}, {e.hi}) is not in the graph") from None

    def edge_name(self, e: Edge) -> str:
        """生成元名称 e<k>，k 为该边在根图有序边表中的位置（从 1 开始）"""
        return f"e{self.root.edge_index(self.to_host_edge(e)) + 1}"

    def label(self, v: VertexId) -> str:
        return self.labels[v]

    def edge_label(self, e: Edge) -> str:
        return f"{self.labels[e.lo]}-{self.labels[e.hi]}"

    @property
    def triangles(self) -> Tuple[Triangle, ...]:
        if self._triangles is None:
            found = []
            for e in self.edges:
                for w in sorted(self._adjacency[e.lo] & self._adjacency[e.hi]):
                    if w > e.hi:
                        found.append(Triangle(e.lo, e.hi, w))
            self._triangles = tuple(found)
        return self._triangles

    def has_triangle(self, t: Triangle) -> bool:
        return t.c < self.vertex_count and all(e in self.edge_set for e in t.edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(e.vertices for e in self.edges)
        return graph

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return False
        return nx.is_connected(self.to_networkx())

    def components(self) -> List[Tuple[VertexId, ...]]:
        comps = [tuple(sorted(c)) for c in nx.connected_components(self.to_networkx())]
        return sorted(comps)

    def __eq__(self, other):
        if not isinstance(other, SimplicialGraph):
            return NotImplemented
        return (self.vertex_count == other.vertex_count and self.edges == other.edges
                and self.labels == other.labels)

    def __hash__(self):
        return hash((self.vertex_count, self.edges, self.labels))

    def __repr__(self):
        return f"SimplicialGraph(n={self.vertex_count}, m={len(self.edges)})"


def induced_subgraph(g: SimplicialGraph, verts: Iterable[VertexId]) -> SimplicialGraph:
    """由顶点集诱导的子图，顶点按原编号重新编号并保留到根图的映射"""
    chosen = sorted(set(verts))
    for v in chosen:
        if not 0 <= v < g.vertex_count:
            raise GraphError(f"vertex {v} out of range")
    local = {v: i for i, v in enumerate(chosen)}
    edges = [Edge(local[e.lo], local[e.hi]) for e in g.edges if e.lo in local and e.hi in local]
    return SimplicialGraph(
        len(chosen), edges, [g.labels[v] for v in chosen],
        host=g.root, host_map=[g.to_host(v) for v in chosen],
    )


def triangles_of(g: SimplicialGraph) -> List[Triangle]:
    """全部 3-团，按 (a, b, c) 字典序"""
    return list(g.triangles)


def edge_set_complement(g: SimplicialGraph, t: Triangle) -> SimplicialGraph:
    """去掉 t 的三条边后剩余边所覆盖顶点的诱导子图"""
    if not g.has_triangle(t):
        raise GraphError(f"triangle {t.vertices} is not in the graph")
    removed = set(t.edges)
    covered = set()
    for e in g.edges:
        if e not in removed:
            covered.update(e.vertices)
    return induced_subgraph(g, covered)


def _same_root(g1: SimplicialGraph, g2: SimplicialGraph) -> bool:
    return g1.root is g2.root or g1.root == g2.root


def intersect(g1: SimplicialGraph, g2: SimplicialGraph) -> Tuple[FrozenSet[VertexId], FrozenSet[Edge]]:
    """同一宿主内两个子图的交，用根图坐标表示"""
    if not _same_root(g1, g2):
        raise GraphError("cannot intersect subgraphs of different hosts")
    verts1 = {g1.to_host(v) for v in range(g1.vertex_count)}
    verts2 = {g2.to_host(v) for v in range(g2.vertex_count)}
    edges1 = {g1.to_host_edge(e) for e in g1.edges}
    edges2 = {g2.to_host_edge(e) for e in g2.edges}
    return frozenset(verts1 & verts2), frozenset(edges1 & edges2)


def _merge_labels(first: Sequence[str], second: Sequence[str]) -> List[str]:
    taken = set(first)
    merged = list(first)
    for name in second:
        candidate = name
        while candidate in taken:
            candidate = f"{candidate}_2"
        taken.add(candidate)
        merged.append(candidate)
    return merged


def join(g1: SimplicialGraph, g2: SimplicialGraph) -> SimplicialGraph:
    """Γ1 * Γ2：不交并再连上所有跨越两部分的边"""
    n1 = g1.vertex_count
    edges = list(g1.edges)
    edges.extend(Edge(e.lo + n1, e.hi + n1) for e in g2.edges)
    edges.extend(Edge(u, n1 + v) for u in range(n1) for v in range(g2.vertex_count))
    return SimplicialGraph(n1 + g2.vertex_count, edges, _merge_labels(g1.labels, g2.labels))


def union(g1: SimplicialGraph, g2: SimplicialGraph, overlap: Mapping[VertexId, VertexId]) -> SimplicialGraph:
    """沿 overlap（Γ2 顶点 → Γ1 顶点）粘合两个图"""
    if len(set(overlap.values())) != len(overlap):
        raise GraphError("overlap map is not injective")
    for v2, v1 in overlap.items():
        if not (0 <= v2 < g2.vertex_count and 0 <= v1 < g1.vertex_count):
            raise GraphError(f"overlap pair {v2} -> {v1} out of range")
    position = dict(overlap)
    fresh = [v for v in range(g2.vertex_count) if v not in position]
    for offset, v in enumerate(fresh):
        position[v] = g1.vertex_count + offset
    edges = set(g1.edges)
    for e in g2.edges:
        edges.add(Edge.of(position[e.lo], position[e.hi]))
    labels = _merge_labels(g1.labels, [g2.labels[v] for v in fresh])
    return SimplicialGraph(g1.vertex_count + len(fresh), edges, labels)


def dominating_vertex(g: SimplicialGraph) -> Optional[VertexId]:
    """最小的与其它所有顶点相邻的顶点（锥点）"""
    for v in range(g.vertex_count):
        if g.degree(v) == g.vertex_count - 1:
            return v
    return None
