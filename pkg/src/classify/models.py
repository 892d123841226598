# Copyright (c) Opendatalab. All rights reserved.

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from src.complex.models import SimplyConnectedVerdict
from src.graph.core import Edge, SimplicialGraph, Triangle, VertexId, induced_subgraph
from src.graph.trees import SpanningTree
from src.utils.errors import GraphError


class IntersectionType(Enum):
    """三角形与其边集补的交"""
    EMPTY = "empty"
    ONE_VERTEX = "one_vertex"
    ONE_EDGE = "one_edge"
    LARGER = "larger"


@dataclass(frozen=True)
class TriangleReport:
    triangle: Triangle
    tree_edge_count: int
    favourable: bool
    internal: bool
    complement_intersection: IntersectionType

    def to_dict(self, g: Optional[SimplicialGraph] = None) -> Dict[str, Any]:
        verts = list(self.triangle.vertices)
        return {
            "triangle": [g.label(v) for v in verts] if g is not None else verts,
            "tree_edge_count": self.tree_edge_count,
            "favourable": self.favourable,
            "internal": self.internal,
            "complement_intersection": self.complement_intersection.value,
        }


class SearchMode(Enum):
    """生成树优化目标"""
    MINIMIZE_UNFAVOURABLE = "minimize_unfavourable"
    FORBID_INTERNAL_UNFAVOURABLE = "forbid_internal_unfavourable"
    MINIMIZE_INTERNAL_UNFAVOURABLE = "minimize_internal_unfavourable"


@dataclass(frozen=True)
class TreeSearchResult:
    mode: SearchMode
    best_tree: Optional[SpanningTree]
    unfavourable_count: int
    unfavourable_internal_count: int
    exhaustive: bool
    trees_examined: int

    @property
    def found(self) -> bool:
        return self.best_tree is not None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mode": self.mode.value,
            "best_tree": self.best_tree.names() if self.best_tree is not None else None,
            "unfavourable_count": self.unfavourable_count if self.found else None,
            "unfavourable_internal_count": self.unfavourable_internal_count if self.found else None,
            "exhaustive": self.exhaustive,
            "trees_examined": self.trees_examined,
        }


@dataclass(frozen=True)
class SplittingWitness:
    """连通分裂 (Γ1, Γ2, Γ3)，Γ3 = Γ1 ∩ Γ2 为团"""
    gamma1: FrozenSet[VertexId]
    gamma2: FrozenSet[VertexId]
    gamma3: FrozenSet[VertexId]
    clique_size: int

    def verify(self, g: SimplicialGraph) -> bool:
        if self.gamma1 & self.gamma2 != self.gamma3:
            return False
        if self.gamma1 | self.gamma2 != frozenset(range(g.vertex_count)):
            return False
        left, right = self.gamma1 - self.gamma3, self.gamma2 - self.gamma3
        if not left or not right:
            return False
        if any(g.has_edge(u, v) for u in left for v in right):
            return False
        if any(not g.has_edge(u, v) for u in self.gamma3 for v in self.gamma3 if u < v):
            return False
        rest = induced_subgraph(g, set(range(g.vertex_count)) - self.gamma3)
        if rest.is_connected():
            return False
        return induced_subgraph(g, self.gamma1).is_connected() and induced_subgraph(g, self.gamma2).is_connected()

    def to_dict(self, g: SimplicialGraph) -> Dict[str, Any]:
        return {
            "gamma1": [g.label(v) for v in sorted(self.gamma1)],
            "gamma2": [g.label(v) for v in sorted(self.gamma2)],
            "gamma3": [g.label(v) for v in sorted(self.gamma3)],
            "clique_size": self.clique_size,
        }


@dataclass(frozen=True)
class Ear:
    """被剥掉的二度顶点 apex 及其所贴的边 base"""
    apex: VertexId
    base: Edge


@dataclass(frozen=True)
class SpecialTriangulation:
    """剥耳序列：ears 为删除顺序，逆序重放即构造序列"""
    base: Triangle
    ears: Tuple[Ear, ...]

    def replay(self, g: SimplicialGraph) -> SimplicialGraph:
        """从底三角形出发按构造顺序逐个加回耳朵"""
        edges = set(self.base.edges)
        for ear in reversed(self.ears):
            if ear.base not in edges:
                raise GraphError(f"ear base ({ear.base.lo}, {ear.base.hi}) not present when replaying")
            edges.add(Edge.of(ear.apex, ear.base.lo))
            edges.add(Edge.of(ear.apex, ear.base.hi))
        return SimplicialGraph(g.vertex_count, edges, g.labels)

    def to_dict(self, g: SimplicialGraph) -> Dict[str, Any]:
        return {
            "base": [g.label(v) for v in self.base.vertices],
            "ears": [{"apex": g.label(e.apex), "base": [g.label(e.base.lo), g.label(e.base.hi)]}
                     for e in self.ears],
        }


@dataclass(frozen=True)
class ExtraSpecialTriangulation:
    """核心（特殊三角剖分）加上每条边界边上的一个耳朵；坐标均为原图坐标"""
    core_vertices: FrozenSet[VertexId]
    core: SpecialTriangulation
    ears: Tuple[Ear, ...]

    def to_dict(self, g: SimplicialGraph) -> Dict[str, Any]:
        return {
            "core_vertices": [g.label(v) for v in sorted(self.core_vertices)],
            "ears": [{"apex": g.label(e.apex), "base": [g.label(e.base.lo), g.label(e.base.hi)]}
                     for e in self.ears],
        }


class FamilyStatus(Enum):
    """是否属于族 𝒢"""
    MEMBER = "member"
    NOT_MEMBER = "not_member"
    UNKNOWN = "unknown"


@dataclass
class FamilyVerdict:
    status: FamilyStatus
    reason: str
    witness_tree: Optional[SpanningTree] = None
    favourable_tree: Optional[SpanningTree] = None
    simply_connected: Optional[SimplyConnectedVerdict] = None
    searches: List[TreeSearchResult] = field(default_factory=list)

    @property
    def is_member(self) -> bool:
        return self.status is FamilyStatus.MEMBER

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "reason": self.reason,
            "witness_tree": self.witness_tree.names() if self.witness_tree is not None else None,
            "favourable_tree": self.favourable_tree.names() if self.favourable_tree is not None else None,
            "simply_connected": self.simply_connected.status.value if self.simply_connected else None,
            "searches": [s.to_dict() for s in self.searches],
        }
