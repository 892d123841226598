# Copyright (c) Opendatalab. All rights reserved.

from typing import Dict, List

from src.classify.models import IntersectionType, TriangleReport
from src.graph.core import SimplicialGraph, Triangle, edge_set_complement, induced_subgraph, intersect
from src.graph.trees import SpanningTree
from src.utils.errors import InvalidTreeError, TriangleError


def complement_intersection(g: SimplicialGraph, tri: Triangle) -> IntersectionType:
    """三角形与其边集补的交的形状；只依赖于图，与生成树无关"""
    if not g.has_triangle(tri):
        raise TriangleError(f"{tri.vertices} is not a triangle of the graph")
    complement = edge_set_complement(g, tri)
    verts, edges = intersect(induced_subgraph(g, tri.vertices), complement)
    if not verts:
        return IntersectionType.EMPTY
    if len(verts) == 1:
        return IntersectionType.ONE_VERTEX
    if len(verts) == 2 and len(edges) == 1:
        return IntersectionType.ONE_EDGE
    return IntersectionType.LARGER


def internal_map(g: SimplicialGraph) -> Dict[Triangle, IntersectionType]:
    return {tri: complement_intersection(g, tri) for tri in g.triangles}


def tree_edge_count(t: SpanningTree, tri: Triangle) -> int:
    return sum(1 for e in tri.edges if t.contains(e))


def classify_triangle(g: SimplicialGraph, t: SpanningTree, tri: Triangle,
                      shape: IntersectionType = None) -> TriangleReport:
    if t.host != g:
        raise InvalidTreeError("spanning tree belongs to a different graph")
    if shape is None:
        shape = complement_intersection(g, tri)
    count = tree_edge_count(t, tri)
    return TriangleReport(
        triangle=tri,
        tree_edge_count=count,
        favourable=count in (0, 2),
        internal=shape is IntersectionType.LARGER,
        complement_intersection=shape,
    )


def classify_all(g: SimplicialGraph, t: SpanningTree) -> List[TriangleReport]:
    shapes = internal_map(g)
    return [classify_triangle(g, t, tri, shapes[tri]) for tri in g.triangles]


def unfavourable_triangles(g: SimplicialGraph, t: SpanningTree) -> List[Triangle]:
    return [tri for tri in g.triangles if tree_edge_count(t, tri) == 1]
