# Copyright (c) Opendatalab. All rights reserved.

"""可利图的 RAAG 同构：每个三角形恰含 0 或 2 条树边时 H_Γ ≅ A_Γ′"""

from typing import Dict, Optional

from loguru import logger

from src.classify.triangles import tree_edge_count, unfavourable_triangles
from src.complex.models import SimplyConnectedVerdict
from src.decompose.models import RaagWitness
from src.graph.core import Edge, SimplicialGraph, dominating_vertex
from src.graph.trees import SpanningTree
from src.group.presentation import papadima_suciu
from src.utils.errors import CertificateError, InvalidTreeError, UnfavourableTriangleError


def _gamma_prime(g: SimplicialGraph, t: SpanningTree) -> SimplicialGraph:
    edges = set()
    for tri in g.triangles:
        inside = [t.index_of(e) for e in tri.edges if t.contains(e)]
        if len(inside) == 2:
            edges.add(Edge.of(*inside))
    return SimplicialGraph(len(t.edges), edges, t.names())


def chang_raag(g: SimplicialGraph, t: SpanningTree,
               verdict: Optional[SimplyConnectedVerdict] = None) -> RaagWitness:
    if t.host != g:
        raise InvalidTreeError("spanning tree belongs to a different graph")
    bad = unfavourable_triangles(g, t)
    if bad:
        names = [g.label(v) for v in bad[0].vertices]
        raise UnfavourableTriangleError(f"triangle ({', '.join(names)}) has exactly one tree edge")
    if verdict is not None and not verdict.is_yes:
        logger.warning(f"旗复形单连通性为 {verdict.status.value}，RAAG 同构依赖该假设")

    gamma_prime = _gamma_prime(g, t)
    generator_map: Dict[Edge, int] = {e: i for i, e in enumerate(t.edges)}
    witness = RaagWitness(
        source=g, tree=t, gamma_prime=gamma_prime, generator_map=generator_map,
        simply_connected=verdict.status.value if verdict is not None else "unchecked",
    )

    # 生成元都按树边位置编号，两边的签名可以直接比较
    expected = papadima_suciu(g, t, verdict=verdict).relator_signature(by="index")
    actual = witness.presentation().relator_signature(by="index")
    if expected != actual:
        hollow = [tri for tri in g.triangles if tree_edge_count(t, tri) == 0]
        names = ["(" + ", ".join(g.label(v) for v in tri.vertices) + ")" for tri in hollow]
        raise CertificateError(
            "Papadima-Suciu relators differ from the RAAG relators; "
            f"relators of triangles without tree edges are not implied: {', '.join(names) or 'none'}"
        )
    logger.info(f"RAAG 见证：Γ′ 有 {gamma_prime.vertex_count} 个顶点、{len(gamma_prime.edges)} 条边")
    return witness


def cone_witness(g: SimplicialGraph, verdict: Optional[SimplyConnectedVerdict] = None) -> Optional[RaagWitness]:
    """锥图 v ∨ Γ′：以锥点为中心的星形树总是可利的，H_Γ ≅ A_Γ′"""
    apex = dominating_vertex(g)
    if apex is None or g.vertex_count < 2:
        return None
    star = SpanningTree(g, tuple(Edge.of(apex, v) for v in range(g.vertex_count) if v != apex))
    return chang_raag(g, star, verdict)
