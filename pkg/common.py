# Copyright (c) Opendatalab. All rights reserved.
"""命令行与批处理共用的分析流程"""

from typing import Any, Dict, Optional, Union

from loguru import logger

from src.classify.models import FamilyStatus, IntersectionType, SearchMode
from src.classify.recognizers import (find_clique_splitting, recognize_extra_special_triangulation,
                                      recognize_special_triangulation)
from src.classify.search import in_family_G, optimize_spanning_tree
from src.classify.triangles import classify_all, internal_map
from src.complex.connectivity import is_simply_connected
from src.complex.flag import build_flag_complex
from src.complex.models import SimplyConnectedVerdict
from src.decompose.amalgam import iterated_decomposition
from src.decompose.models import DecompositionTree, RaagWitness
from src.decompose.raag import chang_raag, cone_witness
from src.file.handler import GraphDocument, parse_tree_spec
from src.graph.core import dominating_vertex
from src.graph.trees import SpanningTree, enumerate_spanning_trees, kirchhoff_count
from src.group.models import GroupPresentation
from src.group.presentation import dicks_leary, papadima_suciu
from src.utils.errors import BudgetExhaustedError, DisconnectedGraphError, NotInFamilyError

presentation_styles = ["dl", "ps"]


def do_check(doc: GraphDocument, budget: Optional[int] = None) -> SimplyConnectedVerdict:
    verdict = is_simply_connected(build_flag_complex(doc.graph), budget)
    logger.info(f"单连通判定：{verdict.summary()}")
    return verdict


def resolve_tree(doc: GraphDocument, tree_text: Optional[str], cap: Optional[int] = None) -> SpanningTree:
    """显式给出的树优先；否则取不利三角形最少的生成树"""
    if tree_text:
        return parse_tree_spec(doc.graph, tree_text)
    if not doc.graph.is_connected():
        raise DisconnectedGraphError("graph is disconnected; it has no spanning tree")
    result = optimize_spanning_tree(doc.graph, SearchMode.MINIMIZE_UNFAVOURABLE, cap)
    if result.best_tree is None:
        raise BudgetExhaustedError(f"no spanning tree found within a cap of {cap} trees")
    return result.best_tree


def do_presentation(doc: GraphDocument, style: str = "ps", tree_text: Optional[str] = None,
                    budget: Optional[int] = None, cap: Optional[int] = None) -> GroupPresentation:
    g = doc.graph
    if not g.is_connected():
        raise DisconnectedGraphError("graph is disconnected; the kernel is not finitely generated")
    verdict = do_check(doc, budget)
    if style == "dl":
        return dicks_leary(g, verdict)
    if style != "ps":
        raise ValueError(f"unknown presentation style {style!r}")
    return papadima_suciu(g, resolve_tree(doc, tree_text, cap), verdict=verdict)


def do_decompose(doc: GraphDocument, tree_text: Optional[str] = None, budget: Optional[int] = None,
                 cap: Optional[int] = None) -> Union[DecompositionTree, RaagWitness]:
    """𝒢 中的图给出迭代融合积分解，可利图给出 RAAG 见证"""
    g = doc.graph
    if not g.is_connected():
        raise DisconnectedGraphError("decomposition needs a connected graph")
    if tree_text:
        tree = parse_tree_spec(g, tree_text)
        if not any(r.tree_edge_count == 1 for r in classify_all(g, tree)):
            return chang_raag(g, tree, do_check(doc, budget))
        return iterated_decomposition(g, tree=tree, budget=budget)

    family = in_family_G(g, cap, budget)
    if family.is_member:
        return iterated_decomposition(g, tree=family.witness_tree, verdict=family.simply_connected)
    if family.favourable_tree is not None:
        logger.info("图是可利的，输出 RAAG 见证")
        return chang_raag(g, family.favourable_tree, family.simply_connected)
    if family.status is FamilyStatus.UNKNOWN:
        raise BudgetExhaustedError(f"family membership undecided: {family.reason}")
    raise NotInFamilyError(f"graph is outside the supported classes: {family.reason}")


def do_trees(doc: GraphDocument, enumerate_count: int = 0, optimize: bool = False,
             cap: Optional[int] = None) -> Dict[str, Any]:
    g = doc.graph
    if not g.is_connected():
        raise DisconnectedGraphError("graph is disconnected; it has no spanning tree")
    report: Dict[str, Any] = {"spanning_trees": kirchhoff_count(g)}
    if enumerate_count:
        listed = []
        stream = enumerate_spanning_trees(g, enumerate_count)
        for tree in stream:
            unfavourable = sum(1 for r in classify_all(g, tree) if r.tree_edge_count == 1)
            listed.append({"tree": tree.names(), "unfavourable": unfavourable})
        report["trees"] = listed
        report["truncated"] = stream.overflow
    if optimize:
        report["optimize"] = {mode.value: optimize_spanning_tree(g, mode, cap).to_dict() for mode in SearchMode}
    return report


def do_analyze(doc: GraphDocument, budget: Optional[int] = None, cap: Optional[int] = None) -> Dict[str, Any]:
    """完整报告：连通性、旗复形、单连通性、可利性、族 𝒢 以及识别出的结构"""
    g = doc.graph
    complex_ = build_flag_complex(g)
    verdict = is_simply_connected(complex_, budget)
    connected = g.is_connected()
    report: Dict[str, Any] = {
        "graph": {"source": doc.source, "vertices": list(g.labels), "edge_count": len(g.edges)},
        "connected": connected,
        "finitely_generated": connected,
        "finitely_presented": verdict.status.value,
        "flag_complex": {
            "dimension": complex_.dimension,
            "f_vector": list(complex_.f_vector),
            "euler_characteristic": complex_.euler_characteristic,
        },
        "simply_connected": {"status": verdict.status.value, "strategy": verdict.strategy,
                             "evidence": verdict.evidence},
    }
    if not connected:
        logger.warning("图不连通，跳过依赖生成树的分析")
        return report

    shapes = internal_map(g)
    report["triangles"] = {
        "count": len(g.triangles),
        "internal": sum(1 for s in shapes.values() if s is IntersectionType.LARGER),
    }
    apex = dominating_vertex(g)
    if apex is not None and g.vertex_count > 1:
        witness = cone_witness(g, verdict)
        report["cone"] = {"apex": g.label(apex), "raag_vertices": witness.gamma_prime.vertex_count,
                          "raag_edges": len(witness.gamma_prime.edges)}
    else:
        report["cone"] = None

    family = in_family_G(g, cap, budget, verdict)
    if family.favourable_tree is not None:
        favourable = "yes"
    elif not family.searches:
        favourable = "not checked"
    else:
        favourable = "no" if family.searches[0].exhaustive else "unknown"
    report["favourable"] = {
        "status": favourable,
        "tree": family.favourable_tree.names() if family.favourable_tree is not None else None,
    }
    report["family_G"] = family.to_dict()

    special = recognize_special_triangulation(g)
    extra = recognize_extra_special_triangulation(g)
    splitting = find_clique_splitting(g)
    report["structure"] = {
        "special_triangulation": special is not None,
        "extra_special_triangulation": extra is not None,
        "clique_splitting": splitting.to_dict(g) if splitting is not None else None,
    }
    logger.info(f"分析完成：族 𝒢 判定为 {family.status.value}")
    return report
