# Copyright (c) Opendatalab. All rights reserved.

"""逐个剥掉不利三角形，把 H_Γ 写成以 Z 为融合子群的迭代融合积"""

from typing import Dict, List, Optional

from loguru import logger

from src.classify.models import FamilyStatus, IntersectionType
from src.classify.search import in_family_G
from src.classify.triangles import complement_intersection, internal_map, tree_edge_count, unfavourable_triangles
from src.complex.connectivity import is_simply_connected
from src.complex.flag import build_flag_complex
from src.complex.models import SimplyConnectedVerdict, VerdictStatus
from src.decompose.models import Amalgam, DecompositionTree, Leaf, Node, PeelResult, iter_leaves
from src.decompose.raag import chang_raag
from src.graph.core import SimplicialGraph, Triangle, edge_set_complement, induced_subgraph, intersect
from src.graph.trees import SpanningTree
from src.group.models import Generator, GroupPresentation, PresentationKind
from src.group.presentation import tree_path_word
from src.group.words import Word, commutator, free_reduce
from src.utils.errors import (BudgetExhaustedError, DisconnectedGraphError, FavourableGraphError,
                              FavourableTriangleError, InvalidTreeError, NotInFamilyError, PeelError,
                              TriangleError, WordError)


def _triangle_name(g: SimplicialGraph, tri: Triangle) -> str:
    return "(" + ", ".join(g.label(v) for v in tri.vertices) + ")"


def peel_once(g: SimplicialGraph, t: SpanningTree, tri: Triangle) -> PeelResult:
    """剥掉恰含一条树边、且与其边集补恰交于一条边的三角形"""
    if t.host != g:
        raise InvalidTreeError("spanning tree belongs to a different graph")
    if not g.has_triangle(tri):
        raise TriangleError(f"{tri.vertices} is not a triangle of the graph")
    inside = [e for e in tri.edges if t.contains(e)]
    if len(inside) != 1:
        raise FavourableTriangleError(
            f"triangle {_triangle_name(g, tri)} has {len(inside)} tree edges; only unfavourable triangles peel")
    tree_edge = inside[0]

    complement = edge_set_complement(g, tri)
    verts, edges = intersect(induced_subgraph(g, tri.vertices), complement)
    if len(verts) != 2 or len(edges) != 1:
        raise PeelError(f"triangle {_triangle_name(g, tri)} meets its complement in "
                        f"{len(verts)} vertices and {len(edges)} edges, not in one edge")
    shared_edge = g.from_host_edge(next(iter(edges)))

    try:
        restricted = t.restrict_to(complement)
    except InvalidTreeError as exc:
        raise PeelError(f"tree restricted to the complement of {_triangle_name(g, tri)} "
                        f"is not spanning: {exc}") from exc

    generators = (
        Generator(g.edge_name(tree_edge), g.to_host_edge(tree_edge)),
        Generator(g.edge_name(shared_edge), g.to_host_edge(shared_edge)),
    )
    z2 = GroupPresentation(generators, (commutator(Word.letter(0), Word.letter(1)),),
                           PresentationKind.Z_SQUARED, {"triangle": [g.label(v) for v in tri.vertices]})

    local_shared = complement.from_host_edge(g.to_host_edge(shared_edge))
    path = tree_path_word(complement, restricted, local_shared)
    left_word = path.spell(restricted.names())
    right_word = ((g.edge_name(shared_edge), 1),)
    logger.debug(f"剥掉三角形 {_triangle_name(g, tri)}，融合元 {g.edge_name(shared_edge)}")
    return PeelResult(tri, tree_edge, shared_edge, complement, restricted, z2, left_word, right_word)


def _localize(g: SimplicialGraph, sub: SimplicialGraph, tri: Triangle) -> Triangle:
    """把 g 坐标下的三角形搬到同一宿主的子图 sub 中"""
    local = [sub.from_host(g.to_host(v)) for v in tri.vertices]
    if any(v is None for v in local):
        raise PeelError(f"triangle {_triangle_name(g, tri)} did not survive the earlier peels")
    return Triangle.of(*local)


def _check_tree_override(g: SimplicialGraph, tree: SpanningTree) -> None:
    if tree.host != g:
        raise InvalidTreeError("spanning tree belongs to a different graph")
    bad = unfavourable_triangles(g, tree)
    if not bad:
        raise FavourableGraphError("every triangle is favourable for this tree; use chang_raag instead")
    shapes = internal_map(g)
    for tri in bad:
        if shapes[tri] is IntersectionType.LARGER:
            raise NotInFamilyError(f"unfavourable triangle {_triangle_name(g, tri)} is internal")


def iterated_decomposition(g: SimplicialGraph, tree: Optional[SpanningTree] = None,
                           cap: Optional[int] = None, budget: Optional[int] = None,
                           verdict: Optional[SimplyConnectedVerdict] = None) -> DecompositionTree:
    """H_Γ = ((A_Γn *_Z Z^2) *_Z ...) *_Z Z^2，不利三角形按顶点三元组的字典序依次剥掉"""
    if not g.is_connected():
        raise DisconnectedGraphError("decomposition needs a connected graph")

    if tree is None:
        family = in_family_G(g, cap, budget, verdict)
        if family.status is FamilyStatus.UNKNOWN:
            raise BudgetExhaustedError(f"family membership undecided: {family.reason}")
        if not family.is_member:
            if family.favourable_tree is not None:
                raise FavourableGraphError("graph is favourable; use chang_raag instead")
            raise NotInFamilyError(f"graph is not in the family G: {family.reason}")
        tree, verdict = family.witness_tree, family.simply_connected
    else:
        _check_tree_override(g, tree)
        verdict = verdict or is_simply_connected(build_flag_complex(g), budget)
        if verdict.status is VerdictStatus.NO:
            raise NotInFamilyError(f"flag complex is not simply connected: {verdict.evidence}")
        if verdict.status is VerdictStatus.UNKNOWN:
            logger.warning("旗复形单连通性未能判定，分解依赖未验证的假设")

    peels: List[PeelResult] = []
    peeled: List[Triangle] = []
    current, current_tree = g, tree
    for tri in unfavourable_triangles(g, tree):
        local = _localize(g, current, tri)
        if tree_edge_count(current_tree, local) != 1:
            raise PeelError(f"triangle {_triangle_name(g, tri)} is no longer unfavourable")
        if complement_intersection(current, local) is not IntersectionType.ONE_EDGE:
            raise PeelError(f"triangle {_triangle_name(g, tri)} does not meet its complement in one edge")
        result = peel_once(current, current_tree, local)
        peels.append(result)
        peeled.append(tri)
        current, current_tree = result.complement, result.restricted_tree
        logger.info(f"第 {len(peels)} 次剥离：{_triangle_name(g, tri)}，剩余 {current.vertex_count} 个顶点")

    leftover = unfavourable_triangles(current, current_tree)
    if leftover:
        raise PeelError(f"final complement still has unfavourable triangle {_triangle_name(current, leftover[0])}")
    witness = chang_raag(current, current_tree, verdict)

    node: Node = Leaf(witness.presentation(), f"A_Γ{len(peels)}")
    for step in range(len(peels), 0, -1):
        peel = peels[step - 1]
        node = Amalgam(
            left=node,
            right=Leaf(peel.z2, "Z^2"),
            left_word=peel.left_word,
            right_word=peel.right_word,
            step=step,
            triangle=tuple(g.label(v) for v in peeled[step - 1].vertices),
        )
    status = verdict.status.value if verdict is not None else "unchecked"
    return DecompositionTree(node, tree, peels, status)



def _amalgams(node: Node) -> List[Amalgam]:
    if isinstance(node, Leaf):
        return []
    return [node] + _amalgams(node.left) + _amalgams(node.right)


def flatten_presentation(d: DecompositionTree) -> GroupPresentation:
    """所有叶子的自由积，每个融合结点再加一个关系子 left_word · right_word^-1

    第 k 个叶子（深度优先、先左）的生成元 x 改名为 x_L<k>，改名表存放在 metadata 中。
    """
    if isinstance(d.root, Leaf):
        return d.root.presentation

    generators: List[Generator] = []
    relators: List[Word] = []
    renames: Dict[str, str] = {}
    offsets: Dict[int, int] = {}
    for k, leaf in enumerate(d.leaves(), 1):
        offset = len(generators)
        offsets[id(leaf)] = offset
        for gen in leaf.presentation.generators:
            name = f"{gen.name}_L{k}"
            renames[name] = gen.name
            generators.append(Generator(name, gen.edge, gen.vertex))
        relators.extend(Word.from_pairs([(offset + i, e) for i, e in r.pairs()])
                        for r in leaf.presentation.relators)

    def locate(node: Node, name: str) -> int:
        for leaf in iter_leaves(node):
            if name in leaf.presentation.generator_names:
                return offsets[id(leaf)] + leaf.presentation.index_of(name)
        raise WordError(f"generator {name!r} does not occur below the amalgam")

    for amalgam in _amalgams(d.root):
        left = Word.from_pairs([(locate(amalgam.left, name), e) for name, e in amalgam.left_word])
        right = Word.from_pairs([(locate(amalgam.right, name), e) for name, e in amalgam.right_word])
        relators.append(free_reduce(left * right.inverse()))

    metadata = {
        "rename_map": renames,
        "leaves": [leaf.label for leaf in d.leaves()],
        "amalgamations": len(_amalgams(d.root)),
    }
    return GroupPresentation(tuple(generators), tuple(relators), PresentationKind.GENERIC, metadata)
