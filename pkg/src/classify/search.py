# Copyright (c) Opendatalab. All rights reserved.

"""生成树的分支定界搜索以及可利图 / 族 𝒢 的判定"""

import random
from typing import List, Optional, Tuple

from loguru import logger

from src.classify.models import FamilyStatus, FamilyVerdict, IntersectionType, SearchMode, TreeSearchResult
from src.classify.triangles import internal_map
from src.complex.connectivity import is_simply_connected
from src.complex.flag import build_flag_complex
from src.complex.models import SimplyConnectedVerdict, VerdictStatus
from src.graph.core import SimplicialGraph
from src.graph.families import extra_special_from, random_special_triangulation, stack_on_favourable_ear
from src.graph.trees import TreeBacktracker, tree_from_flags
from src.utils.errors import DisconnectedGraphError
from src.utils.helpers import resolve_tree_cap


class _TreeOptimizer:
    """按边的字典序回溯；三角形在其最后一条边（bc）被决定时定型

    每个深度记录已定型三角形中不利者、不利内部者、不含树边者的个数。
    这些计数随深度单调不减，所以部分目标值不小于当前最优时即可剪枝；
    严格改进才替换，于是同目标值下保留字典序最小的树。
    """

    def __init__(self, g: SimplicialGraph, mode: SearchMode, cap: int):
        self.graph = g
        self.mode = mode
        self.cap = cap
        index = {e: i for i, e in enumerate(g.edges)}
        shapes = internal_map(g)
        self.finalized: List[List[Tuple[Tuple[int, int, int], bool]]] = [[] for _ in g.edges]
        for tri in g.triangles:
            positions = tuple(index[e] for e in tri.edges)
            internal = shapes[tri] is IntersectionType.LARGER
            self.finalized[max(positions)].append((positions, internal))
        m = len(g.edges)
        self.unfavourable = [0] * (m + 1)
        self.internal_unfavourable = [0] * (m + 1)
        self.zero = [0] * (m + 1)
        self.best_key: Optional[tuple] = None
        self.best_flags: Optional[Tuple[bool, ...]] = None
        self.examined = 0

    def _key(self, depth: int) -> tuple:
        if self.mode is SearchMode.MINIMIZE_INTERNAL_UNFAVOURABLE:
            return (self.internal_unfavourable[depth], self.unfavourable[depth], self.zero[depth])
        return (self.unfavourable[depth], self.zero[depth])

    def _admissible(self, idx: int, chosen: List[bool]) -> bool:
        unf, inner, zero = self.unfavourable[idx], self.internal_unfavourable[idx], self.zero[idx]
        for positions, internal in self.finalized[idx]:
            count = sum(1 for p in positions if chosen[p])
            if count == 1:
                unf += 1
                if internal:
                    inner += 1
            elif count == 0:
                zero += 1
        self.unfavourable[idx + 1] = unf
        self.internal_unfavourable[idx + 1] = inner
        self.zero[idx + 1] = zero
        if self.mode is SearchMode.FORBID_INTERNAL_UNFAVOURABLE and inner > 0:
            return False
        return self.best_key is None or self._key(idx + 1) < self.best_key

    def run(self) -> TreeSearchResult:
        m = len(self.graph.edges)
        exhaustive = True
        floor = (0,) * len(self._key(0))
        for flags in TreeBacktracker(self.graph).walk(self._admissible):
            if self.examined >= self.cap:
                exhaustive = False
                logger.warning(f"生成树搜索达到上限 {self.cap}，结果可能不是全局最优")
                break
            self.examined += 1
            key = self._key(m)
            if self.best_key is None or key < self.best_key:
                self.best_key = key
                self.best_flags = flags
                logger.debug(f"更优生成树：目标值 {key}")
                if key == floor:
                    break

        if self.best_flags is None:
            return TreeSearchResult(self.mode, None, 0, 0, exhaustive, self.examined)
        tree = tree_from_flags(self.graph, self.best_flags)
        unf, inner = self._count(self.best_flags)
        return TreeSearchResult(self.mode, tree, unf, inner, exhaustive, self.examined)

    def _count(self, flags: Tuple[bool, ...]) -> Tuple[int, int]:
        unf = inner = 0
        for bucket in self.finalized:
            for positions, internal in bucket:
                if sum(1 for p in positions if flags[p]) == 1:
                    unf += 1
                    inner += int(internal)
        return unf, inner


def optimize_spanning_tree(g: SimplicialGraph, mode: SearchMode = SearchMode.MINIMIZE_UNFAVOURABLE,
                           cap: Optional[int] = None) -> TreeSearchResult:
    if not g.is_connected():
        raise DisconnectedGraphError("spanning-tree search needs a connected graph")
    result = _TreeOptimizer(g, mode, resolve_tree_cap(cap)).run()
    logger.info(f"{mode.value} 搜索完成：考察 {result.trees_examined} 棵树，"
                f"不利三角形 {result.unfavourable_count if result.found else '-'}")
    return result


def is_favourable_graph(g: SimplicialGraph, cap: Optional[int] = None,
                        verdict: Optional[SimplyConnectedVerdict] = None):
    """返回使所有三角形都有利的生成树，不存在（或搜索被截断）时返回 None"""
    if verdict is not None and not verdict.is_yes:
        logger.warning(f"旗复形单连通性为 {verdict.status.value}，可利图的结论依赖该假设")
    result = optimize_spanning_tree(g, SearchMode.MINIMIZE_UNFAVOURABLE, cap)
    if result.found and result.unfavourable_count == 0:
        return result.best_tree
    if not result.exhaustive:
        logger.warning("可利生成树搜索被截断，无法断定图不可利")
    return None


def in_family_G(g: SimplicialGraph, cap: Optional[int] = None, budget: Optional[int] = None,
                verdict: Optional[SimplyConnectedVerdict] = None) -> FamilyVerdict:
    """族 𝒢：旗复形单连通、图不可利、存在使所有内部三角形都有利的生成树"""
    if not g.is_connected():
        raise DisconnectedGraphError("family membership needs a connected graph")
    sc = verdict or is_simply_connected(build_flag_complex(g), budget)
    if sc.status is VerdictStatus.NO:
        return FamilyVerdict(FamilyStatus.NOT_MEMBER, "flag complex is not simply connected", simply_connected=sc)

    favourable = optimize_spanning_tree(g, SearchMode.MINIMIZE_UNFAVOURABLE, cap)
    if favourable.found and favourable.unfavourable_count == 0:
        return FamilyVerdict(FamilyStatus.NOT_MEMBER, "graph is favourable",
                             favourable_tree=favourable.best_tree, simply_connected=sc, searches=[favourable])

    forbid = optimize_spanning_tree(g, SearchMode.FORBID_INTERNAL_UNFAVOURABLE, cap)
    searches = [favourable, forbid]
    if not forbid.found:
        if forbid.exhaustive:
            return FamilyVerdict(FamilyStatus.NOT_MEMBER,
                                 "every spanning tree has an unfavourable internal triangle",
                                 simply_connected=sc, searches=searches)
        return FamilyVerdict(FamilyStatus.UNKNOWN, "tree search capped before a witness was found",
                             simply_connected=sc, searches=searches)
    if not favourable.exhaustive:
        return FamilyVerdict(FamilyStatus.UNKNOWN, "favourable-tree search capped; graph may be favourable",
                             witness_tree=forbid.best_tree, simply_connected=sc, searches=searches)
    if sc.status is VerdictStatus.UNKNOWN:
        return FamilyVerdict(FamilyStatus.UNKNOWN, "simple connectivity of the flag complex undecided",
                             witness_tree=forbid.best_tree, simply_connected=sc, searches=searches)
    return FamilyVerdict(FamilyStatus.MEMBER, "unfavourable graph with a tree making every internal triangle favourable",
                         witness_tree=forbid.best_tree, simply_connected=sc, searches=searches)


def random_family_member(rng: random.Random, max_core_triangles: int = 4, attempts: int = 20) -> SimplicialGraph:
    """随机生成族 𝒢 中的图：超特殊三角剖分沿一只有利的耳朵粘一个 K_4

    耳朵三角形 τ 是 K_3 分离团。新顶点只能以星形接入 τ 的 K_4，所以图仍不可利；
    见证树在 τ 上有两条树边，补上一条新边就让所有内部三角形保持有利。
    """
    for _ in range(attempts):
        core = random_special_triangulation(rng.randint(1, max_core_triangles), rng)
        piece = extra_special_from(core)
        witness = optimize_spanning_tree(piece, SearchMode.FORBID_INTERNAL_UNFAVOURABLE).best_tree
        if witness is None:
            continue
        glued = stack_on_favourable_ear(piece, witness, rng)
        if glued is not None:
            return glued
    raise RuntimeError(f"no family member generated in {attempts} attempts")
