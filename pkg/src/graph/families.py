# Copyright (c) Opendatalab. All rights reserved.

"""常用图族与随机生成器（完全图、路、圈、星、锥、八面体、特殊三角剖分等）"""

import random
from typing import List, Optional, Sequence

from src.graph.core import Edge, SimplicialGraph, Triangle, join, union
from src.graph.trees import SpanningTree


def _names(prefix: str, n: int) -> List[str]:
    return [f"{prefix}{i + 1}" for i in range(n)]


def empty_graph(n: int, prefix: str = "v") -> SimplicialGraph:
    return SimplicialGraph(n, [], _names(prefix, n))


def complete_graph(n: int, prefix: str = "v") -> SimplicialGraph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return SimplicialGraph(n, edges, _names(prefix, n))


def path_graph(n: int, prefix: str = "v") -> SimplicialGraph:
    return SimplicialGraph(n, [(i, i + 1) for i in range(n - 1)], _names(prefix, n))


def cycle_graph(n: int, prefix: str = "v") -> SimplicialGraph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    return SimplicialGraph(n, edges, _names(prefix, n))


def star_graph(n: int, prefix: str = "v") -> SimplicialGraph:
    """S_n：一个中心连 n-1 个叶子，与 K_{1,n-1} 同构"""
    return SimplicialGraph(n, [(0, i) for i in range(1, n)], _names(prefix, n))


def complete_bipartite(m: int, n: int) -> SimplicialGraph:
    edges = [(u, m + v) for u in range(m) for v in range(n)]
    return SimplicialGraph(m + n, edges, _names("a", m) + _names("b", n))


def cone(g: SimplicialGraph, apex: str = "c") -> SimplicialGraph:
    """锥图 v ∨ Γ′，锥点编号为 0"""
    return join(SimplicialGraph(1, [], [apex]), g)


def iterated_join_of_pairs(k: int) -> SimplicialGraph:
    """k 个“两个孤立点”的迭代 join；k=3 即八面体"""
    result = SimplicialGraph(2, [], ["p1", "q1"])
    for i in range(2, k + 1):
        result = join(result, SimplicialGraph(2, [], [f"p{i}", f"q{i}"]))
    return result


def octahedron() -> SimplicialGraph:
    return iterated_join_of_pairs(3)


def random_tree(n: int, rng: random.Random, prefix: str = "v") -> SimplicialGraph:
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return _shuffled(SimplicialGraph(n, edges, _names(prefix, n)), rng)


def _shuffled(g: SimplicialGraph, rng: random.Random) -> SimplicialGraph:
    perm = list(range(g.vertex_count))
    rng.shuffle(perm)
    labels = [""] * g.vertex_count
    for old, new in enumerate(perm):
        labels[new] = g.labels[old]
    return SimplicialGraph(g.vertex_count, [Edge.of(perm[e.lo], perm[e.hi]) for e in g.edges], labels)


def boundary_edges(g: SimplicialGraph) -> List[Edge]:
    """恰好属于一个三角形的边"""
    counts = {}
    for t in g.triangles:
        for e in t.edges:
            counts[e] = counts.get(e, 0) + 1
    return sorted(e for e, c in counts.items() if c == 1)


def random_special_triangulation(triangles: int, rng: random.Random, shuffle: bool = True) -> SimplicialGraph:
    """从一个三角形出发，每次沿一条边界边粘一个新三角形"""
    edges = {Edge(0, 1), Edge(1, 2), Edge(0, 2)}
    n = 3
    for _ in range(triangles - 1):
        current = SimplicialGraph(n, edges)
        base = rng.choice(boundary_edges(current))
        edges.add(Edge(base.lo, n))
        edges.add(Edge(base.hi, n))
        n += 1
    g = SimplicialGraph(n, edges, _names("v", n))
    return _shuffled(g, rng) if shuffle else g


def extra_special_from(core: SimplicialGraph) -> SimplicialGraph:
    """沿特殊三角剖分的每条边界边各加一个耳朵"""
    edges = set(core.edges)
    n = core.vertex_count
    labels = list(core.labels)
    for base in boundary_edges(core):
        edges.add(Edge(base.lo, n))
        edges.add(Edge(base.hi, n))
        labels.append(f"x{n + 1}")
        n += 1
    return SimplicialGraph(n, edges, labels)


def glue_along_triangle(g1: SimplicialGraph, t1: Triangle, g2: SimplicialGraph, t2: Triangle,
                        order: Optional[Sequence[int]] = None) -> SimplicialGraph:
    """把 Γ2 的三角形 t2 与 Γ1 的三角形 t1 粘合；order 给出 t2 顶点到 t1 顶点的配对顺序"""
    order = order or (0, 1, 2)
    targets = t1.vertices
    overlap = {v: targets[order[i]] for i, v in enumerate(t2.vertices)}
    return union(g1, g2, overlap)


def random_clique_gluing(rng: random.Random, max_triangles: int = 4) -> SimplicialGraph:
    """两个随机特殊三角剖分沿一个三角形粘合，得到以 K_3 为分离团的连通分裂"""
    g1 = random_special_triangulation(rng.randint(2, max_triangles), rng)
    g2 = random_special_triangulation(rng.randint(2, max_triangles), rng)
    g2 = SimplicialGraph(g2.vertex_count, g2.edges, _names("w", g2.vertex_count))
    t1 = rng.choice(g1.triangles)
    t2 = rng.choice(g2.triangles)
    order = [0, 1, 2]
    rng.shuffle(order)
    return glue_along_triangle(g1, t1, g2, t2, order)


def ear_triangles(g: SimplicialGraph) -> List[Triangle]:
    """含度数为 2 的顶点的三角形"""
    return [t for t in g.triangles if any(g.degree(v) == 2 for v in t.vertices)]


def stack_on_favourable_ear(g: SimplicialGraph, tree: SpanningTree, rng: random.Random) -> Optional[SimplicialGraph]:
    """选一只含两条树边的耳朵 τ，加一个与 τ 三个顶点都相邻的新顶点（沿 K_3 粘一个 K_4）

    没有这样的耳朵时返回 None。
    """
    ears = [t for t in ear_triangles(g) if sum(1 for e in t.edges if tree.contains(e)) == 2]
    if not ears:
        return None
    ear = rng.choice(ears)
    n = g.vertex_count
    edges = list(g.edges) + [Edge.of(v, n) for v in ear.vertices]
    return SimplicialGraph(n + 1, edges, list(g.labels) + [f"y{n + 1}"])
