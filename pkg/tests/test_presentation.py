#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
测试群表示：字的约化、Tietze 化简、阿贝尔化、Dicks-Leary 与 Papadima-Suciu 表示
"""

import os
import random
import sys
from math import comb

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from src.complex.connectivity import is_simply_connected
from src.complex.flag import build_flag_complex
from src.graph.families import complete_graph, cycle_graph, empty_graph, path_graph, random_tree
from src.graph.isomorphism import graphs_isomorphic
from src.graph.trees import SpanningTree, enumerate_spanning_trees
from src.group.abelian import abelianization
from src.group.models import Generator, GroupPresentation, PresentationKind
from src.group.presentation import dicks_leary, papadima_suciu, raag_presentation, tree_path_word
from src.group.raag import RaagNormalizer
from src.group.tietze import simplify_presentation
from src.group.words import (Word, as_commutator, commutator, cyclic_normal_form, free_reduce, normal_form,
                             single_commutator_pair, substitute)
from src.utils.errors import DisconnectedGraphError, InvalidTreeError, WordError
from tests.helpers import atlas_graphs, edge_by_labels, load_fixture, tree_by_labels

MAIN_TREE = "v1-v2,v2-v4,v2-v3,v5-v4,v4-v6"
EXAM_TREE = "v1-v2,v2-v5,v2-v4,v2-v3,v4-v6"


def _x(i: int, e: int = 1) -> Word:
    return Word.letter(i, e)


def test_words():
    """自由约化、循环正规形式与交换子识别"""
    print("测试字...")

    assert free_reduce(Word((1, 2, -2, -1, 3))) == Word((3,))
    assert Word((1, -2)).inverse() == Word((2, -1))
    with pytest.raises(WordError):
        Word((0,))
    with pytest.raises(WordError):
        Word.letter(0, 2)

    c = commutator(_x(0), _x(1))
    assert c.letters == (1, 2, -1, -2)
    assert normal_form(c) == normal_form(commutator(_x(1), _x(0)))
    assert normal_form(Word((2, -1, -2, 1))) == normal_form(c)
    assert normal_form(Word((1, -1))) == ()
    assert cyclic_normal_form([("b", 1), ("a", 1)]) == (("a", -1), ("b", -1))

    assert single_commutator_pair(Word((2, -1, -2, 1))) == (0, 1)
    assert single_commutator_pair(Word((1, 2, -1, 2))) == (-1, -1)
    assert single_commutator_pair(commutator(_x(0), _x(1) * _x(2))) == (-1, -1)

    a, b = as_commutator((1, 2, 3, -1, -3, -2))
    assert a == (1,) and b == (2, 3)
    assert as_commutator((1, 2, 3)) == ((), ())

    assert substitute(Word((1, 2, -1)), 0, Word((3, -2))) == Word((3, 2, -3))
    with pytest.raises(WordError):
        substitute(Word((1,)), 0, Word((1, 2)))

    print("✅ 字测试通过")


def test_presentation_validation():
    """表示构造时检查生成元名称、关系子范围与类型约束"""
    print("\n测试表示校验...")

    gens = (Generator("a"), Generator("b"))
    with pytest.raises(WordError):
        GroupPresentation((Generator("a"), Generator("a")))
    with pytest.raises(WordError):
        GroupPresentation(gens, (Word((3,)),))
    with pytest.raises(WordError):
        GroupPresentation(gens, (Word((1, 2)),), PresentationKind.RAAG)
    with pytest.raises(WordError):
        GroupPresentation(gens, (commutator(_x(0), _x(1)), Word((1,))), PresentationKind.Z_SQUARED)

    z2 = GroupPresentation(gens, (commutator(_x(1), _x(0)),), PresentationKind.Z_SQUARED)
    assert z2.index_of("b") == 1
    with pytest.raises(WordError):
        z2.index_of("c")
    data = z2.to_dict()
    assert data["kind"] == "z_squared"
    assert data["generators"][0] == {"name": "a", "edge": None, "vertex": None}
    assert data["relators"] == [[2, 1, -2, -1]]

    print("✅ 表示校验测试通过")


def test_tietze_and_abelianization():
    """Tietze 化简与阿贝尔化不变量"""
    print("\n测试 Tietze 与阿贝尔化...")

    gens = (Generator("a"), Generator("b"))
    result = simplify_presentation(GroupPresentation(gens, (Word((1, 2)),)), budget=10)
    assert not result.exhausted
    assert result.eliminated == ["a"]
    assert result.presentation.generator_names == ("b",)
    assert result.presentation.relators == ()

    stuck = simplify_presentation(GroupPresentation(gens, (Word((1, 2)),)), budget=0)
    assert stuck.exhausted
    assert len(stuck.presentation.generators) == 2

    z6 = GroupPresentation((Generator("a"),), (Word((1,) * 6),))
    assert abelianization(z6).torsion == (6,)
    assert abelianization(z6).free_rank == 0
    mixed = GroupPresentation(gens, (Word((1, 1)), Word((2,) * 3)))
    assert abelianization(mixed).torsion == (6,)
    assert abelianization(GroupPresentation(gens)).free_rank == 2

    print("✅ Tietze 与阿贝尔化测试通过")


def test_raag_normalizer():
    """直角 Artin 群中的堆叠约化"""
    print("\n测试 RAAG 约化...")

    commuting = RaagNormalizer(2, [(0, 1)])
    word = _x(0) * _x(1) * _x(0, -1)
    assert commuting.reduce(word) == _x(1)
    assert commuting.is_trivial(commutator(_x(0), _x(1)))

    free = RaagNormalizer(2, [])
    assert free.reduce(word) == word
    assert not free.is_trivial(commutator(_x(0), _x(1)))

    chain = RaagNormalizer(3, [(0, 1), (1, 2)])
    assert chain.is_trivial(commutator(_x(1), _x(0) * _x(2)))
    assert not chain.is_trivial(commutator(_x(0), _x(2)))

    print("✅ RAAG 约化测试通过")


def test_dicks_leary():
    """每条边一个生成元，每个三角形两个关系子"""
    print("\n测试 Dicks-Leary 表示...")

    g = load_fixture("three_ears").graph
    dl = dicks_leary(g)
    assert dl.kind is PresentationKind.DICKS_LEARY
    assert dl.generator_names == tuple(f"e{k}" for k in range(1, 10))
    assert len(dl.relators) == 8
    assert dl.metadata["simply_connected"] == "unchecked"
    assert abelianization(dl).free_rank == g.vertex_count - 1

    with pytest.raises(DisconnectedGraphError):
        dicks_leary(empty_graph(2))

    print("✅ Dicks-Leary 表示测试通过")


def test_tree_path_word():
    """树路径字沿规范方向取正号"""
    print("\n测试树路径字...")

    g = load_fixture("exam").graph
    tree = tree_by_labels(g, EXAM_TREE)
    word = tree_path_word(g, tree, edge_by_labels(g, "v5", "v4"))
    assert word.spell(tree.names()) == (("e4", -1), ("e5", 1))

    on_tree = tree_path_word(g, tree, edge_by_labels(g, "v2", "v3"))
    assert on_tree.spell(tree.names()) == (("e3", 1),)

    other = load_fixture("three_ears").graph
    with pytest.raises(InvalidTreeError):
        tree_path_word(other, SpanningTree(path_graph(6), path_graph(6).edges), other.edges[0])

    print("✅ 树路径字测试通过")


def _expected_signature(p: GroupPresentation, words):
    return GroupPresentation(p.generators, tuple(words)).relator_signature()


def test_papadima_suciu_three_ears():
    """示例图（第一棵树）的四个关系子"""
    print("\n测试 Papadima-Suciu 表示（第一棵树）...")

    g = load_fixture("three_ears").graph
    tree = tree_by_labels(g, MAIN_TREE)
    ps = papadima_suciu(g, tree)
    assert ps.kind is PresentationKind.PAPADIMA_SUCIU
    # 树边 v1v2 v2v3 v2v4 v5v4 v4v6
    assert ps.generator_names == ("e1", "e3", "e5", "e7", "e9")
    expected = [
        commutator(_x(0), _x(2) * _x(3, -1)),
        commutator(_x(2), _x(1)),
        commutator(_x(2), _x(3)),
        commutator(_x(3), _x(4)),
    ]
    assert ps.relator_signature() == _expected_signature(ps, expected)
    assert ps.metadata["tree"] == ["e1", "e3", "e5", "e7", "e9"]
    assert abelianization(ps).free_rank == 5

    reverse = papadima_suciu(g, tree, order="reverse")
    assert reverse.relator_signature() == ps.relator_signature()
    with pytest.raises(ValueError):
        papadima_suciu(g, tree, order="random")

    print("✅ Papadima-Suciu 表示（第一棵树）测试通过")


def test_papadima_suciu_exam():
    """示例图（第二棵树）：三个交换子与一个长关系子"""
    print("\n测试 Papadima-Suciu 表示（第二棵树）...")

    g = load_fixture("exam").graph
    tree = tree_by_labels(g, EXAM_TREE)
    ps = papadima_suciu(g, tree)
    # 树边 v1v2 v2v3 v2v5 v2v4 v4v6
    assert ps.generator_names == ("e1", "e3", "e4", "e5", "e9")
    expected = [
        commutator(_x(0), _x(2)),
        commutator(_x(2), _x(3)),
        commutator(_x(3), _x(1)),
        commutator(_x(4), _x(2, -1) * _x(3)),
    ]
    assert ps.relator_signature() == _expected_signature(ps, expected)

    by_edge = ps.relator_signature(by="edge")
    v2v5 = edge_by_labels(g, "v2", "v5")
    v1v2 = edge_by_labels(g, "v1", "v2")
    key = cyclic_normal_form([((v1v2.lo, v1v2.hi), 1), ((v2v5.lo, v2v5.hi), 1),
                              ((v1v2.lo, v1v2.hi), -1), ((v2v5.lo, v2v5.hi), -1)])
    assert by_edge[key] == 1

    print("✅ Papadima-Suciu 表示（第二棵树）测试通过")


def test_papadima_suciu_complete_graphs():
    """K_n 以星形树为生成元时只剩 C(n-1, 2) 个交换子"""
    print("\n测试完全图...")

    for n in range(3, 7):
        g = complete_graph(n)
        star = next(iter(enumerate_spanning_trees(g)))
        ps = papadima_suciu(g, star)
        assert len(ps.relators) == comb(n - 1, 2)
        assert all(single_commutator_pair(r) != (-1, -1) for r in ps.relators)
        assert abelianization(ps).free_rank == n - 1
        assert ps.metadata["implied_relators_dropped"] == comb(n - 1, 3)

    print("✅ 完全图测试通过")


def test_papadima_suciu_without_triangles():
    """无三角形的树：自由群"""
    print("\n测试无三角形的图...")

    g = path_graph(5)
    ps = papadima_suciu(g, SpanningTree(g, g.edges))
    assert len(ps.generators) == 4
    assert ps.relators == ()

    square = cycle_graph(4)
    dl = dicks_leary(square)
    assert dl.relators == ()

    raag = raag_presentation(path_graph(3))
    assert raag.generator_names == ("v1", "v2", "v3")
    assert len(raag.relators) == 2

    print("✅ 无三角形的图测试通过")


def test_abelianization_on_small_graphs():
    """至多六个顶点、旗复形单连通的连通图：两种表示的阿贝尔化都是 Z^(|V|-1)"""
    print("\n测试小图谱上的阿贝尔化...")

    checked = 0
    for g in atlas_graphs(6):
        verdict = is_simply_connected(build_flag_complex(g))
        if not verdict.is_yes:
            continue
        tree = next(iter(enumerate_spanning_trees(g)))
        for p in (dicks_leary(g, verdict), papadima_suciu(g, tree, verdict=verdict)):
            invariants = abelianization(p)
            assert invariants.free_rank == g.vertex_count - 1
            assert invariants.torsion == ()
        checked += 1
    assert checked > 50

    print(f"✅ 小图谱上的阿贝尔化测试通过（{checked} 个图）")


def test_elimination_order_on_small_graphs():
    """消元顺序（lex / reverse）不影响 Papadima-Suciu 关系子"""
    print("\n测试消元顺序...")

    checked = 0
    for g in atlas_graphs(7):
        for tree in enumerate_spanning_trees(g, cap=2):
            lex = papadima_suciu(g, tree)
            reverse = papadima_suciu(g, tree, order="reverse")
            assert lex.relator_signature() == reverse.relator_signature()
            checked += 1
    assert checked > 1000

    print(f"✅ 消元顺序测试通过（{checked} 棵树）")


def test_trees_give_free_groups():
    """n 个顶点的树都给出秩为 n-1 的自由群，群不能区分不同构的树"""
    print("\n测试树的 Bestvina-Brady 群...")

    rng = random.Random(3)
    trees = [random_tree(7, rng) for _ in range(10)]
    trees.append(path_graph(7))
    for g in trees:
        ps = papadima_suciu(g, SpanningTree(g, g.edges))
        assert ps.relators == ()
        assert abelianization(ps).free_rank == 6
    assert any(graphs_isomorphic(g, path_graph(7)) is None for g in trees[:-1])

    print("✅ 树的 Bestvina-Brady 群测试通过")


def main():
    """运行所有测试"""
    print("开始测试群表示模块...")

    try:
        test_words()
        test_presentation_validation()
        test_tietze_and_abelianization()
        test_raag_normalizer()
        test_dicks_leary()
        test_tree_path_word()
        test_papadima_suciu_three_ears()
        test_papadima_suciu_exam()
        test_papadima_suciu_complete_graphs()
        test_papadima_suciu_without_triangles()
        test_abelianization_on_small_graphs()
        test_elimination_order_on_small_graphs()
        test_trees_give_free_groups()

        print("\n🎉 所有测试通过！")
        return True

    except Exception as e:
        print(f"\n❌ 测试失败: {e}")
        import traceback
        traceback.print_exc()
        return False


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
