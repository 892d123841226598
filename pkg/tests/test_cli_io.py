#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
测试输入解析、表示输出格式、JSON Schema 校验以及命令行退出码
"""

import json
import os
import sys
import tempfile

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest
from click.testing import CliRunner
from jsonschema import ValidationError
from loguru import logger

from client import cli
from common import resolve_tree
from src.decompose.amalgam import iterated_decomposition
from src.file.handler import guess_format, load_graph, parse_graph, parse_tree_spec
from src.file.manager import load_schema, save_json, validate_document
from src.file.render import emit_presentation, parse_presentation, render_report
from src.group.presentation import papadima_suciu
from src.utils.errors import (BudgetExhaustedError, DuplicateEdgeError, DuplicateVertexError, EmptyInputError,
                              GraphParseError, InvalidTreeError, LoopError, MalformedLineError,
                              UnknownVertexError)
from src.version import __version__
from tests.helpers import fixture_path, load_fixture

MAIN_TREE = "v1-v2,v2-v4,v2-v3,v5-v4,v4-v6"


def _invoke(*args):
    """调用命令行（只输出 ERROR 日志，JSON 输出可直接解析）；结束后恢复 loguru 的 stderr 输出"""
    result = CliRunner().invoke(cli, ["--log-level", "ERROR", *args])
    logger.remove()
    logger.add(sys.stderr, level="WARNING")
    return result


def test_parse_edge_list():
    """边表格式：顶点头行、注释、孤立顶点"""
    print("测试边表解析...")

    doc = parse_graph("# comment\nvertices: a b c\n\na b\n")
    assert doc.names == ("a", "b", "c")
    assert doc.graph.vertex_count == 3
    assert len(doc.graph.edges) == 1
    assert doc.graph.neighbors(2) == frozenset()

    main = load_fixture("three_ears")
    assert parse_graph(main.to_text()).graph == main.graph
    assert guess_format("x.dot") == "dot"
    assert guess_format("x.GV") == "dot"
    assert guess_format("x.graph") == "edges"
    with pytest.raises(ValueError):
        parse_graph("a b", fmt="csv")

    print("✅ 边表解析测试通过")


def test_parse_errors():
    """每种输入错误对应的异常、行号与退出码 2"""
    print("\n测试解析错误...")

    cases = [
        ("a b\na a\n", LoopError, 2),
        ("a b\nb a\n", DuplicateEdgeError, 2),
        ("vertices: a b a\n", DuplicateVertexError, 1),
        ("vertices: a b\na c\n", UnknownVertexError, 2),
        ("a b c\n", MalformedLineError, 1),
        ("a b\nvertices: a b\n", MalformedLineError, 2),
        ("a-b c\n", MalformedLineError, 1),
        ("# nothing\n\n", EmptyInputError, 0),
    ]
    for text, error, line in cases:
        with pytest.raises(error) as info:
            parse_graph(text)
        assert info.value.exit_code == 2
        assert info.value.line == line
        if line:
            assert str(info.value).startswith(f"line {line}:")

    print("✅ 解析错误测试通过")


def test_parse_dot():
    """DOT 子集：链式边、属性、有向图拒绝"""
    print("\n测试 DOT 解析...")

    k4 = load_fixture("k4.dot")
    assert k4.fmt == "dot"
    assert k4.names == ("a", "b", "c", "d")
    assert len(k4.graph.edges) == 6

    doc = parse_graph('graph g {\n  node [shape=circle];\n  x -- y [color=red];\n  z;\n}\n', fmt="dot")
    assert doc.names == ("x", "y", "z")
    assert len(doc.graph.edges) == 1

    with pytest.raises(MalformedLineError):
        parse_graph("digraph g { a -> b; }", fmt="dot")
    with pytest.raises(MalformedLineError):
        parse_graph("graph g {\n a -> b;\n}", fmt="dot")
    with pytest.raises(EmptyInputError):
        parse_graph("// only a comment\n", fmt="dot")

    print("✅ DOT 解析测试通过")


def test_parse_tree_spec():
    """e<k> 与 u-v 两种写法给出同一棵树"""
    print("\n测试生成树解析...")

    g = load_fixture("three_ears").graph
    by_name = parse_tree_spec(g, "e1,e3,e5,e7,e9")
    by_labels = parse_tree_spec(g, MAIN_TREE)
    assert by_name.names() == by_labels.names() == ["e1", "e3", "e5", "e7", "e9"]

    for bad in ("e1,e3,e5,e7,e99", "e1,e1,e5,e7,e9", "v1-v6,e3,e5,e7,e9", "x1,e3,e5,e7,e9"):
        with pytest.raises(InvalidTreeError):
            parse_tree_spec(g, bad)
    with pytest.raises(InvalidTreeError):
        parse_tree_spec(g, "e1,e3,e5,e7")

    print("✅ 生成树解析测试通过")


def test_presentation_formats():
    """plain / cas / json 三种格式的输出与读回"""
    print("\n测试表示输出格式...")

    g = load_fixture("three_ears").graph
    ps = papadima_suciu(g, parse_tree_spec(g, MAIN_TREE))

    plain = emit_presentation(ps, "plain")
    lines = plain.splitlines()
    assert lines[0] == "# simply connected: unchecked (hypothesis not verified)"
    assert lines[1] == "gens: e1, e3, e5, e7, e9"
    assert "rel: [e1,e5 e7^-1]" in lines
    assert len([x for x in lines if x.startswith("rel:")]) == 4
    assert parse_presentation(plain, "plain").relator_signature() == ps.relator_signature()

    cas = emit_presentation(ps, "cas")
    assert cas.startswith("Group<e1, e3, e5, e7, e9 | ")
    assert "e1*e5*e7^-1*e1^-1*e7*e5^-1" in cas
    assert parse_presentation(cas, "cas").relator_signature() == ps.relator_signature()

    restored = parse_presentation(emit_presentation(ps, "json"), "json")
    assert restored == ps
    assert restored.metadata["tree"] == ["e1", "e3", "e5", "e7", "e9"]

    with pytest.raises(MalformedLineError):
        parse_presentation("gens: a\nrel: a b\n", "plain")
    with pytest.raises(MalformedLineError):
        parse_presentation("Group<a | a*b>", "cas")
    with pytest.raises(GraphParseError):
        parse_presentation("{\"kind\": \"raag\"}", "json")
    with pytest.raises(ValueError):
        emit_presentation(ps, "latex")

    print("✅ 表示输出格式测试通过")


def test_schema_validation():
    """表示与分解文档符合随包的 JSON Schema"""
    print("\n测试 JSON Schema...")

    g = load_fixture("three_ears").graph
    tree = parse_tree_spec(g, MAIN_TREE)
    validate_document(papadima_suciu(g, tree).to_dict(), "presentation")
    document = iterated_decomposition(g, tree=tree).to_dict()
    validate_document(document, "decomposition")

    broken = dict(document)
    broken["simply_connected"] = "maybe"
    with pytest.raises(ValidationError):
        validate_document(broken, "decomposition")
    with pytest.raises(ValidationError):
        validate_document({"kind": "raag", "generators": [{"name": "a"}], "relators": [], "metadata": {}},
                          "presentation")
    with pytest.raises(ValueError):
        load_schema("report")

    with tempfile.TemporaryDirectory() as tmp:
        path = save_json(document, os.path.join(tmp, "nested", "main.json"))
        with open(path, "r", encoding="utf-8") as f:
            assert json.load(f)["expression"] == "(A_Γ1 *_Z Z^2)"

    print("✅ JSON Schema 测试通过")


def test_render_report():
    """嵌套报告的缩进文本"""
    print("\n测试报告文本...")

    text = render_report({"connected": True, "cone": None, "flag_complex": {"f_vector": [6, 9, 4], "holes": []}})
    assert text == "connected: True\ncone: -\nflag_complex:\n  f_vector: 6, 9, 4\n  holes: -\n"

    print("✅ 报告文本测试通过")


def test_cli_presentation_and_check():
    """presentation 与 check 子命令"""
    print("\n测试命令行 presentation / check...")

    main = fixture_path("three_ears.graph")
    result = _invoke("presentation", main, "-t", MAIN_TREE)
    assert result.exit_code == 0
    assert "gens: e1, e3, e5, e7, e9" in result.output
    assert "hypothesis not verified" not in result.output

    result = _invoke("presentation", main, "-s", "dl", "-o", "json")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["kind"] == "dicks_leary"
    assert len(data["relators"]) == 8

    result = _invoke("presentation", fixture_path("square.graph"))
    assert result.exit_code == 0
    assert "# simply connected: no (hypothesis not verified)" in result.output

    result = _invoke("check", fixture_path("square.graph"))
    assert result.exit_code == 0
    assert "no (homology): H1 = Z^1 is nonzero" in result.output

    result = _invoke("check", main, "--json")
    assert result.exit_code == 0
    assert json.loads(result.output)["status"] == "yes"

    result = _invoke("check", fixture_path("octahedron.graph"), "--budget", "1")
    assert result.exit_code == 4
    assert "error: simple connectivity undecided" in result.output

    print("✅ 命令行 presentation / check 测试通过")


def test_cli_decompose_and_trees():
    """decompose 与 trees 子命令以及错误退出码"""
    print("\n测试命令行 decompose / trees...")

    main = fixture_path("three_ears.graph")
    with tempfile.TemporaryDirectory() as tmp:
        out = os.path.join(tmp, "main.decomposition.json")
        result = _invoke("decompose", main, "-t", MAIN_TREE, "--json", out)
        assert result.exit_code == 0
        assert "H = (A_Γ1 *_Z Z^2)\n" in result.output
        assert "step 1: peel (v1, v2, v5), glue e5 e7^-1 = e4" in result.output
        with open(out, "r", encoding="utf-8") as f:
            validate_document(json.load(f), "decomposition")

    result = _invoke("decompose", fixture_path("favourable.graph"))
    assert result.exit_code == 0
    assert "H = A_Γ′ (favourable graph)" in result.output

    result = _invoke("decompose", fixture_path("square.graph"))
    assert result.exit_code == 3
    assert "error:" in result.output

    result = _invoke("trees", fixture_path("k4.dot"))
    assert result.exit_code == 0
    assert "spanning trees: 16" in result.output

    result = _invoke("trees", main, "-n", "3", "--json")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert len(data["trees"]) == 3
    assert data["truncated"] is True

    with tempfile.TemporaryDirectory() as tmp:
        broken = os.path.join(tmp, "loop.graph")
        with open(broken, "w", encoding="utf-8") as f:
            f.write("a b\nb b\n")
        result = _invoke("check", broken)
        assert result.exit_code == 2
        assert "error: line 2: loop at vertex 'b'" in result.output

    result = _invoke("--version")
    assert result.exit_code == 0
    assert __version__ in result.output

    print("✅ 命令行 decompose / trees 测试通过")


def test_cli_analyze():
    """analyze 子命令的 JSON 报告"""
    print("\n测试命令行 analyze...")

    result = _invoke("analyze", fixture_path("three_ears.graph"), "--json")
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["connected"] is True
    assert report["flag_complex"]["f_vector"] == [6, 9, 4]
    assert report["simply_connected"]["status"] == "yes"
    assert report["triangles"] == {"count": 4, "internal": 1}
    assert report["cone"] is None
    assert report["favourable"]["status"] == "no"
    assert report["family_G"]["status"] == "member"
    assert report["structure"]["special_triangulation"] is True
    assert report["structure"]["extra_special_triangulation"] is True

    result = _invoke("analyze")
    assert result.exit_code == 2

    print("✅ 命令行 analyze 测试通过")


def test_cli_input_guards():
    """非 UTF-8 文件、非正的上限与预算、CRITICAL 日志级别"""
    print("\n测试命令行输入检查...")

    with tempfile.TemporaryDirectory() as tmp:
        binary = os.path.join(tmp, "binary.graph")
        with open(binary, "wb") as f:
            f.write(b"u v\n\xff\xfe w\n")
        with pytest.raises(GraphParseError) as info:
            load_graph(binary)
        assert info.value.exit_code == 2
        assert "not valid UTF-8 at byte 4" in str(info.value)

        result = _invoke("analyze", binary)
        assert result.exit_code == 2
        assert "not valid UTF-8" in result.output
        assert result.exception is None or isinstance(result.exception, SystemExit)

    square = fixture_path("square.graph")
    for option in ("--cap", "--budget"):
        for value in ("0", "-3"):
            result = _invoke("presentation", square, f"{option}={value}")
            assert result.exit_code == 2
            assert f"Invalid value for '{option}'" in result.output

    with pytest.raises(BudgetExhaustedError) as info:
        resolve_tree(load_fixture("square"), None, cap=0)
    assert info.value.exit_code == 4

    result = _invoke("presentation", square, "--cap", "1")
    assert result.exit_code == 0
    assert result.output.count("gens:") == 1

    result = CliRunner().invoke(cli, ["--log-level", "CRITICAL", "check", square])
    logger.remove()
    logger.add(sys.stderr, level="WARNING")
    assert result.exit_code == 0

    print("✅ 命令行输入检查测试通过")


def main():
    """运行所有测试"""
    print("开始测试输入输出与命令行...")

    try:
        test_parse_edge_list()
        test_parse_errors()
        test_parse_dot()
        test_parse_tree_spec()
        test_presentation_formats()
        test_schema_validation()
        test_render_report()
        test_cli_presentation_and_check()
        test_cli_decompose_and_trees()
        test_cli_analyze()
        test_cli_input_guards()

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
