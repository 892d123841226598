# -*- coding: utf-8 -*-
"""测试共用的夹具读取与按顶点名取边的工具"""

import os

import networkx as nx

from src.file.handler import load_graph, parse_tree_spec
from src.graph.core import Edge, SimplicialGraph, Triangle

FIXTURE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURE_DIR, name)


def load_fixture(name: str):
    """读取 tests/fixtures 下的图，不带后缀时默认 .graph"""
    if "." not in name:
        name = f"{name}.graph"
    return load_graph(fixture_path(name))


def vertex(g, label: str) -> int:
    return g.labels.index(label)


def edge_by_labels(g, u: str, v: str) -> Edge:
    return Edge.of(vertex(g, u), vertex(g, v))


def triangle_by_labels(g, u: str, v: str, w: str) -> Triangle:
    return Triangle.of(vertex(g, u), vertex(g, v), vertex(g, w))


def tree_by_labels(g, spec: str):
    return parse_tree_spec(g, spec)


def name_of(g, u: str, v: str) -> str:
    """按端点名取生成元名 e<k>"""
    return g.edge_name(edge_by_labels(g, u, v))


def atlas_graphs(max_vertices: int = 6, min_vertices: int = 2):
    """networkx 图谱中顶点数在范围内的全部连通图"""
    for atlas_graph in nx.graph_atlas_g():
        n = atlas_graph.number_of_nodes()
        if n < min_vertices or n > max_vertices or not nx.is_connected(atlas_graph):
            continue
        yield SimplicialGraph(n, list(atlas_graph.edges()))
