# Copyright (c) Opendatalab. All rights reserved.

from itertools import combinations
from typing import List, Set

import networkx as nx
from loguru import logger

from src.complex.models import FlagComplex, Simplex
from src.graph.core import SimplicialGraph


def build_flag_complex(g: SimplicialGraph) -> FlagComplex:
    """由极大团（Bron–Kerbosch）展开全部子团，得到面封闭的旗复形"""
    faces: List[Set[Simplex]] = []
    for clique in nx.find_cliques(g.to_networkx()):
        clique = sorted(clique)
        for size in range(1, len(clique) + 1):
            while len(faces) < size:
                faces.append(set())
            faces[size - 1].update(combinations(clique, size))
    complex_ = FlagComplex(g, tuple(tuple(sorted(level)) for level in faces))
    logger.debug(f"旗复形 f-向量 {complex_.f_vector}")
    return complex_
