# Copyright (c) Opendatalab. All rights reserved.

from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Tuple, Union

from src.graph.core import Edge, SimplicialGraph, Triangle, VertexId
from src.graph.trees import SpanningTree
from src.group.models import Generator, GroupPresentation, PresentationKind
from src.group.presentation import raag_presentation

# 按生成元名称拼写的字：((名称, ±1), ...)
SpelledWord = Tuple[Tuple[str, int], ...]


def spell_to_text(word: SpelledWord) -> str:
    if not word:
        return "1"
    return " ".join(name if exp == 1 else f"{name}^-1" for name, exp in word)


@dataclass(frozen=True)
class RaagWitness:
    """H_Γ ≅ A_Γ′ 的见证：Γ′ 的顶点是生成树的边，两条树边落在同一三角形中则相邻"""
    source: SimplicialGraph = field(repr=False)
    tree: SpanningTree = field(repr=False)
    gamma_prime: SimplicialGraph
    generator_map: Dict[Edge, VertexId] = field(compare=False)
    simply_connected: str = "unchecked"

    def tree_edge_of(self, vertex: VertexId) -> Edge:
        return self.tree.edges[vertex]

    def presentation(self) -> GroupPresentation:
        """A_Γ′，生成元沿用树边的名称并记录来源边"""
        raag = raag_presentation(self.gamma_prime)
        generators = tuple(
            Generator(self.gamma_prime.label(v), edge=self.source.to_host_edge(self.tree_edge_of(v)), vertex=v)
            for v in range(self.gamma_prime.vertex_count)
        )
        metadata = {"simply_connected": self.simply_connected, "tree": self.tree.names()}
        return GroupPresentation(generators, raag.relators, PresentationKind.RAAG, metadata)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertices": list(self.gamma_prime.labels),
            "edges": [[self.gamma_prime.label(e.lo), self.gamma_prime.label(e.hi)] for e in self.gamma_prime.edges],
            "generator_map": {
                self.source.edge_label(edge): self.gamma_prime.label(v)
                for edge, v in sorted(self.generator_map.items(), key=lambda item: item[1])
            },
            "tree": self.tree.names(),
            "simply_connected": self.simply_connected,
        }


@dataclass(frozen=True)
class PeelResult:
    """剥掉一个不利三角形：Γ = Γ′ ∪ △，H_Γ ≅ H_Γ′ *_⟨f⟩ Z^2"""
    triangle: Triangle
    tree_edge: Edge
    shared_edge: Edge
    complement: SimplicialGraph = field(repr=False)
    restricted_tree: SpanningTree = field(repr=False)
    z2: GroupPresentation = field(repr=False)
    left_word: SpelledWord = ()
    right_word: SpelledWord = ()


@dataclass(frozen=True)
class Leaf:
    presentation: GroupPresentation
    label: str

    def to_dict(self) -> Dict[str, Any]:
        return {"type": "leaf", "label": self.label, "presentation": self.presentation.to_dict()}


@dataclass(frozen=True)
class Amalgam:
    """left *_⟨f⟩ right，沿 left_word = right_word 粘合"""
    left: "Node"
    right: "Node"
    left_word: SpelledWord
    right_word: SpelledWord
    step: int
    triangle: Tuple[str, str, str]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": "amalgam",
            "step": self.step,
            "triangle": list(self.triangle),
            "left_word": [[name, exp] for name, exp in self.left_word],
            "right_word": [[name, exp] for name, exp in self.right_word],
            "left": self.left.to_dict(),
            "right": self.right.to_dict(),
        }


Node = Union[Leaf, Amalgam]


def iter_leaves(node: Node) -> Iterator[Leaf]:
    """深度优先、先左后右"""
    if isinstance(node, Leaf):
        yield node
        return
    yield from iter_leaves(node.left)
    yield from iter_leaves(node.right)


@dataclass
class DecompositionTree:
    root: Node
    witness_tree: Optional[SpanningTree] = None
    peels: List[PeelResult] = field(default_factory=list)
    simply_connected: str = "unchecked"

    def leaves(self) -> List[Leaf]:
        return list(iter_leaves(self.root))

    @property
    def z2_leaf_count(self) -> int:
        return sum(1 for leaf in self.leaves() if leaf.presentation.kind is PresentationKind.Z_SQUARED)

    def expression(self, detailed: bool = False) -> str:
        return _expression(self.root, detailed)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "expression": self.expression(),
            "detailed_expression": self.expression(detailed=True),
            "z2_leaf_count": self.z2_leaf_count,
            "witness_tree": self.witness_tree.names() if self.witness_tree is not None else None,
            "simply_connected": self.simply_connected,
            "root": self.root.to_dict(),
        }


def _expression(node: Node, detailed: bool) -> str:
    if isinstance(node, Leaf):
        if not detailed:
            return node.label
        names = ", ".join(node.presentation.generator_names)
        return f"{node.label}<{names}>"
    left = _expression(node.left, detailed)
    right = _expression(node.right, detailed)
    if not detailed:
        return f"({left} *_Z {right})"
    glue = f"{spell_to_text(node.left_word)} = {spell_to_text(node.right_word)}"
    return f"({left} *_<{glue}> {right})"
