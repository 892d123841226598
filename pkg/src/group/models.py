# Copyright (c) Opendatalab. All rights reserved.

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from src.graph.core import Edge, VertexId
from src.group.words import Word, cyclic_normal_form, single_commutator_pair
from src.utils.errors import WordError


class PresentationKind(Enum):
    """表示的来源类型"""
    DICKS_LEARY = "dicks_leary"
    PAPADIMA_SUCIU = "papadima_suciu"
    RAAG = "raag"
    Z_SQUARED = "z_squared"
    GENERIC = "generic"


@dataclass(frozen=True)
class Generator:
    """生成元；edge/vertex 为根图坐标下的来源"""
    name: str
    edge: Optional[Edge] = None
    vertex: Optional[VertexId] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "edge": [self.edge.lo, self.edge.hi] if self.edge is not None else None,
            "vertex": self.vertex,
        }


@dataclass(frozen=True)
class GroupPresentation:
    generators: Tuple[Generator, ...]
    relators: Tuple[Word, ...] = ()
    kind: PresentationKind = PresentationKind.GENERIC
    metadata: Dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(self.relators))
        n = len(self.generators)
        names = [g.name for g in self.generators]
        if len(set(names)) != n:
            raise WordError("generator names must be distinct")
        for r in self.relators:
            for x in r.letters:
                if abs(x) > n:
                    raise WordError(f"relator letter {x} references a missing generator (have {n})")
        if self.kind is PresentationKind.RAAG:
            for r in self.relators:
                if single_commutator_pair(r) == (-1, -1):
                    raise WordError("RAAG relators must be commutators of single generators")
        if self.kind is PresentationKind.Z_SQUARED:
            if n != 2 or len(self.relators) != 1 or single_commutator_pair(self.relators[0]) != (0, 1):
                raise WordError("a Z^2 presentation needs 2 generators and their commutator")

    @property
    def generator_names(self) -> Tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def index_of(self, name: str) -> int:
        for i, g in enumerate(self.generators):
            if g.name == name:
                return i
        raise WordError(f"unknown generator {name!r}")

    def relator_signature(self, by: str = "name") -> Counter:
        """关系子正规形式的多重集；by="name" 按名称比较，by="index" 按位置比较，by="edge" 按来源边比较"""
        if by == "index":
            keys = list(range(len(self.generators)))
        elif by == "edge":
            keys = [(g.edge.lo, g.edge.hi) if g.edge is not None else g.name for g in self.generators]
        else:
            keys = list(self.generator_names)
        signature = Counter()
        for r in self.relators:
            signature[cyclic_normal_form([(keys[i], e) for i, e in r.pairs()])] += 1
        return signature

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "generators": [g.to_dict() for g in self.generators],
            "relators": [list(r.letters) for r in self.relators],
            "metadata": dict(self.metadata),
        }


@dataclass(frozen=True)
class AbelianInvariants:
    """阿贝尔化 Z^free_rank ⊕ Z/t1 ⊕ ...，t1 | t2 | ..."""
    free_rank: int
    torsion: Tuple[int, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def to_dict(self) -> Dict[str, Any]:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"
