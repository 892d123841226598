# Copyright (c) Opendatalab. All rights reserved.

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Tuple

from src.graph.core import SimplicialGraph

Simplex = Tuple[int, ...]


class VerdictStatus(Enum):
    """单连通判定结果"""
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class FlagComplex:
    """旗复形：单形即宿主图的团；simplices_by_dim[k] 为全部 k 维单形（字典序）"""
    host: SimplicialGraph = field(repr=False)
    simplices_by_dim: Tuple[Tuple[Simplex, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.simplices_by_dim) - 1

    @property
    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(s) for s in self.simplices_by_dim)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector))

    def simplices(self, dim: int) -> Tuple[Simplex, ...]:
        if 0 <= dim < len(self.simplices_by_dim):
            return self.simplices_by_dim[dim]
        return ()

    def contains(self, simplex) -> bool:
        key = tuple(sorted(simplex))
        return key in self.simplices(len(key) - 1)


@dataclass(frozen=True)
class SimplyConnectedVerdict:
    """判定结果及可复核的证据

    certificate 的内容随 strategy 而定：collapse 为初等塌缩序列，
    tietze 为被消去的生成元，homology 为 H1 的自由秩与挠系数，
    disconnected 为连通分支数，exhausted 为各策略已用步数。
    """
    status: VerdictStatus
    strategy: str
    evidence: str
    certificate: Dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    @property
    def is_yes(self) -> bool:
        return self.status is VerdictStatus.YES

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "strategy": self.strategy,
            "evidence": self.evidence,
            "certificate": self.certificate,
        }

    def summary(self) -> str:
        return f"{self.status.value} ({self.strategy}): {self.evidence}"
