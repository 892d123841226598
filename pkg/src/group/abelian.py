# Copyright (c) Opendatalab. All rights reserved.

"""整数矩阵的 Smith 标准形与阿贝尔化不变量（sympy 精确整数运算）"""

from collections import defaultdict
from typing import List, Sequence, Tuple

from sympy import ZZ, Matrix, factorint
from sympy.matrices.normalforms import invariant_factors

from src.group.models import AbelianInvariants, GroupPresentation


def _normalize_divisors(values: Sequence[int]) -> Tuple[int, ...]:
    """把任意非零对角元整理成 t1 | t2 | ... 的不变因子（去掉 1）"""
    by_prime = defaultdict(list)
    for value in values:
        for prime, power in factorint(abs(int(value))).items():
            by_prime[prime].append(power)
    if not by_prime:
        return ()
    length = max(len(p) for p in by_prime.values())
    factors = [1] * length
    for prime, powers in by_prime.items():
        powers.sort(reverse=True)
        for i, power in enumerate(powers):
            factors[i] *= prime ** power
    return tuple(sorted(f for f in factors if f > 1))


def smith_diagonal(rows: Sequence[Sequence[int]], columns: int) -> Tuple[int, Tuple[int, ...]]:
    """返回 (秩, 非单位不变因子)"""
    if not rows or columns == 0:
        return 0, ()
    matrix = Matrix([list(r) for r in rows])
    diagonal = [int(d) for d in invariant_factors(matrix, domain=ZZ) if d != 0]
    return len(diagonal), _normalize_divisors(d for d in diagonal if abs(d) != 1)


def exponent_matrix(p: GroupPresentation) -> List[List[int]]:
    n = len(p.generators)
    return [r.exponent_sums(n) for r in p.relators]


def abelianization(p: GroupPresentation) -> AbelianInvariants:
    """关系子指数和矩阵的 Smith 标准形：自由秩 = 生成元数 - 秩"""
    n = len(p.generators)
    rank, torsion = smith_diagonal(exponent_matrix(p), n)
    return AbelianInvariants(free_rank=n - rank, torsion=torsion)
