# Copyright (c) Opendatalab. All rights reserved.

"""直角 Artin 群中的堆叠（piling）约化

每个生成元一叠：字母 x^ε 压入 x 的叠，同时在所有与 x 不交换的生成元的叠上
压一个占位 0。若 x 的叠顶恰为 -ε，说明其后的字母都与 x 交换，于是两者相消。
字在群中平凡当且仅当处理完后没有剩余字母。
"""

from typing import Iterable, List, Tuple

from src.group.words import Word


class RaagNormalizer:
    """以交换对给出的直角 Artin 群；生成元编号从 0 开始"""

    def __init__(self, generator_count: int, commuting_pairs: Iterable[Tuple[int, int]]):
        self.generator_count = generator_count
        commutes = [[i == j for j in range(generator_count)] for i in range(generator_count)]
        for i, j in commuting_pairs:
            commutes[i][j] = commutes[j][i] = True
        self.non_commuters = [
            [j for j in range(generator_count) if not commutes[i][j]] for i in range(generator_count)
        ]

    def pile(self, word: Word) -> List[List[int]]:
        piles: List[List[int]] = [[] for _ in range(self.generator_count)]
        for i, e in word.pairs():
            if piles[i] and piles[i][-1] == -e:
                piles[i].pop()
                for j in self.non_commuters[i]:
                    piles[j].pop()
            else:
                piles[i].append(e)
                for j in self.non_commuters[i]:
                    piles[j].append(0)
        return piles

    def reduce(self, word: Word) -> Word:
        """从堆叠中按生成元顺序取出可用的字母，得到约化字"""
        piles = self.pile(word)
        out: List[Tuple[int, int]] = []
        while any(piles):
            for i in range(self.generator_count):
                if piles[i] and piles[i][0] != 0:
                    e = piles[i].pop(0)
                    for j in self.non_commuters[i]:
                        piles[j].pop(0)
                    out.append((i, e))
                    break
        return Word.from_pairs(out)

    def is_trivial(self, word: Word) -> bool:
        return not any(p for p in self.pile(word))

