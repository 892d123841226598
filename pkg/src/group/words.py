# Copyright (c) Opendatalab. All rights reserved.

"""自由群中的字：字母为带符号的生成元编号（+i 表示 x_i，-i 表示 x_i^-1，i 从 1 开始）"""

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from src.utils.errors import WordError


@dataclass(frozen=True)
class Word:
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        if any(x == 0 for x in letters):
            raise WordError("letter 0 is not a generator")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def letter(cls, index: int, exponent: int = 1) -> "Word":
        """由 0 起编号的生成元构造单字母字"""
        if exponent not in (1, -1):
            raise WordError(f"exponent must be +1 or -1, got {exponent}")
        return cls(((index + 1) * exponent,))

    @classmethod
    def from_pairs(cls, pairs: Sequence[Tuple[int, int]]) -> "Word":
        return cls(tuple((i + 1) * e for i, e in pairs))

    def pairs(self) -> Iterator[Tuple[int, int]]:
        """(0 起的生成元编号, 指数 ±1)"""
        for x in self.letters:
            yield (abs(x) - 1, 1 if x > 0 else -1)

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple(-x for x in reversed(self.letters)))

    def __invert__(self) -> "Word":
        return self.inverse()

    def generators(self) -> frozenset:
        return frozenset(abs(x) - 1 for x in self.letters)

    def exponent_sums(self, generator_count: int) -> List[int]:
        sums = [0] * generator_count
        for index, exp in self.pairs():
            if index >= generator_count:
                raise WordError(f"generator {index + 1} out of range")
            sums[index] += exp
        return sums

    def spell(self, names: Sequence[str]) -> Tuple[Tuple[str, int], ...]:
        """按生成元名称拼写，供 JSON 与合并字母表使用"""
        return tuple((names[i], e) for i, e in self.pairs())


def _cancel(letters: Sequence) -> List:
    stack: List = []
    for x in letters:
        if stack and stack[-1] == _opposite(x):
            stack.pop()
        else:
            stack.append(x)
    return stack


def _opposite(x):
    if isinstance(x, tuple):
        return (x[0], -x[1])
    return -x


def free_reduce(w: Word) -> Word:
    """消去相邻的 x x^-1 直到不动点"""
    return Word(tuple(_cancel(w.letters)))


def _cyclic_core(letters: List) -> List:
    start, end = 0, len(letters)
    while end - start >= 2 and letters[start] == _opposite(letters[end - 1]):
        start += 1
        end -= 1
    return letters[start:end]


def cyclic_reduce(w: Word) -> Word:
    return Word(tuple(_cyclic_core(_cancel(w.letters))))


def substitute(w: Word, gen: int, replacement: Word) -> Word:
    """把生成元 gen（0 起）的每次出现替换为 replacement^{±1}，然后自由约化"""
    if gen in replacement.generators():
        raise WordError(f"replacement for generator {gen + 1} contains the generator itself")
    inverse = replacement.inverse().letters
    out: List[int] = []
    for x in w.letters:
        if abs(x) - 1 == gen:
            out.extend(replacement.letters if x > 0 else inverse)
        else:
            out.append(x)
    return free_reduce(Word(tuple(out)))


def commutator(a: Word, b: Word) -> Word:
    """[a, b] = a b a^-1 b^-1"""
    return free_reduce(a * b * a.inverse() * b.inverse())


def cyclic_normal_form(letters: Sequence) -> Tuple:
    """循环约化后，在字及其逆字的所有循环移位中取字典序最小者

    字母可以是整数，也可以是 (名称, ±1) 二元组；两个关系子作为循环字在
    旋转与取逆意义下相等当且仅当它们的正规形式相同。
    """
    core = _cyclic_core(_cancel(list(letters)))
    if not core:
        return ()
    inverse = [_opposite(x) for x in reversed(core)]
    best = None
    for candidate in (core, inverse):
        for shift in range(len(candidate)):
            rotated = tuple(candidate[shift:] + candidate[:shift])
            if best is None or rotated < best:
                best = rotated
    return best


def normal_form(w: Word) -> Tuple[int, ...]:
    return cyclic_normal_form(w.letters)


def as_commutator(letters: Sequence) -> Tuple[Tuple, Tuple]:
    """若字形如 a b a^-1 b^-1（a、b 非空）则返回 (a, b)，否则返回 ((), ())"""
    n = len(letters)
    if n < 4 or n % 2:
        return (), ()
    half = n // 2
    for i in range(1, half):
        a, b = tuple(letters[:i]), tuple(letters[i:half])
        inv_a = tuple(_opposite(x) for x in reversed(a))
        inv_b = tuple(_opposite(x) for x in reversed(b))
        if tuple(letters[half:half + i]) == inv_a and tuple(letters[half + i:]) == inv_b:
            return a, b
    return (), ()


def single_commutator_pair(w: Word) -> Tuple[int, int]:
    """若 w 在旋转与取逆意义下等于两个不同单生成元的交换子，返回 (i, j)（0 起，i < j），否则 (-1, -1)"""
    core = _cyclic_core(_cancel(list(w.letters)))
    if len(core) != 4:
        return (-1, -1)
    gens = {abs(x) - 1 for x in core}
    if len(gens) != 2:
        return (-1, -1)
    i, j = sorted(gens)
    target = normal_form(commutator(Word.letter(i), Word.letter(j)))
    return (i, j) if cyclic_normal_form(core) == target else (-1, -1)
