"""Lusztig data for the reduced word s_1 s_2 ... s_n s_1 ... s_{n-1} ... s_1 s_2 s_1.

The positive roots come out in the order
[1,1], [1,2], ..., [1,n], [2,2], ..., [2,n], ..., [n,n]
(segment [i, j] standing for alpha_i + ... + alpha_j). Crystal operators are
transported from multisegments through ``phi``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from . import multisegment as ms
from .core import UsageError, ValidationError, Weight, check_rank, pairing
from .multisegment import Multisegment, Segment


@lru_cache(maxsize=None)
def root_order(n: int) -> tuple[Segment, ...]:
    check_rank(n)
    return tuple(Segment(i, j) for i in range(1, n + 1) for j in range(i, n + 1))


def root_index(n: int, i: int, j: int) -> int:
    """1-based position of [i, j] in the root order."""
    if not 1 <= i <= j <= n:
        raise UsageError(f"[{i},{j}] is not a positive root of rank {n}")
    return sum(n - r + 1 for r in range(1, i)) + (j - i) + 1


class LusztigDatum:
    __slots__ = ("rank", "exponents", "_hash")

    def __init__(self, rank: int, exponents: Sequence[int]) -> None:
        check_rank(rank)
        exponents = tuple(exponents)
        size = rank * (rank + 1) // 2
        if len(exponents) != size:
            raise ValidationError(f"rank {rank} needs {size} exponents, got {len(exponents)}")
        if any(not isinstance(a, int) or isinstance(a, bool) or a < 0 for a in exponents):
            raise ValidationError(f"exponents must be nonnegative integers: {exponents!r}")
        self.rank = rank
        self.exponents = exponents
        self._hash = hash((rank, exponents))

    @classmethod
    def zero(cls, rank: int) -> LusztigDatum:
        return cls(rank, (0,) * (rank * (rank + 1) // 2))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LusztigDatum):
            return NotImplemented
        return self.rank == other.rank and self.exponents == other.exponents

    def __hash__(self) -> int:
        return self._hash

    def text(self) -> str:
        return "(" + ",".join(map(str, self.exponents)) + ")"

    def __repr__(self) -> str:
        return f"LusztigDatum({self.rank}, {self.text()})"

    @property
    def size(self) -> int:
        return sum(a * s.height for a, s in zip(self.exponents, root_order(self.rank)))

    def e(self, i: int) -> LusztigDatum | None:
        return pbw_e(self, i)

    def f(self, i: int) -> LusztigDatum:
        return pbw_f(self, i)

    def e_star(self, i: int) -> LusztigDatum | None:
        return pbw_e_star(self, i)

    def f_star(self, i: int) -> LusztigDatum:
        return pbw_f_star(self, i)

    def eps(self, i: int) -> int:
        return pbw_eps(self, i)

    def eps_star(self, i: int) -> int:
        return pbw_eps_star(self, i)

    def phi(self, i: int) -> int:
        return pbw_eps(self, i) + self.pairing(i)

    def phi_star(self, i: int) -> int:
        return pbw_eps_star(self, i) + self.pairing(i)

    def weight(self) -> Weight:
        return pbw_weight(self)

    def pairing(self, i: int) -> int:
        return pairing(pbw_weight(self), i)


def phi(a: LusztigDatum) -> Multisegment:
    """a_p copies of the segment of the p-th root."""
    return Multisegment(a.rank, {seg: k for seg, k in zip(root_order(a.rank), a.exponents)})


def phi_inv(M: Multisegment) -> LusztigDatum:
    return LusztigDatum(M.rank, [M.mult(*seg) for seg in root_order(M.rank)])


def _transport(op, a: LusztigDatum, i: int) -> LusztigDatum | None:
    out = op(phi(a), i)
    return None if out is None else phi_inv(out)


def pbw_f(a: LusztigDatum, i: int) -> LusztigDatum:
    return _transport(ms.f, a, i)


def pbw_e(a: LusztigDatum, i: int) -> LusztigDatum | None:
    return _transport(ms.e, a, i)


def pbw_f_star(a: LusztigDatum, i: int) -> LusztigDatum:
    return _transport(ms.f_star, a, i)


def pbw_e_star(a: LusztigDatum, i: int) -> LusztigDatum | None:
    return _transport(ms.e_star, a, i)


def pbw_eps(a: LusztigDatum, i: int) -> int:
    return ms.eps(phi(a), i)


def pbw_eps_star(a: LusztigDatum, i: int) -> int:
    return ms.eps_star(phi(a), i)


def pbw_weight(a: LusztigDatum) -> Weight:
    """-sum_p a_p beta_p in simple-root coordinates, computed from the roots directly."""
    w = [0] * a.rank
    for k, seg in zip(a.exponents, root_order(a.rank)):
        for t in range(seg.start, seg.end + 1):
            w[t - 1] -= k
    return tuple(w)


def block_shift(a: LusztigDatum) -> LusztigDatum:
    """Drop the first block (roots [1, j]) and read the rest as a rank n-1 datum."""
    if a.rank < 2:
        raise UsageError("block_shift needs rank at least 2")
    return LusztigDatum(a.rank - 1, a.exponents[a.rank:])
