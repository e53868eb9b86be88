"""Multisegments: the realization of B(infinity) for sl(n+1) as a bicrystal."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, NamedTuple

from .core import (
    CLOSE,
    OPEN,
    BracketString,
    IntegrityError,
    UsageError,
    ValidationError,
    Weight,
    check_index,
    check_rank,
    jump,
    pairing,
    reduce_runs,
)

NORMAL = "normal"
STAR = "star"


class Segment(NamedTuple):
    start: int
    end: int

    @property
    def height(self) -> int:
        return self.end - self.start + 1

    def __str__(self) -> str:
        return f"[{self.start},{self.end}]"


class Multisegment:
    """A finite multiset of segments [i, j] with 1 <= i <= j <= rank.

    Accepts either a mapping ``{(i, j): multiplicity}`` or an iterable of
    segments, where repeats add multiplicity. Zero multiplicities are dropped,
    so equality is multiset equality.
    """

    __slots__ = ("rank", "_items", "_mult", "_hash")

    def __init__(
        self,
        rank: int,
        segments: Mapping[tuple[int, int], int] | Iterable[tuple[int, int]] = (),
    ) -> None:
        check_rank(rank)
        mult: dict[Segment, int] = {}
        if isinstance(segments, Mapping):
            pairs = segments.items()
        else:
            pairs = ((seg, 1) for seg in segments)
        for seg, m in pairs:
            try:
                i, j = seg
            except (TypeError, ValueError):
                raise ValidationError(f"not a segment: {seg!r}") from None
            if not (isinstance(i, int) and isinstance(j, int) and 1 <= i <= j <= rank):
                raise ValidationError(f"segment [{i},{j}] invalid for rank {rank}")
            if not isinstance(m, int) or m < 0:
                raise ValidationError(f"bad multiplicity {m!r} for [{i},{j}]")
            if m:
                key = Segment(i, j)
                mult[key] = mult.get(key, 0) + m
        self.rank = rank
        self._items = tuple(sorted(mult.items()))
        self._mult = dict(self._items)
        self._hash = hash((rank, self._items))

    @classmethod
    def _trusted(cls, rank: int, mult: dict[Segment, int]) -> Multisegment:
        obj = cls.__new__(cls)
        obj.rank = rank
        obj._items = tuple(sorted((s, m) for s, m in mult.items() if m))
        obj._mult = dict(obj._items)
        obj._hash = hash((rank, obj._items))
        return obj

    def items(self) -> tuple[tuple[Segment, int], ...]:
        """(segment, multiplicity) pairs sorted by (start, end)."""
        return self._items

    def mult(self, i: int, j: int) -> int:
        return self._mult.get((i, j), 0)

    def __getitem__(self, seg: tuple[int, int]) -> int:
        return self._mult.get(tuple(seg), 0)

    def __iter__(self) -> Iterator[Segment]:
        for seg, m in self._items:
            for _ in range(m):
                yield seg

    def __len__(self) -> int:
        return sum(m for _, m in self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    @property
    def size(self) -> int:
        """Total number of boxes."""
        return sum(seg.height * m for seg, m in self._items)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multisegment):
            return NotImplemented
        return self.rank == other.rank and self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def text(self) -> str:
        if not self._items:
            return "∅"
        return " ".join(str(s) + (f"^{m}" if m > 1 else "") for s, m in self._items)

    def __repr__(self) -> str:
        return f"Multisegment({self.rank}, {self.text()})"

    def replace(self, remove: Segment | None = None, add: Segment | None = None) -> Multisegment:
        mult = dict(self._mult)
        if remove is not None:
            if mult.get(remove, 0) < 1:
                raise IntegrityError(f"{remove} not present in {self.text()}")
            mult[remove] -= 1
        if add is not None:
            mult[add] = mult.get(add, 0) + 1
        return Multisegment._trusted(self.rank, mult)

    def with_rank(self, rank: int) -> Multisegment:
        """The same segments viewed in another rank (must still fit)."""
        return Multisegment(rank, dict(self._items))

    # crystal interface
    def e(self, i: int) -> Multisegment | None:
        return e(self, i)

    def f(self, i: int) -> Multisegment:
        return f(self, i)

    def e_star(self, i: int) -> Multisegment | None:
        return e_star(self, i)

    def f_star(self, i: int) -> Multisegment:
        return f_star(self, i)

    def eps(self, i: int) -> int:
        return eps(self, i)

    def eps_star(self, i: int) -> int:
        return eps_star(self, i)

    def phi(self, i: int) -> int:
        return phi(self, i)

    def phi_star(self, i: int) -> int:
        return phi_star(self, i)

    def weight(self) -> Weight:
        return weight(self)

    def pairing(self, i: int) -> int:
        return pairing(weight(self), i)


# -- bracket strings ------------------------------------------------------------


def _ordered(M: Multisegment, i: int, kind: str) -> list[tuple[Segment, str, int]]:
    """Bracket-carrying segments of M in string order, one run per segment."""
    runs = []
    for seg, m in M.items():
        if kind == NORMAL:
            sym = CLOSE if seg.end == i - 1 else OPEN if seg.end == i else None
        else:
            sym = CLOSE if seg.start == i + 1 else OPEN if seg.start == i else None
        if sym is not None:
            runs.append((seg, sym, m))
    if kind == NORMAL:
        runs.sort(key=lambda r: (r[0].height, -r[0].start))
    else:
        runs.sort(key=lambda r: (r[0].height, r[0].start))
    return runs


def build_bracket_string(M: Multisegment, i: int, kind: str = NORMAL) -> BracketString:
    """S_i(M) (kind='normal') or S_i^*(M) (kind='star') with cancellation marks.

    Normal order: height ascending, then bottom entry descending; ')' over each
    [h, i-1] and '(' over each [h, i]. Star order: height ascending, then bottom
    entry ascending; ')' under each [i+1, j] and '(' under each [i, j].
    """
    check_index(M.rank, i)
    if kind not in (NORMAL, STAR):
        raise UsageError(f"unknown bracket kind {kind!r}")
    tokens = [(seg, sym) for seg, sym, m in _ordered(M, i, kind) for _ in range(m)]
    return BracketString.from_tokens(tokens, kind, i)


@lru_cache(maxsize=1 << 16)
def _reduced(M: Multisegment, i: int, kind: str) -> tuple[tuple[Segment, str, int], ...]:
    """Runs of the bracket string with their uncanceled counts."""
    check_index(M.rank, i)
    runs = _ordered(M, i, kind)
    left = reduce_runs([(sym, m) for _, sym, m in runs])
    return tuple((seg, sym, k) for (seg, sym, _), k in zip(runs, left))


def _rightmost_close(M: Multisegment, i: int, kind: str) -> Segment | None:
    for seg, sym, k in reversed(_reduced(M, i, kind)):
        if sym == CLOSE and k:
            return seg
    return None


def _leftmost_open(M: Multisegment, i: int, kind: str) -> Segment | None:
    for seg, sym, k in _reduced(M, i, kind):
        if sym == OPEN and k:
            return seg
    return None


def _uncanceled(M: Multisegment, i: int, kind: str, symbol: str, height: int | None = None) -> int:
    return sum(
        k
        for seg, sym, k in _reduced(M, i, kind)
        if sym == symbol and (height is None or seg.height == height)
    )


# -- operators ------------------------------------------------------------------


def f(M: Multisegment, i: int) -> Multisegment:
    seg = _rightmost_close(M, i, NORMAL)
    if seg is None:
        return M.replace(add=Segment(i, i))
    return M.replace(remove=seg, add=Segment(seg.start, i))


def e(M: Multisegment, i: int) -> Multisegment | None:
    seg = _leftmost_open(M, i, NORMAL)
    if seg is None:
        return None
    if seg.start == i:
        return M.replace(remove=seg)
    return M.replace(remove=seg, add=Segment(seg.start, i - 1))


def f_star(M: Multisegment, i: int) -> Multisegment:
    seg = _rightmost_close(M, i, STAR)
    if seg is None:
        return M.replace(add=Segment(i, i))
    return M.replace(remove=seg, add=Segment(i, seg.end))


def e_star(M: Multisegment, i: int) -> Multisegment | None:
    seg = _leftmost_open(M, i, STAR)
    if seg is None:
        return None
    if seg.end == i:
        return M.replace(remove=seg)
    return M.replace(remove=seg, add=Segment(i + 1, seg.end))


def eps(M: Multisegment, i: int) -> int:
    return _uncanceled(M, i, NORMAL, OPEN)


def eps_star(M: Multisegment, i: int) -> int:
    return _uncanceled(M, i, STAR, OPEN)


def phi(M: Multisegment, i: int) -> int:
    return eps(M, i) + pairing(weight(M), i)


def phi_star(M: Multisegment, i: int) -> int:
    # same rule as phi: eps plus the weight pairing
    return eps_star(M, i) + pairing(weight(M), i)


def ur(M: Multisegment, i: int) -> int:
    """Number of uncanceled ')' in S_i(M)."""
    return _uncanceled(M, i, NORMAL, CLOSE)


def ur_star(M: Multisegment, i: int) -> int:
    return _uncanceled(M, i, STAR, CLOSE)


def ur_by_height(M: Multisegment, j: int, h: int) -> int:
    """Uncanceled ')' in S_j(M) sitting over segments of height h."""
    if h < 1:
        raise UsageError(f"height must be positive, got {h}")
    return _uncanceled(M, j, NORMAL, CLOSE, height=h)


def weight(M: Multisegment) -> Weight:
    boxes = [0] * M.rank
    for seg, m in M.items():
        for k in range(seg.start, seg.end + 1):
            boxes[k - 1] += m
    return tuple(-b for b in boxes)


# -- Saito reflections ----------------------------------------------------------


def _sigma_with(M: Multisegment, i: int, L: int) -> Multisegment:
    for _ in range(L):
        M = f(M, i)
    while (nxt := e_star(M, i)) is not None:
        M = nxt
    return M


def sigma(M: Multisegment, i: int, check: bool = False) -> Multisegment:
    """(e_i^*)^max f_i^L M with L = jump(M, i).

    With ``check`` the computation is repeated with L + 1 and the two results
    must agree.
    """
    L = jump(M, i)
    out = _sigma_with(M, i, L)
    if check and _sigma_with(M, i, L + 1) != out:
        raise IntegrityError(f"sigma_{i} depends on L at {M!r}")
    return out


@dataclass(frozen=True)
class SigmaChainTrace:
    """a_k and M^(k) = f_k^{a_k} ... f_1^{a_1}(M), plus the sigma-chain result."""

    source: Multisegment
    a: tuple[int, ...]
    stages: tuple[Multisegment, ...]
    result: Multisegment


def sigma_chain(M: Multisegment, check: bool = False) -> Multisegment:
    """sigma_n o ... o sigma_1 applied to M."""
    for i in range(1, M.rank + 1):
        M = sigma(M, i, check=check)
    return M


def sigma_chain_trace(M: Multisegment, check: bool = False) -> SigmaChainTrace:
    a = []
    stages = []
    cur = M
    for k in range(1, M.rank + 1):
        a_k = jump(cur, k)
        for _ in range(a_k):
            cur = f(cur, k)
        a.append(a_k)
        stages.append(cur)
    return SigmaChainTrace(M, tuple(a), tuple(stages), sigma_chain(M, check=check))


def e_star_max_chain(M: Multisegment) -> Multisegment:
    """(e_n^*)^max ... (e_1^*)^max M."""
    for i in range(1, M.rank + 1):
        while (nxt := e_star(M, i)) is not None:
            M = nxt
    return M


def shift_down(M: Multisegment) -> Multisegment:
    """Drop every [1, j] and move each other [i, j] to [i-1, j-1] (same rank)."""
    mult = {Segment(s.start - 1, s.end - 1): m for s, m in M.items() if s.start > 1}
    return Multisegment._trusted(M.rank, mult)


def flip(M: Multisegment) -> Multisegment:
    """Turn every segment upside down: [i, j] -> [n+1-j, n+1-i]."""
    n = M.rank
    return Multisegment._trusted(n, {Segment(n + 1 - s.end, n + 1 - s.start): m for s, m in M.items()})


# the multisegment worked through by hand in the sigma-chain example (rank 5)
EXAMPLE_RANK5 = Multisegment(
    5,
    {(1, 1): 1, (2, 2): 2, (3, 3): 1, (1, 2): 2, (2, 3): 1, (3, 4): 2, (2, 4): 1, (2, 5): 1},
)
