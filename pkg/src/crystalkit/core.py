"""Weights, the type A Cartan pairing, bracket cancellation and the crystal interface.

Every realization in the package (multisegments, tableaux, Lusztig data) exposes
its elements as immutable values with ``e``/``f``/``eps``/``phi``/``pairing``
methods; bicrystal elements add the starred variants. A killed element is
represented by ``None``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Protocol, Sequence, runtime_checkable

Weight = tuple[int, ...]
"""Coefficients of the simple roots alpha_1..alpha_n."""

OPEN = "("
CLOSE = ")"


class CrystalError(Exception):
    """Base class for all errors raised by crystalkit."""


class UsageError(CrystalError, ValueError):
    """Bad index, rank mismatch or unsupported request."""


class ParseError(CrystalError, ValueError):
    """Input is not a well-formed document."""


class ValidationError(CrystalError, ValueError):
    """Input data violates the invariants of its type."""


class IntegrityError(CrystalError):
    """An internal identity failed; the realization itself is broken."""


class BudgetError(CrystalError):
    """An enumeration request exceeds the configured size budget."""


def check_rank(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise UsageError(f"rank must be a positive integer, got {n!r}")
    return n


def check_index(n: int, i: int) -> int:
    if not isinstance(i, int) or isinstance(i, bool) or not 1 <= i <= n:
        raise UsageError(f"operator index {i!r} out of range 1..{n}")
    return i


def cartan(i: int, j: int) -> int:
    """The type A Cartan entry <alpha_i, alpha_j^vee>."""
    if i == j:
        return 2
    if abs(i - j) == 1:
        return -1
    return 0


def pairing(w: Sequence[int], i: int) -> int:
    """Return <w, alpha_i^vee> for a weight given in simple-root coordinates."""
    n = len(w)
    check_index(n, i)
    total = 2 * w[i - 1]
    if i > 1:
        total -= w[i - 2]
    if i < n:
        total -= w[i]
    return total


def simple_root(n: int, i: int) -> Weight:
    check_index(n, i)
    return tuple(1 if k == i else 0 for k in range(1, n + 1))


def add_weights(a: Sequence[int], b: Sequence[int]) -> Weight:
    if len(a) != len(b):
        raise UsageError("weights of different rank")
    return tuple(x + y for x, y in zip(a, b))


def phi_from_eps(eps: int, w: Sequence[int], i: int) -> int:
    return eps + pairing(w, i)


@runtime_checkable
class CrystalElement(Protocol):
    rank: int

    def e(self, i: int) -> CrystalElement | None: ...
    def f(self, i: int) -> CrystalElement | None: ...
    def eps(self, i: int) -> int: ...
    def phi(self, i: int) -> int: ...
    def pairing(self, i: int) -> int: ...


@runtime_checkable
class BicrystalElement(CrystalElement, Protocol):
    def e_star(self, i: int) -> BicrystalElement | None: ...
    def f_star(self, i: int) -> BicrystalElement | None: ...
    def eps_star(self, i: int) -> int: ...
    def phi_star(self, i: int) -> int: ...


def jump(elem: BicrystalElement, i: int) -> int:
    """eps_i + eps_i^* + <wt, alpha_i^vee>; never negative on B(infinity)."""
    value = elem.eps(i) + elem.eps_star(i) + elem.pairing(i)
    if value < 0:
        raise IntegrityError(f"negative jump {value} at index {i} for {elem!r}")
    return value


# -- bracket strings ------------------------------------------------------------


def cancel(symbols: Sequence[str]) -> list[bool]:
    """Stack matching: a ')' cancels the most recent unmatched '('."""
    canceled = [False] * len(symbols)
    stack: list[int] = []
    for pos, sym in enumerate(symbols):
        if sym == OPEN:
            stack.append(pos)
        elif sym == CLOSE:
            if stack:
                canceled[stack.pop()] = True
                canceled[pos] = True
        else:
            raise ValueError(f"not a bracket: {sym!r}")
    return canceled


def reduce_runs(runs: Sequence[tuple[str, int]]) -> list[int]:
    """Uncanceled count of every run of identical brackets.

    Equivalent to expanding the runs and calling :func:`cancel`, but linear in
    the number of runs rather than the number of brackets.
    """
    left = [0] * len(runs)
    stack: list[int] = []
    for k, (sym, count) in enumerate(runs):
        if sym == OPEN:
            left[k] = count
            stack.append(k)
            continue
        while count and stack:
            top = stack[-1]
            used = min(count, left[top])
            left[top] -= used
            count -= used
            if not left[top]:
                stack.pop()
        left[k] = count
    return left


@dataclass(frozen=True)
class Bracket:
    site: Hashable  # a Segment for multisegments, a column number for tableaux
    symbol: str
    canceled: bool


@dataclass(frozen=True)
class BracketString:
    entries: tuple[Bracket, ...]
    kind: str
    index: int

    @classmethod
    def from_tokens(
        cls, tokens: Iterable[tuple[Hashable, str]], kind: str, index: int
    ) -> BracketString:
        tokens = list(tokens)
        marks = cancel([sym for _, sym in tokens])
        entries = tuple(Bracket(site, sym, c) for (site, sym), c in zip(tokens, marks))
        return cls(entries, kind, index)

    def uncanceled(self) -> tuple[Bracket, ...]:
        return tuple(b for b in self.entries if not b.canceled)

    def count(self, symbol: str) -> int:
        return sum(1 for b in self.entries if not b.canceled and b.symbol == symbol)

    def rightmost_close(self) -> Bracket | None:
        closes = [b for b in self.uncanceled() if b.symbol == CLOSE]
        return closes[-1] if closes else None

    def leftmost_open(self) -> Bracket | None:
        for b in self.uncanceled():
            if b.symbol == OPEN:
                return b
        return None

    def symbols(self) -> str:
        return " ".join(b.symbol for b in self.entries)

    def __len__(self) -> int:
        return len(self.entries)
