"""Semistandard tableaux with entries 0..n as the crystal B(lambda), and the
weak embedding into multisegments."""
from __future__ import annotations

from collections import deque
from typing import Iterator, Sequence

from .core import (
    CLOSE,
    OPEN,
    BracketString,
    IntegrityError,
    UsageError,
    ValidationError,
    check_index,
    check_rank,
)
from .multisegment import Multisegment

Partition = tuple[int, ...]


def check_partition(parts: Sequence[int], n: int) -> Partition:
    parts = tuple(parts)
    if not parts or any(not isinstance(p, int) or p < 1 for p in parts):
        raise ValidationError(f"partition parts must be positive integers: {parts!r}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValidationError(f"partition must be weakly decreasing: {parts!r}")
    if len(parts) > n:
        raise UsageError(f"shape {parts} has more than {n} rows; unsupported in rank {n}")
    return parts


def partition_weight(parts: Sequence[int], n: int) -> tuple[int, ...]:
    """Fundamental-weight coordinates: the coefficient of omega_i is lambda_i - lambda_{i+1}."""
    lam = check_partition(parts, check_rank(n)) + (0,) * n
    return tuple(lam[i] - lam[i + 1] for i in range(n))


class Tableau:
    __slots__ = ("rank", "rows", "_hash")

    def __init__(self, rank: int, rows: Sequence[Sequence[int]]) -> None:
        check_rank(rank)
        rows = tuple(tuple(r) for r in rows)
        check_partition([len(r) for r in rows], rank)
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v <= rank:
                    raise ValidationError(f"entry {v!r} outside 0..{rank}")
                if c and row[c - 1] > v:
                    raise ValidationError(f"row {r + 1} not weakly increasing")
                if r and rows[r - 1][c] >= v:
                    raise ValidationError(f"column {c + 1} not strictly increasing")
        self.rank = rank
        self.rows = rows
        self._hash = hash((rank, rows))

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        width = len(self.rows[0]) if self.rows else 0
        return [tuple(row[c] for row in self.rows if len(row) > c) for c in range(width)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.rank == other.rank and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def text(self) -> str:
        return "/".join(",".join(map(str, r)) for r in self.rows)

    def __repr__(self) -> str:
        return f"Tableau({self.rank}, {self.text()})"

    def e(self, i: int) -> Tableau | None:
        return tab_e(self, i)

    def f(self, i: int) -> Tableau | None:
        return tab_f(self, i)

    def eps(self, i: int) -> int:
        return tab_eps(self, i)

    def phi(self, i: int) -> int:
        return tab_phi(self, i)

    def pairing(self, i: int) -> int:
        return tab_pairing(self, i)


def highest_weight_tableau(parts: Sequence[int], n: int) -> Tableau:
    parts = check_partition(parts, check_rank(n))
    return Tableau(n, [[r] * length for r, length in enumerate(parts)])


def tab_bracket_string(b: Tableau, i: int) -> BracketString:
    """')' over columns holding i-1 but not i, '(' over columns holding i but not i-1."""
    check_index(b.rank, i)
    tokens = []
    for c, col in enumerate(b.columns()):
        lo, hi = (i - 1) in col, i in col
        if lo and not hi:
            tokens.append((c, CLOSE))
        elif hi and not lo:
            tokens.append((c, OPEN))
    return BracketString.from_tokens(tokens, "tableau", i)


def _change(b: Tableau, col: int, old: int, new: int) -> Tableau:
    rows = [list(r) for r in b.rows]
    for row in rows:
        if len(row) > col and row[col] == old:
            row[col] = new
            break
    try:
        return Tableau(b.rank, rows)
    except ValidationError as exc:
        raise IntegrityError(f"operator produced a non-semistandard filling from {b!r}") from exc


def tab_f(b: Tableau, i: int) -> Tableau | None:
    br = tab_bracket_string(b, i).rightmost_close()
    return None if br is None else _change(b, br.site, i - 1, i)


def tab_e(b: Tableau, i: int) -> Tableau | None:
    br = tab_bracket_string(b, i).leftmost_open()
    return None if br is None else _change(b, br.site, i, i - 1)


def tab_eps(b: Tableau, i: int) -> int:
    return tab_bracket_string(b, i).count(OPEN)


def tab_pairing(b: Tableau, i: int) -> int:
    """#(entries equal to i-1) - #(entries equal to i)."""
    check_index(b.rank, i)
    flat = [v for row in b.rows for v in row]
    return flat.count(i - 1) - flat.count(i)


def tab_phi(b: Tableau, i: int) -> int:
    return tab_eps(b, i) + tab_pairing(b, i)


def embed(b: Tableau) -> Multisegment:
    """One segment [r, v] for every entry v >= r in row r (rows numbered from 1)."""
    segs = [(r, v) for r, row in enumerate(b.rows, start=1) for v in row if v >= r]
    return Multisegment(b.rank, segs)


def enumerate_ssyt(parts: Sequence[int], n: int) -> list[Tableau]:
    """All semistandard fillings of the shape with entries 0..n, by backtracking."""
    parts = check_partition(parts, check_rank(n))
    cells = [(r, c) for r, length in enumerate(parts) for c in range(length)]
    rows: list[list[int]] = [[0] * length for length in parts]
    out: list[Tableau] = []

    def fill(k: int) -> Iterator[None]:
        if k == len(cells):
            yield
            return
        r, c = cells[k]
        lo = max(rows[r][c - 1] if c else 0, rows[r - 1][c] + 1 if r else 0)
        for v in range(lo, n + 1):
            rows[r][c] = v
            yield from fill(k + 1)

    for _ in fill(0):
        out.append(Tableau(n, rows))
    return sorted(out, key=lambda t: t.rows)


def f_closure(parts: Sequence[int], n: int) -> set[Tableau]:
    """Everything reachable from the highest-weight tableau by the f_i."""
    start = highest_weight_tableau(parts, n)
    seen = {start}
    queue = deque([start])
    while queue:
        b = queue.popleft()
        for i in range(1, n + 1):
            nxt = tab_f(b, i)
            if nxt is not None and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen
