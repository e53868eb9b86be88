"""Exhaustive checks of the crystal identities on finite graded pieces.

Each suite evaluates one family of identities on every element of a finite
domain and returns a :class:`SuiteReport`. Domains are all multisegments of
size at most ``max_size`` for ranks up to 4; from rank 5 on they are the
e/e*-ancestors of the rank-5 worked example (``EXAMPLE_RANK5``) within the
size bound, plus the example itself.
"""
from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from . import multisegment as ms
from . import pbw
from .core import (
    BudgetError,
    IntegrityError,
    UsageError,
    cancel,
    add_weights,
    cartan,
    check_rank,
    simple_root,
)
from .multisegment import EXAMPLE_RANK5, Multisegment, Segment
from .serialize import canonical, kind_of, label, size_of, to_doc
from .tableau import (
    Tableau,
    check_partition,
    embed,
    enumerate_ssyt,
    f_closure,
    highest_weight_tableau,
)

DEFAULT_BUDGET = 16
LINEAGE_RANK = 5
MAX_COUNTEREXAMPLES = 25


# -- budgets and enumeration ----------------------------------------------------


def size_budget() -> int:
    raw = os.environ.get("CRYSTALKIT_BUDGET")
    if raw is None or raw == "":
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"CRYSTALKIT_BUDGET must be an integer, got {raw!r}") from None
    if value < 0:
        raise UsageError("CRYSTALKIT_BUDGET must be nonnegative")
    return value


def estimate_multisegments(n: int, max_size: int) -> int:
    """Number of multisegments of size <= max_size, from the generating function."""
    dp = [1] + [0] * max_size
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            h = j - i + 1
            for t in range(h, max_size + 1):
                dp[t] += dp[t - h]
    return sum(dp)


def hook_content_count(parts: Sequence[int], n: int) -> int:
    """Number of semistandard tableaux of the shape with entries 0..n."""
    num, den = 1, 1
    conj = [sum(1 for p in parts if p > c) for c in range(parts[0])]
    for r, length in enumerate(parts):
        for c in range(length):
            num *= n + 1 + c - r
            den *= (length - c - 1) + (conj[c] - r - 1) + 1
    return num // den


def check_budget(n: int, max_size: int) -> None:
    if max_size < 0:
        raise UsageError("max_size must be nonnegative")
    budget = size_budget()
    if max_size > budget:
        est = estimate_multisegments(n, max_size)
        raise BudgetError(
            f"size bound {max_size} exceeds budget {budget} (rank {n}: about {est} elements); "
            "raise CRYSTALKIT_BUDGET to allow it"
        )


def enumerate_multisegments(n: int, max_size: int) -> list[Multisegment]:
    """All of MS_n with |M| <= max_size, generated from segment multiplicities.

    Sorted by (size, canonical serialization).
    """
    check_rank(n)
    if max_size < 0:
        raise UsageError("max_size must be nonnegative")
    segs = [Segment(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    out: list[Multisegment] = []
    mult: dict[Segment, int] = {}

    def rec(k: int, room: int) -> None:
        if k == len(segs):
            out.append(Multisegment(n, mult))
            return
        seg = segs[k]
        for m in range(room // seg.height + 1):
            mult[seg] = m
            rec(k + 1, room - m * seg.height)
        del mult[seg]

    rec(0, max_size)
    return sort_elements(out)


def sort_elements(elems: Iterable[Any]) -> list[Any]:
    return sorted(elems, key=lambda x: (size_of(x), canonical(x)))


def bfs_closure(n: int, max_size: int) -> set[Multisegment]:
    """Everything reachable from the empty multisegment by f_i within the size bound."""
    start = Multisegment(n)
    seen = {start}
    queue = deque([start])
    while queue:
        M = queue.popleft()
        if M.size >= max_size:
            continue
        for i in range(1, n + 1):
            nxt = ms.f(M, i)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def lineage(source: Multisegment, max_size: int) -> list[Multisegment]:
    """``source`` and all of its e/e*-ancestors of size <= max_size."""
    seen = {source}
    stack = [source]
    while stack:
        M = stack.pop()
        for i in range(1, M.rank + 1):
            for op in (ms.e, ms.e_star):
                nxt = op(M, i)
                if nxt is not None and nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return sort_elements(M for M in seen if M.size <= max_size or M == source)


def ms_domain(n: int, max_size: int) -> tuple[str, list[Multisegment]]:
    check_rank(n)
    check_budget(n, max_size)
    if n < LINEAGE_RANK:
        return "exhaustive", enumerate_multisegments(n, max_size)
    return "lineage", lineage(EXAMPLE_RANK5.with_rank(n), max_size)


# -- reports --------------------------------------------------------------------


def _jsonable(value: Any) -> Any:
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    try:
        return to_doc(value)
    except TypeError:
        return repr(value)


@dataclass
class SuiteReport:
    suite: str
    params: dict[str, Any]
    domain: str = ""
    elements: int = 0
    checks: int = 0
    failed: int = 0
    counterexamples: list[dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return self.checks - self.failed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def check(
        self,
        ok: bool,
        name: str,
        element: Any,
        index: int | None = None,
        expected: Any = None,
        actual: Any = None,
    ) -> bool:
        self.checks += 1
        if not ok:
            self.failed += 1
            if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append(
                    {
                        "check": name,
                        "element": _jsonable(element),
                        "index": index,
                        "expected": _jsonable(expected),
                        "actual": _jsonable(actual),
                    }
                )
        return ok

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "params": self.params,
            "domain": self.domain,
            "elements": self.elements,
            "checks": self.checks,
            "passed": self.passed,
            "failed": self.failed,
            "ok": self.ok,
            "counterexamples": self.counterexamples,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# -- shared check families ------------------------------------------------------


def _ops(star: bool):
    if star:
        return (
            lambda b, i: b.e_star(i),
            lambda b, i: b.f_star(i),
            lambda b, i: b.eps_star(i),
            lambda b, i: b.phi_star(i),
            "*",
        )
    return (
        lambda b, i: b.e(i),
        lambda b, i: b.f(i),
        lambda b, i: b.eps(i),
        lambda b, i: b.phi(i),
        "",
    )


def _pairings(b: Any, n: int) -> tuple[int, ...]:
    return tuple(b.pairing(j) for j in range(1, n + 1))


def _crystal_axioms(rep: SuiteReport, elems: Sequence[Any], n: int, hw: Any, star: bool) -> None:
    e, f, eps, phi, tag = _ops(star)
    has_weight = hasattr(hw, "weight")
    for b in elems:
        raised = False
        for i in range(1, n + 1):
            x = e(b, i)
            if x is not None:
                raised = True
                rep.check(f(x, i) == b, f"f{i}{tag}(e{i}{tag}(b)) = b", b, i, b, f(x, i))
                expect = tuple(p + cartan(j, i) for j, p in enumerate(_pairings(b, n), start=1))
                rep.check(_pairings(x, n) == expect, f"e{i}{tag} raises weight by alpha_{i}", b, i, expect, _pairings(x, n))
                if has_weight:
                    w = add_weights(b.weight(), simple_root(n, i))
                    rep.check(x.weight() == w, f"wt(e{i}{tag} b) = wt(b) + alpha_{i}", b, i, w, x.weight())
                rep.check(eps(x, i) == eps(b, i) - 1, f"eps{tag} drops under e{i}{tag}", b, i, eps(b, i) - 1, eps(x, i))
                rep.check(phi(x, i) == phi(b, i) + 1, f"phi{tag} rises under e{i}{tag}", b, i, phi(b, i) + 1, phi(x, i))
            y = f(b, i)
            if y is not None:
                rep.check(e(y, i) == b, f"e{i}{tag}(f{i}{tag}(b)) = b", b, i, b, e(y, i))
            steps, cur = 0, b
            while (cur := e(cur, i)) is not None:
                steps += 1
            rep.check(steps == eps(b, i), f"eps{tag}_{i} = max e{i}{tag} string", b, i, steps, eps(b, i))
            rep.check(phi(b, i) == eps(b, i) + b.pairing(i), f"phi{tag} = eps{tag} + pairing", b, i)
        if b == hw:
            rep.check(not raised, f"highest weight element killed by every e{tag}", b)
        else:
            rep.check(raised, f"some e{tag}_i acts on every non-highest element", b)


def _ks_conditions(rep: SuiteReport, elems: Sequence[Any], n: int) -> None:
    for b in elems:
        for i in range(1, n + 1):
            fb, fsb = b.f(i), b.f_star(i)
            rep.check(fb is not None and fsb is not None, "(i) f_i, f_i* never null", b, i)
            for j in range(1, n + 1):
                if j != i:
                    lhs, rhs = b.f(j).f_star(i), fsb.f(j)
                    rep.check(lhs == rhs, f"(ii) f{i}* f{j} = f{j} f{i}*", b, i, lhs, rhs)
            jmp = b.eps(i) + b.eps_star(i) + b.pairing(i)
            rep.check(jmp >= 0, "(iii) jump >= 0", b, i, ">= 0", jmp)
            if jmp == 0:
                rep.check(fb == fsb, "(iv) jump = 0 => f_i = f_i*", b, i, fb, fsb)
            if jmp >= 1:
                rep.check(fb.eps_star(i) == b.eps_star(i), "(v) eps*(f_i b) = eps*(b)", b, i, b.eps_star(i), fb.eps_star(i))
                rep.check(fsb.eps(i) == b.eps(i), "(v) eps(f_i* b) = eps(b)", b, i, b.eps(i), fsb.eps(i))
            if jmp >= 2:
                lhs, rhs = fsb.f(i), fb.f_star(i)
                rep.check(lhs == rhs, "(vi) f_i f_i* = f_i* f_i", b, i, lhs, rhs)


# -- multisegment suites --------------------------------------------------------


def suite_crystal_axioms(rep: SuiteReport, n: int, elems: list[Multisegment]) -> None:
    hw = Multisegment(n)
    _crystal_axioms(rep, elems, n, hw, star=False)
    _crystal_axioms(rep, elems, n, hw, star=True)


def suite_ks_conditions(rep: SuiteReport, n: int, elems: list[Multisegment]) -> None:
    hw = Multisegment(n)
    _crystal_axioms(rep, elems, n, hw, star=False)
    _crystal_axioms(rep, elems, n, hw, star=True)
    _ks_conditions(rep, elems, n)


def suite_bracket_count(rep: SuiteReport, n: int, elems: list[Multisegment]) -> None:
    for M in elems:
        for i in range(1, n + 1):
            lhs = ms.eps(M, i) + ms.eps_star(M, i) + M.pairing(i)
            rhs = ms.ur(M, i) + ms.ur_star(M, i)
            rep.check(lhs == rhs, "eps + eps* + pairing = ur + ur*", M, i, lhs, rhs)
            for kind in (ms.NORMAL, ms.STAR):
                s = ms.build_bracket_string(M, i, kind)
                fast = (ms.eps(M, i), ms.ur(M, i)) if kind == ms.NORMAL else (ms.eps_star(M, i), ms.ur_star(M, i))
                slow = (s.count("("), s.count(")"))
                rep.check(fast == slow, f"run-length cancellation matches token string ({kind})", M, i, slow, fast)
                unc = [b.symbol for b in s.uncanceled()]
                rep.check(unc == sorted(unc, key=lambda c: c == "("), f"uncanceled {kind} string is )..)(..(", M, i)


def suite_star_commute(rep: SuiteReport, n: int, elems: list[Multisegment]) -> None:
    for M in elems:
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    lhs, rhs = ms.f(ms.f_star(M, i), j), ms.f_star(ms.f(M, j), i)
                    rep.check(lhs == rhs, f"f{j} f{i}* = f{i}* f{j}", M, i, lhs, rhs)


def _f_star_action(M: Multisegment, i: int) -> Segment | None:
    """The segment [i+1, j] that f_i* extends, or None when it adds [i, i]."""
    return ms._rightmost_close(M, i, ms.STAR)


def suite_ur_tracking(rep: SuiteReport, n: int, elems: list[Multisegment]) -> None:
    for M in elems:
        for i in range(1, n + 1):
            acted = _f_star_action(M, i)
            out = ms.f_star(M, i)
            for j in range(1, n + 1):
                if j == i:
                    continue
                delta = {}
                if acted is not None and acted.end == j - 1 and ms.ur_by_height(M, j, j - i - 1):
                    delta = {j - i - 1: -1, j - i: 1}
                elif acted is None and j == i + 1:
                    delta = {1: 1}
                for h in range(1, n + 1):
                    want = ms.ur_by_height(M, j, h) + delta.get(h, 0)
                    got = ms.ur_by_height(out, j, h)
                    rep.check(want == got, f"ur_{{{j};{h}}} after f{i}*", M, i, want, got)


def _mk_bound(M: Multisegment, i: int, k: int) -> int:
    n = M.rank
    best = 0
    for s in range(1, n - k + 1):
        val = sum(M.mult(i + 1, k + r) for r in range(1, s + 1)) - sum(M.mult(i, k + r) for r in range(1, s))
        best = max(best, val)
    return best


def _mk_bound_from_string(M: Multisegment, i: int, k: int) -> int:
    """Uncanceled ')' of S_i^*(M) restricted to segments at least as tall as [i, k],
    leaving out the '(' of the [i, k] copies themselves."""
    s = ms.build_bracket_string(M, i, ms.STAR)
    tokens = [
        b.symbol for b in s.entries if b.site.height >= k - i + 1 and b.site != (i, k)
    ]
    marks = cancel(tokens)
    return sum(1 for t, c in zip(tokens, marks) if t == ")" and not c)


def suite_mk_recursion(rep: SuiteReport, n: int, elems: list[Multisegment]) -> None:
    for M in elems:
        stages = ms.sigma_chain_trace(M).stages
        for k in range(1, n + 1):
            Mk = stages[k - 1]
            for i in range(1, k + 1):
                if i >= 2:
                    rep.check(Mk.mult(i - 1, k - 1) == M.mult(i, k), f"M^({k})[{i-1},{k-1}] = M[{i},{k}]", M, k, M.mult(i, k), Mk.mult(i - 1, k - 1))
                bound = _mk_bound(M, i, k)
                rep.check(bound == _mk_bound_from_string(M, i, k), f"bound for [{i},{k}] equals bracket substring count", M, k)
                rep.check(Mk.mult(i, k) >= bound, f"M^({k})[{i},{k}] >= bound", M, k, bound, Mk.mult(i, k))


def suite_first_half(rep: SuiteReport, n: int, elems: list[Multisegment]) -> None:
    for M in elems:
        top = ms.sigma_chain_trace(M).stages[-1]
        want = ms.shift_down(M)
        for i in range(1, n + 1):
            for k in range(i, n + 1):
                if k < n:
                    rep.check(top.mult(i, k) == want.mult(i, k), f"M^(n)[{i},{k}] = shifted M", M, None, want.mult(i, k), top.mult(i, k))
                else:
                    rep.check(want.mult(i, n) == 0, "shifted M has no [i,n]", M)


def suite_sigma_shift(rep: SuiteReport, n: int, elems: list[Multisegment]) -> None:
    for M in elems:
        try:
            trace = ms.sigma_chain_trace(M, check=True)
        except IntegrityError as exc:
            rep.check(False, "sigma independent of L", M, None, None, str(exc))
            continue
        rep.check(True, "sigma independent of L", M)
        want = ms.shift_down(M)
        rep.check(trace.result == want, "sigma_n...sigma_1 M = shift_down(M)", M, None, want, trace.result)
        alt = ms.e_star_max_chain(trace.stages[-1])
        rep.check(alt == trace.result, "(e*)^max chain on M^(n) = sigma chain", M, None, trace.result, alt)
        jumps = tuple(ms.jump(x, k) for k, x in enumerate([M, *trace.stages[:-1]], start=1))
        rep.check(jumps == trace.a, "a_k = jump of M^(k-1)", M, None, trace.a, jumps)


def suite_flip_conjugation(rep: SuiteReport, n: int, elems: list[Multisegment]) -> None:
    for M in elems:
        FM = ms.flip(M)
        rep.check(ms.flip(FM) == M, "flip is an involution", M)
        rep.check(FM.size == M.size, "flip preserves size", M)
        for i in range(1, n + 1):
            k = n + 1 - i
            lhs = ms.flip(ms.f(FM, i))
            rep.check(lhs == ms.f_star(M, k), f"flip f{i} flip = f{k}*", M, i, ms.f_star(M, k), lhs)
            ex = ms.e(FM, i)
            lhs = None if ex is None else ms.flip(ex)
            rep.check(lhs == ms.e_star(M, k), f"flip e{i} flip = e{k}*", M, i, ms.e_star(M, k), lhs)
            rep.check(ms.eps(FM, i) == ms.eps_star(M, k), f"eps{i}(flip M) = eps{k}*(M)", M, i)


def suite_local_structure(rep: SuiteReport, n: int, elems: list[Multisegment]) -> None:
    for M in elems:
        for i in range(1, n + 1):
            J = ms.jump(M, i)
            for fwd, other_eps, tag in ((ms.f, ms.eps_star, "f"), (ms.f_star, ms.eps, "f*")):
                cur = M
                for k in range(J + 1):
                    rep.check(ms.jump(cur, i) == J - k, f"jump drops by one along {tag}{i}", M, i, J - k, ms.jump(cur, i))
                    rep.check(other_eps(cur, i) == other_eps(M, i), f"other eps constant along {tag}{i}", M, i)
                    if k < J:
                        cur = fwd(cur, i)
                rep.check(ms.f(cur, i) == ms.f_star(cur, i), f"f{i} = f{i}* after jump({i}) steps of {tag}", M, i)
                rep.check(ms.jump(ms.f(cur, i), i) == 0, f"jump stays 0 past the dashed line ({tag})", M, i)


def suite_oracle_agreement(rep: SuiteReport, n: int, elems: list[Multisegment], max_size: int) -> None:
    if n >= LINEAGE_RANK:
        elems = enumerate_multisegments(n, max_size)
    direct = set(elems)
    closure = bfs_closure(n, max_size)
    rep.check(direct == closure, "direct enumeration = f-closure of the empty multisegment", None, None, len(direct), len(closure))
    est = estimate_multisegments(n, max_size)
    rep.check(len(direct) == est, "count matches generating function", None, None, est, len(direct))


# -- tableau and PBW suites -----------------------------------------------------


def suite_embedding(rep: SuiteReport, n: int, parts: tuple[int, ...]) -> None:
    tabs = enumerate_ssyt(parts, n)
    rep.elements = len(tabs)
    hw = highest_weight_tableau(parts, n)
    rep.check(set(tabs) == f_closure(parts, n), "backtracking enumeration = f-closure of highest weight", None)
    expected = hook_content_count(parts, n)
    rep.check(len(tabs) == expected, "count matches hook-content formula", None, None, expected, len(tabs))
    _crystal_axioms(rep, tabs, n, hw, star=False)
    for b in tabs:
        for i in range(1, n + 1):
            steps, cur = 0, b
            while (cur := cur.f(i)) is not None:
                steps += 1
            rep.check(steps == b.phi(i), f"phi_{i} = max f{i} string", b, i, steps, b.phi(i))
    images = {}
    for b in tabs:
        Mb = embed(b)
        images[Mb] = b
        for i in range(1, n + 1):
            eb = b.e(i)
            lhs = None if eb is None else embed(eb)
            rhs = ms.e(Mb, i)
            rep.check(lhs == rhs, f"embed(e{i} b) = e{i}(embed b)", b, i, rhs, lhs)
            rep.check(b.eps(i) == ms.eps(Mb, i), f"eps_{i}(b) = eps_{i}(embed b)", b, i, ms.eps(Mb, i), b.eps(i))
            fb = b.f(i)
            if fb is not None:
                rep.check(embed(fb) == ms.f(Mb, i), f"embed(f{i} b) = f{i}(embed b)", b, i, ms.f(Mb, i), embed(fb))
    rep.check(len(images) == len(tabs), "embed is injective", None, None, len(tabs), len(images))


def _pbw_domain(n: int, max_size: int) -> tuple[str, list[pbw.LusztigDatum]]:
    label_, elems = ms_domain(n, max_size)
    return label_, sort_elements(pbw.phi_inv(M) for M in elems)


def suite_phi_native(rep: SuiteReport, n: int, data: list[pbw.LusztigDatum]) -> None:
    N = n * (n + 1) // 2
    for a in data:
        M = pbw.phi(a)
        rep.check(pbw.phi_inv(M) == a, "phi_inv(phi(a)) = a", a)
        rep.check(pbw.phi(pbw.phi_inv(M)) == M, "phi(phi_inv(M)) = M", a)
        rep.check(pbw.pbw_weight(a) == ms.weight(M), "weight preserved", a, None, ms.weight(M), pbw.pbw_weight(a))
        ex = list(a.exponents)
        ex[0] += 1
        rep.check(pbw.pbw_f(a, 1).exponents == tuple(ex), "f_1 increments a_1", a, 1, ex, pbw.pbw_f(a, 1).exponents)
        rep.check(pbw.pbw_eps(a, 1) == a.exponents[0], "eps_1 = a_1", a, 1, a.exponents[0], pbw.pbw_eps(a, 1))
        e1 = pbw.pbw_e(a, 1)
        want = None if a.exponents[0] == 0 else (a.exponents[0] - 1,) + a.exponents[1:]
        rep.check((None if e1 is None else e1.exponents) == want, "e_1 decrements a_1", a, 1, want, e1)
        ex = list(a.exponents)
        ex[N - 1] += 1
        rep.check(pbw.pbw_f_star(a, n).exponents == tuple(ex), "f_n* increments a_N", a, n, ex, pbw.pbw_f_star(a, n).exponents)
        rep.check(pbw.pbw_eps_star(a, n) == a.exponents[-1], "eps_n* = a_N", a, n, a.exponents[-1], pbw.pbw_eps_star(a, n))
        es = pbw.pbw_e_star(a, n)
        want = None if a.exponents[-1] == 0 else a.exponents[:-1] + (a.exponents[-1] - 1,)
        rep.check((None if es is None else es.exponents) == want, "e_n* decrements a_N", a, n, want, es)
        if n >= 2:
            shifted = pbw.block_shift(a)
            chain = ms.sigma_chain(M)
            lifted = pbw.phi(shifted).with_rank(n)
            rep.check(chain == lifted, "sigma chain on phi(a) = phi(block_shift(a))", a, None, lifted, chain)
            rep.check(pbw.phi(shifted) == ms.shift_down(M).with_rank(n - 1), "phi_{n-1}(block_shift a) = shift_down(phi a)", a)


def suite_pbw_ks(rep: SuiteReport, n: int, data: list[pbw.LusztigDatum]) -> None:
    hw = pbw.LusztigDatum.zero(n)
    _crystal_axioms(rep, data, n, hw, star=False)
    _crystal_axioms(rep, data, n, hw, star=True)
    _ks_conditions(rep, data, n)


# -- registry -------------------------------------------------------------------

MS_SUITES: dict[str, Callable[..., None]] = {
    "crystal_axioms": suite_crystal_axioms,
    "ks_conditions": suite_ks_conditions,
    "bracket_count": suite_bracket_count,
    "star_commute": suite_star_commute,
    "ur_tracking": suite_ur_tracking,
    "mk_recursion": suite_mk_recursion,
    "first_half": suite_first_half,
    "sigma_shift": suite_sigma_shift,
    "flip_conjugation": suite_flip_conjugation,
    "local_structure": suite_local_structure,
    "oracle_agreement": suite_oracle_agreement,
}
PBW_SUITES: dict[str, Callable[..., None]] = {
    "phi_native": suite_phi_native,
    "pbw_ks": suite_pbw_ks,
}
TABLEAU_SUITES = ("embedding",)
SUITES = tuple(MS_SUITES) + tuple(PBW_SUITES) + TABLEAU_SUITES

# suites that each check one identity of the theory, as opposed to the extra sanity suites
CORE_SUITES = (
    "ks_conditions",
    "bracket_count",
    "star_commute",
    "ur_tracking",
    "mk_recursion",
    "first_half",
    "sigma_shift",
    "embedding",
    "phi_native",
    "local_structure",
)

ALIASES = {"ks": "ks_conditions", "sigma": "sigma_shift", "oracle": "oracle_agreement"}


def suite_name(name: str) -> str:
    key = name.strip().lower().replace("-", "_")
    key = ALIASES.get(key, key)
    if key not in SUITES:
        raise UsageError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    return key


def run_suite(
    name: str, rank: int = 2, max_size: int = 8, shape: Sequence[int] | None = None
) -> SuiteReport:
    name = suite_name(name)
    check_rank(rank)
    if name == "embedding":
        parts = check_partition(shape if shape is not None else (2, 1), rank)
        check_budget(rank, sum(parts))
        rep = SuiteReport(name, {"rank": rank, "shape": list(parts)}, domain="exhaustive")
        suite_embedding(rep, rank, parts)
        return rep
    rep = SuiteReport(name, {"rank": rank, "max_size": max_size})
    if name in PBW_SUITES:
        rep.domain, data = _pbw_domain(rank, max_size)
        rep.elements = len(data)
        PBW_SUITES[name](rep, rank, data)
        return rep
    rep.domain, elems = ms_domain(rank, max_size)
    rep.elements = len(elems)
    if name == "oracle_agreement":
        suite_oracle_agreement(rep, rank, elems, max_size)
    else:
        MS_SUITES[name](rep, rank, elems)
    return rep


EMBEDDING_SHAPES = (
    (2, (1,)), (2, (2,)), (2, (1, 1)), (2, (2, 1)), (2, (2, 2)), (2, (3, 1)),
    (3, (1,)), (3, (2, 1)),
)
BICRYSTAL_DOMAINS = ((2, 8), (3, 8), (4, 6))


def battery() -> list[tuple[str, dict[str, Any]]]:
    """The full list of (suite, params) runs used by the acceptance run."""
    runs: list[tuple[str, dict[str, Any]]] = []
    for name in ("crystal_axioms", "ks_conditions", "bracket_count", "star_commute",
                 "ur_tracking", "flip_conjugation", "local_structure", "oracle_agreement"):
        runs += [(name, {"rank": n, "max_size": s}) for n, s in BICRYSTAL_DOMAINS]
    for name in ("mk_recursion", "first_half", "sigma_shift"):
        runs += [(name, {"rank": n, "max_size": 8}) for n in (2, 3)]
    runs.append(("sigma_shift", {"rank": 5, "max_size": 14}))
    runs += [("embedding", {"rank": n, "shape": list(p)}) for n, p in EMBEDDING_SHAPES]
    for name in ("phi_native", "pbw_ks"):
        runs += [(name, {"rank": n, "max_size": 8}) for n in (2, 3, 4)]
    return runs


def run_battery() -> list[SuiteReport]:
    return [run_suite(name, **params) for name, params in battery()]


# -- isomorphism uniqueness -----------------------------------------------------


@dataclass(frozen=True)
class CrystalRegion:
    """A finite piece of a highest weight crystal containing its highest weight element."""

    name: str
    rank: int
    highest_weight: Any
    elements: tuple[Any, ...]


def ms_region(n: int, max_size: int) -> CrystalRegion:
    check_budget(n, max_size)
    return CrystalRegion("ms", n, Multisegment(n), tuple(enumerate_multisegments(n, max_size)))


def pbw_region(n: int, max_size: int) -> CrystalRegion:
    check_budget(n, max_size)
    elems = tuple(sort_elements(pbw.phi_inv(M) for M in enumerate_multisegments(n, max_size)))
    return CrystalRegion("pbw", n, pbw.LusztigDatum.zero(n), elems)


def _connected(region: CrystalRegion) -> bool:
    members = set(region.elements)
    seen = {region.highest_weight}
    queue = deque(seen)
    while queue:
        b = queue.popleft()
        for i in range(1, region.rank + 1):
            nxt = b.f(i)
            if nxt is not None and nxt in members and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen == members


def unique_isomorphism_check(
    source: CrystalRegion, target: CrystalRegion, candidate: Callable[[Any], Any]
) -> SuiteReport:
    """Check that ``candidate`` sends highest weight to highest weight and commutes
    with every e_i and f_i on the source region.

    A connected highest weight crystal has no nontrivial automorphisms, so a
    passing candidate is the only isomorphism on the region.
    """
    for region in (source, target):
        if region.highest_weight not in set(region.elements) or not _connected(region):
            raise UsageError(f"region {region.name!r} is not connected to its highest weight element")
    rep = SuiteReport(
        "unique_isomorphism",
        {"source": source.name, "target": target.name, "rank": source.rank},
        domain="region",
        elements=len(source.elements),
    )
    hw = candidate(source.highest_weight)
    rep.check(hw == target.highest_weight, "candidate preserves the highest weight element", source.highest_weight, None, target.highest_weight, hw)
    members = set(source.elements)
    for b in source.elements:
        cb = candidate(b)
        for i in range(1, source.rank + 1):
            fb = b.f(i)
            if fb is not None and fb in members:
                rep.check(candidate(fb) == cb.f(i), f"candidate commutes with f{i}", b, i, cb.f(i), candidate(fb))
            eb = b.e(i)
            got = cb.e(i)
            want = None if eb is None else candidate(eb)
            rep.check(want == got, f"candidate commutes with e{i}", b, i, want, got)
            rep.check(cb.eps(i) == b.eps(i), f"candidate preserves eps{i}", b, i, b.eps(i), cb.eps(i))
    return rep


# -- crystal graphs -------------------------------------------------------------


@dataclass
class CrystalGraph:
    model: str
    params: dict[str, Any]
    nodes: list[dict[str, Any]]
    edges: list[tuple[int, int, int, str]]

    def to_json(self) -> str:
        doc = {
            "model": self.model,
            "params": self.params,
            "nodes": self.nodes,
            "edges": [
                {"source": s, "target": t, "index": i, "kind": k} for s, t, i, k in self.edges
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_dot(self) -> str:
        lines = ["digraph crystal {", "  node [shape=box, fontname=monospace];"]
        for node in self.nodes:
            text = node["label"].replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  n{node["id"]} [label="{text}"];')
        for s, t, i, kind in self.edges:
            if kind == "star":
                lines.append(f'  n{s} -> n{t} [label="f{i}*", style=dashed];')
            else:
                lines.append(f'  n{s} -> n{t} [label="f{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(
    model: str,
    rank: int,
    max_size: int | None = None,
    shape: Sequence[int] | None = None,
    include_star: bool = False,
) -> CrystalGraph:
    check_rank(rank)
    if model == "tab":
        if include_star:
            raise UsageError("tableaux carry no star structure")
        parts = check_partition(shape if shape is not None else (1,), rank)
        check_budget(rank, sum(parts))
        elems: list[Any] = enumerate_ssyt(parts, rank)
        params: dict[str, Any] = {"rank": rank, "shape": list(parts)}
    elif model in ("ms", "pbw"):
        size = 2 if max_size is None else max_size
        check_budget(rank, size)
        elems = enumerate_multisegments(rank, size)
        if model == "pbw":
            elems = [pbw.phi_inv(M) for M in elems]
        params = {"rank": rank, "max_size": size}
    else:
        raise UsageError(f"unknown model {model!r}")
    params["star"] = include_star
    elems = sort_elements(elems)
    ids = {b: k for k, b in enumerate(elems)}
    nodes = []
    for b in elems:
        node: dict[str, Any] = {
            "id": ids[b],
            "label": label(b),
            "doc": to_doc(b),
            "size": size_of(b),
            "pairing": list(_pairings(b, rank)),
            "eps": [b.eps(i) for i in range(1, rank + 1)],
            "phi": [b.phi(i) for i in range(1, rank + 1)],
        }
        if model != "tab":
            node["weight"] = list(b.weight())
        if include_star:
            node["eps_star"] = [b.eps_star(i) for i in range(1, rank + 1)]
            node["phi_star"] = [b.phi_star(i) for i in range(1, rank + 1)]
        nodes.append(node)
    edges = []
    for b in elems:
        for i in range(1, rank + 1):
            kinds = [("normal", b.f(i))]
            if include_star:
                kinds.append(("star", b.f_star(i)))
            for kind, tgt in kinds:
                if tgt is not None and tgt in ids:
                    edges.append((ids[b], ids[tgt], i, kind))
    return CrystalGraph(model, params, nodes, edges)


__all__ = [
    "CrystalGraph",
    "CrystalRegion",
    "CORE_SUITES",
    "SUITES",
    "SuiteReport",
    "battery",
    "bfs_closure",
    "build_graph",
    "enumerate_multisegments",
    "estimate_multisegments",
    "hook_content_count",
    "kind_of",
    "lineage",
    "ms_domain",
    "ms_region",
    "pbw_region",
    "run_battery",
    "run_suite",
    "size_budget",
    "unique_isomorphism_check",
]
