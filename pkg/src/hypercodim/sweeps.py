"""Exhaustive integer sweeps over the inequalities that are stated without computation.

Each sweep returns a :class:`SweepReport`. Gating sweeps collect every failing
tuple; recording sweeps (``gating=False``) keep full data rows in ``records``
and only fail on the sub-claims they do assert.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable

from .exactmath import binomial
from .formulas import Params, e_q, lemma11_argmin, prop12iii_q_expression, tau
from .strata import alphas, dstar, theorem01_bound


@dataclass(frozen=True)
class Failure:
    params: dict[str, int]
    relation: str
    values: dict[str, Any]


@dataclass
class SweepReport:
    claim_id: str
    range: dict[str, int]
    total: int = 0
    passes: int = 0
    failures: list[Failure] = field(default_factory=list)
    records: list[dict[str, Any]] = field(default_factory=list)
    gating: bool = True

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        if self.failures:
            return "fail"
        return "pass" if self.gating else "report-only"


@dataclass(frozen=True)
class IdentityReport:
    params: dict[str, int]
    lhs: Fraction
    rhs: Fraction
    equal: bool
    checks: dict[str, bool] = field(default_factory=dict)


class _Chunk:
    """Accumulator for one task; merged in task order so reports are canonical."""

    def __init__(self):
        self.total = 0
        self.failures: list[Failure] = []
        self.records: list[dict[str, Any]] = []

    def check(self, cond: bool, params: dict, relation: str, **values):
        self.total += 1
        if not cond:
            self.failures.append(Failure(dict(params), relation, values))


def _run(claim_id: str, rng: dict, task: Callable[..., _Chunk], items: Iterable[tuple],
         jobs: int = 1, gating: bool = True) -> SweepReport:
    items = list(items)
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(task, *zip(*items)))
    else:
        chunks = [task(*it) for it in items]
    rep = SweepReport(claim_id, dict(rng), gating=gating)
    for ch in chunks:
        rep.total += ch.total
        rep.failures.extend(ch.failures)
        rep.records.extend(ch.records)
    rep.passes = rep.total - len(rep.failures)
    return rep


def _lemma11_task(d: int, i_max: int) -> _Chunk:
    ch = _Chunk()
    for i in range(i_max + 1):
        q, e = lemma11_argmin(d, i)
        if d == 6:
            ch.records.append({"d": d, "i": i, "q_min": q, "E_min": e,
                               "E2": e_q(d, i, 2), "E3": e_q(d, i, 3)})
            continue
        ch.check(q == 2, {"d": d, "i": i}, "argmin_q E_q == 2", q_min=q, E_min=e)
        if d >= 7:
            e2, e3 = e_q(d, i, 2), e_q(d, i, 3)
            ch.check(e3 > e2, {"d": d, "i": i}, "E_3 > E_2", E2=e2, E3=e3)
    return ch


def sweep_lemma11(d_max: int = 60, i_max: int = 12, *, jobs: int = 1) -> SweepReport:
    """Minimum of E_q sits at q = 2 for d != 6, and E_3 > E_2 once d >= 7.

    Rows for d = 6 are recorded with their actual argmin instead of being
    asserted: there E_3 < E_2 from i = 2 on, while i = 0, 1 still favour q = 2.
    """
    if d_max < 7 or i_max < 1:
        raise ValueError(f"need d_max >= 7 and i_max >= 1, got {d_max}, {i_max}")
    return _run("lemma11", {"d_min": 4, "d_max": d_max, "i_min": 0, "i_max": i_max},
                _lemma11_task, [(d, i_max) for d in range(4, d_max + 1)], jobs)


def _endpoint_task(d: int, N_max: int) -> _Chunk:
    ch = _Chunk()
    for N in range(3, N_max + 1):
        for i in range(0, N - 1):
            p = Params(d, N)
            vals = [prop12iii_q_expression(p, i, q) for q in range(2, d)]
            ends = min(vals[0], vals[-1])
            ch.check(min(vals) == ends, {"d": d, "N": N, "i": i},
                     "min over q == min(q=2, q=d-1)", scan_min=min(vals), endpoint_min=ends)
    return ch


def sweep_prop12iii_endpoints(d_max: int = 30, N_max: int = 12, *, jobs: int = 1) -> SweepReport:
    if d_max < 5:
        raise ValueError(f"need d_max >= 5, got {d_max}")
    return _run("prop12iii-endpoints", {"d_min": 4, "d_max": d_max, "N_min": 3, "N_max": N_max},
                _endpoint_task, [(d, N_max) for d in range(4, d_max + 1)], jobs)


def _tau_task(N: int, d_max: int) -> _Chunk:
    ch = _Chunk()
    for d in range(4, d_max + 1):
        target = binomial(d + N - 5, N - 4)
        for k in range(N - 4, N):
            t = tau(d - 1, k, N - 4)
            ch.check(t == target, {"d": d, "N": N, "k": k}, "tau(d-1,k,N-4) == C(d+N-5,N-4)",
                     tau=t, binomial=target)
        t = tau(d - 1, N, N - 4)
        if t != target:
            ch.records.append({"d": d, "N": N, "k": N, "tau": t, "binomial": target})
    return ch


def sweep_tau_simplification(d_max: int = 30, N_max: int = 14, *, jobs: int = 1) -> SweepReport:
    """Asserts the tau simplification for k <= N-1; exceptions at k = N go to ``records``."""
    if N_max < 7:
        raise ValueError(f"need N_max >= 7, got {N_max}")
    return _run("tau-simplification", {"d_min": 4, "d_max": d_max, "N_min": 7, "N_max": N_max},
                _tau_task, [(N, d_max) for N in range(7, N_max + 1)], jobs)


def _fano_task(N: int) -> _Chunk:
    ch = _Chunk()
    for d in range(4, N + 1):
        ab = alphas(Params(d, N))
        vals = ab.candidates()
        m = min(vals["a7"], vals["a8"])
        prm = {"d": d, "N": N}
        for key, v in vals.items():
            if key in ("a7", "a8"):
                continue
            ch.check(v >= m, prm, f"{key} >= min(a7, a8)", **{key: v, "min_a7_a8": m})
        b = theorem01_bound(Params(d, N)).value
        ch.check(b == m, prm, "theorem01 == min(a7, a8)", theorem01=b, min_a7_a8=m)
        if d == N:
            ch.check(ab.argmin == "a8", prm, "argmin == a8 at d = N", argmin=ab.argmin,
                     a7=vals["a7"], a8=vals["a8"])
    return ch


def sweep_fano_dominance(N_max: int = 16, *, N_min: int = 7, jobs: int = 1) -> SweepReport:
    if N_max < 7 or N_min < 7:
        raise ValueError(f"need 7 <= N_min, N_max, got {N_min}, {N_max}")
    return _run("fano-dominance", {"N_min": N_min, "N_max": N_max, "d_min": 4},
                _fano_task, [(N,) for N in range(N_min, N_max + 1)], jobs)


def _gt_task(N: int, a_max: int) -> _Chunk:
    ch = _Chunk()
    for a in range(a_max + 1):
        d = 2 * N + a
        ab = alphas(Params(d, N))
        a1 = ab.alpha["a1"]
        prm = {"N": N, "a": a, "d": d}
        for key, v in ab.candidates().items():
            if key == "a1":
                continue
            ch.check(v >= a1, prm, f"{key} >= a1", **{key: v, "a1": a1})
        b = theorem01_bound(Params(d, N)).value
        ch.check(b == a1, prm, "theorem01 == a1", theorem01=b, a1=a1)
    return ch


def sweep_gt_dominance(N_max: int = 12, a_max: int = 20, *, N_min: int = 7, jobs: int = 1) -> SweepReport:
    if N_max < 7 or N_min < 7 or a_max < 0:
        raise ValueError(f"need N_min, N_max >= 7 and a_max >= 0, got {N_min}, {N_max}, {a_max}")
    return _run("gt-dominance", {"N_min": N_min, "N_max": N_max, "a_min": 0, "a_max": a_max},
                _gt_task, [(N, a_max) for N in range(N_min, N_max + 1)], jobs)


def identity32_bracket(N: int, a: int) -> int:
    return 10 * N * (2 * N + a - 1) * (2 * N + a - 2) - (N - 3) * (3 * N + a - 5) * (11 * N + 5 * a - 4)


def check_identity_32(N: int, a: int) -> IdentityReport:
    """Compare a8 - a1 at d = 2N + a with its factorial closed form, exactly."""
    if N < 7 or a < 0:
        raise ValueError(f"need N >= 7 and a >= 0, got N={N}, a={a}")
    ab = alphas(Params(2 * N + a, N))
    lhs = Fraction(ab.alpha["a8"] - ab.alpha["a1"])
    ratio = Fraction(math.factorial(3 * N + a - 6), math.factorial(N - 3) * math.factorial(2 * N + a))
    bracket = identity32_bracket(N, a)
    rhs = 4 * (N - 3) + ratio * bracket
    return IdentityReport({"N": N, "a": a}, lhs, rhs, lhs == rhs,
                          {"bracket_positive": bracket > 0, "lhs_positive": lhs > 0})


def _id32_task(N: int, a_max: int) -> _Chunk:
    ch = _Chunk()
    for a in range(a_max + 1):
        r = check_identity_32(N, a)
        ch.check(r.equal, r.params, "a8 - a1 == closed form", lhs=r.lhs, rhs=r.rhs)
        ch.check(r.checks["bracket_positive"], r.params, "bracket > 0", bracket=identity32_bracket(N, a))
    return ch


def sweep_identity_32(N_max: int = 12, a_max: int = 0, *, N_min: int = 7, jobs: int = 1) -> SweepReport:
    if N_min < 7 or a_max < 0:
        raise ValueError(f"need N_min >= 7 and a_max >= 0, got {N_min}, {a_max}")
    return _run("identity-32", {"N_min": N_min, "N_max": N_max, "a_min": 0, "a_max": a_max},
                _id32_task, [(N, a_max) for N in range(N_min, N_max + 1)], jobs)


def check_identity_33(N: int, d: int) -> IdentityReport:
    """Compare a6 - a8 with its printed closed form; positivity of a6 - a8 is checked separately."""
    if N < 7 or not 4 <= d <= N:
        raise ValueError(f"need N >= 7 and 4 <= d <= N, got N={N}, d={d}")
    ab = alphas(Params(d, N))
    lhs = Fraction(ab.alpha["a6"] - ab.alpha["a8"])
    ratio = Fraction(math.factorial(d + N - 6), math.factorial(N - 3) * math.factorial(d - 1))
    rhs = -N + ratio * (-d * d + d * (N - 1) + (N * N - 9 * N + 18))
    return IdentityReport({"N": N, "d": d}, lhs, rhs, lhs == rhs, {"lhs_positive": lhs > 0})


def _id33_task(N: int, d_min: int, d_max: int | None) -> _Chunk:
    ch = _Chunk()
    top = N if d_max is None else min(N, d_max)
    for d in range(d_min, top + 1):
        r = check_identity_33(N, d)
        ch.check(r.checks["lhs_positive"], r.params, "a6 - a8 > 0", lhs=r.lhs)
        ch.records.append({"N": N, "d": d, "lhs": r.lhs, "rhs": r.rhs, "equal": r.equal})
    return ch


def sweep_identity_33(N_max: int = 16, *, N_min: int = 7, d_min: int = 4, d_max: int | None = None,
                      jobs: int = 1) -> SweepReport:
    """Positivity of a6 - a8 is asserted; agreement with the closed form is only recorded."""
    if N_min < 7 or d_min < 4:
        raise ValueError(f"need N_min >= 7 and d_min >= 4, got {N_min}, {d_min}")
    rng = {"N_min": N_min, "N_max": N_max, "d_min": d_min, "d_max": N_max if d_max is None else d_max}
    return _run("identity-33", rng, _id33_task,
                [(N, d_min, d_max) for N in range(N_min, N_max + 1)], jobs, gating=False)


def _dstar_task(N: int) -> _Chunk:
    ch = _Chunk()
    ds = dstar(N)
    for d in range(4, N + 1):
        ab = alphas(Params(d, N))
        a7, a8 = ab.alpha["a7"], ab.alpha["a8"]
        if d <= ds:
            ch.check(a7 <= a8, {"d": d, "N": N}, "a7 <= a8 for d <= dstar", a7=a7, a8=a8, dstar=ds)
        else:
            ch.check(a7 > a8, {"d": d, "N": N}, "a7 > a8 for d > dstar", a7=a7, a8=a8, dstar=ds)
    return ch


def sweep_dstar(N_max: int = 30, *, N_min: int = 7, jobs: int = 1) -> SweepReport:
    if N_max < 7 or N_min < 7:
        raise ValueError(f"need 7 <= N_min, N_max, got {N_min}, {N_max}")
    return _run("dstar", {"N_min": N_min, "N_max": N_max, "d_min": 4},
                _dstar_task, [(N,) for N in range(N_min, N_max + 1)], jobs)


def _remark31_task(N: int) -> _Chunk:
    ch = _Chunk()
    ab = alphas(Params(6, N))
    row = {"N": N, "d": 6}
    row.update(ab.candidates())
    row.update({"min": ab.min_value, "argmin": ab.argmin, "agrees_with_a8": ab.argmin == "a8"})
    ch.records.append(row)
    return ch


def sweep_remark31(N_max: int = 16, *, N_min: int = 7, jobs: int = 1) -> SweepReport:
    """Record the actual minimiser at d = 6 (with a4prime in place of a4)."""
    if N_max < 7 or N_min < 7:
        raise ValueError(f"need 7 <= N_min, N_max, got {N_min}, {N_max}")
    return _run("remark31", {"N_min": N_min, "N_max": N_max, "d": 6},
                _remark31_task, [(N,) for N in range(N_min, N_max + 1)], jobs, gating=False)


CLAIMS = {
    "lemma11": sweep_lemma11,
    "prop12iii-endpoints": sweep_prop12iii_endpoints,
    "tau-simplification": sweep_tau_simplification,
    "fano-dominance": sweep_fano_dominance,
    "gt-dominance": sweep_gt_dominance,
    "dstar": sweep_dstar,
    "remark31": sweep_remark31,
    "identity-32": sweep_identity_32,
    "identity-33": sweep_identity_33,
}
