"""Strata with singular locus of codimension three and the bounds built on them.

The eight alpha values are evaluated from their closed forms;
:func:`composition_consistency` rebuilds each one from the general bounds in
:mod:`hypercodim.formulas` and reports the exact differences.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .exactmath import binomial
from .formulas import (
    BoundValue,
    Params,
    admissibility_violation,
    bound_general,
    codim_linear_stratum,
    codim_prop12i,
    codim_prop12iii,
    tau,
    theorem12i_value,
)

ALPHA_KEYS = ("a1", "a2a", "a2b", "a2", "a3", "a4", "a4prime", "a5", "a6", "a7", "a8")
# candidates for the minimum, in tie-break order; a4 is swapped for a4prime when d = 6
MIN_KEYS = ("a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8")


class StratumKey(NamedTuple):
    i: int
    k: int
    l: int


class Admissibility(NamedTuple):
    ok: bool
    reason: str | None = None

    def __bool__(self):
        return self.ok


class Codim3Stratum(NamedTuple):
    """A (k, l) pair for i = N - 4; ``l is None`` marks the composite (N-3) stratum."""

    k: int
    l: int | None


@dataclass(frozen=True)
class AlphaBreakdown:
    d: int
    N: int
    alpha: dict[str, int]
    min_value: int
    argmin: str
    d6_mode: bool

    def candidates(self) -> dict[str, int]:
        """The values the minimum is taken over, with a4prime in place of a4 for sextics."""
        out = {}
        for key in MIN_KEYS:
            if key == "a4" and self.d6_mode:
                out["a4prime"] = self.alpha["a4prime"]
            else:
                out[key] = self.alpha[key]
        return out


@dataclass(frozen=True)
class ConsistencyRecord:
    printed: int
    composed: int
    source: str

    @property
    def difference(self) -> int:
        return self.printed - self.composed


@dataclass(frozen=True)
class ConsistencyReport:
    d: int
    N: int
    records: dict[str, ConsistencyRecord] = field(default_factory=dict)

    def differences(self) -> dict[str, int]:
        return {k: r.difference for k, r in self.records.items()}


def is_admissible(N: int, s: StratumKey) -> Admissibility:
    """Check 1 <= i <= l <= k <= N and N + i >= k + l."""
    reason = admissibility_violation(N, s.i, s.k, s.l)
    return Admissibility(reason is None, reason)


def enumerate_codim3_strata(N: int) -> list[Codim3Stratum]:
    """The eight strata covering forms whose singular locus has dimension N - 4."""
    if N < 7:
        raise ValueError(f"need N >= 7, got N={N}")
    return [
        Codim3Stratum(N - 4, N - 4),
        Codim3Stratum(N - 3, None),
        Codim3Stratum(N - 2, N - 4),
        Codim3Stratum(N - 2, N - 3),
        Codim3Stratum(N - 2, N - 2),
        Codim3Stratum(N - 1, N - 4),
        Codim3Stratum(N - 1, N - 3),
        Codim3Stratum(N, N - 4),
    ]


def expand_strata(N: int, strata: list[Codim3Stratum]) -> set[tuple[int, int]]:
    """Flatten to (k, l) pairs; the composite (N-3) stratum covers l = N-4 and l = N-3."""
    out = set()
    for s in strata:
        if s.l is None:
            out.update({(s.k, s.k - 1), (s.k, s.k)})
        else:
            out.add((s.k, s.l))
    return out


def _check_params(p: Params):
    if p.N < 7:
        raise ValueError(f"need N >= 7, got N={p.N}")
    if p.d < 4:
        raise ValueError(f"need d >= 4, got d={p.d}")


def alphas(p: Params) -> AlphaBreakdown:
    _check_params(p)
    d, N = p.d, p.N
    C = binomial
    a = {}
    a["a1"] = C(d + N - 4, N - 4) + 4 * C(d + N - 5, N - 4) - 4 * (N - 3)
    a["a2a"] = (C(d + N - 3, N - 3) - C(d + N - 7, N - 3)
                + 3 * (C(d + N - 4, N - 3) - C(d + N - 6, N - 3))
                - (N + 5) * (N - 2) // 2)
    a["a2b"] = C(d + N - 3, N - 3) + 2 * C(d + N - 4, N - 3) - 3 * (N - 2)
    a["a2"] = min(a["a2a"], a["a2b"])
    a["a3"] = 3 * C(d + N - 6, N - 3) + 2 * C(d + N - 5, N - 4) - 2 * (N - 1)
    a["a4"] = C(d + N - 2, N - 2) - C(d + N - 6, N - 2) + C(d + N - 5, N - 4) - (N + 4) * (N - 1) // 2
    a["a4prime"] = C(N + 4, 6) - C(N + 1, 3) + C(N - 1, 3) - 2 * (N - 1)
    a["a5"] = C(d + N - 2, N - 2) - 2 * (N - 1)
    a["a6"] = 4 * C(d + N - 6, N - 3) + C(d + N - 5, N - 4) - N
    a["a7"] = 3 * C(d + N - 5, N - 2) - N
    a["a8"] = 5 * C(d + N - 6, N - 3)

    d6 = d == 6
    best_key, best = None, None
    for key in MIN_KEYS:
        if key == "a4" and d6:
            key = "a4prime"
        if best is None or a[key] < best:
            best_key, best = key, a[key]
    return AlphaBreakdown(d=d, N=N, alpha=a, min_value=best, argmin=best_key, d6_mode=d6)


def theorem31_bound(p: Params) -> int:
    return alphas(p).min_value


def theorem01_bound(p: Params) -> BoundValue:
    """Bound on the codimension of the non-factorial forms, tagged by degree regime.

    Fano degrees 4 <= d < N use min of the a7 and a8 expressions, d = N keeps
    only the a8 expression, d >= 2N uses the a1 expression. Between N and 2N
    the general minimum over all alphas is returned and tagged ``intermediate``.
    """
    _check_params(p)
    d, N = p.d, p.N
    if d < N:
        value = min(3 * binomial(d + N - 5, N - 2) - N, 5 * binomial(d + N - 6, N - 3))
        return BoundValue(value, "thm0.1i", "fano")
    if d == N:
        return BoundValue(5 * binomial(d + N - 6, N - 3), "thm0.1i-index-one", "fano-index-one")
    if d >= 2 * N:
        value = binomial(d + N - 4, N - 4) + 4 * binomial(d + N - 5, N - 4) - 4 * (N - 3)
        return BoundValue(value, "thm0.1ii", "general-type")
    return BoundValue(theorem31_bound(p), "thm3.1", "intermediate")


def dstar(N: int) -> int:
    """Largest degree with a7 <= a8: for N = 3m + e it is 2m + e + 1."""
    if N < 7:
        raise ValueError(f"need N >= 7, got N={N}")
    m, e = divmod(N, 3)
    return 2 * m + e + 1


def composition_consistency(p: Params) -> ConsistencyReport:
    """Rebuild every alpha from the general bounds minus the dimension of the plane family.

    Differences are data, never errors. a4 is composed with the generic
    (i, k; k-1) expression at every degree. a4prime uses the sextic
    expression at d = 6.
    """
    ab = alphas(p)
    d, N = p.d, p.N
    i = N - 4

    def plane_family(k):
        return (k + 1) * (N - k)

    rec = {}
    rec["a1"] = ConsistencyRecord(ab.alpha["a1"], codim_linear_stratum(p, i), "prop1.1")
    rec["a2a"] = ConsistencyRecord(ab.alpha["a2a"], codim_prop12i(p, i) - (i + 2) * (N - i - 1),
                                   "prop1.2i")
    rec["a2b"] = ConsistencyRecord(ab.alpha["a2b"], codim_prop12iii(p, i) - (i + 2) * (N - i - 1),
                                   "prop1.2iii")
    for key, k, l in (("a3", N - 2, N - 4), ("a5", N - 2, N - 2), ("a6", N - 1, N - 4),
                      ("a7", N - 1, N - 3), ("a8", N, N - 4)):
        b = bound_general(p, i, k, l)
        rec[key] = ConsistencyRecord(ab.alpha[key], b.value - plane_family(k), b.source)
    k = N - 2
    rec["a4"] = ConsistencyRecord(ab.alpha["a4"],
                                  theorem12i_value(p, i, k, tau(d - 1, k, i)) - plane_family(k),
                                  "thm1.2i")
    six = Params(6, N)
    rec["a4prime"] = ConsistencyRecord(ab.alpha["a4prime"],
                                       bound_general(six, i, k, k - 1).value - plane_family(k),
                                       "thm1.2ii-d6")
    order = ("a1", "a2a", "a2b", "a3", "a4", "a4prime", "a5", "a6", "a7", "a8")
    return ConsistencyReport(d=d, N=N, records={key: rec[key] for key in order})
