"""Closed-form codimension counts for hypersurfaces with large singular loci.

Every function evaluates one printed expression pointwise in exact integers.
Domain guards raise ``ValueError``; nothing is clamped silently.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .exactmath import binomial


@dataclass(frozen=True)
class Params:
    """Degree ``d`` of the forms and dimension ``N`` of the ambient projective space."""

    d: int
    N: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"degree must be >= 1, got d={self.d}")
        if self.N < 1:
            raise ValueError(f"dimension must be >= 1, got N={self.N}")


@dataclass(frozen=True)
class BoundValue:
    """An exact bound together with a tag naming the formula (and branch) behind it."""

    value: int
    source: str
    regime: str | None = None

    def __int__(self):
        return self.value


class Lemma11Min(NamedTuple):
    q_min: int
    e_min: int


def _require(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def tau(a: int, b: int, c: int) -> int:
    """max{C(a+c, c), a*b + 1}: the larger of the projection and decomposable-form counts."""
    _require(a >= 1 and b >= 1 and c >= 1, f"tau needs positive arguments, got ({a}, {b}, {c})")
    return max(binomial(a + c, c), a * b + 1)


def codim_linear_stratum(p: Params, i: int) -> int:
    """Codimension of the forms singular along some i-plane."""
    d, N = p.d, p.N
    _require(d >= 3, f"need d >= 3, got d={d}")
    _require(0 <= i <= N - 1, f"need 0 <= i <= N-1, got i={i}, N={N}")
    return binomial(d + i, d) + (N - i) * binomial(d + i - 1, d - 1) - (i + 1) * (N - i)


def e_q(d: int, i: int, q: int) -> int:
    """Conditions for a degree-d form on P^(i+1) to acquire a double component of degree q."""
    _require(d >= 4, f"need d >= 4, got d={d}")
    _require(i >= 0, f"need i >= 0, got i={i}")
    _require(2 <= q <= d // 2, f"need 2 <= q <= {d // 2}, got q={q}")
    return binomial(d + i + 1, i + 1) - binomial(d - 2 * q + i + 1, i + 1) - binomial(q + i + 1, i + 1)


def lemma11_argmin(d: int, i: int) -> Lemma11Min:
    """Scan q = 2..floor(d/2) for the smallest E_q; ties go to the smaller q."""
    best = None
    for q in range(2, d // 2 + 1):
        v = e_q(d, i, q)
        if best is None or v < best[1]:
            best = (q, v)
    if best is None:
        raise ValueError(f"need d >= 4, got d={d}")
    return Lemma11Min(*best)


def delta_q(d: int, i: int, q: int) -> int:
    """Conditions on one partial derivative restricted to P for it to vanish on a degree-q component."""
    _require(d >= 4, f"need d >= 4, got d={d}")
    _require(i >= 0, f"need i >= 0, got i={i}")
    _require(2 <= q <= d - 1, f"need 2 <= q <= {d - 1}, got q={q}")
    return binomial(d + i, i + 1) - binomial(d - q + i, i + 1)


def codim_prop12i(p: Params, i: int) -> int:
    """Codimension of P^(i,i+1;i)(P) for a fixed (i+1)-plane P."""
    d, N = p.d, p.N
    _require(d >= 4, f"need d >= 4, got d={d}")
    _require(0 <= i <= N - 1, f"need 0 <= i <= N-1, got i={i}, N={N}")
    if d == 6 and i == N - 1:
        raise ValueError("d=6, i=N-1 is covered by codim_prop12ii")
    return (binomial(d + i + 1, i + 1) - binomial(d + i - 3, i + 1) - binomial(i + 3, i + 1)
            + (N - i - 1) * (binomial(d + i, i + 1) - binomial(d + i - 2, i + 1)))


def codim_prop12ii(N: int) -> int:
    """Codimension of P^(N-1,N;N-1)(P) for sextics."""
    _require(N >= 2, f"need N >= 2, got N={N}")
    return binomial(N + 6, 6) - binomial(N + 3, 3) - 1


def prop12iii_branches(p: Params, i: int) -> tuple[int, int]:
    """The two expressions whose minimum is codim P^(i,i+1;i+1)(P)."""
    d, N = p.d, p.N
    _require(d >= 4, f"need d >= 4, got d={d}")
    _require(0 <= i <= N - 2, f"need 0 <= i <= N-2, got i={i}, N={N}")
    top = binomial(d + i + 1, i + 1)
    first = top - binomial(i + 3, i + 1) + (N - i - 1) * (binomial(d + i, i + 1) - binomial(d + i - 2, i + 1))
    second = top + (N - i - 2) * (binomial(d + i, i + 1) - 1)
    return first, second


def codim_prop12iii(p: Params, i: int) -> int:
    return min(prop12iii_branches(p, i))


def prop12iii_q_expression(p: Params, i: int, q: int) -> int:
    """Condition count for f|_P = 0 with the derivatives vanishing on a degree-q component."""
    d, N = p.d, p.N
    _require(2 <= q <= d - 1, f"need 2 <= q <= {d - 1}, got q={q}")
    _require(i >= 0, f"need i >= 0, got i={i}")
    return (binomial(d + i + 1, i + 1)
            + (N - i - 1) * (binomial(d + i, i + 1) - binomial(d - q + i, i + 1))
            - binomial(i + q + 1, i + 1))


def prop21_bound(d: int, k: int, l: int) -> int:
    """Lower bound (k-l+1)*C(d+l-2, l+1) for forms on P^k singular along a non-degenerate l-fold."""
    _require(d >= 3, f"need d >= 3, got d={d}")
    _require(0 <= l <= k, f"need 0 <= l <= k, got l={l}, k={k}")
    return (k - l + 1) * binomial(d + l - 2, l + 1)


def vanishing_bound(d: int, k: int, i: int) -> int:
    """Codimension bound for degree d-1 forms on P^k vanishing on an i-fold spanning P^k.

    Takes the larger of the general-projection count C(d-1+i, i) and the
    decomposable-forms count (d-1)k + 1. ``i = 0`` is accepted and simply
    evaluates the binomial at c = 0.
    """
    _require(d >= 2 and k >= 1 and i >= 0, f"need d >= 2, k >= 1, i >= 0, got ({d}, {k}, {i})")
    return max(binomial(d - 1 + i, i), (d - 1) * k + 1)


def admissibility_violation(N: int, i: int, k: int, l: int) -> str | None:
    """Name the first violated constraint on a stratum (i, k; l) in P^N, or None."""
    if i < 1:
        return f"i >= 1 violated (i={i})"
    if not i <= l:
        return f"i <= l violated ({i} > {l})"
    if not l <= k:
        return f"l <= k violated ({l} > {k})"
    if not k <= N:
        return f"k <= N violated ({k} > {N})"
    if N + i < k + l:
        return f"N+i >= k+l violated ({N + i} < {k + l})"
    return None


def theorem12i_value(p: Params, i: int, k: int, tau_value: int) -> int:
    d, N = p.d, p.N
    return (binomial(d + k, k) - binomial(d - 4 + k, k) - binomial(k + 2, k)
            + (N + i - 2 * k + 1) * tau_value)


def bound_general(p: Params, i: int, k: int, l: int, *, tau_override: int | None = None) -> BoundValue:
    """Lower bound for codim P^(i,k;l)(P), dispatching on l against k.

    ``tau_override`` replaces the tau factor; it exists so callers can check that
    strata with a zero multiplier do not depend on it.
    """
    d, N = p.d, p.N
    _require(d >= 4, f"need d >= 4, got d={d}")
    reason = admissibility_violation(N, i, k, l)
    if reason is not None:
        raise ValueError(f"inadmissible stratum (i={i}, k={k}, l={l}) in P^{N}: {reason}")

    if l <= k - 2:
        t = tau(d - 1, k, i) if tau_override is None else tau_override
        value = (k - l + 1) * binomial(d + l - 2, l + 1) + (N + i - k - l) * t
        return BoundValue(value, "thm1.1")
    if l == k - 1:
        if d == 6:
            t = tau(5, k, i) if tau_override is None else tau_override
            value = binomial(k + 6, k) - binomial(k + 3, k) + (N + i - 2 * k + 1) * t
            return BoundValue(value, "thm1.2ii-d6")
        t = tau(d - 1, k, i) if tau_override is None else tau_override
        return BoundValue(theorem12i_value(p, i, k, t), "thm1.2i")
    t = tau(d - 1, k, i) if tau_override is None else tau_override
    return BoundValue(binomial(d + k, k) + (N + i - k - l) * t, "thm1.3")
