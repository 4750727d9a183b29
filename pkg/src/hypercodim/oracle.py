"""Rank oracle: build linear condition systems on spaces of degree-d forms and take their rank.

Columns of every system are the monomials of degree d in x_0..x_N in graded
lexicographic order. Random choices (points, lambda constants) are sampled as
integers in [0, min(PRIMES)) from a single seed, and the same integer system is
reduced modulo each configured prime; the results carry one rank per prime.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from .exactmath import PRIMES, FieldMatrix, binomial, field_rank, simplex_point_count
from .formulas import prop21_bound

MAX_ATTEMPTS = 100


class SamplingExhausted(RuntimeError):
    """Generic-position sampling failed for ``MAX_ATTEMPTS`` draws in a row."""


Monomial = tuple  # exponent vector (a_0, ..., a_n)


def monomials(d: int, n: int) -> list[Monomial]:
    """Exponent vectors of degree d in n + 1 variables, graded-lex order (x_0 largest)."""
    if d < 0 or n < 0:
        raise ValueError(f"need d >= 0 and n >= 0, got d={d}, n={n}")
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for a in range(left, -1, -1):
            rec(prefix + (a,), left - a, slots - 1)

    rec((), d, n + 1)
    return out


@dataclass
class ConditionSystem:
    """Rows are integer linear functionals on the coefficient vector of a degree-d form."""

    d: int
    n: int
    rows: list[np.ndarray] = field(default_factory=list)
    provenance: list[tuple] = field(default_factory=list)

    def __post_init__(self):
        self.columns = monomials(self.d, self.n)
        self.index = {m: j for j, m in enumerate(self.columns)}

    def add(self, row: np.ndarray, tag: tuple):
        self.rows.append(row)
        self.provenance.append(tag)

    def matrix(self, p: int) -> FieldMatrix:
        if not self.rows:
            return FieldMatrix.zeros(0, len(self.columns), p)
        return FieldMatrix(np.array(self.rows, dtype=object), p)

    def ranks(self, primes: Sequence[int] = PRIMES) -> dict[int, int]:
        return {p: field_rank(self.matrix(p)) for p in primes}


def _gradient_at_point(sys: ConditionSystem, point: Sequence[int]) -> list[np.ndarray]:
    """Functionals g -> (dg/dx_j)(point), j = 0..n, exact over the integers."""
    n = sys.n
    lower = {}
    for mono in monomials(sys.d - 1, n):
        v = 1
        for t, e in enumerate(mono):
            if e:
                v *= int(point[t]) ** e
        lower[mono] = v
    grads = [np.zeros(len(sys.columns), dtype=object) for _ in range(n + 1)]
    for col, mono in enumerate(sys.columns):
        for j in range(n + 1):
            if mono[j]:
                below = mono[:j] + (mono[j] - 1,) + mono[j + 1:]
                grads[j][col] = mono[j] * lower[below]
    return grads


def singular_point_rows(point: Sequence[int], d: int, tangent: np.ndarray | None = None,
                        sys: ConditionSystem | None = None) -> list[np.ndarray]:
    """Rows saying the form (restricted to a linear subspace) is singular at ``point``.

    Without ``tangent`` these are the N + 1 partial derivatives at the point.
    With ``tangent`` (an (N+1) x (s+1) matrix whose columns span the affine cone
    of an s-dimensional subspace through the point) they are the s + 1 partials
    of the restriction, obtained from the ambient ones by the chain rule.
    """
    n = len(point) - 1
    if d < 3:
        raise ValueError(f"need d >= 3, got d={d}")
    if sys is None:
        sys = ConditionSystem(d, n)
    grads = _gradient_at_point(sys, point)
    if tangent is None:
        return grads
    rows = []
    for a in range(tangent.shape[1]):
        row = np.zeros(len(sys.columns), dtype=object)
        for j in range(n + 1):
            c = int(tangent[j, a])
            if c:
                row = row + c * grads[j]
        rows.append(row)
    return rows


@dataclass
class OracleResult:
    check: str
    params: dict[str, int]
    expected: int
    ranks: dict[int, int]
    seed: int | None = None
    attempts: int = 0
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def primes_agree(self) -> bool:
        return len(set(self.ranks.values())) == 1

    @property
    def rank(self) -> int:
        return self.ranks[PRIMES[0]]

    @property
    def match(self) -> bool:
        return all(r == self.expected for r in self.ranks.values())


def _rng(seed: int, *tag: int) -> np.random.Generator:
    return np.random.default_rng([seed, *tag])


def _independent(vectors: list[Sequence[int]], primes: Sequence[int] = PRIMES) -> bool:
    want = len(vectors)
    return all(field_rank(FieldMatrix.from_rows(vectors, p)) == want for p in primes)


def _sample_independent(rng: np.random.Generator, m: int, dim: int, *, first_nonzero: bool = False
                        ) -> tuple[list[list[int]], int]:
    """Draw m vectors in F^dim that are independent modulo every prime.

    ``first_nonzero`` additionally keeps the 0-th coordinate away from zero.
    """
    hi = min(PRIMES)
    for attempt in range(1, MAX_ATTEMPTS + 1):
        vecs = rng.integers(0, hi, size=(m, dim)).tolist()
        if first_nonzero and any(v[0] == 0 for v in vecs):
            continue
        if _independent(vecs):
            return vecs, attempt
    raise SamplingExhausted(f"no independent sample of {m} points in dimension {dim} "
                            f"after {MAX_ATTEMPTS} attempts")


def verify_lemma21(d: int, N: int, m: int, seed: int = 0) -> OracleResult:
    """Rank of 'm independent points are singular' against m(N+1)."""
    if d < 3:
        raise ValueError(f"need d >= 3, got d={d}")
    if not 1 <= m <= N + 1:
        raise ValueError(f"need 1 <= m <= N+1, got m={m}, N={N}")
    pts, attempts = _sample_independent(_rng(seed, 21, d, N, m), m, N + 1)
    sys = ConditionSystem(d, N)
    for t, pt in enumerate(pts):
        for j, row in enumerate(singular_point_rows(pt, d, sys=sys)):
            sys.add(row, ("point", t, "d/dx", j))
    return OracleResult("lemma21", {"d": d, "N": N, "m": m}, m * (N + 1), sys.ranks(),
                        seed=seed, attempts=attempts)


def coordinate_plane_rows(d: int, N: int, i: int, sys: ConditionSystem | None = None
                          ) -> list[tuple[np.ndarray, tuple]]:
    """Rows for f|_P = 0 and (df/dx_j)|_P = 0 (all j) with P = {x_{i+1} = ... = x_N = 0}.

    A polynomial vanishes identically on P exactly when its coefficients on
    monomials in x_0..x_i vanish, so each coefficient of each restricted
    polynomial gives one row. Derivatives along P (j <= i) are included and
    are redundant.
    """
    if sys is None:
        sys = ConditionSystem(d, N)
    out = []
    for nu in monomials(d, i):
        mono = nu + (0,) * (N - i)
        row = np.zeros(len(sys.columns), dtype=np.int64)
        row[sys.index[mono]] = 1
        out.append((row, ("f|P", mono)))
    for j in range(N + 1):
        for nu in monomials(d - 1, i):
            mono = list(nu + (0,) * (N - i))
            mono[j] += 1
            row = np.zeros(len(sys.columns), dtype=np.int64)
            # coefficient of x^nu in df/dx_j is (nu_j + 1) * c_{nu + e_j}
            row[sys.index[tuple(mono)]] = mono[j]
            out.append((row, ("df/dx|P", j, nu)))
    return out


def verify_prop11(d: int, N: int, i: int) -> OracleResult:
    """Rank of 'a fixed coordinate i-plane lies in Sing(f)'; deterministic."""
    if d < 3:
        raise ValueError(f"need d >= 3, got d={d}")
    if not 0 <= i <= N - 1:
        raise ValueError(f"need 0 <= i <= N-1, got i={i}, N={N}")
    sys = ConditionSystem(d, N)
    for row, tag in coordinate_plane_rows(d, N, i, sys):
        sys.add(row, tag)
    expected = binomial(d + i, d) + (N - i) * binomial(d + i - 1, d - 1)
    return OracleResult("prop11", {"d": d, "N": N, "i": i}, expected, sys.ranks())


@dataclass(frozen=True)
class SubspaceFamily:
    """Subspaces Theta(e) = {x_i = lambda[i-1][e_i] x_0, i = 1..r} of codimension r.

    Base forms are the coordinates l_0 = x_0, ..., l_r = x_r, so the common
    part Pi of the family is {x_0 = ... = x_r = 0}.
    """

    N: int
    r: int
    d: int
    lam: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.lam) != self.r or any(len(row) != self.d for row in self.lam):
            raise ValueError("lambda must be an r x d table")
        for row in self.lam:
            if row[0] != 0:
                raise ValueError("lambda_{i0} must be 0")
            if len(set(row)) != len(row):
                raise ValueError("lambda entries within a row must be distinct")

    @classmethod
    def sample(cls, N: int, r: int, d: int, rng: np.random.Generator) -> "SubspaceFamily":
        hi = min(PRIMES)
        rows = []
        for _ in range(r):
            while True:
                vals = [0] + rng.integers(1, hi, size=d - 1).tolist()
                if len(set(vals)) == d:
                    break
            rows.append(tuple(vals))
        return cls(N, r, d, tuple(rows))

    def indices(self) -> list[tuple[int, ...]]:
        """All e in Z^r_{>=0} with |e| <= d - 3, in lexicographic order."""
        return [e for e in itertools.product(range(self.d - 2), repeat=self.r) if sum(e) <= self.d - 3]

    def parametrization(self, e: Sequence[int]) -> np.ndarray:
        """(N+1) x (N-r+1) matrix M with Theta(e) = {M t}; t = (x_0, x_{r+1}, ..., x_N)."""
        M = np.zeros((self.N + 1, self.N - self.r + 1), dtype=object)
        M[0, 0] = 1
        for i in range(1, self.r + 1):
            M[i, 0] = self.lam[i - 1][e[i - 1]]
        for s in range(1, self.N - self.r + 1):
            M[self.r + s, s] = 1
        return M


def verify_prop22(d: int, N: int, r: int, m: int, seed: int = 0) -> OracleResult:
    """Joint rank of the singular-point conditions on every Theta(e), |e| <= d-3.

    Each Theta(e) gets m independent points off Pi; each point contributes the
    N - r + 1 partials of the restricted form. Expected rank m(N-r+1)|Delta|.
    """
    if d < 3:
        raise ValueError(f"need d >= 3, got d={d}")
    if not 1 <= r <= N - 1:
        raise ValueError(f"need 1 <= r <= N-1, got r={r}, N={N}")
    if not 1 <= m <= N - r + 1:
        raise ValueError(f"need 1 <= m <= N-r+1, got m={m}")
    rng = _rng(seed, 22, d, N, r, m)
    fam = SubspaceFamily.sample(N, r, d, rng)
    sys = ConditionSystem(d, N)
    attempts = 0
    for e in fam.indices():
        M = fam.parametrization(e)
        ts, k = _sample_independent(rng, m, N - r + 1, first_nonzero=True)
        attempts += k
        for t_idx, t in enumerate(ts):
            x = [int(v) for v in M.dot(np.array(t, dtype=object))]
            for a, row in enumerate(singular_point_rows(x, d, tangent=M, sys=sys)):
                sys.add(row, ("theta", e, "point", t_idx, "d/dt", a))
    n_simplex = simplex_point_count(r, d - 3)
    expected = m * (N - r + 1) * n_simplex
    return OracleResult("prop22", {"d": d, "N": N, "r": r, "m": m}, expected, sys.ranks(),
                        seed=seed, attempts=attempts,
                        details={"simplex_points": n_simplex, "lambda": [list(row) for row in fam.lam],
                                 "columns": len(sys.columns)})


def investigate_prop21(d: int, k: int, l: int, seed: int = 0) -> dict[str, Any]:
    """Run the subspace-family oracle in P^k under both readings of the subspace codimension.

    Reading r = l keeps m = k - l + 1 points per subspace; reading r = l + 1
    allows at most k - l points, and is skipped when l + 1 > k - 1. Never gates.
    """
    if d < 4 or not 1 <= l <= k - 1:
        raise ValueError(f"need d >= 4 and 1 <= l <= k-1, got d={d}, k={k}, l={l}")
    report: dict[str, Any] = {"d": d, "k": k, "l": l, "seed": seed,
                              "printed_bound": prop21_bound(d, k, l),
                              "printed_simplex_points": binomial(d + l - 2, l + 1),
                              "readings": {}}
    for label, r in (("r=l", l), ("r=l+1", l + 1)):
        if r > k - 1:
            report["readings"][label] = None
            continue
        m = min(k - l + 1, k - r + 1)
        res = verify_prop22(d, k, r, m, seed)
        report["readings"][label] = {
            "r": r, "m": m, "simplex_points": simplex_point_count(r, d - 3),
            "expected": res.expected, "ranks": res.ranks, "match": res.match,
            "points_bound": m * simplex_point_count(r, d - 3),
        }
    return report
