"""Exact integer combinatorics and dense linear algebra over prime fields."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

DEFAULT_PRIME = 2**31 - 1
ALTERNATE_PRIME = 2**31 - 19
PRIMES = (DEFAULT_PRIME, ALTERNATE_PRIME)


def binomial(n: int, k: int) -> int:
    """Return C(n, k), with C(n, k) = 0 whenever k < 0, n < 0 or k > n.

    The vanishing convention keeps expressions such as C(d - 2q + i + 1, i + 1)
    well defined at the edge of their parameter ranges.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def simplex_point_count(r: int, a: int) -> int:
    """Number of lattice points e in Z^r with e_i >= 0 and sum(e) <= a."""
    if r <= 0:
        raise ValueError(f"simplex dimension must be positive, got r={r}")
    if a < 0:
        raise ValueError(f"simplex size must be non-negative, got a={a}")
    return binomial(a + r, r)


def inv_mod(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise ZeroDivisionError("zero has no inverse modulo p")
    return pow(x, -1, p)


@dataclass(frozen=True)
class FieldMatrix:
    """Dense matrix over F_p; entries are stored reduced into [0, p).

    The modulus must stay below 2**31 so that a product of two residues fits
    in a signed 64-bit word.
    """

    entries: np.ndarray
    modulus: int = DEFAULT_PRIME

    def __post_init__(self):
        if not 2 <= self.modulus < 2**31:
            raise ValueError(f"modulus {self.modulus} outside [2, 2**31)")
        arr = np.asarray(self.entries)
        if arr.size == 0 and arr.ndim != 2:
            arr = np.zeros((0, 0), dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-d array, got shape {arr.shape}")
        if arr.dtype == object:
            # arbitrary-precision entries: reduce before narrowing to int64
            reduced = [int(v) % self.modulus for v in arr.ravel()]
            arr = np.array(reduced, dtype=np.int64).reshape(arr.shape)
        else:
            arr = np.mod(arr.astype(np.int64), self.modulus)
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @classmethod
    def from_rows(cls, rows, modulus: int = DEFAULT_PRIME) -> "FieldMatrix":
        rows = [[int(v) % modulus for v in row] for row in rows]
        return cls(np.array(rows, dtype=np.int64), modulus)

    @classmethod
    def zeros(cls, rows: int, cols: int, modulus: int = DEFAULT_PRIME) -> "FieldMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), modulus)

    @classmethod
    def identity(cls, n: int, modulus: int = DEFAULT_PRIME) -> "FieldMatrix":
        return cls(np.eye(n, dtype=np.int64), modulus)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()


def field_rank(m: FieldMatrix) -> int:
    """Rank over F_p by Gaussian elimination, pivoting on the first nonzero entry."""
    p = m.modulus
    a = m.entries.copy()
    n_rows, n_cols = a.shape
    rank = 0
    for c in range(n_cols):
        if rank == n_rows:
            break
        nz = np.flatnonzero(a[rank:, c])
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        a[rank] = (a[rank] * inv_mod(int(a[rank, c]), p)) % p
        below = a[rank + 1:, c]
        hit = np.flatnonzero(below)
        if hit.size:
            idx = rank + 1 + hit
            # residues < 2**31, so the outer product stays below 2**62
            a[idx] = (a[idx] - np.outer(a[idx, c], a[rank])) % p
        rank += 1
    return rank
