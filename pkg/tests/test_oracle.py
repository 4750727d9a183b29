import itertools
from math import comb

import numpy as np
import pytest
import sympy as sp

from hypercodim import oracle
from hypercodim.exactmath import ALTERNATE_PRIME, DEFAULT_PRIME, simplex_point_count
from hypercodim.oracle import (
    ConditionSystem,
    SamplingExhausted,
    SubspaceFamily,
    coordinate_plane_rows,
    investigate_prop21,
    monomials,
    singular_point_rows,
    verify_lemma21,
    verify_prop11,
    verify_prop22,
)


def test_monomials_examples():
    assert monomials(2, 1) == [(2, 0), (1, 1), (0, 2)]
    assert len(monomials(4, 3)) == 35
    assert monomials(0, 5) == [(0,) * 6]


@pytest.mark.parametrize("d,n", [(3, 2), (4, 3), (5, 4), (2, 6)])
def test_monomials_are_all_exponents_in_lex_order(d, n):
    brute = sorted((e for e in itertools.product(range(d + 1), repeat=n + 1) if sum(e) == d), reverse=True)
    assert monomials(d, n) == brute
    assert len(brute) == comb(d + n, n)


def test_singular_rows_at_coordinate_point():
    d, N = 4, 3
    sys = ConditionSystem(d, N)
    rows = singular_point_rows((1, 0, 0, 0), d, sys=sys)
    assert len(rows) == N + 1
    supports = [{sys.columns[j]: int(v) for j, v in enumerate(row) if v} for row in rows]
    assert supports[0] == {(4, 0, 0, 0): 4}
    for j in range(1, N + 1):
        mono = [3, 0, 0, 0]
        mono[j] = 1
        assert supports[j] == {tuple(mono): 1}


def test_single_generic_point_has_full_rank():
    for d, N in [(3, 2), (4, 3), (5, 4)]:
        r = verify_lemma21(d, N, 1, seed=11)
        assert r.ranks == {DEFAULT_PRIME: N + 1, ALTERNATE_PRIME: N + 1}


def _sympy_restricted_rows(d, N, M, t0):
    """Independent construction: substitute x = M t symbolically and differentiate in t."""
    xs = sp.symbols(f"x0:{N + 1}")
    ts = sp.symbols(f"t0:{M.shape[1]}")
    cols = monomials(d, N)
    cs = sp.symbols(f"c0:{len(cols)}")
    g = sum(c * sp.prod([x**e for x, e in zip(xs, mono)]) for c, mono in zip(cs, cols))
    sub = {xs[j]: sum(int(M[j, a]) * ts[a] for a in range(M.shape[1])) for j in range(N + 1)}
    g_t = sp.expand(g.subs(sub, simultaneous=True))
    at = dict(zip(ts, t0))
    rows = []
    for a in range(len(ts)):
        expr = sp.expand(sp.diff(g_t, ts[a]).subs(at))
        rows.append([int(expr.coeff(c)) for c in cs])
    return rows


def test_restricted_rows_match_symbolic_substitution():
    d, N = 4, 3
    fam = SubspaceFamily(N=N, r=1, d=d, lam=((0, 5, -3, 7),))
    for e in fam.indices():
        M = fam.parametrization(e)
        t0 = (2, -1, 3)
        x = [int(v) for v in M.dot(np.array(t0, dtype=object))]
        ours = [[int(v) for v in row] for row in singular_point_rows(x, d, tangent=M)]
        assert ours == _sympy_restricted_rows(d, N, M, t0)


def test_ambient_rows_match_symbolic_derivatives():
    d, N = 3, 2
    M = np.eye(N + 1, dtype=object)
    p = (3, -2, 5)
    ours = [[int(v) for v in row] for row in singular_point_rows(p, d)]
    assert ours == _sympy_restricted_rows(d, N, M, p)


def test_parametrization_lies_on_theta_and_off_pi():
    rng = np.random.default_rng(3)
    fam = SubspaceFamily.sample(5, 2, 6, rng)
    for e in fam.indices():
        M = fam.parametrization(e)
        t = np.array([4, 1, 2, 9], dtype=object)
        x = M.dot(t)
        for i in range(1, 3):
            assert x[i] - fam.lam[i - 1][e[i - 1]] * x[0] == 0
        assert x[0] != 0


def test_subspace_family_indices_count_simplex_points():
    fam = SubspaceFamily.sample(5, 3, 6, np.random.default_rng(0))
    assert len(fam.indices()) == simplex_point_count(3, 3)
    assert all(sum(e) <= 3 for e in fam.indices())


@pytest.mark.parametrize("lam", [((1, 2, 3, 4),), ((0, 2, 2, 4),), ((0, 1, 2),)])
def test_subspace_family_validation(lam):
    with pytest.raises(ValueError):
        SubspaceFamily(N=3, r=1, d=4, lam=lam)


@pytest.mark.parametrize("d,N,m,expected", [(3, 3, 2, 8), (3, 3, 4, 16), (4, 5, 6, 36)])
def test_verify_lemma21_examples(d, N, m, expected):
    r = verify_lemma21(d, N, m, seed=42)
    assert r.expected == expected and r.rank == expected and r.match and r.primes_agree


def test_verify_lemma21_scan():
    for d in range(3, 6):
        for N in range(1, 7):
            for m in range(1, N + 2):
                r = verify_lemma21(d, N, m, seed=d * 100 + N)
                assert r.match and r.primes_agree, (d, N, m, r.ranks)
                assert r.rank <= min(m * (N + 1), comb(d + N, N))


@pytest.mark.parametrize("d,N,i,expected", [(4, 3, 1, 13), (3, 7, 0, 8), (5, 4, 2, 51)])
def test_verify_prop11_examples(d, N, i, expected):
    r = verify_prop11(d, N, i)
    assert r.expected == expected and r.match and r.seed is None


def test_verify_prop11_scan_and_determinism():
    for d in range(3, 7):
        for N in range(1, 6):
            for i in range(0, N):
                r = verify_prop11(d, N, i)
                assert r.match and r.primes_agree, (d, N, i)
                assert verify_prop11(d, N, i) == r


def test_coordinate_plane_rows_include_redundant_tangential_derivatives():
    rows = coordinate_plane_rows(4, 3, 1)
    # f|P rows + (N+1) derivative blocks; only N - i of those blocks are new
    assert len(rows) == comb(5, 1) + 4 * comb(4, 1)
    assert verify_prop11(4, 3, 1).rank == 13 < len(rows)


@pytest.mark.parametrize("d,N,r,m,expected", [(5, 3, 1, 2, 18), (4, 4, 2, 2, 18), (3, 3, 1, 1, 3)])
def test_verify_prop22_examples(d, N, r, m, expected):
    res = verify_prop22(d, N, r, m, seed=7)
    assert res.expected == expected and res.match and res.primes_agree


def test_verify_prop22_scan_small():
    for d in range(3, 6):
        for N in range(2, 5):
            for r in range(1, N):
                for m in range(1, N - r + 2):
                    res = verify_prop22(d, N, r, m, seed=1)
                    assert res.match and res.primes_agree, (d, N, r, m, res.ranks)


def test_match_flags_stable_across_seeds():
    for args in [(4, 3, 1, 2), (5, 4, 2, 2), (6, 4, 3, 1)]:
        assert {verify_prop22(*args, seed=s).match for s in range(5)} == {True}
    assert {verify_lemma21(4, 4, 3, seed=s).match for s in range(5)} == {True}


def test_results_embed_seed_and_are_reproducible():
    a, b = verify_prop22(5, 3, 1, 2, seed=9), verify_prop22(5, 3, 1, 2, seed=9)
    assert a == b and a.seed == 9
    assert a.details["lambda"][0][0] == 0


@pytest.mark.parametrize("call", [
    lambda: verify_lemma21(2, 3, 1), lambda: verify_lemma21(3, 3, 5),
    lambda: verify_prop11(3, 3, 3), lambda: verify_prop22(4, 3, 3, 1),
    lambda: verify_prop22(4, 3, 1, 4), lambda: investigate_prop21(4, 3, 3),
])
def test_oracle_domain_guards(call):
    with pytest.raises(ValueError):
        call()


def test_sampling_exhaustion(monkeypatch):
    monkeypatch.setattr(oracle, "_independent", lambda vectors, primes=None: False)
    with pytest.raises(SamplingExhausted):
        verify_lemma21(3, 3, 2, seed=0)


def test_investigate_prop21_reports_both_readings():
    rep = investigate_prop21(5, 4, 2, seed=0)
    assert rep["printed_bound"] == 3 * comb(5, 3) == 30
    low, high = rep["readings"]["r=l"], rep["readings"]["r=l+1"]
    assert (low["r"], low["m"], low["simplex_points"]) == (2, 3, comb(4, 2))
    assert (high["r"], high["m"], high["simplex_points"]) == (3, 2, comb(5, 3))
    assert low["match"] and high["match"]
    assert rep["printed_simplex_points"] == high["simplex_points"]


def test_investigate_prop21_skips_impossible_reading():
    rep = investigate_prop21(4, 3, 2, seed=0)
    assert rep["readings"]["r=l+1"] is None
    assert rep["readings"]["r=l"]["match"]
    for args in [(4, 3, 1), (6, 5, 3)]:
        rep = investigate_prop21(*args, seed=0)
        assert all(v is None or v["match"] for v in rep["readings"].values())
