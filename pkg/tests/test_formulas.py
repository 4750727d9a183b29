from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypercodim.formulas import (
    BoundValue,
    Params,
    bound_general,
    codim_linear_stratum,
    codim_prop12i,
    codim_prop12ii,
    codim_prop12iii,
    delta_q,
    e_q,
    lemma11_argmin,
    prop12iii_branches,
    prop12iii_q_expression,
    prop21_bound,
    tau,
    vanishing_bound,
)


def C(n, k):
    return comb(n, k) if 0 <= k <= n else 0


@pytest.mark.parametrize("args,expected", [((1, 1, 1), 2), ((3, 7, 3), 22), ((5, 10, 2), 51)])
def test_tau_examples(args, expected):
    assert tau(*args) == expected


@given(st.integers(1, 30), st.integers(1, 30), st.integers(1, 30))
def test_tau_is_the_max_of_its_branches(a, b, c):
    t = tau(a, b, c)
    assert t >= C(a + c, c) and t >= a * b + 1
    assert t in (C(a + c, c), a * b + 1)


@pytest.mark.parametrize("args", [(0, 1, 1), (1, 0, 1), (1, 1, 0), (-2, 3, 3)])
def test_tau_rejects_non_positive(args):
    with pytest.raises(ValueError):
        tau(*args)


@pytest.mark.parametrize("d,N,i,expected", [(4, 3, 1, 9), (4, 7, 3, 99), (14, 7, 3, 2904)])
def test_codim_linear_stratum(d, N, i, expected):
    assert codim_linear_stratum(Params(d, N), i) == expected


@pytest.mark.parametrize("i", [-1, 7])
def test_codim_linear_stratum_domain(i):
    with pytest.raises(ValueError):
        codim_linear_stratum(Params(4, 7), i)


def test_e_q_examples():
    assert e_q(8, 2, 2) == 165 - 35 - 10 == 120
    assert e_q(8, 2, 3) == 165 - 10 - 20 == 135
    assert e_q(6, 2, 3) == 63
    assert e_q(6, 2, 2) == 64
    assert e_q(6, 2, 3) < e_q(6, 2, 2)


@pytest.mark.parametrize("q", [1, 5])
def test_e_q_domain(q):
    with pytest.raises(ValueError):
        e_q(8, 2, q)


def test_lemma11_argmin_examples():
    assert lemma11_argmin(8, 2) == (2, 120)
    assert lemma11_argmin(6, 2) == (3, 63)
    assert lemma11_argmin(4, 1) == (2, e_q(4, 1, 2))


def test_lemma11_argmin_full_scan():
    for d in range(4, 61):
        for i in range(0, 13):
            values = {q: e_q(d, i, q) for q in range(2, d // 2 + 1)}
            brute = min(values, key=lambda q: (values[q], q))
            got = lemma11_argmin(d, i)
            assert got == (brute, values[brute])
            if d != 6:
                assert got.q_min == 2


def test_lemma11_sextic_argmin_by_i():
    # q = 3 wins from i = 2 on; the two smallest i still favour q = 2
    assert [lemma11_argmin(6, i).q_min for i in range(13)] == [2, 2] + [3] * 11


def test_delta_q_examples():
    assert delta_q(5, 1, 2) == C(6, 2) - C(4, 2) == 9
    assert delta_q(5, 1, 4) == C(6, 2) - C(2, 2) == 14
    assert delta_q(5, 1, 2) < delta_q(5, 1, 3) < delta_q(5, 1, 4)


def test_delta_q_strictly_increasing():
    for d in range(4, 41):
        for i in range(0, 11):
            vals = [delta_q(d, i, q) for q in range(2, d)]
            assert all(a < b for a, b in zip(vals, vals[1:])), (d, i)


def test_delta_q_domain():
    with pytest.raises(ValueError):
        delta_q(5, 1, 5)


def test_codim_prop12i_examples():
    # 70 - 1 - 15 + 3 * (35 - 5)
    assert codim_prop12i(Params(4, 7), 3) == 144
    assert codim_prop12i(Params(5, 3), 0) == 6 - 2 - 3 + 2 * (5 - 3)
    # minus the (i+2)(N-i-1) plane family gives a2a at (4, 7)
    assert codim_prop12i(Params(4, 7), 3) - 5 * 3 == 129


def test_codim_prop12i_is_e2_plus_derivative_conditions():
    for d in range(4, 20):
        for N in range(2, 9):
            for i in range(0, N):
                if d == 6 and i == N - 1:
                    continue
                assert codim_prop12i(Params(d, N), i) == e_q(d, i, 2) + (N - i - 1) * delta_q(d, i, 2)


def test_codim_prop12i_rejects_sextic_top_case():
    with pytest.raises(ValueError, match="prop12ii"):
        codim_prop12i(Params(6, 7), 6)
    assert codim_prop12i(Params(6, 7), 5) > 0


@pytest.mark.parametrize("N,expected", [(7, 1595), (2, 17), (3, 63)])
def test_codim_prop12ii(N, expected):
    assert codim_prop12ii(N) == expected


def test_codim_prop12iii_examples():
    assert prop12iii_branches(Params(4, 7), 3) == (145, 138)
    assert codim_prop12iii(Params(4, 7), 3) == 138
    assert prop12iii_branches(Params(5, 4), 1) == (33, 35)
    assert codim_prop12iii(Params(5, 4), 1) == 33


def test_codim_prop12iii_degenerate_second_branch():
    for d in range(4, 12):
        for N in range(2, 9):
            i = N - 2
            assert prop12iii_branches(Params(d, N), i)[1] == C(d + i + 1, i + 1)


def test_codim_prop12iii_domain():
    with pytest.raises(ValueError):
        codim_prop12iii(Params(4, 7), 6)


def test_prop12iii_q_expression_examples():
    p = Params(4, 3)
    assert prop12iii_q_expression(p, 0, 2) == 5 + 2 * (4 - 2) - 3 == 6
    assert prop12iii_q_expression(p, 0, 3) == 5 + 2 * (4 - 1) - 4 == 7
    scan = [prop12iii_q_expression(Params(7, 5), 1, q) for q in range(2, 7)]
    assert min(scan) == min(scan[0], scan[-1])
    with pytest.raises(ValueError):
        prop12iii_q_expression(p, 0, 4)


def test_prop12iii_branch_one_is_the_q2_expression():
    for d in range(4, 15):
        for N in range(2, 9):
            for i in range(0, N - 1):
                p = Params(d, N)
                assert prop12iii_branches(p, i)[0] == prop12iii_q_expression(p, i, 2)


def test_prop21_bound():
    assert prop21_bound(4, 6, 2) == 5 * C(4, 3) == 20
    assert prop21_bound(4, 7, 3) == 25
    for d in range(3, 9):
        for k in range(0, 8):
            assert prop21_bound(d, k, k) == C(d + k - 2, k + 1)


@pytest.mark.parametrize("args,expected", [((4, 6, 3), 20), ((4, 7, 3), 22), ((6, 5, 2), 26)])
def test_vanishing_bound(args, expected):
    assert vanishing_bound(*args) == expected


def test_vanishing_bound_equals_tau():
    for d in range(2, 12):
        for k in range(1, 10):
            for i in range(1, 8):
                assert vanishing_bound(d, k, i) == tau(d - 1, k, i)
    assert vanishing_bound(4, 3, 0) == 10


def test_bound_general_examples():
    p = Params(4, 7)
    b = bound_general(p, 3, 5, 3)
    assert b == BoundValue(3 * C(5, 4) + 2 * C(6, 3), "thm1.1") and b.value == 55
    assert b.value - 6 * 2 == 43
    b = bound_general(p, 3, 7, 3)
    assert b.value == 25 and b.source == "thm1.1"
    b = bound_general(p, 3, 5, 5)
    assert b.value == 126 and b.source == "thm1.3"
    assert b.value - 12 == 114


def test_bound_general_branch_tags():
    assert bound_general(Params(5, 9), 4, 7, 6).source == "thm1.2i"
    assert bound_general(Params(6, 9), 4, 7, 6).source == "thm1.2ii-d6"
    b = bound_general(Params(6, 7), 3, 5, 4)
    assert b.value == C(11, 5) - C(8, 5) + (7 + 3 - 10 + 1) * tau(5, 5, 3)


@pytest.mark.parametrize("ikl,needle", [((3, 6, 5), "N\\+i >= k\\+l"), ((0, 3, 2), "i >= 1"),
                                        ((3, 5, 2), "i <= l"), ((3, 4, 5), "l <= k"), ((3, 8, 3), "k <= N")])
def test_bound_general_rejects_inadmissible(ikl, needle):
    with pytest.raises(ValueError, match=needle):
        bound_general(Params(4, 7), *ikl)


def test_bound_general_zero_multiplier_ignores_tau():
    for d in range(4, 15):
        for N in range(4, 12):
            p = Params(d, N)
            for i in range(1, N + 1):
                for k in range(i, N + 1):
                    for l in range(i, k + 1):
                        if N + i != k + l:
                            continue
                        base = bound_general(p, i, k, l).value
                        for t in (1, 7, 10**6):
                            assert bound_general(p, i, k, l, tau_override=t).value == base


def test_params_validation():
    with pytest.raises(ValueError):
        Params(0, 7)
    with pytest.raises(ValueError):
        Params(4, 0)
