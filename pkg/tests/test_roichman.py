import pytest
from hypothesis import given, settings, strategies as st

from oracles import (
    descents_brute,
    f_brute,
    hecke_brute,
    restrict,
    roichman_full_tableau,
    standard_tableaux_brute,
)
from snchar.murnaghan_nakayama import mn_char
from snchar.partitions import border_set, enumerate_partitions
from snchar.roichman import (
    QPolynomial,
    d_lambda,
    descent_set,
    enumerate_standard_tableaux,
    f1,
    format_tableau,
    hecke_char_poly,
    is_standard,
    parse_tableau,
    roi_char,
    roi_char_instrumented,
    roi_char_naive,
    roi_invocation_count,
    tableau_factors,
)


def ones(n):
    return (1,) * n


def test_descent_set_examples():
    t = parse_tableau("1,2,4,5,8/3,6/7,9")
    assert is_standard(t)
    assert descent_set(t) == {2, 5, 6, 8}
    assert descent_set(((1, 2, 3, 4),)) == set()
    assert descent_set(((1,), (2,), (3,), (4,))) == {1, 2, 3}


def test_tableau_format_roundtrip():
    t = ((1, 2, 4, 5, 8), (3, 6), (7, 9))
    assert format_tableau(t) == "1,2,4,5,8/3,6/7,9"
    assert parse_tableau(format_tableau(t)) == t


def test_f1_worked_example():
    b = border_set((3, 1))
    table = {
        "1,2/3/4": [0, -1, 1],
        "1,3/2/4": [-1, 1, 1],
        "1,4/2/3": [-1, -1, 1],
    }
    for text, expected in table.items():
        t = parse_tableau(text)
        assert tableau_factors(t, (3, 1)) == expected
        d = descent_set(t)
        assert [f1(i, b, i in d, i + 1 in d) for i in (1, 2, 3)] == expected
    # an index in B always gives 1
    assert f1(3, b, True, True) == 1


def test_standard_tableaux():
    assert enumerate_standard_tableaux((2, 1, 1)) == [
        ((1, 2), (3,), (4,)), ((1, 3), (2,), (4,)), ((1, 4), (2,), (3,))]
    assert len(enumerate_standard_tableaux((5,))) == 1
    assert len(enumerate_standard_tableaux((2, 2))) == 2
    for n in range(1, 7):
        for lam in enumerate_partitions(n):
            tabs = enumerate_standard_tableaux(lam)
            assert set(tabs) == standard_tableaux_brute(lam)
            assert len(tabs) == d_lambda(lam)
            assert all(is_standard(t) for t in tabs)


def test_descent_set_agrees_with_row_rule():
    for lam in enumerate_partitions(7):
        for t in enumerate_standard_tableaux(lam):
            rows = {x: r for r, row in enumerate(t) for x in row}
            assert descent_set(t) == {i for i in range(1, 7) if rows[i + 1] > rows[i]}
            assert descent_set(t) == descents_brute(t)


def test_worked_example_value_and_count():
    res = roi_char_instrumented((2, 1, 1), (3, 1))
    assert res.value == 0
    assert res.invocations == 8
    assert roi_char_naive((2, 1, 1), (3, 1)) == 0


def test_trivial_shape():
    for n in range(1, 7):
        for mu in enumerate_partitions(n):
            assert roi_char((n,), mu) == 1
    assert roi_char_naive((1,), (1,)) == 1
    assert roi_char((), ()) == 1


def test_cross_rule_example():
    assert roi_char((5, 4, 2, 1), (4, 3, 2, 2, 1)) == 0


@pytest.mark.parametrize("lam, mu, q", [
    ((2, 1, 1), (3, 1), 8),
    ((3, 2, 1), ones(6), 48),
    ((4, 2, 1, 1), (4, 2, 1, 1), 97),
    ((4, 2, 1, 1), ones(8), 276),
])
def test_published_counts(lam, mu, q):
    assert roi_char_instrumented(lam, mu).invocations == q
    assert roi_invocation_count(lam, mu) == q


def test_weight_mismatch():
    with pytest.raises(ValueError):
        roi_char((2, 1), (2,))


def test_prefix_sufficiency():
    for n in range(2, 9):
        for lam in enumerate_partitions(n):
            for mu in enumerate_partitions(n):
                for t in enumerate_standard_tableaux(lam):
                    for i in range(1, n):
                        assert f_brute(i, t, mu) == f_brute(i, restrict(t, min(i + 2, n)), mu)


def test_full_tableau_reference():
    for n in range(1, 8):
        parts = enumerate_partitions(n)
        for lam in parts:
            for mu in parts:
                value, calls = roichman_full_tableau(lam, mu)
                res = roi_char_instrumented(lam, mu)
                assert (res.value, res.invocations) == (value, calls)


def test_count_matches_run():
    for n in range(1, 9):
        parts = enumerate_partitions(n)
        for lam in parts:
            for mu in parts:
                assert roi_invocation_count(lam, mu) == roi_char_instrumented(lam, mu).invocations
    for n in range(9, 11):
        for lam in enumerate_partitions(n):
            assert roi_invocation_count(lam, ones(n)) == roi_char_instrumented(lam, ones(n)).invocations


def test_counter_domination():
    for n in range(1, 11):
        parts = enumerate_partitions(n)
        for lam in parts:
            top = roi_invocation_count(lam, ones(n))
            for mu in parts:
                assert roi_invocation_count(lam, mu) <= top


def test_tableau_count_sandwich_small():
    for n in range(1, 11):
        for lam in enumerate_partitions(n):
            q = roi_char_instrumented(lam, ones(n)).invocations
            d = d_lambda(lam)
            assert d <= q <= n * d + 1
    assert roi_char_instrumented((2, 1, 1), ones(4)).invocations in range(3, 14)
    for n in range(1, 8):
        assert roi_char_instrumented((n,), ones(n)).invocations == n + 1


def test_hecke_examples():
    assert hecke_char_poly((2, 1, 1), (3, 1)) == QPolynomial((1, -1))
    assert str(hecke_char_poly((2, 1, 1), (3, 1))) == "1 - q"
    for n in range(1, 8):
        for mu in enumerate_partitions(n):
            k = len(mu)
            assert hecke_char_poly((n,), mu) == QPolynomial((0,) * (n - k) + (1,))


def test_hecke_against_tableau_products():
    for n in range(1, 8):
        parts = enumerate_partitions(n)
        for lam in parts:
            for mu in parts:
                assert hecke_char_poly(lam, mu) == QPolynomial(hecke_brute(lam, mu))


def test_hecke_identity_class_is_degree():
    for n in range(1, 9):
        for lam in enumerate_partitions(n):
            assert hecke_char_poly(lam, ones(n)) == QPolynomial((d_lambda(lam),))


def test_qpolynomial_rendering():
    assert str(QPolynomial(())) == "0"
    assert str(QPolynomial((0, 0, 1))) == "q^2"
    assert str(QPolynomial((-2, 0, 3, -1))) == "-2 + 3*q^2 - q^3"
    assert str(QPolynomial((0, -1))) == "-q"
    assert QPolynomial((1, -1, 2))(2) == 7
    assert QPolynomial((1, 0, 0)).degree == 0


@st.composite
def pair(draw, lo=9, hi=12):
    n = draw(st.integers(lo, hi))
    parts = enumerate_partitions(n)
    return draw(st.sampled_from(parts)), draw(st.sampled_from(parts))


@settings(max_examples=100, deadline=None, derandomize=True)
@given(pair(9, 14))
def test_random_pairs_agree(lam_mu):
    lam, mu = lam_mu
    assert roi_char(lam, mu) == mn_char(lam, mu)
