"""Counting shapes: the stacked, nested and cumulative set-number systems."""

import pytest
from hypothesis import given

from setfold import (EMPTY, NotAnOrdinal, alpha, assign, atom, beta,
                     canonicalize, cumulative_iterator, eta, is_ordinal,
                     nest_iterator, ord_compare, ordinal, ordinal_iterator,
                     ordinal_value, pair, psi, rho, set_of, sigma, singleton,
                     union)

from strategies import fin_sets


def test_first_few_ordinals_by_hand():
    assert ordinal(0) is EMPTY
    assert ordinal(1) == singleton(EMPTY)
    assert ordinal(2) == set_of(EMPTY, singleton(EMPTY))
    assert ordinal(3) == set_of(ordinal(0), ordinal(1), ordinal(2))
    assert sigma(ordinal(4)) is ordinal(5)


def test_each_ordinal_is_its_proper_subset_ordinals():
    for n in range(11):
        o = ordinal(n)
        assert list(o.children) == [ordinal(m) for m in range(n)]
        below = [p for m in range(11) if (p := ordinal(m)) != o
                 and p.is_subset(o)]
        assert canonicalize(below) == o
        at_most = [ordinal(m) for m in range(11) if ordinal(m).is_subset(o)]
        assert canonicalize(at_most) == sigma(o)


def test_is_ordinal_accepts_and_rejects():
    for n in range(8):
        assert is_ordinal(ordinal(n))
    assert not is_ordinal(singleton(singleton(EMPTY)))      # {{∅}}
    assert not is_ordinal(atom("x"))
    assert not is_ordinal(pair(EMPTY, EMPTY))
    assert not is_ordinal(set_of(ordinal(1)))               # missing ∅
    assert not is_ordinal(set_of(EMPTY, ordinal(2)))        # gap


def test_ordinal_value_round_trip():
    for n in range(10):
        assert ordinal_value(ordinal(n)) == n
    with pytest.raises(NotAnOrdinal):
        ordinal_value(singleton(singleton(EMPTY)))


def test_trichotomy_on_ordinal_pairs():
    for m in range(9):
        for n in range(9):
            assert ord_compare(ordinal(m), ordinal(n)) == (m > n) - (m < n)


@given(fin_sets)
def test_rho_reaches_a_same_size_ordinal(a):
    r = rho(a)
    assert is_ordinal(r)
    assert ordinal_value(r) == len(a.children)
    assert rho(r) is r


@given(fin_sets, fin_sets)
def test_rho_is_constant_exactly_on_sizes(a, b):
    assert (rho(a) == rho(b)) == (len(a.children) == len(b.children))


# -- the nested number system -------------------------------------------------

def test_eta_table_by_hand():
    assert eta(ordinal(0)) == EMPTY
    assert eta(ordinal(1)) == singleton(EMPTY)
    assert eta(ordinal(2)) == singleton(singleton(EMPTY))
    assert eta(ordinal(3)) == singleton(singleton(singleton(EMPTY)))
    assert eta(ordinal(4)) == beta(eta(ordinal(3)))


def test_eta_is_the_nest_assignment():
    for n in range(9):
        assert assign(nest_iterator(), ordinal(n)) == eta(ordinal(n))


def test_cumulative_states_collect_all_earlier_nests():
    for n in range(9):
        want = canonicalize(eta(ordinal(k)) for k in range(n + 1))
        got = assign(cumulative_iterator(), ordinal(n + 1))
        assert got == want


def test_cumulative_states_are_inclusion_comparable():
    states = [assign(cumulative_iterator(), ordinal(n)) for n in range(8)]
    for i, u in enumerate(states):
        for v in states[:i]:
            assert v.is_subset(u) and v != u


@given(fin_sets)
def test_psi_is_an_equinumerous_idempotent_retract(a):
    u = psi(a)
    assert len(u.children) == len(a.children)
    assert psi(u) == u


@given(fin_sets)
def test_psi_increment_is_disjoint(a):
    # adjoining one fresh element grows psi by exactly the nest value
    fresh = atom("~fresh")
    if fresh not in a:
        grown = psi(union(a, singleton(fresh)))
        nested = assign(nest_iterator(), a)
        assert nested in grown
        assert nested not in psi(a)
        assert psi(a).is_subset(grown)


def test_alpha_is_nest_plus_floor():
    for n in range(6):
        v = eta(ordinal(n))
        assert alpha(v) == union(singleton(EMPTY), beta(v))
