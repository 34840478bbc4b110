"""Partial orders, minimum chain covers, maximum antichains."""

import random
from itertools import combinations

import pytest

from setfold import (CapExceeded, CycleDetected, DilworthResult, Poset,
                     UnknownElement, atom, canonicalize, dilworth,
                     parse_poset, set_of, width_oracle)

from oracles import brute_width, is_antichain, is_chain


DIVISORS = """
elems: 1 2 3 6
1 < 2
1 < 3
2 < 6
3 < 6
"""


def _random_poset(rng, n, density=0.3):
    elems = [atom(str(i)) for i in range(n)]
    axis = elems[:]
    rng.shuffle(axis)
    rels = [(axis[i], axis[j]) for i, j in combinations(range(n), 2)
            if rng.random() < density]
    return Poset(elems, rels)


def test_closure_is_taken():
    p = parse_poset("elems: a b c\na < b\nb < c")
    assert p.leq(atom("a"), atom("c"))
    assert not p.leq(atom("c"), atom("a"))
    assert p.comparable(atom("a"), atom("c"))


def test_cycles_are_rejected():
    with pytest.raises(CycleDetected):
        parse_poset("elems: a b\na < b\nb < a")
    with pytest.raises(CycleDetected):
        parse_poset("elems: a b c\na < b\nb < c\nc < a")


def test_foreign_elements_are_rejected():
    with pytest.raises(UnknownElement):
        Poset([atom("a")], [(atom("a"), atom("zzz"))])
    p = parse_poset(DIVISORS)
    with pytest.raises(UnknownElement):
        p.leq(atom("1"), atom("7"))


def test_chain_and_antichain_predicates():
    p = parse_poset(DIVISORS)
    assert p.is_chain([atom("1"), atom("2"), atom("6")])
    assert not p.is_chain([atom("2"), atom("3")])
    assert p.is_antichain([atom("2"), atom("3")])
    assert not p.is_antichain([atom("1"), atom("6")])


def test_maximal_elements():
    p = parse_poset(DIVISORS)
    assert p.maximal_elements() == set_of(atom("6"))


def test_divisor_fixture_decomposition():
    p = parse_poset(DIVISORS)
    r = dilworth(p)
    assert r.validate(p)
    assert len(r.chains) == 2
    assert r.antichain == set_of(atom("2"), atom("3"))


def test_antichain_fixture():
    p = Poset([atom(str(i)) for i in range(5)], [])
    r = dilworth(p)
    assert r.validate(p)
    assert len(r.chains) == 5
    assert all(len(c) == 1 for c in r.chains)


def test_chain_fixture():
    elems = [atom(str(i)) for i in range(6)]
    p = Poset(elems, [(elems[i], elems[i + 1]) for i in range(5)])
    r = dilworth(p)
    assert r.validate(p)
    assert len(r.chains) == 1
    assert list(r.chains[0]) == elems


def test_grid_fixture():
    # 3×3 grid under coordinatewise order: width 3
    elems = {(i, j): atom(f"g{i}{j}") for i in range(3) for j in range(3)}
    rels = []
    for (i, j), e in elems.items():
        if i + 1 < 3:
            rels.append((e, elems[(i + 1, j)]))
        if j + 1 < 3:
            rels.append((e, elems[(i, j + 1)]))
    p = Poset(list(elems.values()), rels)
    r = dilworth(p)
    assert r.validate(p)
    assert len(r.chains) == 3


def test_boolean_cube_width():
    # subsets of a 3-set by inclusion: width C(3,1) = 3... via sets as atoms
    subsets = ["", "a", "b", "c", "ab", "ac", "bc", "abc"]
    elems = {s: atom("e" + (s or "0")) for s in subsets}
    rels = [(elems[s], elems[t]) for s in subsets for t in subsets
            if s != t and set(s) <= set(t)]
    p = Poset(list(elems.values()), rels)
    r = dilworth(p)
    assert r.validate(p)
    assert len(r.chains) == 3 == len(width_oracle(p).children)


def test_validate_is_not_a_rubber_stamp():
    p = parse_poset(DIVISORS)
    r = dilworth(p)
    fake = DilworthResult(chains=r.chains,
                          antichain=set_of(atom("1"), atom("6")))
    assert not fake.validate(p)    # that "antichain" is a chain
    short = DilworthResult(chains=r.chains[:1], antichain=r.antichain)
    assert not short.validate(p)   # not a partition


def test_random_posets_meet_the_oracle():
    rng = random.Random(18)
    for trial in range(150):
        p = _random_poset(rng, rng.randint(1, 9))
        r = dilworth(p)
        assert r.validate(p)
        assert len(r.chains) == brute_width(
            list(p.carrier), p.leq), f"trial {trial}"
        for chain in r.chains:
            assert is_chain(chain, p.leq)
        assert is_antichain(list(r.antichain), p.leq)


def test_width_oracle_cap():
    p = _random_poset(random.Random(0), 9)
    with pytest.raises(CapExceeded):
        width_oracle(p, cap=5)


def test_restrict():
    p = parse_poset(DIVISORS)
    sub = p.restrict(canonicalize([atom("1"), atom("2"), atom("6")]))
    assert len(sub) == 3
    assert sub.is_chain([atom("1"), atom("2"), atom("6")])
