"""Maps between finite sets, and the size comparison they induce."""

from itertools import product as iproduct

import pytest
from hypothesis import given

from setfold import (EMPTY, Equinumerous, LeftIntoRight, Mapping, NotAGraph,
                     NotSurjective, RightIntoLeft, atom, canonicalize,
                     compare, compose, graph_to_mapping, identity, pair,
                     section, set_of)

from strategies import fin_sets

A = set_of(atom("a"), atom("b"), atom("c"))
B = set_of(atom("x"), atom("y"))


def test_totality_is_enforced():
    with pytest.raises(NotAGraph):
        Mapping(A, B, [(atom("a"), atom("x"))])
    with pytest.raises(NotAGraph):
        Mapping(B, B, [(atom("x"), atom("x")), (atom("y"), atom("q"))])


def test_graph_to_mapping_rejects_double_images():
    graph = set_of(pair(atom("x"), atom("x")), pair(atom("x"), atom("y")),
                   pair(atom("y"), atom("y")))
    with pytest.raises(NotAGraph):
        graph_to_mapping(B, B, graph)


def test_injective_surjective_bijective():
    f = Mapping(A, B, [(atom("a"), atom("x")), (atom("b"), atom("x")),
                       (atom("c"), atom("y"))])
    assert f.is_surjective() and not f.is_injective()
    g = Mapping(B, A, [(atom("x"), atom("a")), (atom("y"), atom("c"))])
    assert g.is_injective() and not g.is_surjective()
    assert identity(A).is_bijective()


def test_compose_and_inverse():
    f = Mapping(B, B, [(atom("x"), atom("y")), (atom("y"), atom("x"))])
    assert compose(f, f) == identity(B)
    assert f.inverse() == f
    assert f.compose(identity(B)) == f
    q = identity(A)
    with pytest.raises(ValueError):
        compose(f, q)  # codomain of q is not the domain of f


def test_image_and_restrict():
    f = Mapping(A, B, [(atom("a"), atom("x")), (atom("b"), atom("x")),
                       (atom("c"), atom("y"))])
    assert f.image() == B
    sub = set_of(atom("a"), atom("b"))
    assert f.restrict(sub).image() == set_of(atom("x"))


def test_section_picks_canonical_preimages():
    f = Mapping(A, B, [(atom("a"), atom("x")), (atom("b"), atom("x")),
                       (atom("c"), atom("y"))])
    s = section(f)
    assert s(atom("x")) == atom("a")  # least of the two preimages
    for y in B:
        assert f(s(y)) == y
    with pytest.raises(NotSurjective):
        section(Mapping(B, A, [(atom("x"), atom("a")), (atom("y"), atom("b"))]))


def test_graph_to_mapping_rejects_non_pairs():
    with pytest.raises(NotAGraph):
        graph_to_mapping(A, B, set_of(atom("a")))


# Self-maps of a finite set: one-to-one and onto coincide.  Exhaustive
# over every transition table on up to three points.
def test_injective_iff_surjective_exhaustive():
    for n in range(1, 4):
        xs = [atom(str(i)) for i in range(n)]
        carrier = canonicalize(xs)
        for images in iproduct(xs, repeat=n):
            m = Mapping(carrier, carrier, zip(xs, images))
            assert m.is_injective() == m.is_surjective()


@given(fin_sets, fin_sets)
def test_compare_is_honest(a, b):
    verdict = compare(a, b)
    na, nb = len(a.children), len(b.children)
    if na == nb:
        assert isinstance(verdict, Equinumerous)
        assert verdict.witness.is_bijective()
    elif na < nb:
        assert isinstance(verdict, LeftIntoRight)
        assert verdict.witness.is_injective()
    else:
        assert isinstance(verdict, RightIntoLeft)
        assert verdict.witness.is_injective()


def test_compare_empty_corner():
    v = compare(EMPTY, EMPTY)
    assert isinstance(v, Equinumerous)
    assert v.witness.domain == EMPTY
