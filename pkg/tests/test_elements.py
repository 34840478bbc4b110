import pytest
from hypothesis import given
from hypothesis import strategies as st

from setfold import (EMPTY, Atom, Pair, ParseError, SetOf, atom, atoms_of,
                     canonicalize, difference, disjoint_union, format_element,
                     fresh_atom, fresh_atoms, function_space, pair,
                     parse_element, power_set, product, set_of, singleton,
                     union, with_element)

from strategies import atoms, elements, fin_sets


# -- interning and identity ---------------------------------------------------

def test_equal_values_are_the_same_object():
    assert atom("x") is atom("x")
    assert pair(atom("x"), EMPTY) is pair(atom("x"), EMPTY)
    assert set_of(atom("a"), atom("b")) is set_of(atom("b"), atom("a"))
    assert canonicalize([]) is EMPTY


def test_members_are_deduplicated():
    s = canonicalize([atom("a"), atom("a"), atom("b")])
    assert len(s.children) == 2


@given(st.lists(elements(), max_size=6))
def test_canonicalize_is_order_insensitive(xs):
    assert canonicalize(xs) is canonicalize(reversed(xs))


@given(fin_sets)
def test_canonicalize_is_idempotent(s):
    assert canonicalize(s.children) is s


# -- the total order ----------------------------------------------------------

@given(elements(), elements())
def test_trichotomy(x, y):
    assert (x < y) + (x == y) + (y < x) == 1


@given(elements(), elements(), elements())
def test_order_is_transitive(x, y, z):
    if x < y and y < z:
        assert x < z


def test_sets_order_by_size_before_content():
    a, z = atom("a"), atom("z")
    assert set_of(z) < set_of(a, z)           # shorter first
    assert set_of(a) < set_of(z)              # then lexicographic
    assert atom("q") < pair(a, a) < set_of()  # atoms < pairs < sets


def test_set_children_come_back_sorted():
    s = canonicalize([set_of(atom("b")), atom("z"), pair(atom("a"), atom("a"))])
    assert list(s.children) == sorted(s.children)


# -- text syntax --------------------------------------------------------------

@given(elements())
def test_format_parse_round_trip(x):
    assert parse_element(format_element(x)) is x


def test_parse_accepts_any_member_order():
    assert parse_element("{a:b a:a}") is set_of(atom("a"), atom("b"))
    assert parse_element("∅") is EMPTY
    assert parse_element("{}") is EMPTY
    assert parse_element("{{} {{}}}") is set_of(EMPTY, singleton(EMPTY))


def test_parse_reports_position():
    with pytest.raises(ParseError) as err:
        parse_element("{a:x ) a:y}")
    assert err.value.position == 5


@pytest.mark.parametrize("bad", ["", "{", "(a:x . )", "{a:x} trailing", "}"])
def test_parse_rejects_malformed_text(bad):
    with pytest.raises(ParseError):
        parse_element(bad)


# -- set algebra --------------------------------------------------------------

@given(fin_sets, fin_sets)
def test_union_and_difference(a, b):
    u = union(a, b)
    assert all(x in u for x in a)
    assert all(x in u for x in b)
    d = difference(a, b)
    assert all(x in a and x not in b for x in d)
    assert union(d, b) == union(a, b)


@given(fin_sets, elements())
def test_with_element(s, x):
    grown = with_element(s, x)
    assert x in grown
    assert len(grown.children) == len(s.children) + (x not in s)


def test_power_set_and_product_sizes():
    a = set_of(atom("a"), atom("b"), atom("c"))
    b = set_of(atom("x"), atom("y"))
    assert len(power_set(a).children) == 8
    assert len(product(a, b).children) == 6
    assert EMPTY in power_set(a)
    assert a in power_set(a)


def test_function_space_sizes():
    a = set_of(atom("a"), atom("b"))
    b = set_of(atom("x"), atom("y"), atom("z"))
    assert len(function_space(a, b).children) == 9          # 3^2 graphs
    assert function_space(EMPTY, b) == singleton(EMPTY)     # one empty graph
    assert function_space(a, EMPTY) == EMPTY                # nowhere to land


def test_disjoint_union_counts_both_sides():
    a = set_of(atom("a"), atom("b"))
    d = disjoint_union(a, a)
    assert len(d.children) == 4


def test_fresh_atoms_avoid_everything_in_sight():
    s = set_of(atom("~0"), pair(atom("~1"), EMPTY))
    fresh = fresh_atoms(3, avoiding=s)
    assert len(set(fresh)) == 3
    for f in fresh:
        assert f not in atoms_of(s)
    assert fresh_atom(avoiding=s) not in atoms_of(s)


@given(fin_sets)
def test_atoms_of_finds_every_leaf(s):
    for a in atoms_of(s):
        assert isinstance(a, Atom)
    assert set(atoms_of(EMPTY)) == set()
