"""Ordinal-shaped counting states and their relatives.

Three generated iterators live here, all starting from the empty set:

* ``ordinal_iterator`` — step ``sigma(A) = A ∪ {A}``; its states are the
  usual set-theoretic numerals {}, {{}}, {{},{{}}}, ...
* ``nest_iterator`` — step ``beta(A) = {A}``; its states are nested
  singletons;
* ``cumulative_iterator`` — the lift of the nest iterator to finite sets;
  its states collect all earlier nests.

:func:`rho` folds ``sigma`` over any finite set and lands on the ordinal
of the same size, which is the bridge between arbitrary sets and the
interned ordinal stream.
"""

from __future__ import annotations

from .elements import (EMPTY, Element, FinSet, SetOf, canonicalize,
                       format_element, singleton)
from .iterators import IteratorSpec, NotInIterator, lift_fin

__all__ = [
    "NotAnOrdinal", "sigma", "rho", "beta", "alpha",
    "ordinal", "ordinal_value", "is_ordinal", "ord_compare",
    "eta", "psi",
    "ordinal_iterator", "nest_iterator", "cumulative_iterator",
]


class NotAnOrdinal(ValueError):
    pass


def sigma(a: FinSet) -> FinSet:
    """Successor: adjoin the set itself as a member."""
    if not isinstance(a, SetOf):
        raise TypeError("sigma acts on finite sets")
    return canonicalize(a.children + (a,))


def beta(a: Element) -> FinSet:
    """Nesting step: wrap in a singleton."""
    return singleton(a)


def alpha(a: FinSet) -> FinSet:
    """Cumulative step: the empty set plus the nests of all members."""
    if not isinstance(a, SetOf):
        raise TypeError("alpha acts on finite sets")
    return canonicalize([EMPTY] + [beta(x) for x in a])


# The ordinal stream is interned: ordinal(n) is built once and shared, so
# the n-th ordinal costs O(n) new nodes in total, not O(2**n).
_stream: list[FinSet] = [EMPTY]
_known: set[FinSet] = {EMPTY}


def ordinal(n: int) -> FinSet:
    """The n-th ordinal (n members, each an earlier ordinal)."""
    if n < 0:
        raise ValueError("no negative ordinals")
    while len(_stream) <= n:
        nxt = sigma(_stream[-1])
        _stream.append(nxt)
        _known.add(nxt)
    return _stream[n]


def is_ordinal(v: Element) -> bool:
    """True when v is ∅, or {∅}, or {∅,{∅}}, ...

    Checks the characteristic shape: listed in canonical order, each
    member must equal the set of the members before it.
    """
    if not isinstance(v, SetOf):
        return False
    if v in _known:
        return True
    for k, child in enumerate(v.children):
        if not isinstance(child, SetOf) or child.children != v.children[:k]:
            return False
    _known.add(v)
    return True


def ordinal_value(o: Element) -> int:
    if not is_ordinal(o):
        raise NotAnOrdinal(f"{format_element(o)} is not an ordinal")
    return len(o.children)


def rho(a: FinSet) -> FinSet:
    """Fold sigma over a set: the ordinal of the same size.

    Idempotent, and rho(a) always admits a bijection with a.
    """
    if not isinstance(a, SetOf):
        raise TypeError("rho acts on finite sets")
    x = EMPTY
    for _ in a.children:
        x = sigma(x)
    return x


def ord_compare(o1: Element, o2: Element) -> int:
    """-1, 0 or +1; ordinals are totally ordered by proper inclusion."""
    n1, n2 = ordinal_value(o1), ordinal_value(o2)
    if o1 == o2:
        return 0
    # proper inclusion, checked honestly rather than via the sizes
    if o1.is_subset(o2):
        return -1
    if o2.is_subset(o1):
        return 1
    raise NotAnOrdinal(
        f"ordinals must nest: {n1} vs {n2}")  # pragma: no cover


# -- predecessors -----------------------------------------------------------

def _ord_pred(o: Element) -> Element:
    # the last member in canonical order is the inclusion-largest one
    if not isinstance(o, SetOf) or not o.children:
        raise NotInIterator(f"{format_element(o)} has no ordinal predecessor")
    return o.children[-1]


def _nest_pred(s: Element) -> Element:
    if not isinstance(s, SetOf) or len(s.children) != 1:
        raise NotInIterator(f"{format_element(s)} is not a nest")
    return s.children[0]


_ordinal_spec = IteratorSpec(EMPTY, sigma, name="ordinal", pred=_ord_pred)
_nest_spec = IteratorSpec(EMPTY, beta, name="nest", pred=_nest_pred)
_cumulative_spec = lift_fin(_nest_spec)
_cumulative_spec.name = "cumulative"


def ordinal_iterator() -> IteratorSpec:
    return _ordinal_spec


def nest_iterator() -> IteratorSpec:
    return _nest_spec


def cumulative_iterator() -> IteratorSpec:
    """Step alpha; state n is the set of the first n nests."""
    return _cumulative_spec


# -- the canonical morphisms out of the ordinal stream ----------------------

def eta(o: Element) -> Element:
    """Ordinal n to the n-fold nest {{...{}...}}."""
    n = ordinal_value(o)
    x: Element = EMPTY
    for _ in range(n):
        x = beta(x)
    return x


def psi(a: FinSet) -> FinSet:
    """Fold alpha over a set: the first |a| nests, collected.

    psi(a) is the bracket of eta(rho(a)) in the nest iterator — the set
    of all nests generated strictly before it.
    """
    if not isinstance(a, SetOf):
        raise TypeError("psi acts on finite sets")
    x = EMPTY
    for _ in a.children:
        x = alpha(x)
    return x
