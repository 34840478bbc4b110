"""Listings of a finite set, represented as growing chains of subsets.

A *selector* over A is a family of subsets containing the empty set in
which every member other than A extends to a further member by exactly
one element.  The well-behaved selectors are the ones totally ordered by
inclusion: each is the trail of some listing of A — the sets of
"elements named so far" — and :class:`Enumerator` stores exactly that
trail.  Orders convert to enumerators and back without loss, enumerators
of equally sized sets translate into each other by a unique prefix map,
and folding any iterator along the trail (:func:`valuation`) agrees with
folding over the bare set.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .elements import (EMPTY, Element, FinSet, SetOf, atom, canonicalize,
                       difference, format_element, union, with_element)
from .iterators import IteratorSpec, fold
from .mappings import Mapping

__all__ = [
    "NotAListing", "NoHomomorphism", "Enumerator",
    "validate_selector", "is_selector", "is_inclusion_chain",
    "is_enumerator", "enumerator_from_order", "enumerator_from_family",
    "order_from_enumerator", "homomorphism", "valuation",
    "parse_listing_family",
]


class NotAListing(ValueError):
    """The given order does not list the set exactly once each."""


class NoHomomorphism(ValueError):
    """No prefix map exists (the source set is strictly bigger)."""


class Enumerator:
    """The inclusion chain of prefixes of one listing of a finite set."""

    __slots__ = ("ambient", "chain", "added")

    def __init__(self, chain: Sequence[FinSet]):
        chain = tuple(chain)
        if not chain or chain[0] != EMPTY:
            raise ValueError("an enumerator starts at the empty set")
        added = []
        for small, big in zip(chain, chain[1:]):
            gained = difference(big, small)
            if not small.is_subset(big) or len(gained) != 1:
                raise ValueError("each stage must add exactly one element")
            added.append(gained.children[0])
        self.ambient = chain[-1]
        self.chain = chain
        self.added = tuple(added)

    def members(self) -> FinSet:
        """The enumerator as a value: the set of its stages."""
        return canonicalize(self.chain)

    def __len__(self):
        return len(self.chain)

    def __eq__(self, other):
        return isinstance(other, Enumerator) and self.chain == other.chain

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.chain)

    def __repr__(self):
        listing = " ".join(format_element(e) for e in self.added)
        return f"<Enumerator {listing or '(empty)'}>"


def enumerator_from_order(order: Sequence[Element],
                          ambient: FinSet | None = None) -> Enumerator:
    """The chain of prefixes of a listing.

    The listing must name each element exactly once; when ``ambient`` is
    given it must be listed exactly.
    """
    seen: list[Element] = []
    chain = [EMPTY]
    for e in order:
        if e in seen:
            raise NotAListing(f"{format_element(e)} is listed twice")
        seen.append(e)
        chain.append(with_element(chain[-1], e))
    if ambient is not None and chain[-1] != ambient:
        raise NotAListing("the order does not list the set exactly")
    return Enumerator(chain)


def order_from_enumerator(e: Enumerator) -> tuple[Element, ...]:
    return e.added


# -- selector families -------------------------------------------------------

def validate_selector(ambient: FinSet, family: Iterable[FinSet]) -> None:
    """Raise with a reason unless ``family`` is a selector over ``ambient``.

    Selector: contains the empty set, and each member other than the
    whole set grows by exactly one choice of added element.
    """
    members = {m: None for m in family}
    for m in members:
        if not isinstance(m, SetOf) or not m.is_subset(ambient):
            raise ValueError(f"{format_element(m)} is not a subset of "
                             f"{format_element(ambient)}")
    if EMPTY not in members:
        raise ValueError("a selector contains the empty set")
    for m in members:
        if m == ambient:
            continue
        extensions = [e for e in difference(ambient, m)
                      if with_element(m, e) in members]
        if len(extensions) != 1:
            raise ValueError(
                f"{format_element(m)} has {len(extensions)} one-element "
                "extensions in the family; a selector allows exactly one")


def is_selector(ambient: FinSet, family: Iterable[FinSet]) -> bool:
    try:
        validate_selector(ambient, list(family))
    except ValueError:
        return False
    return True


def is_inclusion_chain(family: Iterable[FinSet]) -> bool:
    sets = list(family)
    return all(a.is_subset(b) or b.is_subset(a)
               for i, a in enumerate(sets) for b in sets[:i])


def is_enumerator(ambient: FinSet, family: Iterable[FinSet]) -> bool:
    """Selector + totally ordered by inclusion + reaches the whole set.

    Over a finite set the totally ordered selectors are exactly the
    minimal ones, and they always contain the whole set; the stricter
    test keeps the check honest on garbage input.
    """
    sets = list(family)
    return (is_selector(ambient, sets) and is_inclusion_chain(sets)
            and ambient in sets)


def enumerator_from_family(ambient: FinSet,
                           family: Iterable[FinSet]) -> Enumerator:
    sets = list(family)
    validate_selector(ambient, sets)
    if not is_inclusion_chain(sets) or ambient not in sets:
        raise ValueError("the family is a selector but not a single "
                         "inclusion chain up to the whole set")
    distinct = {m: None for m in sets}
    return Enumerator(sorted(distinct, key=len))


# -- comparing listings -------------------------------------------------------

def homomorphism(src: Enumerator, dst: Enumerator) -> Mapping:
    """The stage-for-stage map between two enumerators.

    Sends the k-th stage of ``src`` to the k-th stage of ``dst``; it
    exists exactly when the source set is no bigger, and is then unique.
    Equal sizes make it a bijection pairing the two whole sets.
    """
    if len(src) > len(dst):
        raise NoHomomorphism(
            f"no map from a listing of {len(src) - 1} elements into one "
            f"of {len(dst) - 1}")
    return Mapping(canonicalize(src.chain), canonicalize(dst.chain),
                   zip(src.chain, dst.chain))


def valuation(spec: IteratorSpec, e: Enumerator) -> Element:
    """Fold an iterator along the listing, one step per named element.

    Always agrees with folding over the bare ambient set — the listing
    order cannot leave a trace.
    """
    return fold(spec, e.added)


def parse_listing_family(text: str) -> tuple[FinSet, list[FinSet]]:
    """Parse one subset per line, ``{x y z}`` with bare atom tokens.

    Returns (union of all lines, the family).  ``#`` starts a comment.
    """
    family: list[FinSet] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not (line.startswith("{") and line.endswith("}")):
            raise ValueError(f"line {lineno}: expected a braced subset")
        family.append(canonicalize(atom(t) for t in line[1:-1].split()))
    ambient = EMPTY
    for m in family:
        ambient = union(ambient, m)
    return ambient, family
