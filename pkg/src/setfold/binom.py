"""Subset counting without numbers: witness bijections as certificates.

``delta(A, B)`` collects the subsets of A the same size as B.  The
classical counting identities about these collections are delivered here
as :class:`EquinumerosityCertificate` values: two enumerated sets plus an
actual bijection between them.  Where a construction-by-hand is known the
witness is built explicitly from the data; where no natural construction
presents itself the certificate honestly says so, pairing both sides off
in canonical order instead (``method = "canonical-pairing"``).  Either
way nothing is asserted about sizes that is not enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .elements import (Element, FinSet, LEFT_TAG, RIGHT_TAG, SetOf,
                       canonicalize, difference, disjoint_union,
                       format_element, pair, product, with_element)
from .mappings import Mapping

__all__ = [
    "NotASubset", "DeltaSet", "delta",
    "injections", "self_bijections", "canonical_bijection",
    "EquinumerosityCertificate", "EXPLICIT", "CANONICAL",
    "pascal_bijection", "factor_injections", "extend_self_bijections",
    "extend_injections", "split_self_bijections",
    "count_subsets_by_orderings", "chain_delta",
]


class NotASubset(ValueError):
    pass


def _require_subset(small: FinSet, big: FinSet, who: str):
    if not small.is_subset(big):
        raise NotASubset(f"{who}: {format_element(small)} is not a subset "
                         f"of {format_element(big)}")


@dataclass(frozen=True)
class DeltaSet:
    """The subsets of ``ambient`` equinumerous with ``reference``."""
    ambient: FinSet
    reference: FinSet
    members: FinSet


def delta(ambient: FinSet, reference: FinSet) -> DeltaSet:
    _require_subset(reference, ambient, "delta")
    k = len(reference)
    members = canonicalize(
        canonicalize(sub) for sub in combinations(ambient.children, k))
    return DeltaSet(ambient, reference, members)


def injections(source: FinSet, target: FinSet) -> FinSet:
    """All injective maps source -> target, as a set of graphs."""
    xs = source.children
    return canonicalize(
        canonicalize(pair(x, y) for x, y in zip(xs, ys))
        for ys in permutations(target.children, len(xs)))


def self_bijections(a: FinSet) -> FinSet:
    """All rearrangements of a set: injections of it into itself."""
    return injections(a, a)


def canonical_bijection(left: FinSet, right: FinSet) -> Mapping:
    """Pair off two equally sized sets in canonical order."""
    if len(left) != len(right):
        raise ValueError(f"sets of size {len(left)} and {len(right)} "
                         "admit no bijection")
    return Mapping(left, right, zip(left.children, right.children))


EXPLICIT = "explicit"
CANONICAL = "canonical-pairing"


@dataclass(frozen=True)
class EquinumerosityCertificate:
    """Two enumerated sets and a bijection witnessing their equal size.

    ``method`` records how the witness arose: ``explicit`` means it was
    constructed from the data; ``canonical-pairing`` means both sides
    were enumerated and paired off in order — an honest certificate of
    equal size that claims nothing structural.
    """
    left: FinSet
    right: FinSet
    witness: Mapping
    method: str
    note: str = field(default="", compare=False)

    def verify(self) -> bool:
        w = self.witness
        return (w.domain == self.left and w.codomain == self.right
                and w.is_bijective())


def _graph_as_dict(graph: SetOf) -> dict:
    return {p.first: p.second for p in graph}


def pascal_bijection(a_set: FinSet, b_set: FinSet, a: Element,
                     b: Element) -> EquinumerosityCertificate:
    """Split the size-|B|+1 subsets of A∪{a} by whether they use ``a``.

    Those that do correspond (drop ``a``) to the |B|-sized subsets of A;
    those that don't are |B∪{b}|-sized subsets of A already.  The witness
    is that very case split, landing in a tagged disjoint union.
    """
    _require_subset(b_set, a_set, "pascal_bijection")
    if b_set == a_set:
        raise NotASubset("pascal_bijection: the subset must be proper")
    if a in a_set:
        raise ValueError(f"{format_element(a)} must be new to the set")
    if b not in a_set or b in b_set:
        raise ValueError(f"{format_element(b)} must come from the "
                         "complement")
    big = with_element(a_set, a)
    left = delta(big, with_element(b_set, a)).members
    use_a = delta(a_set, b_set).members
    skip_a = delta(a_set, with_element(b_set, b)).members
    right = disjoint_union(use_a, skip_a)

    def route(c: Element) -> Element:
        if a in c:
            return pair(difference(c, canonicalize([a])), LEFT_TAG)
        return pair(c, RIGHT_TAG)

    witness = Mapping.from_callable(left, right, route)
    return EquinumerosityCertificate(left, right, witness, EXPLICIT)


def factor_injections(a_set: FinSet,
                      b_set: FinSet) -> EquinumerosityCertificate:
    """An injection B -> A is an image subset plus a rearrangement of B.

    The witness sends k to (image of k, the rearrangement obtained by
    pulling k back along the canonical bijection onto its image).
    """
    _require_subset(b_set, a_set, "factor_injections")
    left = injections(b_set, a_set)
    right = product(delta(a_set, b_set).members, self_bijections(b_set))

    def route(graph: Element) -> Element:
        k = _graph_as_dict(graph)
        image = canonicalize(k.values())
        back = {y: x for x, y in zip(b_set.children, image.children)}
        rearr = canonicalize(
            pair(x, back[k[x]]) for x in b_set)
        return pair(image, rearr)

    witness = Mapping.from_callable(left, right, route)
    return EquinumerosityCertificate(left, right, witness, EXPLICIT)


def extend_self_bijections(a_set: FinSet,
                           a: Element) -> EquinumerosityCertificate:
    """Rearrangements of A∪{a} are pairs (rearrangement of A, image of a).

    Dropping ``a`` from a rearrangement p leaves a hole where p hit ``a``;
    the witness patches it with p(a) and remembers p(a) separately.
    """
    if a in a_set:
        raise ValueError(f"{format_element(a)} must be new to the set")
    big = with_element(a_set, a)
    left = self_bijections(big)
    right = product(self_bijections(a_set), big)

    def route(graph: Element) -> Element:
        p = _graph_as_dict(graph)
        patched = canonicalize(
            pair(x, p[x] if p[x] != a else p[a]) for x in a_set)
        return pair(patched, p[a])

    witness = Mapping.from_callable(left, right, route)
    return EquinumerosityCertificate(left, right, witness, EXPLICIT)


def extend_injections(a_set: FinSet, b_set: FinSet,
                      b: Element) -> EquinumerosityCertificate:
    """One more point to embed means one more free landing spot.

    Restriction forgets where b went; the witness keeps that landing
    spot, renamed into A∖B along the canonical bijection from the spots
    actually left free by the restricted map.
    """
    _require_subset(b_set, a_set, "extend_injections")
    if b not in a_set or b in b_set:
        raise ValueError(f"{format_element(b)} must come from the "
                         "complement")
    bigger = with_element(b_set, b)
    left = injections(bigger, a_set)
    complement = difference(a_set, b_set)
    right = product(injections(b_set, a_set), complement)

    def route(graph: Element) -> Element:
        k = _graph_as_dict(graph)
        restricted = canonicalize(pair(x, k[x]) for x in b_set)
        free = difference(a_set, canonicalize(k[x] for x in b_set))
        rename = dict(zip(free.children, complement.children))
        return pair(restricted, rename[k[b]])

    witness = Mapping.from_callable(left, right, route)
    return EquinumerosityCertificate(left, right, witness, EXPLICIT)


def _canonical_certificate(left: FinSet, right: FinSet,
                           note: str = "") -> EquinumerosityCertificate:
    if len(left) != len(right):
        raise ValueError(f"sides came out at {len(left)} and {len(right)} "
                         "members — not equinumerous")
    return EquinumerosityCertificate(
        left, right, canonical_bijection(left, right), CANONICAL, note)


def split_self_bijections(a_set: FinSet,
                          b_set: FinSet) -> EquinumerosityCertificate:
    """Rearranging A matches embedding B and rearranging the rest.

    Both sides are enumerated in full; no construction tying a
    rearrangement to such a pair suggests itself, so the certificate is a
    canonical pairing.
    """
    _require_subset(b_set, a_set, "split_self_bijections")
    left = self_bijections(a_set)
    right = product(injections(b_set, a_set),
                    self_bijections(difference(a_set, b_set)))
    return _canonical_certificate(left, right)


def count_subsets_by_orderings(a_set: FinSet,
                               b_set: FinSet) -> EquinumerosityCertificate:
    """Rearrangements of A against (subset choice, two rearrangements).

    The triple on the right is the counting content of the binomial
    coefficient: choose where B lands, rearrange B, rearrange the rest.
    Canonical pairing; both sides enumerated.
    """
    _require_subset(b_set, a_set, "count_subsets_by_orderings")
    left = self_bijections(a_set)
    right = product(
        delta(a_set, b_set).members,
        product(self_bijections(b_set),
                self_bijections(difference(a_set, b_set))))
    return _canonical_certificate(left, right)


def chain_delta(a_set: FinSet, b_set: FinSet,
                c_set: FinSet) -> EquinumerosityCertificate:
    """Choosing B in A then C in B, against choosing C in A first.

    The second coordinate on the right picks what is left of B once C is
    set aside, inside what is left of A.  Canonical pairing.
    """
    _require_subset(c_set, b_set, "chain_delta")
    _require_subset(b_set, a_set, "chain_delta")
    left = product(delta(a_set, b_set).members,
                   delta(b_set, c_set).members)
    right = product(
        delta(a_set, c_set).members,
        delta(difference(a_set, c_set), difference(b_set, c_set)).members)
    return _canonical_certificate(left, right)
