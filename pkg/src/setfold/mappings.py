"""Total maps between finite sets, carried around with their graphs.

A :class:`Mapping` is a function with explicit finite domain and codomain;
its graph is stored sorted, so two mappings are equal exactly when they
have the same domain, codomain and graph.  Size comparison between sets is
done by producing an actual witness map (:func:`compare`), never by
counting on the side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .elements import (Element, FinSet, Pair, SetOf, canonicalize,
                       format_element, pair)

__all__ = [
    "Mapping", "NotAGraph", "NotSurjective",
    "identity", "compose", "graph_to_mapping", "section",
    "Equinumerous", "LeftIntoRight", "RightIntoLeft", "compare",
]


class NotAGraph(ValueError):
    """The given set of pairs is not the graph of a total map."""


class NotSurjective(ValueError):
    """A section was requested for a map that misses part of its codomain."""


class Mapping:
    """A total map ``domain -> codomain`` with an explicit graph."""

    __slots__ = ("domain", "codomain", "graph", "_table")

    def __init__(self, domain: FinSet, codomain: FinSet,
                 entries: Iterable[tuple[Element, Element]]):
        table = dict(entries)
        if set(table) != set(domain.children):
            raise NotAGraph("graph keys do not match the domain")
        for v in table.values():
            if v not in codomain:
                raise NotAGraph(f"value {format_element(v)} not in codomain")
        self.domain = domain
        self.codomain = codomain
        self.graph = tuple((x, table[x]) for x in domain.children)
        self._table = table

    @classmethod
    def from_callable(cls, domain: FinSet, codomain: FinSet,
                      fn: Callable[[Element], Element]) -> "Mapping":
        return cls(domain, codomain, ((x, fn(x)) for x in domain))

    def __call__(self, x: Element) -> Element:
        try:
            return self._table[x]
        except KeyError:
            raise NotAGraph(
                f"{format_element(x)} is not in the domain") from None

    def image(self) -> FinSet:
        return canonicalize(self._table.values())

    def is_injective(self) -> bool:
        return len(set(self._table.values())) == len(self.graph)

    def is_surjective(self) -> bool:
        return len(set(self._table.values())) == len(self.codomain)

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def compose(self, other: "Mapping") -> "Mapping":
        """self after other:  (f.compose(g))(x) == f(g(x))."""
        if other.codomain != self.domain:
            raise NotAGraph("composition mismatch: codomain != domain")
        return Mapping(other.domain, self.codomain,
                       ((x, self(other(x))) for x in other.domain))

    def inverse(self) -> "Mapping":
        if not self.is_bijective():
            raise NotAGraph("only bijections have inverses")
        return Mapping(self.codomain, self.domain,
                       ((y, x) for x, y in self.graph))

    def restrict(self, sub: FinSet) -> "Mapping":
        if not sub.is_subset(self.domain):
            raise NotAGraph("restriction outside the domain")
        return Mapping(sub, self.codomain, ((x, self(x)) for x in sub))

    def graph_set(self) -> FinSet:
        """The graph as a value: a set of pairs."""
        return canonicalize(pair(x, y) for x, y in self.graph)

    def __eq__(self, other):
        return (isinstance(other, Mapping)
                and self.domain == other.domain
                and self.codomain == other.codomain
                and self.graph == other.graph)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.domain, self.codomain, self.graph))

    def __repr__(self):
        body = ", ".join(f"{format_element(x)}->{format_element(y)}"
                         for x, y in self.graph)
        return f"<Mapping {body}>"


def identity(a: FinSet) -> Mapping:
    return Mapping(a, a, ((x, x) for x in a))


def compose(f: Mapping, g: Mapping) -> Mapping:
    """f after g, same as ``f.compose(g)``."""
    return f.compose(g)


def graph_to_mapping(domain: FinSet, codomain: FinSet,
                     graph: FinSet) -> Mapping:
    """Reconstruct a Mapping from a set-of-pairs value.

    Raises :class:`NotAGraph` when the set contains a non-pair, hits some
    domain element twice, or misses one.
    """
    entries = []
    for member in graph:
        if not isinstance(member, Pair):
            raise NotAGraph(f"{format_element(member)} is not a pair")
        entries.append((member.first, member.second))
    if len({x for x, _ in entries}) != len(entries):
        raise NotAGraph("graph relates some element twice")
    return Mapping(domain, codomain, entries)


def section(f: Mapping) -> Mapping:
    """A right inverse of a surjective map.

    For each codomain element the canonically least preimage is chosen,
    so sections are deterministic.  ``f.compose(section(f))`` is the
    identity on the codomain.
    """
    fibres: dict[Element, Element] = {}
    for x, y in f.graph:  # graph is in canonical domain order
        fibres.setdefault(y, x)
    missing = [y for y in f.codomain if y not in fibres]
    if missing:
        raise NotSurjective(
            f"no preimage for {format_element(missing[0])}")
    return Mapping(f.codomain, f.domain, fibres.items())


# -- size comparison ----------------------------------------------------------

@dataclass(frozen=True)
class Equinumerous:
    witness: Mapping  # a bijection left -> right


@dataclass(frozen=True)
class LeftIntoRight:
    witness: Mapping  # an injection left -> right
    strict: bool = True


@dataclass(frozen=True)
class RightIntoLeft:
    witness: Mapping  # an injection right -> left
    strict: bool = True


def compare(a: FinSet, b: FinSet):
    """Size trichotomy with an explicit witness map.

    Pairs off the members of both sets in canonical order; whichever set
    runs out first injects into the other.  Returns one of
    :class:`Equinumerous`, :class:`LeftIntoRight`, :class:`RightIntoLeft`.
    """
    paired = list(zip(a.children, b.children))
    if len(a) == len(b):
        return Equinumerous(Mapping(a, b, paired))
    if len(a) < len(b):
        return LeftIntoRight(Mapping(a, b, paired), strict=True)
    return RightIntoLeft(
        Mapping(b, a, [(y, x) for x, y in paired]), strict=True)
