"""Permutations of a finite set and their signs.

The sign is computed by the peel-a-point recursion: pick a pivot, and if
the permutation moves it, pre-compose with the transposition that parks it
and flip the sign.  No counting of inversions, no cycle bookkeeping — the
recursion itself is the definition, and the pivot choice provably cannot
matter (tests exercise several).
"""

from __future__ import annotations

import re
from typing import Iterable

from .elements import Element, FinSet, atom, canonicalize, format_element
from .mappings import Mapping

__all__ = [
    "Sign", "PLUS", "MINUS",
    "Perm", "identity_perm", "transposition",
    "signature", "decompose_transpositions", "parse_perm",
]


class Sign:
    """The two-element sign group: PLUS is the unit, MINUS squares to it."""

    __slots__ = ("_negative",)

    def __init__(self, negative: bool):
        self._negative = negative

    @property
    def value(self) -> int:
        return -1 if self._negative else 1

    def __mul__(self, other: "Sign") -> "Sign":
        if not isinstance(other, Sign):
            return NotImplemented
        return MINUS if self._negative != other._negative else PLUS

    def __neg__(self) -> "Sign":
        return PLUS if self._negative else MINUS

    def __eq__(self, other):
        return isinstance(other, Sign) and self._negative == other._negative

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(("sign", self._negative))

    def __repr__(self):
        return "-" if self._negative else "+"


PLUS = Sign(False)
MINUS = Sign(True)


class Perm:
    """A bijection of a finite set onto itself."""

    __slots__ = ("carrier", "_map")

    def __init__(self, carrier: FinSet, mapping: dict):
        if set(mapping) != set(carrier.children):
            raise ValueError("permutation must be defined on the whole set")
        if set(mapping.values()) != set(carrier.children):
            raise ValueError("not a permutation: images don't cover the set")
        self.carrier = carrier
        self._map = dict(mapping)

    @classmethod
    def from_pairs(cls, carrier: FinSet,
                   pairs: Iterable[tuple[Element, Element]],
                   fill_fixed: bool = True) -> "Perm":
        m = dict(pairs)
        if fill_fixed:
            for x in carrier:
                m.setdefault(x, x)
        return cls(carrier, m)

    def __call__(self, x: Element) -> Element:
        try:
            return self._map[x]
        except KeyError:
            raise ValueError(
                f"{format_element(x)} is outside the carrier") from None

    def compose(self, other: "Perm") -> "Perm":
        """self after other (apply ``other`` first)."""
        if other.carrier != self.carrier:
            raise ValueError("can only compose permutations of one set")
        return Perm(self.carrier,
                    {x: self._map[y] for x, y in other._map.items()})

    def inverse(self) -> "Perm":
        return Perm(self.carrier, {y: x for x, y in self._map.items()})

    def restrict(self, sub: FinSet) -> "Perm":
        if any(self._map[x] not in sub for x in sub):
            raise ValueError("subset is not closed under the permutation")
        return Perm(sub, {x: self._map[x] for x in sub})

    def is_identity(self) -> bool:
        return all(x == y for x, y in self._map.items())

    def moved(self) -> FinSet:
        return canonicalize(x for x, y in self._map.items() if x != y)

    def as_mapping(self) -> Mapping:
        return Mapping(self.carrier, self.carrier, self._map.items())

    def items(self):
        return ((x, self._map[x]) for x in self.carrier)

    def __eq__(self, other):
        return (isinstance(other, Perm) and self.carrier == other.carrier
                and self._map == other._map)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.carrier,
                     tuple(self._map[x] for x in self.carrier)))

    def __repr__(self):
        moved = [f"{format_element(x)}->{format_element(y)}"
                 for x, y in self.items() if x != y]
        return "<Perm " + (" ".join(moved) or "id") + ">"


def identity_perm(carrier: FinSet) -> Perm:
    return Perm(carrier, {x: x for x in carrier})


def transposition(carrier: FinSet, a: Element, b: Element) -> Perm:
    if a not in carrier or b not in carrier:
        raise ValueError("transposed points must lie in the set")
    if a == b:
        raise ValueError("a transposition swaps two distinct points")
    m = {x: x for x in carrier}
    m[a], m[b] = b, a
    return Perm(carrier, m)


def signature(p: Perm, pivot: str = "max") -> Sign:
    """The sign of ``p`` by pivot peeling.

    ``pivot`` selects which point gets parked at every stage ("max" or
    "min" in canonical order); any choice yields the same sign.
    """
    if pivot not in ("max", "min"):
        raise ValueError("pivot must be 'max' or 'min'")
    take_last = pivot == "max"
    work = dict(p._map)
    order = list(p.carrier.children)  # canonical, ascending
    sign = PLUS
    while order:
        a = order.pop() if take_last else order.pop(0)
        b = work.pop(a)
        if b == a:
            continue
        # pre-compose with the (a b) transposition: redirect whatever
        # still points at a or b, then a is fixed and drops out
        for x, y in work.items():
            if y == a:
                work[x] = b
            elif y == b:
                work[x] = a
        sign = -sign
    return sign


def decompose_transpositions(p: Perm, pivot: str = "max") -> list[Perm]:
    """Transpositions whose right-to-left composition is ``p``.

    The list is empty exactly for the identity, and its parity always
    matches ``signature(p)``.
    """
    if pivot not in ("max", "min"):
        raise ValueError("pivot must be 'max' or 'min'")
    take_last = pivot == "max"
    work = dict(p._map)
    order = list(p.carrier.children)
    out: list[Perm] = []
    while order:
        a = order.pop() if take_last else order.pop(0)
        b = work.pop(a)
        if b == a:
            continue
        out.append(transposition(p.carrier, a, b))
        for x, y in work.items():
            if y == a:
                work[x] = b
            elif y == b:
                work[x] = a
    return out


_ENTRY = re.compile(r"^(\S+?)->(\S+)$")


def parse_perm(text: str) -> Perm:
    """Parse ``x->y`` entries, with an optional ``on: {x y z}`` carrier.

    Bare tokens name atoms.  Points that are not mentioned stay fixed;
    without an ``on:`` header the carrier is everything mentioned.
    """
    text = text.strip()
    declared: list[Element] | None = None
    m = re.match(r"^on:\s*\{([^}]*)\}\s*", text)
    if m:
        declared = [atom(tok) for tok in m.group(1).split()]
        text = text[m.end():]
    entries: list[tuple[Element, Element]] = []
    for tok in text.split():
        em = _ENTRY.match(tok)
        if not em:
            raise ValueError(f"cannot parse entry {tok!r} (want x->y)")
        entries.append((atom(em.group(1)), atom(em.group(2))))
    mentioned = [e for pair_ in entries for e in pair_]
    if declared is None:
        carrier = canonicalize(mentioned)
    else:
        carrier = canonicalize(declared)
        for e in mentioned:
            if e not in carrier:
                raise ValueError(
                    f"{format_element(e)} is not in the declared carrier")
    seen = set()
    for x, _ in entries:
        if x in seen:
            raise ValueError(f"{format_element(x)} mapped twice")
        seen.add(x)
    return Perm.from_pairs(carrier, entries)
