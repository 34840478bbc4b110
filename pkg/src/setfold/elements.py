"""Canonical hereditarily finite values.

Everything in this package lives in one universe of immutable values: atoms
(opaque labelled points), ordered pairs, and finite sets of other values.
A set keeps its members as a strictly increasing tuple under a fixed total
order on all values, so there is exactly one object per extensional set and
structural equality *is* set equality.

Values are interned: building the same value twice hands back the same
object.  That keeps deeply shared structures (ordinals, brackets, towers of
power sets) compact, and makes equality checks and sorting cheap, because
comparisons hit the ``is`` fast path almost immediately.  The intern tables
are never pruned; this library is meant for desk-scale objects, not bulk
data.
"""

from __future__ import annotations

import re
import threading
from itertools import product as _iproduct
from typing import Iterable, Iterator

__all__ = [
    "Element", "Atom", "Pair", "SetOf", "FinSet", "EMPTY",
    "atom", "pair", "set_of", "canonicalize", "singleton",
    "union", "difference", "with_element", "product", "power_set",
    "function_space", "tag_left", "tag_right", "disjoint_union",
    "LEFT_TAG", "RIGHT_TAG", "RESERVED_PREFIX",
    "atoms_of", "fresh_atom", "fresh_atoms",
    "format_element", "parse_element", "ParseError",
]


class Element:
    """Base class for atoms, pairs and sets.  Use the module factories."""

    __slots__ = ("_hash", "_key")

    def sort_key(self):
        """Key tuple realizing the canonical total order on values.

        Atoms come first (by label), then pairs (lexicographically), then
        sets (shorter before longer, then lexicographically by members).
        Keys are cached on the node and shared through interning, so
        comparing two keys short-circuits on identical sub-objects.
        """
        key = self._key
        if key is None:
            key = self._make_key()
            self._key = key
        return key

    def _make_key(self):  # pragma: no cover - abstract
        raise NotImplementedError

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self is other or self.sort_key() <= other.sort_key()

    def __gt__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return other.__lt__(self)

    def __ge__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return other.__le__(self)

    def __repr__(self):
        return format_element(self)


class Atom(Element):
    """An opaque labelled point.  Atoms with equal labels are identical."""

    __slots__ = ("label",)

    def _make_key(self):
        return (0, self.label)

    __hash__ = Element.__hash__

    def __eq__(self, other):
        return self is other or (isinstance(other, Atom)
                                 and self.label == other.label)

    def __ne__(self, other):
        return not self.__eq__(other)


class Pair(Element):
    """An ordered pair of values."""

    __slots__ = ("first", "second")

    def _make_key(self):
        return (1, self.first.sort_key(), self.second.sort_key())

    __hash__ = Element.__hash__

    def __eq__(self, other):
        return self is other or (isinstance(other, Pair)
                                 and self._hash == other._hash
                                 and self.first == other.first
                                 and self.second == other.second)

    def __ne__(self, other):
        return not self.__eq__(other)


class SetOf(Element):
    """A finite set: members held as a strictly increasing tuple.

    Construct through :func:`canonicalize` / :func:`set_of`; the raw class
    is exposed for ``isinstance`` checks and iteration.
    """

    __slots__ = ("children", "_members")

    def _make_key(self):
        return (2, len(self.children),
                tuple(c.sort_key() for c in self.children))

    __hash__ = Element.__hash__

    def __eq__(self, other):
        return self is other or (isinstance(other, SetOf)
                                 and self._hash == other._hash
                                 and self.children == other.children)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __len__(self):
        return len(self.children)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.children)

    def __contains__(self, item):
        members = self._members
        if members is None:
            members = frozenset(self.children)
            self._members = members
        return item in members

    def is_subset(self, other: "SetOf") -> bool:
        return all(c in other for c in self.children)


#: A set-valued Element.  The alias marks positions where only sets are legal.
FinSet = SetOf


# -- interning ---------------------------------------------------------------

_lock = threading.Lock()
_atoms: dict[str, Atom] = {}
_pairs: dict[tuple, Pair] = {}
_sets: dict[tuple, SetOf] = {}


def atom(label: str) -> Atom:
    got = _atoms.get(label)
    if got is not None:
        return got
    if not isinstance(label, str) or not label:
        raise ValueError("atom label must be a non-empty string")
    with _lock:
        got = _atoms.get(label)
        if got is None:
            got = Atom.__new__(Atom)
            got.label = label
            got._hash = hash(("atom", label))
            got._key = None
            _atoms[label] = got
    return got


def pair(first: Element, second: Element) -> Pair:
    key = (first, second)
    got = _pairs.get(key)
    if got is not None:
        return got
    if not isinstance(first, Element) or not isinstance(second, Element):
        raise TypeError("pair components must be Elements")
    with _lock:
        got = _pairs.get(key)
        if got is None:
            got = Pair.__new__(Pair)
            got.first = first
            got.second = second
            got._hash = hash(("pair", first, second))
            got._key = None
            _pairs[key] = got
    return got


def canonicalize(items: Iterable[Element]) -> SetOf:
    """The set whose members are ``items``: deduplicated, sorted, interned."""
    distinct = {c: None for c in items}
    for c in distinct:
        if not isinstance(c, Element):
            raise TypeError(f"set members must be Elements, got {c!r}")
    children = tuple(sorted(distinct, key=Element.sort_key))
    got = _sets.get(children)
    if got is not None:
        return got
    with _lock:
        got = _sets.get(children)
        if got is None:
            got = SetOf.__new__(SetOf)
            got.children = children
            got._members = None
            got._hash = hash(("set", children))
            got._key = None
            _sets[children] = got
    return got


def set_of(*items: Element) -> SetOf:
    return canonicalize(items)


EMPTY = canonicalize(())


def singleton(e: Element) -> SetOf:
    return canonicalize((e,))


# -- set algebra --------------------------------------------------------------

def union(a: SetOf, b: SetOf) -> SetOf:
    return canonicalize(a.children + b.children)


def difference(a: SetOf, b: SetOf) -> SetOf:
    return canonicalize(c for c in a.children if c not in b)


def with_element(a: SetOf, e: Element) -> SetOf:
    if e in a:
        return a
    return canonicalize(a.children + (e,))


def product(a: SetOf, b: SetOf) -> SetOf:
    """The set of pairs (x, y) with x from a, y from b."""
    return canonicalize(pair(x, y) for x in a for y in b)


def power_set(a: SetOf) -> SetOf:
    """The set of all subsets of ``a``.  Costs 2**len(a); use with taste."""
    subsets = [()]
    for c in a.children:
        subsets += [s + (c,) for s in subsets]
    return canonicalize(canonicalize(s) for s in subsets)


def function_space(dom: SetOf, cod: SetOf) -> SetOf:
    """All graphs of total maps dom -> cod, as a set of sets of pairs.

    ``function_space(EMPTY, b)`` is ``{EMPTY}`` — there is exactly one map
    out of the empty set, whatever ``b`` is.  Costs len(cod) ** len(dom).
    """
    xs = dom.children
    graphs = (_iproduct(cod.children, repeat=len(xs)) if xs else ((),))
    return canonicalize(
        canonicalize(pair(x, y) for x, y in zip(xs, ys)) for ys in graphs)


# -- tagging and disjoint unions ----------------------------------------------

#: Labels starting with this prefix are reserved for generated atoms.
RESERVED_PREFIX = "~"

LEFT_TAG = atom("~left")
RIGHT_TAG = atom("~right")


def tag_left(a: SetOf) -> SetOf:
    return canonicalize(pair(c, LEFT_TAG) for c in a)


def tag_right(a: SetOf) -> SetOf:
    return canonicalize(pair(c, RIGHT_TAG) for c in a)


def disjoint_union(a: SetOf, b: SetOf) -> SetOf:
    """Tagged union: copies of a and b that cannot collide."""
    return union(tag_left(a), tag_right(b))


def atoms_of(e: Element) -> Iterator[Atom]:
    """All atoms occurring anywhere inside ``e`` (with repeats)."""
    stack = [e]
    while stack:
        x = stack.pop()
        if isinstance(x, Atom):
            yield x
        elif isinstance(x, Pair):
            stack.append(x.first)
            stack.append(x.second)
        else:
            stack.extend(x.children)


def fresh_atoms(n: int, avoiding: Iterable[Element] = ()) -> list[Atom]:
    """``n`` atoms distinct from every atom inside the given values.

    Freshness is guaranteed by scanning the avoided values for reserved
    labels and starting past the largest one, so the supply is monotone.
    """
    top = 0
    for e in avoiding:
        for a in atoms_of(e):
            m = re.fullmatch(r"~(\d+)", a.label)
            if m:
                top = max(top, int(m.group(1)))
    return [atom(f"~{k}") for k in range(top + 1, top + 1 + n)]


def fresh_atom(avoiding: Iterable[Element] = ()) -> Atom:
    return fresh_atoms(1, avoiding)[0]


# -- text syntax ---------------------------------------------------------------
#
#   atom     a:<label>       label over [A-Za-z0-9_~-]
#   pair     (<elem> . <elem>)
#   set      {<elem> <elem> ...}     also: ∅ for {}
#
# Printing always emits members in canonical order; parsing accepts any
# order and duplicates.

class ParseError(ValueError):
    """Bad element syntax; ``position`` is the offset of the offence."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def format_element(e: Element) -> str:
    if isinstance(e, Atom):
        return f"a:{e.label}"
    if isinstance(e, Pair):
        return f"({format_element(e.first)} . {format_element(e.second)})"
    return "{" + " ".join(format_element(c) for c in e.children) + "}"


_TOKEN = re.compile(r"a:[\w~-]+|[{}().]|∅|\S")


def _tokenize(text: str):
    for m in _TOKEN.finditer(text):
        tok = m.group()
        if tok not in "{}()." and tok != "∅" and not tok.startswith("a:"):
            raise ParseError(f"unexpected character {tok!r}", m.start())
        yield tok, m.start()


def parse_element(text: str) -> Element:
    """Parse the textual syntax above into a value."""
    tokens = list(_tokenize(text))
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, len(text))

    def take(expected=None):
        nonlocal pos
        tok, at = peek()
        if tok is None:
            raise ParseError("unexpected end of input", at)
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok!r}", at)
        pos += 1
        return tok, at

    def element():
        tok, at = peek()
        if tok is None:
            raise ParseError("unexpected end of input", at)
        if tok == "∅":
            take()
            return EMPTY
        if tok.startswith("a:"):
            take()
            return atom(tok[2:])
        if tok == "(":
            take()
            first = element()
            take(".")
            second = element()
            take(")")
            return pair(first, second)
        if tok == "{":
            take()
            members = []
            while True:
                nxt, nat = peek()
                if nxt is None:
                    raise ParseError("unclosed '{'", nat)
                if nxt == "}":
                    take()
                    return canonicalize(members)
                members.append(element())
        raise ParseError(f"unexpected token {tok!r}", at)

    result = element()
    tok, at = peek()
    if tok is not None:
        raise ParseError(f"trailing input {tok!r}", at)
    return result
