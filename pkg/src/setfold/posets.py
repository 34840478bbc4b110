"""Finite partial orders, chain partitions, and width.

The central algorithm decomposes a finite poset into as few chains as
possible while exhibiting an antichain of the same size, which proves the
partition minimal on the spot.  It follows the classical peel-one-maximal-
element recursion: solve the poset without its top element, locate the
union Δ of all maximum antichains there, pick the top member of Δ on each
chain, and either start a fresh chain or extend the chain of some Δ-member
sitting below the removed element.  Every step of that story is asserted
as it is rebuilt, so a wrong decomposition cannot be returned quietly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .elements import (Element, FinSet, atom, canonicalize, format_element)
from .errors import CapExceeded

__all__ = [
    "UnknownElement", "CycleDetected", "Poset", "parse_poset",
    "DilworthResult", "dilworth", "width_oracle",
]


class UnknownElement(ValueError):
    """A relation mentions something outside the carrier."""


class CycleDetected(ValueError):
    """The declared relations order some element below itself."""


class Poset:
    """A finite set with a reflexive, transitive, antisymmetric ≤.

    Built from any generating relations; the closure is computed here and
    antisymmetry is checked, so every constructed Poset is genuinely one.
    """

    __slots__ = ("carrier", "_elems", "_index", "_up", "_down")

    def __init__(self, elems, relations=()):
        self.carrier = canonicalize(elems)
        self._elems = self.carrier.children
        self._index = {e: i for i, e in enumerate(self._elems)}
        n = len(self._elems)
        up = [1 << i for i in range(n)]
        for a, b in relations:
            ia, ib = self._index.get(a), self._index.get(b)
            if ia is None or ib is None:
                missing = a if ia is None else b
                raise UnknownElement(
                    f"{format_element(missing)} is not in the carrier")
            up[ia] |= 1 << ib
        # transitive closure, then antisymmetry
        changed = True
        while changed:
            changed = False
            for i in range(n):
                acc = up[i]
                rest = acc
                while rest:
                    j = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    acc |= up[j]
                if acc != up[i]:
                    up[i] = acc
                    changed = True
        for i in range(n):
            for j in range(n):
                if i != j and up[i] >> j & 1 and up[j] >> i & 1:
                    raise CycleDetected(
                        f"{format_element(self._elems[i])} and "
                        f"{format_element(self._elems[j])} order each "
                        "other")
        down = [0] * n
        for i in range(n):
            rest = up[i]
            while rest:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                down[j] |= 1 << i
        self._up = tuple(up)
        self._down = tuple(down)

    def __len__(self):
        return len(self._elems)

    def _i(self, e: Element) -> int:
        try:
            return self._index[e]
        except KeyError:
            raise UnknownElement(
                f"{format_element(e)} is not in the carrier") from None

    def leq(self, a: Element, b: Element) -> bool:
        return bool(self._up[self._i(a)] >> self._i(b) & 1)

    def comparable(self, a: Element, b: Element) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def maximal_elements(self) -> FinSet:
        return canonicalize(e for i, e in enumerate(self._elems)
                            if self._up[i] == 1 << i)

    def is_chain(self, elems) -> bool:
        xs = list(elems)
        return all(self.comparable(a, b) for a, b in combinations(xs, 2))

    def is_antichain(self, elems) -> bool:
        xs = list(elems)
        return all(not self.comparable(a, b)
                   for a, b in combinations(xs, 2) if a != b)

    def restrict(self, sub: FinSet) -> "Poset":
        for e in sub:
            self._i(e)
        pairs = [(a, b) for a in sub for b in sub
                 if a != b and self.leq(a, b)]
        return Poset(sub, pairs)

    def __repr__(self):
        return f"<Poset on {len(self._elems)} elements>"


def parse_poset(text: str) -> Poset:
    """Parse a poset description::

        elems: a b c d
        a < b    # generating relations; closure is taken
        b < d

    Bare tokens name atoms; ``#`` starts a comment.
    """
    elems: list[Element] | None = None
    pairs: list[tuple[Element, Element]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("elems:"):
            elems = [atom(t) for t in line[len("elems:"):].split()]
            continue
        if "<" in line:
            lhs, _, rhs = line.partition("<")
            ltoks, rtoks = lhs.split(), rhs.split()
            if len(ltoks) != 1 or len(rtoks) != 1:
                raise ValueError(f"line {lineno}: expected 'a < b'")
            pairs.append((atom(ltoks[0]), atom(rtoks[0])))
            continue
        raise ValueError(f"line {lineno}: cannot parse {line!r}")
    if elems is None:
        raise ValueError("missing 'elems:' line")
    return Poset(elems, pairs)


@dataclass(frozen=True)
class DilworthResult:
    """A chain partition and an antichain of the same size.

    Each chain is a tuple in ascending order.  Equal sizes make the
    result self-certifying: no partition can use fewer chains than the
    antichain has elements.
    """

    chains: tuple[tuple[Element, ...], ...]
    antichain: FinSet

    def validate(self, p: Poset) -> bool:
        members = [e for c in self.chains for e in c]
        if canonicalize(members) != p.carrier or \
                len(members) != len(p.carrier):
            return False
        if not all(p.is_chain(c) for c in self.chains):
            return False
        if not p.is_antichain(self.antichain):
            return False
        return len(self.chains) == len(self.antichain)


def dilworth(p: Poset) -> DilworthResult:
    elems = p._elems
    n = len(elems)
    up, down = p._up, p._down
    comp = tuple(up[i] | down[i] for i in range(n))

    width_memo = {0: 0}

    def width(mask: int) -> int:
        got = width_memo.get(mask)
        if got is not None:
            return got
        v = (mask & -mask).bit_length() - 1
        w = max(width(mask & (mask - 1)),      # leave v out
                1 + width(mask & ~comp[v]))    # take v, drop comparables
        width_memo[mask] = w
        return w

    solve_memo: dict[int, tuple] = {}

    def solve(mask: int) -> tuple:
        """(chains, antichain) for the induced sub-poset, as index tuples."""
        if mask == 0:
            return ((), ())
        got = solve_memo.get(mask)
        if got is not None:
            return got
        maximal = [i for i in range(n)
                   if mask >> i & 1 and up[i] & mask == 1 << i]
        s = max(maximal)
        rest = mask ^ (1 << s)
        if rest == 0:
            result = (((s,),), (s,))
            solve_memo[mask] = result
            return result
        chains, _ = solve(rest)
        w = width(rest)
        assert len(chains) == w, "partition of the peeled poset not minimal"
        in_some_max = [i for i in range(n) if rest >> i & 1
                       and 1 + width(rest & ~comp[i]) == w]
        tops = []
        for c in chains:
            hits = [i for i in c if i in in_some_max]
            assert hits, "every chain meets the union of maximum antichains"
            tops.append(hits[-1])      # chains are ascending: last = top
        tops.sort()

        def rebuild_around(d: int):
            """Split d's chain at d; re-solve everything else."""
            chain_d = next(c for c in chains if d in c)
            kept = tuple(i for i in chain_d if up[i] >> d & 1)  # i ≤ d
            removed = 0
            for i in kept:
                removed |= 1 << i
            sub_chains, _ = solve(rest & ~removed)
            assert len(sub_chains) == w - 1, \
                "removing a top segment must drop the width"
            return sub_chains, kept

        below_s = [d for d in tops if up[d] >> s & 1]
        if not below_s:
            sub_chains, kept = rebuild_around(tops[0])
            result_chains = sub_chains + (kept,) + ((s,),)
            anti = tuple(sorted(tops + [s]))
        else:
            sub_chains, kept = rebuild_around(below_s[0])
            result_chains = sub_chains + (kept + (s,),)
            anti = tuple(tops)
        result = (tuple(sorted(result_chains)), anti)
        solve_memo[mask] = result
        return result

    chains, anti = solve((1 << n) - 1)
    result = DilworthResult(
        chains=tuple(ascending_elems(p, c) for c in chains),
        antichain=canonicalize(elems[i] for i in anti))
    assert result.validate(p), "chain partition failed its own audit"
    return result


def ascending_elems(p: Poset, ixs) -> tuple[Element, ...]:
    elems = p._elems
    return tuple(elems[i] for i in
                 sorted(ixs, key=lambda i: bin(p._down[i]).count("1")))


def width_oracle(p: Poset, cap: int = 14) -> FinSet:
    """A maximum antichain by plain exhaustive search.

    Deliberately shares nothing with :func:`dilworth`: subsets are tried
    largest-first in canonical order and the first antichain wins.
    2**n subsets, hence the cap.
    """
    n = len(p.carrier)
    if n > cap:
        raise CapExceeded(f"{n} elements exceed the exhaustive cap {cap}")
    elems = p.carrier.children
    for r in range(n, 0, -1):
        for sub in combinations(elems, r):
            if p.is_antichain(sub):
                return canonicalize(sub)
    return canonicalize(())
