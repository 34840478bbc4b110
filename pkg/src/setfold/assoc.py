"""Bracketing-free products: interval partitions and their reductions.

A *reduction* is a full merge history: start from the singleton blocks of
positions 0..n-1 and repeatedly amalgamate one adjacent pair of blocks
until a single block remains.  Every reduction evaluates a tuple under a
binary operation (each merge multiplies the two block values); for an
associative operation every reduction agrees with the plain left fold,
and :func:`check_gen_assoc` verifies exactly that, by enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce as _reduce
from itertools import product as _iproduct
from typing import Callable, Sequence

from .elements import Element, atom
from .errors import CapExceeded

__all__ = [
    "IndexMismatch", "IntervalPartition", "Reduction",
    "left_fold", "left_fold_reduction", "enumerate_reductions",
    "evaluate_reduction",
    "TableOp", "parse_op_table",
    "Holds", "Counterexample", "check_gen_assoc",
]


class IndexMismatch(ValueError):
    """Tuple length and reduction size disagree."""


@dataclass(frozen=True)
class IntervalPartition:
    """Contiguous blocks (lo, hi) covering positions 0..n-1 in order."""

    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("a partition needs at least one block")
        expect = 0
        for lo, hi in self.blocks:
            if lo != expect or hi < lo:
                raise ValueError(f"blocks must tile 0..n-1, got {self.blocks}")
            expect = hi + 1

    @property
    def n(self) -> int:
        return self.blocks[-1][1] + 1

    def merge_at(self, i: int) -> "IntervalPartition":
        """Amalgamate blocks i and i+1."""
        if not 0 <= i < len(self.blocks) - 1:
            raise IndexError(f"no adjacent pair at {i}")
        lo = self.blocks[i][0]
        hi = self.blocks[i + 1][1]
        return IntervalPartition(
            self.blocks[:i] + ((lo, hi),) + self.blocks[i + 2:])


def _singletons(n: int) -> IntervalPartition:
    return IntervalPartition(tuple((i, i) for i in range(n)))


@dataclass(frozen=True)
class Reduction:
    """A complete merge history, from singletons down to one block.

    Storing the whole partition sequence keeps distinct histories
    distinct: no two different merge orders produce the same sequence.
    """

    steps: tuple[IntervalPartition, ...]

    def __post_init__(self):
        if not self.steps:
            raise ValueError("empty reduction")
        n = self.steps[0].n
        if self.steps[0] != _singletons(n):
            raise ValueError("a reduction starts from singleton blocks")
        if len(self.steps[-1].blocks) != 1:
            raise ValueError("a reduction ends in a single block")
        for a, b in zip(self.steps, self.steps[1:]):
            if b not in {a.merge_at(i) for i in range(len(a.blocks) - 1)}:
                raise ValueError("consecutive partitions must differ by "
                                 "one adjacent amalgamation")

    @property
    def n(self) -> int:
        return self.steps[0].n


def left_fold(op: Callable, xs: Sequence) -> object:
    """Fold a non-empty sequence from the left: ((x0 op x1) op x2) ..."""
    if not xs:
        raise IndexMismatch("cannot fold an empty tuple")
    return _reduce(op, xs)


def left_fold_reduction(n: int) -> Reduction:
    """The reduction that always merges the leftmost pair."""
    steps = [_singletons(n)]
    while len(steps[-1].blocks) > 1:
        steps.append(steps[-1].merge_at(0))
    return Reduction(tuple(steps))


def enumerate_reductions(n: int, cap: int = 7) -> list[Reduction]:
    """Every reduction of n positions.  There are a lot of them —
    (n-1)·(n-2)···1 merge orders — hence the cap."""
    if n < 1:
        raise ValueError("need at least one position")
    if n > cap:
        raise CapExceeded(f"enumerating reductions of {n} positions "
                          f"exceeds cap {cap}")
    out: list[Reduction] = []

    def walk(prefix: list[IntervalPartition]):
        last = prefix[-1]
        if len(last.blocks) == 1:
            out.append(Reduction(tuple(prefix)))
            return
        for i in range(len(last.blocks) - 1):
            walk(prefix + [last.merge_at(i)])

    walk([_singletons(n)])
    return out


def evaluate_reduction(op: Callable, xs: Sequence, r: Reduction) -> object:
    """Evaluate a tuple along a merge history.

    Each amalgamation multiplies the value of the left block by the value
    of the right block, so the history fully determines the bracketing.
    """
    if len(xs) != r.n:
        raise IndexMismatch(
            f"tuple of length {len(xs)} under a reduction of {r.n}")
    vals = {(i, i): xs[i] for i in range(r.n)}
    for before, after in zip(r.steps, r.steps[1:]):
        gone = sorted(set(before.blocks) - set(after.blocks))
        left, right = gone
        vals[(left[0], right[1])] = op(vals[left], vals[right])
    return vals[r.steps[-1].blocks[0]]


# -- finite operation tables --------------------------------------------------

class TableOp:
    """A binary operation given by its full table over a finite carrier."""

    __slots__ = ("carrier", "table")

    def __init__(self, carrier: Sequence[Element], table: dict):
        self.carrier = tuple(carrier)
        members = set(self.carrier)
        if len(members) != len(self.carrier):
            raise ValueError("carrier lists an element twice")
        for a in self.carrier:
            for b in self.carrier:
                if (a, b) not in table:
                    raise ValueError(f"table misses ({a!r}, {b!r})")
                if table[(a, b)] not in members:
                    raise ValueError("table leaves the carrier")
        self.table = dict(table)

    def __call__(self, a: Element, b: Element) -> Element:
        return self.table[(a, b)]

    def associativity_counterexample(self):
        """A violating triple (a, b, c), or None if the table associates."""
        for a, b, c in _iproduct(self.carrier, repeat=3):
            if self.table[(self.table[(a, b)], c)] \
                    != self.table[(a, self.table[(b, c)])]:
                return (a, b, c)
        return None

    def __repr__(self):
        return f"<TableOp on {len(self.carrier)} elements>"


def parse_op_table(text: str) -> TableOp:
    """Parse a multiplication table::

        carrier: a b c
        a: a b c
        b: b c a
        c: c a b

    Row label then the row's products, columns in carrier order.
    """
    carrier: list[Element] = []
    rows: dict[Element, list[Element]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(":")
        if not _:
            raise ValueError(f"line {lineno}: expected 'label: ...'")
        if head.strip() == "carrier":
            carrier = [atom(t) for t in rest.split()]
            continue
        row = atom(head.strip())
        if row in rows:
            raise ValueError(f"line {lineno}: duplicate row")
        rows[row] = [atom(t) for t in rest.split()]
    if not carrier:
        raise ValueError("missing 'carrier:' line")
    table = {}
    for r in carrier:
        if r not in rows:
            raise ValueError(f"missing row for {r!r}")
        if len(rows[r]) != len(carrier):
            raise ValueError(f"row for {r!r} has the wrong width")
        for c, v in zip(carrier, rows[r]):
            table[(r, c)] = v
    if len(rows) != len(carrier):
        raise ValueError("rows for elements outside the carrier")
    return TableOp(carrier, table)


# -- the general associativity check ------------------------------------------

@dataclass(frozen=True)
class Holds:
    max_n: int
    evaluations: int


@dataclass(frozen=True)
class Counterexample:
    xs: tuple
    reduction: Reduction
    value: object
    fold_value: object


def check_gen_assoc(op: TableOp, max_n: int = 4,
                    cap: int = 7):
    """Do all reductions of all tuples agree with the left fold?

    For an associative table this is a theorem and the answer is a
    (checked!) :class:`Holds`; a non-associative table is convicted by a
    triple and the reduction that brackets it the other way.
    """
    bad = op.associativity_counterexample()
    if bad is not None:
        r = Reduction((_singletons(3), _singletons(3).merge_at(1),
                       _singletons(3).merge_at(1).merge_at(0)))
        value = evaluate_reduction(op, bad, r)
        return Counterexample(bad, r, value, left_fold(op, bad))
    done = 0
    for n in range(1, max_n + 1):
        reductions = enumerate_reductions(n, cap=max(cap, max_n))
        for xs in _iproduct(op.carrier, repeat=n):
            want = left_fold(op, xs)
            for r in reductions:
                got = evaluate_reduction(op, xs, r)
                done += 1
                if got != want:  # pragma: no cover - would refute a theorem
                    return Counterexample(xs, r, got, want)
    return Holds(max_n, done)
