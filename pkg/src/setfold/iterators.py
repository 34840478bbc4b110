"""Step-from-a-start structures and folds over finite sets.

An :class:`IteratorSpec` packages a start state and a step function.  Its
central use is the fold :func:`assign`: apply the step once per member of a
finite set.  The result cannot depend on the order the members are taken
in, which is what lets these structures count things without numbers.

Two families of specs exist:

* **table specs** — an explicit finite carrier with a transition table;
  these always cycle eventually and can be decomposed into their periodic
  and pre-periodic parts;
* **generated specs** — symbolic steps (the ordinal builders live in
  :mod:`setfold.ordinals`) equipped with a verified predecessor, which is
  what recursion over states (:func:`prim_rec`) and witness extraction
  (:func:`bracket`) run on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .elements import (EMPTY, Element, FinSet, SetOf, atom,
                       canonicalize, format_element)

__all__ = [
    "IteratorSpec", "NotInIterator",
    "table_iterator", "cyclic_iterator", "iterator_from_text",
    "fold", "assign", "trace",
    "PeriodicDecomposition", "periodic_decomposition",
    "FiniteMinimal", "PeanoPresumed", "classify",
    "pred_chain", "depth", "bracket", "lift_fin", "prim_rec",
]


class NotInIterator(ValueError):
    """A state was used with an iterator that never generates it."""


class IteratorSpec:
    """A start state plus a step; optionally a carrier and a predecessor.

    ``carrier`` marks a table spec (step is total exactly on the carrier).
    ``pred`` marks a generated spec: it must undo the step on every
    generated state, and every use of it here is verified by re-applying
    the step, so a wrong predecessor cannot silently corrupt results.
    """

    __slots__ = ("name", "start", "step", "carrier", "pred")

    def __init__(self, start: Element, step: Callable[[Element], Element],
                 *, name: str = "iterator",
                 carrier: Optional[FinSet] = None,
                 pred: Optional[Callable[[Element], Element]] = None):
        if not isinstance(start, Element):
            raise TypeError("start must be an Element")
        self.start = start
        self.step = step
        self.name = name
        self.carrier = carrier
        self.pred = pred

    @property
    def is_table(self) -> bool:
        return self.carrier is not None

    @property
    def is_generated(self) -> bool:
        return self.pred is not None

    def __repr__(self):
        kind = "table" if self.is_table else "generated"
        return f"<IteratorSpec {self.name} ({kind})>"


def table_iterator(states: Iterable[Element],
                   transitions: dict,
                   start: Element, *, name: str = "table") -> IteratorSpec:
    carrier = canonicalize(states)
    if start not in carrier:
        raise NotInIterator(f"start {format_element(start)} not a state")
    table = dict(transitions)
    for s in carrier:
        if s not in table:
            raise ValueError(f"no transition for state {format_element(s)}")
        if table[s] not in carrier:
            raise ValueError(
                f"transition leaves the carrier at {format_element(s)}")
    if len(table) != len(carrier):
        raise ValueError("transition table mentions unknown states")

    def step(x: Element) -> Element:
        try:
            return table[x]
        except KeyError:
            raise NotInIterator(
                f"{format_element(x)} is not a state of {name}") from None

    return IteratorSpec(start, step, name=name, carrier=carrier)


def cyclic_iterator(m: int) -> IteratorSpec:
    """States 0..m-1 as atoms, step +1 wrapping around, start 0."""
    if m < 1:
        raise ValueError("need at least one state")
    states = [atom(str(i)) for i in range(m)]
    table = {states[i]: states[(i + 1) % m] for i in range(m)}
    return table_iterator(states, table, states[0], name=f"cyclic-{m}")


def iterator_from_text(text: str) -> IteratorSpec:
    """Parse a transition table::

        states: s0 s1 s2
        start: s0
        s0 -> s1
        s1 -> s2
        s2 -> s0

    Bare tokens name atom states.  ``#`` starts a comment.
    """
    states: list[Element] = []
    start: Optional[Element] = None
    table: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("states:"):
            states = [atom(tok) for tok in line[len("states:"):].split()]
        elif line.startswith("start:"):
            toks = line[len("start:"):].split()
            if len(toks) != 1:
                raise ValueError(f"line {lineno}: start wants one state")
            start = atom(toks[0])
        elif "->" in line:
            src, _, dst = line.partition("->")
            if not src.split() or len(src.split()) != 1 or len(dst.split()) != 1:
                raise ValueError(f"line {lineno}: expected 'state -> state'")
            key = atom(src.strip())
            if key in table:
                raise ValueError(
                    f"line {lineno}: second transition for {src.strip()!r}")
            table[key] = atom(dst.strip())
        else:
            raise ValueError(f"line {lineno}: cannot parse {line!r}")
    if not states:
        raise ValueError("missing 'states:' line")
    if start is None:
        raise ValueError("missing 'start:' line")
    return table_iterator(states, table, start)


# -- folding -------------------------------------------------------------------

def fold(spec: IteratorSpec, items: Iterable[Element]) -> Element:
    """Apply the step once per item, starting from the start state."""
    x = spec.start
    for _ in items:
        x = spec.step(x)
    return x


def assign(spec: IteratorSpec, a: FinSet) -> Element:
    """The state a finite set counts up to: one step per member.

    Replacing ``a`` by any set admitting a bijection with it gives the
    same state; the member values themselves never enter the fold.
    """
    if not isinstance(a, SetOf):
        raise TypeError("assign folds over a finite set")
    return fold(spec, a.children)


# -- finite behaviour ------------------------------------------------------------

def trace(spec: IteratorSpec) -> tuple[tuple[Element, ...], tuple[Element, ...]]:
    """The forward orbit of the start split as (tail, cycle).

    Only table specs are guaranteed to terminate here; generated specs
    would run forever, so they are refused.
    """
    if not spec.is_table:
        raise TypeError(f"{spec.name} has no finite orbit to trace")
    seen: dict[Element, int] = {}
    run: list[Element] = []
    x = spec.start
    while x not in seen:
        seen[x] = len(run)
        run.append(x)
        x = spec.step(x)
    entry = seen[x]
    return tuple(run[:entry]), tuple(run[entry:])


@dataclass(frozen=True)
class PeriodicDecomposition:
    """Reachable states split into the cycle and the way in.

    ``merge`` is the unique pair (u, v) — u pre-periodic, v periodic —
    whose images under the step coincide; it is None exactly when the
    start already sits on the cycle.
    """
    periodic: FinSet
    nonperiodic: FinSet
    merge: Optional[tuple[Element, Element]]


def periodic_decomposition(spec: IteratorSpec) -> PeriodicDecomposition:
    tail, cycle = trace(spec)
    if tail:
        merge = (tail[-1], cycle[-1])
    else:
        merge = None
    return PeriodicDecomposition(periodic=canonicalize(cycle),
                                 nonperiodic=canonicalize(tail),
                                 merge=merge)


@dataclass(frozen=True)
class FiniteMinimal:
    """The spec revisited a state: its reachable part is finite."""
    decomposition: PeriodicDecomposition


@dataclass(frozen=True)
class PeanoPresumed:
    """No repeat within the budget; the spec looks free (never proven)."""
    budget: int


def classify(spec: IteratorSpec, budget: int = 512):
    """Walk the orbit up to ``budget`` steps looking for a repeat."""
    seen: dict[Element, int] = {}
    run: list[Element] = []
    x = spec.start
    for _ in range(budget + 1):
        if x in seen:
            entry = seen[x]
            tail, cycle = run[:entry], run[entry:]
            merge = (tail[-1], cycle[-1]) if tail else None
            return FiniteMinimal(PeriodicDecomposition(
                periodic=canonicalize(cycle),
                nonperiodic=canonicalize(tail),
                merge=merge))
        seen[x] = len(run)
        run.append(x)
        x = spec.step(x)
    return PeanoPresumed(budget)


# -- generated specs: descent, witnesses, recursion -----------------------------

def pred_chain(spec: IteratorSpec, x: Element) -> list[Element]:
    """The generation chain start, ..., pred(pred(x)), pred(x), x.

    Every predecessor step is verified by re-applying the step; any
    mismatch means ``x`` was never generated, reported as
    :class:`NotInIterator`.
    """
    if spec.pred is None:
        raise TypeError(f"{spec.name} has no predecessor operation")
    chain = [x]
    cur = x
    while cur != spec.start:
        p = spec.pred(cur)
        if spec.step(p) != cur:
            raise NotInIterator(
                f"{format_element(cur)} is not generated by {spec.name}")
        chain.append(p)
        cur = p
    chain.reverse()
    return chain


def depth(spec: IteratorSpec, x: Element) -> int:
    return len(pred_chain(spec, x)) - 1


def bracket(spec: IteratorSpec, x: Element) -> FinSet:
    """The set of states generated strictly before ``x``.

    This is the canonical witness set for ``x``: folding the spec over it
    lands exactly on ``x``, and its size is the generation depth.
    """
    return canonicalize(pred_chain(spec, x)[:-1])


def lift_fin(spec: IteratorSpec) -> IteratorSpec:
    """The induced iterator on finite sets of states.

    Start is the empty set; the step sends A to {start} ∪ step[A]
    (elementwise image).  On a free spec the lifted spec is free again,
    and its states are exactly the brackets of base states.
    """
    if spec.pred is None:
        raise TypeError("lifting needs a generated spec")
    base_step, base_pred, start = spec.step, spec.pred, spec.start

    def lifted_step(a: Element) -> Element:
        if not isinstance(a, SetOf):
            raise NotInIterator("lifted states are finite sets")
        return canonicalize([start] + [base_step(x) for x in a])

    def lifted_pred(b: Element) -> Element:
        if not isinstance(b, SetOf) or start not in b:
            raise NotInIterator("lifted states all contain the start state")
        return canonicalize(base_pred(y) for y in b if y != start)

    return IteratorSpec(EMPTY, lifted_step,
                        name=f"fin-{spec.name}", pred=lifted_pred)


_MISS = object()


def prim_rec(spec: IteratorSpec, base, rule):
    """Recursion over generated states, with an optional side parameter.

    Returns ``pi`` with ``pi(start, y) == base(y)`` (or ``base`` itself
    when it is not callable) and ``pi(step(x), y) == rule(x, y, pi(x, y))``.
    Values are memoized per returned function, keyed on (state, parameter),
    so parameters must be hashable.
    """
    if spec.pred is None:
        raise TypeError("prim_rec needs a generated spec")

    memo: dict = {}

    def pi(x: Element, param=None):
        got = memo.get((x, param), _MISS)
        if got is not _MISS:
            return got
        chain = pred_chain(spec, x)
        acc = memo.get((chain[0], param), _MISS)
        if acc is _MISS:
            acc = base(param) if callable(base) else base
            memo[(chain[0], param)] = acc
        for prev, cur in zip(chain, chain[1:]):
            nxt = memo.get((cur, param), _MISS)
            if nxt is _MISS:
                nxt = rule(prev, param, acc)
                memo[(cur, param)] = nxt
            acc = nxt
        return acc

    return pi
