"""Sum, product and power on the states of a minimal iterator.

The operations are defined by what they do to witness sets: adding means
folding over a disjoint union, multiplying over a cartesian product, and
exponentiating over a function space.  Each operation here is computed by
the cheap rewrite route (peel one generator off the right operand at a
time); the set-construction routes are exported alongside so tests can
check the two never disagree.
"""

from __future__ import annotations

from .elements import (Element, FinSet, canonicalize, disjoint_union,
                       format_element, function_space, product)
from .errors import CapExceeded
from .iterators import (IteratorSpec, NotInIterator, assign, bracket, depth,
                        pred_chain, trace)

__all__ = [
    "ArithHandle", "DEFAULT_EXP_CAP",
    "add", "add_from_sets", "mul", "mul_from_sets",
    "power", "power_from_sets", "leq",
]

#: Largest exponent depth ``power`` accepts by default; results grow as
#: base**exponent states, so this keeps them representable.
DEFAULT_EXP_CAP = 16


class ArithHandle:
    """Arithmetic context for one iterator.

    Table specs are restricted to the states actually reachable from the
    start (the operations are only meaningful there); generated specs are
    used through their verified predecessor.
    """

    __slots__ = ("spec", "_run", "_index", "_tail", "_cycle", "_depths")

    def __init__(self, spec: IteratorSpec):
        self.spec = spec
        self._depths: dict[Element, int] = {}
        if spec.is_table:
            tail, cycle = trace(spec)
            self._run = tail + cycle
            self._index = {s: i for i, s in enumerate(self._run)}
            self._tail = len(tail)
            self._cycle = len(cycle)
        elif spec.is_generated:
            self._run = None
            self._index = None
            self._tail = self._cycle = 0
        else:
            raise TypeError("handle needs a table or a generated spec")

    @property
    def is_free(self) -> bool:
        """True for generated specs (no state is ever revisited)."""
        return self._run is None

    @property
    def states(self) -> FinSet | None:
        """Reachable states for table handles, None for generated ones."""
        return canonicalize(self._run) if self._run is not None else None

    @property
    def step_injective(self) -> bool:
        """Injectivity of the step on the reachable states.

        For an orbit this happens exactly when the start itself is
        periodic, i.e. there is no tail.
        """
        if self._run is None:
            return True
        return self._tail == 0

    @property
    def one(self) -> Element:
        """The step applied once to the start: the unit for ``mul``."""
        return self.spec.step(self.spec.start)

    def count(self, x: Element) -> int:
        """How many steps from the start first produce ``x``.

        Also the membership check: unknown states raise NotInIterator.
        """
        if self._index is not None:
            try:
                return self._index[x]
            except KeyError:
                raise NotInIterator(
                    f"{format_element(x)} is not reachable in "
                    f"{self.spec.name}") from None
        got = self._depths.get(x)
        if got is None:
            got = depth(self.spec, x)
            self._depths[x] = got
        return got

    def state_at(self, k: int) -> Element:
        if k < 0:
            raise ValueError("no states before the start")
        if self._run is not None:
            if k < len(self._run):
                return self._run[k]
            return self._run[self._tail + (k - self._tail) % self._cycle]
        x = self.spec.start
        for _ in range(k):
            x = self.spec.step(x)
        return x

    def witness(self, x: Element) -> FinSet:
        """A finite set that folds exactly to ``x``.

        Generated specs hand back the bracket (all states strictly
        earlier); table specs the initial stretch of their own orbit.
        """
        if self._run is None:
            return bracket(self.spec, x)
        return canonicalize(self._run[:self.count(x)])

    def __repr__(self):
        return f"<ArithHandle over {self.spec.name}>"


def add(h: ArithHandle, x: Element, y: Element) -> Element:
    """x ⊕ y: step once per member of a witness for y, starting at x."""
    h.count(x)
    cur = x
    for _ in h.witness(y):
        cur = h.spec.step(cur)
    return cur


def add_from_sets(h: ArithHandle, x: Element, y: Element) -> Element:
    """x ⊕ y computed from scratch: fold over a tagged disjoint union."""
    return assign(h.spec, disjoint_union(h.witness(x), h.witness(y)))


def mul(h: ArithHandle, x: Element, y: Element) -> Element:
    """x ⊗ y by the rewrite rules: start at the start, add x once per
    generator of y."""
    h.count(x)
    acc = h.spec.start
    for _ in range(h.count(y)):
        acc = add(h, x, acc)
    return acc


def mul_from_sets(h: ArithHandle, x: Element, y: Element) -> Element:
    """x ⊗ y computed as one fold over the product of two witnesses."""
    return assign(h.spec, product(h.witness(x), h.witness(y)))


def _exponent_spec(exponent: IteratorSpec | None) -> IteratorSpec:
    if exponent is None:
        from .ordinals import ordinal_iterator
        return ordinal_iterator()
    if exponent.is_table or not exponent.is_generated:
        raise TypeError("the exponent must live in a generated (free) "
                        "iterator; table iterators wrap around and have "
                        "no well-defined power")
    return exponent


def power(h: ArithHandle, x: Element, y: Element, *,
          exponent: IteratorSpec | None = None,
          cap: int = DEFAULT_EXP_CAP) -> Element:
    """x ↑ y with the exponent y taken from a free iterator.

    Peeling one generator off y at a time: x ↑ start is the unit, and
    x ↑ step(y') is x ⊗ (x ↑ y').  The exponent's depth is capped
    (default 16) because the result needs base**exponent fold steps.
    """
    exp = _exponent_spec(exponent)
    d = depth(exp, y)
    if d > cap:
        raise CapExceeded(f"exponent depth {d} exceeds cap {cap}")
    h.count(x)
    acc = h.one
    for _ in range(d):
        acc = mul(h, x, acc)
    return acc


def power_from_sets(h: ArithHandle, x: Element, y: Element, *,
                    exponent: IteratorSpec | None = None,
                    cap: int = DEFAULT_EXP_CAP) -> Element:
    """x ↑ y as one fold over a function space of witnesses.

    Builds every map from a witness of y into a witness of x and folds
    over them all; exponential in size, meant for cross-checking.
    """
    exp = _exponent_spec(exponent)
    wy = bracket(exp, y)
    if len(wy) > cap:
        raise CapExceeded(f"exponent depth {len(wy)} exceeds cap {cap}")
    return assign(h.spec, function_space(wy, h.witness(x)))


def leq(h: ArithHandle, x: Element, y: Element) -> bool:
    """x ≤ y: does x occur on y's generation chain?

    Only meaningful on free iterators, where the chain is the whole
    history of y; table handles are refused.
    """
    if not h.is_free:
        raise TypeError("leq needs a free iterator (states repeat in "
                        f"{h.spec.name})")
    h.count(x)
    return x in pred_chain(h.spec, y)
