"""Seeded property suites, one per module, for the ``verify`` command.

Every suite draws all of its randomness from a single ``random.Random``
seeded by the config, so a (suite, size, seed, cases) quadruple always
reproduces the same case list bit for bit.  Each case is audited against
a check that does not share code with the implementation under test —
counting, brute-force search, or a textbook formula — and reports
``PASS``/``FAIL`` under a stable case id.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable, Iterable, Iterator

from .arithmetic import ArithHandle, add, add_from_sets, mul, mul_from_sets
from .assoc import (TableOp, check_gen_assoc, Counterexample,
                    enumerate_reductions, evaluate_reduction, left_fold)
from .binom import delta, pascal_bijection
from .elements import (Element, FinSet, atom, canonicalize,
                       format_element, pair)
from .enumerators import enumerator_from_order, homomorphism, valuation
from .iterators import (assign, cyclic_iterator, classify, fold,
                        FiniteMinimal, periodic_decomposition,
                        table_iterator)
from .mappings import Mapping
from .ordinals import (nest_iterator, ord_compare, ordinal, ordinal_iterator,
                       ordinal_value, rho)
from .permutations import Perm, signature
from .posets import Poset, dilworth, width_oracle

__all__ = ["SuiteConfig", "CaseResult", "SuiteReport", "UnknownSuite",
           "run_suite", "suite_names"]


class UnknownSuite(ValueError):
    """No property suite is registered under that name."""


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    size: int = 5
    seed: int = 0
    cases: int = 100
    fmt: str = "human"


@dataclass(frozen=True)
class CaseResult:
    case_id: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    results: tuple[CaseResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> tuple[CaseResult, ...]:
        return tuple(r for r in self.results if not r.passed)

    def render(self, fmt: str = "human") -> list[str]:
        if fmt == "machine":
            return [f"{'PASS' if r.passed else 'FAIL'} {r.case_id}"
                    for r in self.results]
        lines = []
        for r in self.failures:
            lines.append(f"FAIL {r.case_id}: {r.detail or 'check failed'}")
        lines.append(f"{self.suite}: {len(self.results)} cases, "
                     f"{len(self.results) - len(self.failures)} passed, "
                     f"{len(self.failures)} failed")
        return lines


# -- shared randomized builders ----------------------------------------------

def _atoms(n: int) -> list[Element]:
    return [atom(str(i)) for i in range(n)]


def _random_self_map(rng: random.Random, n: int) -> Mapping:
    carrier = canonicalize(_atoms(n))
    elems = list(carrier)
    graph = [(x, rng.choice(elems)) for x in elems]
    return Mapping(carrier, carrier, graph)


def _random_element(rng: random.Random, depth: int = 2) -> Element:
    kind = rng.randrange(3) if depth > 0 else 0
    if kind == 0:
        return atom(rng.choice("abcdefgh"))
    if kind == 1:
        return pair(_random_element(rng, depth - 1),
                    _random_element(rng, depth - 1))
    return canonicalize(_random_element(rng, depth - 1)
                        for _ in range(rng.randrange(3)))


def _random_fin_set(rng: random.Random, max_size: int) -> FinSet:
    return canonicalize(_random_element(rng)
                        for _ in range(rng.randint(0, max_size)))


def _random_poset(rng: random.Random, n: int) -> Poset:
    """A random partial order: edges only forward along a shuffled axis."""
    elems = _atoms(n)
    axis = elems[:]
    rng.shuffle(axis)
    relations = []
    for i, j in combinations(range(n), 2):
        if rng.random() < 0.3:
            relations.append((axis[i], axis[j]))
    return Poset(elems, relations)


def _cycle_parity(p: Perm) -> int:
    """(-1)^(n - #cycles), counted by walking the orbits."""
    seen: set = set()
    sign = 1
    for x in p.carrier:
        if x in seen:
            continue
        length = 0
        y = x
        while y not in seen:
            seen.add(y)
            y = p(y)
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# -- the suites ---------------------------------------------------------------

def _suite_fs(cfg: SuiteConfig, rng: random.Random) -> Iterator[CaseResult]:
    """Self-maps of a finite set: injective and surjective coincide."""
    for i in range(cfg.cases):
        n = rng.randint(1, max(1, cfg.size))
        m = _random_self_map(rng, n)
        ok = m.is_injective() == m.is_surjective()
        detail = ""
        if ok and m.is_bijective():
            back = m.compose(m.inverse())
            ok = all(back(x) == x for x in m.domain)
            detail = "" if ok else "inverse is not a right inverse"
        elif not ok:
            detail = (f"size {n}: injective={m.is_injective()} "
                      f"surjective={m.is_surjective()}")
        yield CaseResult(f"fs/{i:04d}", ok, detail)


def _suite_ordinal(cfg: SuiteConfig, rng: random.Random) -> Iterator[CaseResult]:
    """Trichotomy on ordinal pairs; rho lands on a same-size ordinal, idempotently."""
    for i in range(cfg.cases):
        m = rng.randint(0, cfg.size)
        n = rng.randint(0, cfg.size)
        cmp = ord_compare(ordinal(m), ordinal(n))
        ok = cmp == (m > n) - (m < n)
        detail = "" if ok else f"ord_compare({m},{n}) = {cmp}"
        if ok:
            a = _random_fin_set(rng, cfg.size)
            r = rho(a)
            ok = ordinal_value(r) == len(a.children) and rho(r) == r
            if not ok:
                detail = f"rho failed on {format_element(a)}"
        yield CaseResult(f"ordinal/{i:04d}", ok, detail)


def _suite_arithmetic(cfg: SuiteConfig, rng: random.Random) -> Iterator[CaseResult]:
    """Sums/products on the ordinal iterator count right; cyclic tables wrap."""
    h_ord = ArithHandle(ordinal_iterator())
    for i in range(cfg.cases):
        a = rng.randint(0, cfg.size)
        b = rng.randint(0, cfg.size)
        x, y = ordinal(a), ordinal(b)
        ok = (ordinal_value(add(h_ord, x, y)) == a + b
              and ordinal_value(mul(h_ord, x, y)) == a * b
              and add_from_sets(h_ord, x, y) == add(h_ord, x, y)
              and mul_from_sets(h_ord, x, y) == mul(h_ord, x, y))
        detail = "" if ok else f"ordinal route broke at {a},{b}"
        if ok:
            m = rng.randint(1, max(2, cfg.size))
            h = ArithHandle(cyclic_iterator(m))
            p, q = rng.randrange(m), rng.randrange(m)
            s = add(h, atom(str(p)), atom(str(q)))
            t = mul(h, atom(str(p)), atom(str(q)))
            ok = s == atom(str((p + q) % m)) and t == atom(str((p * q) % m))
            if not ok:
                detail = f"cyclic-{m} route broke at {p},{q}"
        yield CaseResult(f"arithmetic/{i:04d}", ok, detail)


def _suite_signature(cfg: SuiteConfig, rng: random.Random) -> Iterator[CaseResult]:
    """Sign agrees with cycle parity; multiplicative; pivot choice is moot.

    Exhaustive over all permutations when the carrier has at most six
    elements, sampled (``cases`` draws) beyond that.
    """
    carrier = _atoms(cfg.size)
    ground = canonicalize(carrier)
    if cfg.size <= 6:
        pool: Iterable = permutations(carrier)
    else:
        pool = (rng.sample(carrier, cfg.size) for _ in range(cfg.cases))
    for i, image in enumerate(pool):
        p = Perm(ground, dict(zip(carrier, image)))
        shuffled = carrier[:]
        rng.shuffle(shuffled)
        q = Perm(ground, dict(zip(carrier, shuffled)))
        s = signature(p)
        ok = (s.value == _cycle_parity(p)
              and signature(p, pivot="min") == s
              and signature(p.compose(q)) == s * signature(q))
        yield CaseResult(f"signature/{i:04d}", ok,
                         "" if ok else f"sign audit failed on {p!r}")


def _assoc_ops(rng: random.Random) -> TableOp:
    """Draw from a pool of associative tables (groups, semilattices, bands)."""
    m = rng.randint(1, 4)
    xs = _atoms(m)
    style = rng.randrange(4)
    if style == 0:    # cyclic addition
        table = {(a, b): xs[(i + j) % m]
                 for i, a in enumerate(xs) for j, b in enumerate(xs)}
    elif style == 1:  # max semilattice
        table = {(a, b): xs[max(i, j)]
                 for i, a in enumerate(xs) for j, b in enumerate(xs)}
    elif style == 2:  # left projection
        table = {(a, b): a for a in xs for b in xs}
    else:             # constant
        k = rng.choice(xs)
        table = {(a, b): k for a in xs for b in xs}
    return TableOp(canonicalize(xs), table)


def _suite_assoc(cfg: SuiteConfig, rng: random.Random) -> Iterator[CaseResult]:
    """Every reduction of a tuple over an associative table = the left fold."""
    for i in range(cfg.cases):
        op = _assoc_ops(rng)
        n = rng.randint(1, min(cfg.size, 5))
        xs = [rng.choice(list(op.carrier)) for _ in range(n)]
        want = left_fold(op, xs)
        ok = all(evaluate_reduction(op, xs, r) == want
                 for r in enumerate_reductions(n))
        yield CaseResult(f"assoc/{i:04d}", ok,
                         "" if ok else f"reduction disagreed on {xs}")
    three = _atoms(3)
    bad = TableOp(canonicalize(three),
                  {(a, b): three[(i - j) % 3]
                   for i, a in enumerate(three) for j, b in enumerate(three)})
    verdict = check_gen_assoc(bad, max_n=3)
    yield CaseResult("assoc/counterexample", isinstance(verdict, Counterexample),
                     "" if isinstance(verdict, Counterexample)
                     else "non-associative table passed")


def _suite_binom(cfg: SuiteConfig, rng: random.Random) -> Iterator[CaseResult]:
    """Pascal's bijection verifies; subset counts match the formula."""
    for i in range(cfg.cases):
        n = rng.randint(1, min(max(cfg.size, 1), 8))
        elems = _atoms(n)
        a_set = canonicalize(elems)
        b_members = [e for e in elems if rng.random() < 0.5]
        if len(b_members) == n:
            b_members.pop(rng.randrange(n))
        b_set = canonicalize(b_members)
        cert = pascal_bijection(a_set, b_set, atom("new"),
                                rng.choice([e for e in elems
                                            if e not in b_members]))
        k = len(b_set.children)
        ok = (cert.verify()
              and len(delta(a_set, b_set).members.children)
              == math.comb(n, k))
        yield CaseResult(f"binom/{i:04d}", ok,
                         "" if ok else f"pascal audit failed, n={n} k={k}")


def _suite_dilworth(cfg: SuiteConfig, rng: random.Random) -> Iterator[CaseResult]:
    """Chain decompositions validate and meet the brute-force width."""
    for i in range(cfg.cases):
        p = _random_poset(rng, rng.randint(1, cfg.size))
        r = dilworth(p)
        ok = r.validate(p) and len(r.chains) == len(r.antichain.children)
        if ok and len(p) <= 12:
            ok = len(r.chains) == len(width_oracle(p).children)
        yield CaseResult(f"dilworth/{i:04d}", ok,
                         "" if ok else f"decomposition audit failed, case {i}")


def _suite_enums(cfg: SuiteConfig, rng: random.Random) -> Iterator[CaseResult]:
    """Listings round-trip; stage maps are bijections; valuations = assignments."""
    for i in range(cfg.cases):
        n = rng.randint(0, min(cfg.size, 6))
        elems = _atoms(n)
        first, second = elems[:], elems[:]
        rng.shuffle(first)
        rng.shuffle(second)
        e1 = enumerator_from_order(first)
        e2 = enumerator_from_order(second)
        h = homomorphism(e1, e2)
        spec = cyclic_iterator(rng.randint(1, 6))
        ok = (list(e1.added) == first
              and enumerator_from_order(e1.added) == e1
              and h.is_bijective()
              and all(h(u) == v for u, v in zip(e1.chain, e2.chain))
              and valuation(nest_iterator(), e1) == assign(
                  nest_iterator(), e1.ambient)
              and valuation(spec, e1) == valuation(spec, e2))
        yield CaseResult(f"enums/{i:04d}", ok,
                         "" if ok else f"listing audit failed on {first}")


def _suite_iterator(cfg: SuiteConfig, rng: random.Random) -> Iterator[CaseResult]:
    """Tail/cycle decomposition matches a bare walk; folds ignore order."""
    for i in range(cfg.cases):
        n = rng.randint(1, max(1, cfg.size))
        elems = _atoms(n)
        table = {x: rng.choice(elems) for x in elems}
        spec = table_iterator(elems, table, elems[0], name=f"case-{i}")
        # independent walk: first repeat splits tail from cycle
        path, seen = [], {}
        x = spec.start
        while x not in seen:
            seen[x] = len(path)
            path.append(x)
            x = spec.step(x)
        tail, cycle = path[:seen[x]], path[seen[x]:]
        d = periodic_decomposition(spec)
        ok = (d.nonperiodic == canonicalize(tail)
              and d.periodic == canonicalize(cycle)
              and d.merge == ((tail[-1], cycle[-1]) if tail else None)
              and isinstance(classify(spec), FiniteMinimal))
        if ok:
            members = list(_random_fin_set(rng, cfg.size))
            target = fold(spec, members)
            for _ in range(5):
                rng.shuffle(members)
                ok = ok and fold(spec, members) == target
            # pigeonhole: counting past the orbit revisits a state
            ok = ok and fold(spec, range(len(tail))) == fold(
                spec, range(len(tail) + len(cycle)))
        yield CaseResult(f"iterator/{i:04d}", ok,
                         "" if ok else f"orbit audit failed on {table}")


_SUITES: dict[str, Callable[[SuiteConfig, random.Random],
                            Iterator[CaseResult]]] = {
    "fs": _suite_fs,
    "ordinal": _suite_ordinal,
    "arithmetic": _suite_arithmetic,
    "signature": _suite_signature,
    "assoc": _suite_assoc,
    "binom": _suite_binom,
    "dilworth": _suite_dilworth,
    "enums": _suite_enums,
    "iterator": _suite_iterator,
}


def suite_names() -> tuple[str, ...]:
    return tuple(sorted(_SUITES))


def run_suite(cfg: SuiteConfig) -> SuiteReport:
    """Run one named suite; results come back sorted by case id."""
    try:
        suite = _SUITES[cfg.suite]
    except KeyError:
        raise UnknownSuite(
            f"unknown suite {cfg.suite!r}; pick one of "
            + ", ".join(suite_names())) from None
    rng = random.Random(cfg.seed)
    results = sorted(suite(cfg, rng), key=lambda r: r.case_id)
    return SuiteReport(cfg.suite, tuple(results))
