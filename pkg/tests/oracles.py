"""Independent reference implementations used to cross-check the library.

Everything in here works on plain Python data (ints, dicts, tuples) and is
written from the textbook definition of each notion, deliberately avoiding
the library's own algorithms.  When a test asserts a frozen constant, this
module is where that constant came from.
"""

from __future__ import annotations

from itertools import combinations
from math import comb, factorial


# -- permutations ----------------------------------------------------------

def cycle_parity(perm: dict) -> int:
    """Sign of a permutation (given as a dict) via cycle counting.

    A cycle of length L contributes L-1 transpositions, so the sign is
    (-1) ** (n - number_of_cycles).  This shares no machinery with the
    pivot/recursion route the library uses.
    """
    seen = set()
    cycles = 0
    for start in perm:
        if start in seen:
            continue
        cycles += 1
        x = start
        while x not in seen:
            seen.add(x)
            x = perm[x]
    return -1 if (len(perm) - cycles) % 2 else 1


# -- functional graphs / iterators ----------------------------------------

def trace_parts(step, start):
    """Split the forward orbit of ``start`` into (tail, cycle) lists.

    Walks the trace start, f(start), ... until the first repeat.  The
    states before the first re-visited state form the tail; the rest of
    the trace is the cycle, listed from its entry point.
    """
    seen = {}
    trace = []
    x = start
    while x not in seen:
        seen[x] = len(trace)
        trace.append(x)
        x = step(x)
    entry = seen[x]
    return trace[:entry], trace[entry:]


# -- posets ----------------------------------------------------------------

def brute_width(elems, leq):
    """Maximum antichain size by exhaustive subset search (2**n)."""
    elems = list(elems)
    best = 0
    for r in range(len(elems), 0, -1):
        if r <= best:
            break
        for sub in combinations(elems, r):
            if all(not (leq(a, b) or leq(b, a))
                   for a, b in combinations(sub, 2)):
                best = r
                break
    return best


def is_chain(elems, leq):
    return all(leq(a, b) or leq(b, a) for a, b in combinations(elems, 2))


def is_antichain(elems, leq):
    return all(not (leq(a, b) or leq(b, a))
               for a, b in combinations(elems, 2) if a != b)


# -- bracketings -----------------------------------------------------------

def merge_sequences(n: int):
    """All ways to merge n adjacent blocks down to one, one pair at a time.

    Each result is the full sequence of block tuples, from the n singleton
    blocks to the single block covering everything.  Blocks are (lo, hi)
    index windows.
    """
    first = tuple((i, i) for i in range(n))

    def extend(partition):
        if len(partition) == 1:
            yield (partition,)
            return
        for i in range(len(partition) - 1):
            lo = partition[i][0]
            hi = partition[i + 1][1]
            merged = partition[:i] + ((lo, hi),) + partition[i + 2:]
            for rest in extend(merged):
                yield (partition,) + rest

    return list(extend(first))


def bracketings(n: int):
    """Distinct parenthesizations of x0 .. x(n-1), as nested tuples."""
    out = set()
    for seq in merge_sequences(n):
        vals = {(i, i): i for i in range(n)}
        for before, after in zip(seq, seq[1:]):
            # exactly one adjacent pair of `before` was merged
            gone = [b for b in before if b not in after]
            left, right = sorted(gone)
            new = (left[0], right[1])
            vals[new] = (vals[left], vals[right])
        out.add(vals[(n - 1, n - 1) if n == 1 else (0, n - 1)])
    return out


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


# -- counting --------------------------------------------------------------

def binomial(n: int, k: int) -> int:
    return comb(n, k)


def fact(n: int) -> int:
    return factorial(n)
