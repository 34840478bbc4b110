"""Evaluation orders for iterated products, and when they all agree."""

import pytest

from setfold import (CapExceeded, Counterexample, Holds, IndexMismatch,
                     IntervalPartition, Reduction, TableOp, atom,
                     canonicalize, check_gen_assoc, enumerate_reductions,
                     evaluate_reduction, left_fold, left_fold_reduction,
                     pair, parse_op_table)

from oracles import bracketings, catalan, fact, merge_sequences


def _cyclic_op(m):
    xs = [atom(str(i)) for i in range(m)]
    return TableOp(canonicalize(xs),
                   {(a, b): xs[(i + j) % m]
                    for i, a in enumerate(xs) for j, b in enumerate(xs)})


def _monus_op():
    # truncated subtraction on {0,1,2}: not associative
    xs = [atom(str(i)) for i in range(3)]
    return TableOp(canonicalize(xs),
                   {(a, b): xs[max(i - j, 0)]
                    for i, a in enumerate(xs) for j, b in enumerate(xs)})


def test_interval_partition_must_tile():
    IntervalPartition(((0, 1), (2, 3)))
    with pytest.raises(ValueError):
        IntervalPartition(((0, 1), (3, 3)))    # gap
    with pytest.raises(ValueError):
        IntervalPartition(((0, 2), (1, 3)))    # overlap


def test_reduction_validates_each_step():
    singles = IntervalPartition(((0, 0), (1, 1), (2, 2)))
    merged = singles.merge_at(0)
    total = merged.merge_at(0)
    Reduction((singles, merged, total))
    with pytest.raises(ValueError):
        Reduction((singles, total))            # merged two at once
    with pytest.raises(ValueError):
        Reduction((merged, total))             # does not start at singletons


def test_reduction_counts_match_brute_force():
    for n in range(1, 7):
        got = len(enumerate_reductions(n))
        assert got == len(merge_sequences(n)) == fact(n - 1)


def test_reduction_cap():
    with pytest.raises(CapExceeded):
        enumerate_reductions(9)


def test_left_fold_reduction_is_leftmost():
    r = left_fold_reduction(4)
    op = _cyclic_op(5)
    xs = [atom("1")] * 4
    assert evaluate_reduction(op, xs, r) == left_fold(op, xs)
    with pytest.raises(IndexMismatch):
        left_fold(op, [])
    with pytest.raises(IndexMismatch):
        evaluate_reduction(op, xs[:2], r)


def test_all_reductions_agree_on_associative_tables():
    op = _cyclic_op(4)
    xs = [atom(str(k % 4)) for k in range(5)]
    want = left_fold(op, xs)
    for r in enumerate_reductions(5):
        assert evaluate_reduction(op, xs, r) == want


def test_free_magma_value_counts_are_catalan():
    # with pairing as the product, bracketings are fully distinguished
    for n in range(2, 7):
        xs = [atom(str(i)) for i in range(n)]
        values = {evaluate_reduction(pair, xs, r)
                  for r in enumerate_reductions(n)}
        assert len(values) == catalan(n - 1) == len(bracketings(n))


def test_check_gen_assoc_verdicts():
    verdict = check_gen_assoc(_cyclic_op(3), max_n=4)
    assert isinstance(verdict, Holds)
    assert verdict.max_n == 4
    assert verdict.evaluations > 0

    bad = check_gen_assoc(_monus_op(), max_n=4)
    assert isinstance(bad, Counterexample)
    op = _monus_op()
    assert evaluate_reduction(op, bad.xs, bad.reduction) == bad.value
    assert left_fold(op, bad.xs) == bad.fold_value
    assert bad.value != bad.fold_value
    assert len(bad.xs) == 3                    # a triple already fails


def test_table_op_validation():
    xs = [atom("a"), atom("b")]
    with pytest.raises(ValueError):
        TableOp(canonicalize(xs), {(xs[0], xs[0]): xs[0]})   # not total
    with pytest.raises(ValueError):
        TableOp(canonicalize(xs),
                {(a, b): atom("q") for a in xs for b in xs})  # leaves carrier


def test_parse_op_table_round_trip():
    op = parse_op_table("""
        carrier: a b c
        a: a b c
        b: b c a
        c: c a b
    """)
    assert op(atom("b"), atom("c")) == atom("a")
    assert isinstance(check_gen_assoc(op, max_n=3), Holds)
    with pytest.raises(ValueError):
        parse_op_table("carrier: a b\na: a\nb: b a")          # short row
