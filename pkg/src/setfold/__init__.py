"""Finite sets as a computing substrate.

Everything is built from one canonical, interned universe of
hereditarily finite values (:mod:`setfold.elements`) and one engine —
fold a step function once per member of a finite set
(:mod:`setfold.iterators`).  On top of those sit von Neumann ordinals,
counting-free arithmetic, permutation signs, evaluation orders for
iterated products, subset-counting bijections, minimum chain partitions
of posets, and listings-as-subset-chains, each in its own module, plus a
CLI (``setfold``) and seeded verification suites.
"""

from .elements import (EMPTY, Atom, Element, FinSet, Pair, ParseError,
                       SetOf, atom, atoms_of, canonicalize, difference,
                       disjoint_union, format_element, fresh_atom,
                       fresh_atoms, function_space, pair, parse_element,
                       power_set, product, set_of, singleton, union,
                       with_element)
from .mappings import (Equinumerous, LeftIntoRight, Mapping, NotAGraph,
                       NotSurjective, RightIntoLeft, compare, compose,
                       graph_to_mapping, identity, section)
from .iterators import (FiniteMinimal, IteratorSpec, NotInIterator,
                        PeanoPresumed, PeriodicDecomposition, assign,
                        bracket, classify, cyclic_iterator, depth, fold,
                        iterator_from_text, lift_fin, pred_chain,
                        periodic_decomposition, prim_rec, table_iterator,
                        trace)
from .ordinals import (NotAnOrdinal, alpha, beta, cumulative_iterator,
                       eta, is_ordinal, nest_iterator, ord_compare,
                       ordinal, ordinal_iterator, ordinal_value, psi,
                       rho, sigma)
from .arithmetic import (ArithHandle, DEFAULT_EXP_CAP, add, add_from_sets,
                         leq, mul, mul_from_sets, power, power_from_sets)
from .errors import CapExceeded
from .permutations import (MINUS, PLUS, Perm, Sign,
                           decompose_transpositions, identity_perm,
                           parse_perm, signature, transposition)
from .assoc import (Counterexample, Holds, IndexMismatch,
                    IntervalPartition, Reduction, TableOp,
                    check_gen_assoc, enumerate_reductions,
                    evaluate_reduction, left_fold, left_fold_reduction,
                    parse_op_table)
from .binom import (DeltaSet, EquinumerosityCertificate, NotASubset,
                    canonical_bijection, chain_delta,
                    count_subsets_by_orderings, delta,
                    extend_injections, extend_self_bijections,
                    factor_injections, injections, pascal_bijection,
                    self_bijections, split_self_bijections)
from .posets import (CycleDetected, DilworthResult, Poset, UnknownElement,
                     dilworth, parse_poset, width_oracle)
from .enumerators import (Enumerator, NoHomomorphism, NotAListing,
                          enumerator_from_family, enumerator_from_order,
                          homomorphism, is_enumerator, is_inclusion_chain,
                          is_selector, order_from_enumerator,
                          parse_listing_family, validate_selector,
                          valuation)
from .verify import (CaseResult, SuiteConfig, SuiteReport, UnknownSuite,
                     run_suite, suite_names)

__version__ = "0.1.0"
