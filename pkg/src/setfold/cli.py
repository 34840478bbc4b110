"""Command-line surface.

One subcommand per major capability: build ordinals, evaluate arithmetic
expressions inside an iterator, sign permutations, decompose posets,
audit operation tables, convert and check listings, and run the seeded
property suites.  Exit codes: 0 success, 1 a check or computation
reported failure, 2 malformed usage or input.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .arithmetic import ArithHandle, add, mul, power
from .assoc import Counterexample, check_gen_assoc, parse_op_table
from .elements import Atom, Element, FinSet, atom, format_element
from .enumerators import (NotAListing, enumerator_from_order,
                          is_inclusion_chain, parse_listing_family,
                          validate_selector)
from .errors import CapExceeded
from .iterators import NotInIterator, cyclic_iterator, iterator_from_text
from .ordinals import ordinal, ordinal_iterator
from .permutations import parse_perm, signature
from .posets import dilworth, parse_poset
from .verify import SuiteConfig, UnknownSuite, run_suite, suite_names

__all__ = ["main"]


def _label(e: Element) -> str:
    """Atoms print as their bare label; everything else in full."""
    return e.label if isinstance(e, Atom) else format_element(e)


def _braced(s: FinSet) -> str:
    return "{" + " ".join(_label(e) for e in s.children) + "}"


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as err:
        raise _BadInput(f"cannot read {path}: {err.strerror}") from None


class _BadInput(Exception):
    """Collects everything that should exit with status 2."""


# -- expression evaluation ----------------------------------------------------

_EXPR_TOKEN = re.compile(r"\d+|[+*^()]|\S")


class _ExprParser:
    """Sums, products and powers over an iterator's states.

    Numerals are iterated step applications from the start state.  ``^``
    binds tightest and associates to the right; its right operand is
    always evaluated in the ordinal iterator, whatever the base lives in.
    """

    def __init__(self, text: str):
        self.toks = _EXPR_TOKEN.findall(text)
        self.pos = 0

    def _peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def _take(self):
        tok = self._peek()
        self.pos += 1
        return tok

    def parse(self, h: ArithHandle) -> Element:
        value = self._sum(h)
        if self._peek() is not None:
            raise _BadInput(f"unexpected {self._peek()!r} in expression")
        return value

    def _sum(self, h):
        value = self._product(h)
        while self._peek() == "+":
            self._take()
            value = add(h, value, self._product(h))
        return value

    def _product(self, h):
        value = self._power(h)
        while self._peek() == "*":
            self._take()
            value = mul(h, value, self._power(h))
        return value

    def _power(self, h):
        base = self._primary(h)
        if self._peek() == "^":
            self._take()
            exponent = self._power(ArithHandle(ordinal_iterator()))
            return power(h, base, exponent)
        return base

    def _primary(self, h):
        tok = self._take()
        if tok is None:
            raise _BadInput("expression ended early")
        if tok.isdigit():
            return h.state_at(int(tok))
        if tok == "(":
            value = self._sum(h)
            if self._take() != ")":
                raise _BadInput("unbalanced parentheses")
            return value
        raise _BadInput(f"unexpected {tok!r} in expression")


def _handle_for(spec_text: str) -> ArithHandle:
    if spec_text == "ordinal":
        return ArithHandle(ordinal_iterator())
    if spec_text.startswith("cyclic:"):
        try:
            m = int(spec_text[len("cyclic:"):])
        except ValueError:
            raise _BadInput("cyclic wants a numeral, e.g. cyclic:5") from None
        if m < 1:
            raise _BadInput("cyclic wants at least one state")
        return ArithHandle(cyclic_iterator(m))
    if spec_text.startswith("table:"):
        try:
            return ArithHandle(iterator_from_text(_read(spec_text[6:])))
        except ValueError as err:
            raise _BadInput(str(err)) from None
    raise _BadInput(f"unknown iterator {spec_text!r}; "
                    "use ordinal, cyclic:<m> or table:<file>")


# -- subcommands --------------------------------------------------------------

def _cmd_ordinal(args) -> int:
    if args.n < 0:
        raise _BadInput("ordinals start at 0")
    print(format_element(ordinal(args.n)))
    return 0


def _cmd_eval(args) -> int:
    h = _handle_for(args.iter)
    try:
        value = _ExprParser(args.expr).parse(h)
    except (CapExceeded, NotInIterator, TypeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    print(_label(value))
    return 0


def _cmd_sign(args) -> int:
    try:
        p = parse_perm(args.perm)
    except ValueError as err:
        raise _BadInput(str(err)) from None
    print(signature(p))
    return 0


def _cmd_dilworth(args) -> int:
    try:
        p = parse_poset(_read(args.file))
    except ValueError as err:
        raise _BadInput(str(err)) from None
    result = dilworth(p)
    print(f"width {len(result.chains)}")
    print("antichain:", " ".join(_label(e) for e in result.antichain.children))
    for chain in result.chains:
        print("chain:", " ".join(_label(e) for e in chain))
    return 0


def _cmd_assoc_check(args) -> int:
    try:
        op = parse_op_table(_read(args.file))
    except ValueError as err:
        raise _BadInput(str(err)) from None
    verdict = check_gen_assoc(op, max_n=args.max_n)
    if isinstance(verdict, Counterexample):
        print("not associative")
        print("tuple:", " ".join(_label(x) for x in verdict.xs))
        print("reduction value:", _label(verdict.value))
        print("left fold value:", _label(verdict.fold_value))
        return 1
    print(f"associative: every reduction up to n={verdict.max_n} agrees "
          f"({verdict.evaluations} evaluations)")
    return 0


def _cmd_enum(args) -> int:
    if args.order is not None:
        try:
            e = enumerator_from_order([atom(t) for t in args.order.split()])
        except NotAListing as err:
            raise _BadInput(str(err)) from None
        for stage in e.chain:
            print(_braced(stage))
        return 0
    try:
        ambient, family = parse_listing_family(_read(args.check))
    except ValueError as err:
        raise _BadInput(str(err)) from None
    try:
        validate_selector(ambient, family)
    except ValueError as err:
        print(f"not a selector: {err}")
        return 1
    if not is_inclusion_chain(family) or ambient not in family:
        print("a selector, but not an enumerator: "
              "members do not form one inclusion chain up to the whole set")
        return 1
    print(f"enumerator of {_braced(ambient)} "
          f"({len(ambient.children)} elements)")
    return 0


def _cmd_verify(args) -> int:
    cfg = SuiteConfig(suite=args.suite, size=args.size, seed=args.seed,
                      cases=args.cases, fmt=args.format)
    try:
        report = run_suite(cfg)
    except UnknownSuite as err:
        raise _BadInput(str(err)) from None
    for line in report.render(args.format):
        print(line)
    return 0 if report.passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="setfold",
        description="Finite sets as a computing substrate: ordinals, "
                    "iterator arithmetic, permutation signs, evaluation "
                    "orders, chain decompositions, listings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ordinal", help="print the n-th von Neumann ordinal")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_ordinal)

    p = sub.add_parser("eval", help="evaluate +, *, ^ inside an iterator")
    p.add_argument("--iter", default="ordinal",
                   help="ordinal | cyclic:<m> | table:<file>")
    p.add_argument("expr", help="e.g. '2+3*4' or '2^(1+2)'")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("sign", help="signature of a permutation")
    p.add_argument("perm", help="e.g. 'x->y y->z z->x'")
    p.set_defaults(func=_cmd_sign)

    p = sub.add_parser("dilworth",
                       help="minimum chain partition of a poset file")
    p.add_argument("file",
                   help="poset file: 'elems: a b c' then 'a<b' lines")
    p.set_defaults(func=_cmd_dilworth)

    p = sub.add_parser("assoc-check",
                       help="audit an operation table for associativity")
    p.add_argument("file",
                   help="op table: 'carrier: a b c' then a row "
                        "'a: a b c' per left operand")
    p.add_argument("--max-n", type=int, default=4,
                   help="largest tuple length to enumerate (default 4)")
    p.set_defaults(func=_cmd_assoc_check)

    p = sub.add_parser("enum", help="listings as growing subset chains")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--order", help="space-separated listing, e.g. 'x y z'")
    group.add_argument("--check", metavar="FILE",
                       help="validate a family file, one {..} subset per line")
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("verify", help="run a seeded property suite")
    p.add_argument("--suite", required=True, choices=suite_names())
    p.add_argument("--size", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--format", choices=("human", "machine"), default="human")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _BadInput as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
