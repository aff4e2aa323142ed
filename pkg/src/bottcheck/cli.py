"""Command-line front end.

Subcommands map one-to-one onto the evaluators; every command with two
computation paths exits nonzero when they disagree, so the CLI doubles
as a verification harness.  Output is deterministic: identical inputs
produce byte-identical output.  Exit codes: 0 success, 1 dual-path
mismatch, 2 input error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from . import bottcases, theorems
from .chow import GradedClass, H_class, LineBase4, PlaneBase2, U_class, unit
from .exact import Affine
from .rr import HypothesisViolation, f_formula, f_splitting_oracle


class InputError(ValueError):
    pass


# --- bundle expressions ----------------------------------------------------


@dataclass(frozen=True)
class BundleExpr:
    base: str  # "P1" or "P2"
    twists: Optional[Tuple[int, ...]] = None
    c1c2: Optional[Tuple[int, int]] = None

    def render(self) -> str:
        if self.c1c2 is not None:
            return f"{self.base}: rank2(c1={self.c1c2[0]},c2={self.c1c2[1]})"
        terms = []
        i = 0
        twists = self.twists or ()
        while i < len(twists):
            j = i
            while j < len(twists) and twists[j] == twists[i]:
                j += 1
            if j - i == 1:
                terms.append(f"O({twists[i]})")
            else:
                terms.append(f"O({twists[i]})^{j - i}")
            i = j
        return f"{self.base}: " + " + ".join(terms)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, literal: str):
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            raise InputError(
                f"expected {literal!r} at position {self.pos} in {self.text!r}"
            )
        self.pos += len(literal)

    def accept(self, literal: str) -> bool:
        self.skip_ws()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.peek() in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or not self.text[start:self.pos].lstrip("+-"):
            raise InputError(
                f"expected an integer at position {start} in {self.text!r}"
            )
        return int(self.text[start:self.pos])

    def done(self):
        self.skip_ws()
        if self.pos < len(self.text):
            raise InputError(
                f"unexpected trailing input at position {self.pos} "
                f"in {self.text!r}"
            )


def parse_bundle(text: str) -> BundleExpr:
    """Grammar: ("P1" | "P2") ":" term ("+" term)* with
    term := O(int)[^posint] | rank2(c1=int,c2=int)."""
    sc = _Scanner(text)
    if sc.accept("P1"):
        base = "P1"
    elif sc.accept("P2"):
        base = "P2"
    else:
        raise InputError(f"expected base 'P1' or 'P2' at start of {text!r}")
    sc.expect(":")
    twists: list = []
    c1c2 = None
    while True:
        if sc.accept("rank2"):
            sc.expect("(")
            sc.expect("c1")
            sc.expect("=")
            c1 = sc.integer()
            sc.expect(",")
            sc.expect("c2")
            sc.expect("=")
            c2 = sc.integer()
            sc.expect(")")
            if c1c2 is not None or twists:
                raise InputError("rank2(...) cannot be combined with other terms")
            c1c2 = (c1, c2)
        elif sc.accept("O"):
            sc.expect("(")
            twist = sc.integer()
            sc.expect(")")
            mult = 1
            if sc.accept("^"):
                mult = sc.integer()
                if mult < 1:
                    raise InputError(f"multiplicity must be >= 1, got {mult}")
            if c1c2 is not None:
                raise InputError("rank2(...) cannot be combined with other terms")
            twists.extend([twist] * mult)
        else:
            raise InputError(
                f"expected a term at position {sc.pos} in {text!r}"
            )
        if not sc.accept("+"):
            break
    sc.done()
    if c1c2 is not None:
        if base != "P2":
            raise InputError("rank2(...) requires base P2")
        return BundleExpr(base, None, c1c2)
    return BundleExpr(base, tuple(twists), None)


# --- Chow expressions ------------------------------------------------------


def parse_chow_expr(text: str, ambient) -> GradedClass:
    """Arithmetic over H, U with +, -, *, ^, parentheses and rational
    literals ("3", "1/2")."""
    sc = _Scanner(text)

    def atom() -> GradedClass:
        if sc.accept("("):
            value = expr()
            sc.expect(")")
            return value
        if sc.accept("H"):
            return H_class(ambient)
        if sc.accept("U"):
            return U_class(ambient)
        ch = sc.peek()
        if ch.isdigit():
            num = sc.integer()
            if sc.accept("/"):
                den = sc.integer()
                if den == 0:
                    raise InputError("zero denominator")
                return Fraction(num, den) * unit(ambient)
            return num * unit(ambient)
        raise InputError(f"expected a factor at position {sc.pos} in {text!r}")

    def factor() -> GradedClass:
        if sc.accept("-"):
            return -factor()
        base = atom()
        if sc.accept("^"):
            n = sc.integer()
            if n < 0:
                raise InputError("negative exponent")
            out = unit(ambient)
            for _ in range(n):
                out = out * base
            return out
        return base

    def term() -> GradedClass:
        value = factor()
        while sc.accept("*"):
            value = value * factor()
        return value

    def expr() -> GradedClass:
        value = term()
        while True:
            if sc.accept("+"):
                value = value + term()
            elif sc.accept("-"):
                value = value - term()
            else:
                return value

    value = expr()
    sc.done()
    return value


def parse_ring(text: str):
    kind, _, params = text.partition(":")
    try:
        values = tuple(int(v.strip()) for v in params.split(","))
    except ValueError as exc:
        raise InputError(f"cannot parse ring parameters {params!r}") from exc
    if kind == "line":
        if len(values) != 4:
            raise InputError("line ring needs 4 twists: line:a0,a1,a2,a3")
        return LineBase4(values)
    if kind == "plane":
        if len(values) != 2:
            raise InputError("plane ring needs 2 numbers: plane:c1,c2")
        return PlaneBase2(*values)
    raise InputError(f"unknown ring kind {kind!r}; use line:... or plane:...")


def _rat(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(
            f"expected an integer or p/q, got {text!r}"
        ) from exc


def _render(value) -> str:
    return value.render() if isinstance(value, Affine) else str(value)


# --- subcommands -----------------------------------------------------------


def _cmd_thm1(args, out) -> int:
    h = None if args.symbolic_h else args.h
    n = theorems.ThreefoldNumerics(
        h=h, c13=args.c13, c12H=args.c12H, c1H2=args.c1H2,
        c2H=args.c2H, H3=args.H3,
    )
    closed = theorems.thm1_closed(n)
    derived = theorems.thm1_derived(n)
    print(f"closed:  {_render(closed)}", file=out)
    print(f"derived: {_render(derived)}", file=out)
    ok = closed == derived
    print("MATCH" if ok else "MISMATCH", file=out)
    return 0 if ok else 1


def _cmd_thm2(args, out) -> int:
    bundle = parse_bundle(args.bundle)
    if bundle.base != "P1" or bundle.twists is None or len(bundle.twists) != 4:
        raise InputError(
            "thm2 needs a line-base bundle with exactly 4 summands, "
            f"got {args.bundle!r}"
        )
    inp = theorems.DivisorCaseInput(bundle.twists, args.k, args.a)
    chain = theorems.thm2_chain(inp)
    closed = theorems.thm2_closed(inp)
    print(f"chain:  {chain}", file=out)
    print(f"closed: {closed}", file=out)
    ok = chain == closed
    print("MATCH" if ok else "MISMATCH", file=out)
    return 0 if ok else 1


def _cmd_thm3(args, out) -> int:
    bundle = parse_bundle(args.bundle)
    if bundle.base != "P2":
        raise InputError(f"thm3 needs a plane-base bundle, got {args.bundle!r}")
    if bundle.c1c2 is not None:
        inp = theorems.PlaneBundleInput(*bundle.c1c2)
    else:
        if len(bundle.twists) != 2:
            raise InputError(
                "thm3 needs rank 2: two O(...) summands or rank2(c1=..,c2=..)"
            )
        inp = theorems.PlaneBundleInput.from_split(*bundle.twists)
    qs = theorems.thm3_Q(inp)
    for name, poly in (("Q1", qs.Q1), ("Q2", qs.Q2), ("Q3", qs.Q3), ("Q", qs.Q)):
        print(f"{name}(b) = {poly.render('b')}", file=out)
    value = theorems.thm3_value(inp)
    print(f"Q(-1):  {qs.Q(-1)}", file=out)
    print(f"closed: {value}", file=out)
    grid_ok = all(
        theorems.thm3_hrr_crosscheck(inp, b) == qs.Q(b) for b in range(-3, 7)
    )
    print(f"hrr-crosscheck[-3..6]: {'MATCH' if grid_ok else 'MISMATCH'}", file=out)
    if inp.split is not None:
        print(f"h0: {theorems.thm3_h0_split(*inp.split)}", file=out)
    ok = qs.Q(-1) == value and grid_ok
    print("MATCH" if ok else "MISMATCH", file=out)
    return 0 if ok else 1


def _cmd_chi_f(args, out) -> int:
    value = f_formula(args.x, args.y, args.p, args.q)
    print(f"f({args.x},{args.y}) = {value}", file=out)
    if args.oracle:
        if args.y < 0:
            raise InputError("the splitting oracle needs y >= 0")
        oracle = f_splitting_oracle(args.x, args.y, args.p, args.q)
        print(f"oracle    = {oracle}", file=out)
        ok = value == oracle
        print("MATCH" if ok else "MISMATCH", file=out)
        return 0 if ok else 1
    return 0


def _cmd_bott_report(args, out) -> int:
    if args.cases:
        records = bottcases.load_registry(args.cases)
    else:
        records = bottcases.builtin_registry()
    if args.json:
        out.write(bottcases.report_json(records))
    else:
        out.write(bottcases.report_text(records))
    return 0


def _cmd_chow_eval(args, out) -> int:
    ambient = parse_ring(args.ring)
    value = parse_chow_expr(args.expr, ambient)
    print(f"class:  {value.render()}", file=out)
    print(f"degree: {value.degree()}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bottcheck",
        description="Exact Euler-characteristic obstruction checks for "
        "Bott vanishing on weak Fano threefolds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p1 = sub.add_parser("thm1", help="weak-Fano threefold obstruction from "
                        "intersection numerics, both routes")
    p1.add_argument("--h", type=_rat, default=None)
    p1.add_argument("--c13", type=_rat, default=None)
    p1.add_argument("--c12H", type=_rat, default=None)
    p1.add_argument("--c1H2", type=_rat, default=None)
    p1.add_argument("--c2H", type=_rat, default=None)
    p1.add_argument("--H3", type=_rat, default=None)
    p1.add_argument("--symbolic-h", action="store_true")
    p1.set_defaults(func=_cmd_thm1)

    p2 = sub.add_parser("thm2", help="divisor in |kH+2U| over the line: "
                        "pushforward chain vs closed form")
    p2.add_argument("--bundle", required=True)
    p2.add_argument("--k", type=int, required=True)
    p2.add_argument("--a", type=int, default=None)
    p2.set_defaults(func=_cmd_thm2)

    p3 = sub.add_parser("thm3", help="plane bundle: Q-polynomials, closed "
                        "form, intrinsic Riemann-Roch crosscheck")
    p3.add_argument("--bundle", required=True)
    p3.set_defaults(func=_cmd_thm3)

    pf = sub.add_parser("chi-f", help="chi(W, xH + yU) on the rank-4 bundle "
                        "over the line")
    pf.add_argument("--x", type=int, required=True)
    pf.add_argument("--y", type=int, required=True)
    pf.add_argument("--p", type=int, required=True)
    pf.add_argument("--q", type=int, required=True)
    pf.add_argument("--oracle", action="store_true")
    pf.set_defaults(func=_cmd_chi_f)

    pr = sub.add_parser("bott-report", help="evaluate a case registry")
    pr.add_argument("--cases", default=None)
    pr.add_argument("--json", action="store_true")
    pr.set_defaults(func=_cmd_bott_report)

    pc = sub.add_parser("chow-eval", help="reduce an H/U expression in one "
                        "of the two ambient rings")
    pc.add_argument("--ring", required=True)
    pc.add_argument("--expr", required=True)
    pc.set_defaults(func=_cmd_chow_eval)

    return parser


def run(argv, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (InputError, HypothesisViolation, bottcases.RegistryError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
