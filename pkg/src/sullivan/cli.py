"""Command-line front end.

Exit codes: 0 success (or all checks pass), 1 a requested check fails,
2 usage or parse errors.  With --json the verification report is a JSON
array of records with the fields name, status, expected, actual, cite.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog
from .cubic import (
    CubicForm,
    associated_subspace,
    binary_classify,
    hesse_sigma_candidates,
    is_elliptic_form,
    is_singular_ternary,
)
from .exponents import ExponentPair, check_constraints, check_sac, enumerate_exponents
from .groebner import PolyRing, buchberger, is_regular_sequence
from .model import cohomology_betti
from .parsing import (
    ParseError,
    parse_model,
    parse_polynomial,
    render_fraction,
    render_model,
    render_polynomial,
    variables_in,
)


class UsageError(ValueError):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def _ring_for(expressions: list[str], vars_option: str | None) -> PolyRing:
    if vars_option:
        names = [v.strip() for v in vars_option.split(",") if v.strip()]
        if not names:
            raise UsageError("--vars must list at least one variable")
        return PolyRing(names)
    names = sorted({name for text in expressions for name in variables_in(text)})
    if not names:
        raise UsageError("no variables found; pass --vars explicitly")
    return PolyRing(names)


def _load_model(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    return parse_model(text)


# -- subcommand implementations ---------------------------------------------


def _cmd_exponents(args) -> int:
    for pair in enumerate_exponents(args.n):
        print(pair)
    return 0


def _cmd_check_sac(a_items: list[str], b_items: list[str]) -> int:
    try:
        a = tuple(int(x) for x in a_items)
        b = tuple(int(x) for x in b_items)
        pair = ExponentPair(a, b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ok = check_sac(pair)
    n = pair.formal_dimension()
    constraints = check_constraints(pair, n)
    print(f"{pair}: sac={'yes' if ok else 'no'} formal-dimension={n} constraints={'yes' if constraints else 'no'}")
    return 0 if ok else 1


def _cmd_cohomology(args) -> int:
    m = _load_model(args.file)
    n = m.formal_dimension_claim()
    max_degree = args.max_degree if args.max_degree is not None else max(n, 0) + 7
    report = cohomology_betti(m, max_degree)
    print(f"formal dimension claim: {report.formal_dimension_claim}")
    for k, dim in report.betti:
        print(f"b_{k} = {dim}")
    vanishing = [k for k, dim in report.betti if k > n and dim]
    print(f"poincare symmetric through degree {n}: {'yes' if report.poincare_symmetric else 'no'}")
    if vanishing:
        print(f"nonzero above the formal dimension: degrees {vanishing}")
    else:
        print(f"vanishing above the formal dimension through degree {max_degree}: yes")
    return 0


def _cmd_regseq(args) -> int:
    ring = _ring_for(args.polys, args.vars)
    polys = [parse_polynomial(text, ring) for text in args.polys]
    regular = is_regular_sequence(polys, ring)
    print(f"variables: {', '.join(ring.variables)}")
    print("regular" if regular else "not regular")
    return 0 if regular else 1


def _cmd_groebner(args) -> int:
    ring = _ring_for(args.polys, args.vars)
    polys = [parse_polynomial(text, ring) for text in args.polys]
    gb = buchberger(polys, ring)
    print(f"variables: {', '.join(ring.variables)}")
    if not gb.generators:
        print("zero ideal")
    for g in gb.generators:
        print(render_polynomial(g))
    return 0


def _parse_form(args) -> CubicForm:
    ring = _ring_for([args.expr], args.vars)
    if len(ring.variables) not in (2, 3):
        raise UsageError("cubic forms need 2 or 3 variables (use --vars to pad)")
    return CubicForm.from_polynomial(parse_polynomial(args.expr, ring))


def _cmd_cubic(args) -> int:
    form = _parse_form(args)
    if args.action == "classify":
        if form.dim == 2:
            print(binary_classify(form))
        else:
            print("singular" if is_singular_ternary(form) else "nonsingular")
        return 0
    if args.action == "elliptic":
        b2 = args.b2 if args.b2 is not None else form.dim
        verdict = is_elliptic_form(form, b2)
        print("elliptic" if verdict.elliptic else f"not elliptic: {verdict.reason}")
        return 0 if verdict.elliptic else 1
    if args.action == "associated":
        if form.dim != 3:
            raise UsageError("the associated subspace needs a ternary form")
        sub = associated_subspace(form)
        for q in sub.basis:
            print(render_polynomial(q))
        return 0
    if args.action == "sigma":
        if form.dim != 3:
            raise UsageError("the diagonal-family parameter needs a ternary form")
        if is_singular_ternary(form):
            raise UsageError("the form is singular: no diagonal-family parameter")
        tolerance = Fraction(args.tolerance) if args.tolerance else Fraction(1, 10**6)
        for lo, hi in hesse_sigma_candidates(form, tolerance):
            if lo == hi:
                print(f"sigma = {render_fraction(lo)}")
            else:
                print(f"sigma in ({render_fraction(lo)}, {render_fraction(hi)})")
        return 0
    raise UsageError(f"unknown cubic action {args.action!r}")


def _cmd_catalog(args) -> int:
    if args.action == "list":
        for name, (signature, _) in sorted(catalog.MODEL_BUILDERS.items()):
            print(f"{name} {signature}".rstrip())
        for name, (signature, _) in sorted(catalog.RING_BUILDERS.items()):
            print(f"{name} {signature}".rstrip())
        return 0
    if args.action == "build":
        if not args.params:
            raise UsageError("catalog build needs a name")
        name, raw = args.params[0], args.params[1:]
        params = [_fraction(p) for p in raw]
        try:
            if name in catalog.MODEL_BUILDERS:
                model = catalog.MODEL_BUILDERS[name][1](params)
                sys.stdout.write(render_model(model))
                return 0
            if name in catalog.RING_BUILDERS:
                ring_sub = catalog.RING_BUILDERS[name][1](params)
                for q in ring_sub.basis:
                    print(render_polynomial(q))
                return 0
        except (ValueError, IndexError) as exc:
            raise UsageError(str(exc)) from None
        raise UsageError(f"unknown catalog name {name!r}")
    raise UsageError(f"unknown catalog action {args.action!r}")


def _cmd_classify7(args) -> int:
    m = _load_model(args.file)
    try:
        print(catalog.classify_dim7(m))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return 0


def _cmd_classify8(args) -> int:
    m = _load_model(args.file)
    from .exponents import exponents_of_model

    pair = exponents_of_model(m)
    try:
        if pair == ExponentPair((2, 2), (4, 4)):
            print(catalog.classify_dim8_middle(m))
            return 0
        if pair == ExponentPair((1, 1, 2), (2, 2, 4)):
            print(catalog.classify_dim8_sigma(m))
            return 0
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(
        f"classifiers cover the exponent cases (2,2; 4,4) and (1,1,2; 2,2,4); got {pair}"
    )


def _cmd_verify(args) -> int:
    records = catalog.verification_report(args.section)
    if args.json:
        print(json.dumps([r.as_dict() for r in records], indent=2))
    else:
        for r in records:
            print(f"{r.status.upper():4s} {r.name} [{r.cite}] expected={r.expected} actual={r.actual}")
        failed = sum(1 for r in records if r.status == "fail")
        print(f"{len(records) - failed}/{len(records)} checks passed")
    return 0 if all(r.status != "fail" for r in records) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sullivan",
        description="Exact computations with Sullivan models, exponent tables and cubic forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exponents", help="list the elliptic exponent pairs in dimension N")
    p.add_argument("n", type=int)

    sub.add_parser(
        "check-sac", help="check the arithmetic condition: check-sac A.. -- B..", add_help=False
    )

    p = sub.add_parser("cohomology", help="Betti numbers of a model file")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=None)

    p = sub.add_parser("regseq", help="regular-sequence test for homogeneous polynomials")
    p.add_argument("polys", nargs="+")
    p.add_argument("--vars", default=None)

    p = sub.add_parser("groebner", help="reduced Groebner basis (grevlex)")
    p.add_argument("polys", nargs="+")
    p.add_argument("--vars", default=None)

    p = sub.add_parser("cubic", help="cubic form computations")
    p.add_argument("action", choices=("classify", "elliptic", "associated", "sigma"))
    p.add_argument("expr")
    p.add_argument("--b2", type=int, default=None)
    p.add_argument("--vars", default=None)
    p.add_argument("--tolerance", default=None)

    p = sub.add_parser("catalog", help="list or build the named models and rings")
    p.add_argument("action", choices=("list", "build"))
    p.add_argument("params", nargs="*")

    p = sub.add_parser("classify7", help="rational type of a 7-dimensional model file")
    p.add_argument("file")

    p = sub.add_parser("classify8", help="classify the covered 8-dimensional exponent cases")
    p.add_argument("file")

    p = sub.add_parser("verify-paper", help="recompute and check every recorded claim")
    p.add_argument("--section", type=int, choices=(3, 4, 5), default=None)
    p.add_argument("--json", action="store_true")

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "check-sac":
        rest = argv[1:]
        if "--" not in rest:
            print("usage: sullivan check-sac A.. -- B..", file=sys.stderr)
            return 2
        split = rest.index("--")
        try:
            return _cmd_check_sac(rest[:split], rest[split + 1 :])
        except UsageError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    handlers = {
        "exponents": _cmd_exponents,
        "cohomology": _cmd_cohomology,
        "regseq": _cmd_regseq,
        "groebner": _cmd_groebner,
        "cubic": _cmd_cubic,
        "catalog": _cmd_catalog,
        "classify7": _cmd_classify7,
        "classify8": _cmd_classify8,
        "verify-paper": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
