"""Command-line front end.

Subcommands:

    field    build a field and print its JSON description
    check    decide whether a mapping permutes its field
    invert   compute a compositional inverse certificate
    selfinv  search for self-inverse mappings, emit a CSV catalog
    verify   check that one polynomial inverts another
    table    expand a mapping into its reduced polynomial

Machine-readable results go to stdout as single-line JSON (or CSV for
selfinv); diagnostics go to stderr.  Exit status: 0 for success / a true
verdict, 1 for a mathematically negative verdict (not a permutation,
failed verification), 2 for usage or input errors.

Mapping and polynomial arguments accept inline JSON, a file path, or "-"
for stdin.  The exhaustive cap honors, in order: --cap, the
PPFORGE_EXHAUSTIVE_CAP environment variable, then the built-in default.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .config import DEFAULT_EXHAUSTIVE_CAP, DEFAULT_SEED
from .cyclotomic import Cyclotomy, CyclotomicMapping
from .fields import Field, make_field
from .inverses import (
    InverseCertificate,
    NotAPermutationError,
    check_permutation,
    invert_char2_family,
    invert_mapping,
    invert_two_branches,
    invert_two_cosets,
    invert_xr_hxs,
    search_self_inverse,
    verify_inverse,
    write_catalog_csv,
)
from .polys import Poly, lagrange_inverse

METHODS = ("general", "two-cosets", "two-branches", "char2", "xr-hxs", "lagrange")


class UsageError(Exception):
    """Bad input or a method applied to a shape it does not fit (exit 2)."""


def _read_json(arg: str) -> dict:
    if arg == "-":
        text = sys.stdin.read()
    elif arg.lstrip().startswith("{"):
        text = arg
    else:
        try:
            with open(arg, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {arg}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("expected a JSON object")
    return data


def _load_mapping(arg: str) -> CyclotomicMapping:
    data = _read_json(arg)
    try:
        return CyclotomicMapping.from_dict(data)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed mapping JSON: missing {exc}") from exc
    except ValueError as exc:
        raise UsageError(f"malformed mapping JSON: {exc}") from exc


def _load_poly(arg: str) -> Poly:
    data = _read_json(arg)
    try:
        return Poly.from_dict(data)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed polynomial JSON: missing {exc}") from exc
    except ValueError as exc:
        raise UsageError(f"malformed polynomial JSON: {exc}") from exc


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _resolve_cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("PPFORGE_EXHAUSTIVE_CAP")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(
                f"PPFORGE_EXHAUSTIVE_CAP must be an integer, got {env!r}") from exc
    return DEFAULT_EXHAUSTIVE_CAP


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise UsageError(f"{what} must be comma-separated integers") from exc


def cmd_field(args) -> int:
    modulus = _parse_ints(args.modulus, "--modulus") if args.modulus else None
    try:
        field = Field(args.p, args.n, modulus)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(field.to_dict())
    return 0


def cmd_check(args) -> int:
    m = _load_mapping(args.mapping)
    decision = check_permutation(m)
    _emit({"pp": decision.ok, "reason": decision.reason})
    return 0 if decision.ok else 1


def _two_branch_shape(m: CyclotomicMapping):
    d = m.cyc.d
    if d < 3:
        raise UsageError("two-branches needs d >= 3")
    if len(set(m.a[1:])) != 1 or len(set(m.r[1:])) != 1:
        raise UsageError(
            "two-branches needs a = (a0, a1, ..., a1) and r = (r0, r1, ..., r1)")
    return m.a[0], m.a[1], m.r[0], m.r[1]


def _char2_shape(m: CyclotomicMapping):
    field = m.cyc.field
    if field.p != 2 or field.n % 2:
        raise UsageError("char2 needs a field GF(2^(2n))")
    if m.cyc.d != 3 or m.a != (1, 1, 1):
        raise UsageError("char2 needs d = 3 and a = (1, 1, 1)")
    r0, r1, r2 = m.r
    if r1 != r2:
        raise UsageError("char2 needs r = (2^i, 2^j, 2^j)")
    exps = []
    for r in (r0, r1):
        k = r.bit_length() - 1
        if r < 2 or 2**k != r:
            raise UsageError("char2 branch exponents must be powers of 2, >= 2")
        exps.append(k)
    return field.n // 2, exps[0], exps[1]


def cmd_invert(args) -> int:
    m = _load_mapping(args.mapping)
    cap = _resolve_cap(args)
    kwargs = {"verify": True, "cap": cap, "seed": args.seed}
    if args.method == "general":
        cert = invert_mapping(m, **kwargs)
    elif args.method == "two-cosets":
        if m.cyc.d != 2 or m.cyc.field.p == 2:
            raise UsageError("two-cosets needs d = 2 and odd q")
        cert = invert_two_cosets(m, **kwargs)
    elif args.method == "two-branches":
        a0, a1, r0, r1 = _two_branch_shape(m)
        decision, cert = invert_two_branches(
            m.cyc.field, m.cyc.d, a0, a1, r0, r1, **kwargs)
        if not decision:
            raise NotAPermutationError(decision.reason)
    elif args.method == "char2":
        n, i, j = _char2_shape(m)
        _, cert = invert_char2_family(n, i, j, field=m.cyc.field, **kwargs)
    elif args.method == "xr-hxs":
        if len(set(m.r)) != 1:
            raise UsageError("xr-hxs needs every branch exponent equal")
        h = m.cyc.interpolate_on_roots(m.a)
        cert = invert_xr_hxs(m.cyc.field, m.cyc.d, m.r[0], h, **kwargs)
    else:  # lagrange
        decision = check_permutation(m)
        if not decision:
            raise NotAPermutationError(decision.reason)
        if m.cyc.field.q > cap:
            raise UsageError(
                f"lagrange needs exhaustive evaluation; GF({m.cyc.field.q}) "
                f"exceeds the cap {cap}")
        inverse = lagrange_inverse(m.to_poly(), cap)
        cert = InverseCertificate(inverse, (), None, "exhaustive")
    _emit(cert.to_dict())
    return 0


def cmd_selfinv(args) -> int:
    modulus = _parse_ints(args.modulus, "--modulus") if args.modulus else None
    try:
        field = Field(args.p, args.n, modulus)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    a_set = _parse_ints(args.a_set, "--a-set") if args.a_set else None
    d_values = _parse_ints(args.d, "--d") if args.d else None
    cap = _resolve_cap(args)
    try:
        entries = search_self_inverse(field, args.max_r, a_set=a_set,
                                      d_values=d_values, cap=cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            count = write_catalog_csv(entries, fh)
        print(f"wrote {count} rows to {args.out}", file=sys.stderr)
    else:
        count = write_catalog_csv(entries, sys.stdout)
        print(f"wrote {count} rows", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    f = _load_poly(args.f)
    g = _load_poly(args.g)
    if f.field != g.field:
        raise UsageError("the two polynomials live over different fields")
    result = verify_inverse(f, g, cap=_resolve_cap(args), seed=args.seed)
    _emit({
        "verified": result.mode if result.ok else "none",
        "ok": result.ok,
        "counterexample": result.counterexample,
    })
    return 0 if result.ok else 1


def cmd_table(args) -> int:
    m = _load_mapping(args.mapping)
    _emit(m.to_poly().to_dict())
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for randomized verification")
    common.add_argument("--cap", type=int, default=None,
                        help="exhaustive-computation cap on q "
                        "(default: $PPFORGE_EXHAUSTIVE_CAP or %d)"
                        % DEFAULT_EXHAUSTIVE_CAP)

    parser = argparse.ArgumentParser(
        prog="ppforge",
        description="Cyclotomic mapping permutation polynomials and their inverses.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", parents=[common],
                       help="build GF(p^n) and print its JSON description")
    p.add_argument("--p", type=int, required=True, help="characteristic")
    p.add_argument("--n", type=int, default=1, help="extension degree")
    p.add_argument("--modulus", help="comma-separated monic modulus, low degree first")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("check", parents=[common],
                       help="decide whether a mapping permutes its field")
    p.add_argument("mapping", help="mapping JSON (inline, file path, or -)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("invert", parents=[common],
                       help="compute an inverse certificate for a mapping")
    p.add_argument("mapping", help="mapping JSON (inline, file path, or -)")
    p.add_argument("--method", choices=METHODS, default="general")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("selfinv", parents=[common],
                       help="catalog self-inverse mappings as CSV")
    p.add_argument("--p", type=int, required=True, help="characteristic")
    p.add_argument("--n", type=int, default=1, help="extension degree")
    p.add_argument("--modulus", help="comma-separated monic modulus, low degree first")
    p.add_argument("--max-r", type=int, required=True,
                   help="largest branch exponent to consider")
    p.add_argument("--a-set", help="comma-separated allowed coefficients")
    p.add_argument("--d", help="comma-separated divisors of q-1 to search")
    p.add_argument("--out", help="write the CSV here instead of stdout")
    p.set_defaults(func=cmd_selfinv)

    p = sub.add_parser("verify", parents=[common],
                       help="check that g inverts f")
    p.add_argument("f", help="polynomial JSON (inline, file path, or -)")
    p.add_argument("g", help="polynomial JSON (inline, file path, or -)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[common],
                       help="expand a mapping into its reduced polynomial")
    p.add_argument("mapping", help="mapping JSON (inline, file path, or -)")
    p.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotAPermutationError as exc:
        print(f"not a permutation: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
