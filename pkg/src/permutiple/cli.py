"""Command-line front end.

Exit codes: 0 success, 1 negative mathematical verdict, 2 usage or parse
error, 3 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import classify, oracle, theorems
from .digitnum import (
    DigitTuple,
    ParseError,
    Perm,
    apply_perm,
    parse_perm,
    parse_tuple,
)

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_CROSSCHECK = 3


class UsageError(Exception):
    pass


# -- serialization ------------------------------------------------------------

def perm_record(p: Perm) -> dict:
    return {"cycles": p.cycle_notation(), "image": list(p.image)}


def witness_record(w: theorems.PermutipleWitness) -> dict:
    return {
        "digits": list(w.digits.msf),
        "text": str(w.digits),
        "base": w.b,
        "n": w.n,
        "sigma": perm_record(w.sigma),
        "multiplicand": list(w.multiplicand.msf),
        "carries": list(w.carries.msf),
    }


def member_record(m: classify.ClassMember) -> dict:
    return {
        "arrangement": list(m.arrangement.msf),
        "text": str(m.arrangement),
        "pi": perm_record(m.pi),
        "tau": perm_record(m.tau),
        "carries": list(m.witness.carries.msf),
    }


def class_record(c: classify.ConjugacyClass) -> dict:
    return {
        "beta": perm_record(c.beta),
        "origin": c.origin,
        "alias_of": perm_record(c.alias_of) if c.alias_of else None,
        "size": len(c),
        "members": [member_record(m) for m in c.members],
    }


def report_record(r: classify.EnumerationReport) -> dict:
    return {
        "witness": witness_record(r.witness),
        "candidates": [perm_record(b) for b in r.candidates],
        "completeness": r.completeness.value,
        "total": r.total,
        "nonempty_classes": len(r.nonempty()),
        "classes": [class_record(c) for c in r.classes],
    }


def hit_record(h: oracle.OracleHit) -> dict:
    return {
        "product": list(h.product_arrangement.msf),
        "text": str(h.product_arrangement),
        "multiplicand": list(h.multiplicand_arrangement.msf),
        "sigmas": [perm_record(s) for s in h.sigmas],
    }


def document(command: str, inputs: dict, results: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"


# -- text rendering -----------------------------------------------------------

def _fmt_tuple(values) -> str:
    return "(" + ",".join(map(str, values)) + ")"


def render_table(rows: list[list[str]], header: list[str]) -> str:
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
    line = lambda r: "  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip()
    out = [line(header), line(["-" * w for w in widths])]
    out.extend(line(r) for r in rows)
    return "\n".join(out)


def render_witness(w: theorems.PermutipleWitness) -> str:
    return (
        f"{w.digits} = {w.n}*{w.multiplicand}\n"
        f"sigma   {w.sigma.cycle_notation()}  {w.sigma.oneline()}\n"
        f"carries {w.carries}"
    )


def render_report(r: classify.EnumerationReport) -> str:
    out = [render_witness(r.witness), ""]
    out.append(f"candidate base permutations: {len(r.candidates)}")
    for c in r.classes:
        title = f"beta = {c.beta.cycle_notation()}"
        if c.origin != "candidate":
            title += f" [{c.origin}]"
        if c.alias_of is not None:
            out.append(f"\n{title}: same arrangements as beta = {c.alias_of.cycle_notation()}")
            continue
        out.append(f"\n{title}: {len(c)} member(s)")
        if c.members:
            rows = [
                [str(m.arrangement), m.pi.cycle_notation(), m.tau.cycle_notation(),
                 str(m.witness.carries)]
                for m in c.members
            ]
            out.append(render_table(rows, ["arrangement", "pi", "tau", "carries"]))
    out.append("")
    out.append(
        f"total {r.total} permutiple(s) in {len(r.nonempty())} nonempty class(es); "
        f"completeness {r.completeness.value}"
    )
    return "\n".join(out)


# -- argument helpers ---------------------------------------------------------

def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}") from None


def _witness_inputs(args) -> tuple[DigitTuple, int, Perm]:
    digits = parse_tuple(args.tuple)
    n = _int(args.n, "n")
    if not 1 < n < digits.base:
        raise UsageError(f"n must satisfy 1 < n < b = {digits.base}")
    sigma = parse_perm(args.sigma, len(digits))
    return digits, n, sigma


def _parse_carries(text: str) -> tuple[int, ...]:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ParseError("expected carries like (0,3,3,3,0)", text, 1)
    try:
        msf = [int(s) for s in body[1:-1].split(",")]
    except ValueError:
        raise ParseError("carries must be integers", text, 2) from None
    return tuple(reversed(msf))


def _emit(args, doc: dict, text: str):
    if args.json:
        sys.stdout.write(dumps(doc))
    else:
        print(text)


# -- commands -----------------------------------------------------------------

def cmd_verify(args) -> int:
    digits, n, sigma = _witness_inputs(args)
    inputs = {"tuple": str(digits), "n": n, "sigma": perm_record(sigma)}
    try:
        w = theorems.verify(digits, n, sigma)
    except theorems.NotPermutiple as exc:
        results = {"permutiple": False, "reason": str(exc), "position": exc.position,
                   "overflow": exc.overflow}
        _emit(args, document("verify", inputs, results), f"not a permutiple: {exc}")
        return EXIT_NEGATIVE
    results = {"permutiple": True, "witness": witness_record(w)}
    _emit(args, document("verify", inputs, results), render_witness(w))
    return EXIT_OK


def cmd_carries(args) -> int:
    digits, n, sigma = _witness_inputs(args)
    q = apply_perm(digits, sigma)
    res = theorems.multiply_with_carries(q, n)
    ok = not res.overflow and res.product == digits
    inputs = {"tuple": str(digits), "n": n, "sigma": perm_record(sigma)}
    results = {
        "multiplicand": list(q.msf),
        "product": list(res.product.msf),
        "carries": list(res.carries.msf),
        "overflow": res.overflow,
        "final_carry": res.final_carry,
        "permutiple": ok,
        "nonzero_carries": list(res.carries.msf[:-1]),
    }
    text = (
        f"{n}*{q} = {res.product}" + (f" (overflow, carry out {res.final_carry})" if res.overflow else "")
        + f"\ncarries {res.carries}\n"
        + f"carries c_k..c_1 {_fmt_tuple(res.carries.msf[:-1])}\n"
        + ("permutiple" if ok else "not a permutiple")
    )
    _emit(args, document("carries", inputs, results), text)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_derive(args) -> int:
    digits, n, sigma = _witness_inputs(args)
    try:
        w = theorems.verify(digits, n, sigma)
    except theorems.NotPermutiple as exc:
        print(f"input is not a permutiple: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    size = len(digits)
    inputs = {"tuple": str(digits), "n": n, "sigma": perm_record(sigma)}
    try:
        if args.shift is not None:
            j = _int(args.shift, "--shift")
            if not 0 <= j < size:
                raise UsageError(f"--shift must be in 0..{size - 1}")
            inputs["shift"] = j
            new = classify.derive_zero_carry_shift(w, j)
        else:
            if args.pi is None:
                raise UsageError("give --pi (and optionally --mu) or --shift")
            pi = parse_perm(args.pi, size)
            mu = parse_perm(args.mu, size) if args.mu is not None else Perm.identity(size)
            inputs["pi"] = perm_record(pi)
            inputs["mu"] = perm_record(mu)
            new = classify.derive_by_mu_pi(w, pi, mu)
    except classify.PreconditionViolated as exc:
        raise UsageError(str(exc)) from None
    except classify.NotApplicable as exc:
        _emit(args, document("derive", inputs, {"derived": False, "reason": str(exc)}),
              f"not applicable: {exc}")
        return EXIT_NEGATIVE
    _emit(args, document("derive", inputs, {"derived": True, "witness": witness_record(new)}),
          render_witness(new))
    return EXIT_OK


def cmd_classify(args) -> int:
    digits, n, sigma = _witness_inputs(args)
    try:
        w = theorems.verify(digits, n, sigma)
    except theorems.NotPermutiple as exc:
        print(f"input is not a permutiple: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    use_oracle = True if args.oracle_check else None
    try:
        report = classify.enumerate_fixed_digits(w, use_oracle=use_oracle, parallel=args.parallel)
    except classify.CrossCheckFailure as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK
    results = report_record(report)
    text = render_report(report)
    if args.oracle_check:
        hits = oracle.enumerate_all(digits.multiset(), n, digits.base, parallel=args.parallel)
        truth = {h.product_arrangement for h in hits}
        got = report.arrangements()
        missing = sorted(map(str, truth - got))
        spurious = sorted(map(str, got - truth))
        results["oracle_check"] = {"oracle_total": len(truth), "missing": missing,
                                   "spurious": spurious, "agree": not missing and not spurious}
        text += f"\noracle check: {len(truth)} oracle hit(s), " + (
            "agree" if not missing and not spurious else f"MISMATCH missing={missing} spurious={spurious}"
        )
        if missing or spurious:
            _emit(args, document("classify", {"tuple": str(digits), "n": n,
                                              "sigma": perm_record(sigma)}, results), text)
            return EXIT_CROSSCHECK
    inputs = {"tuple": str(digits), "n": n, "sigma": perm_record(sigma),
              "oracle_check": bool(args.oracle_check)}
    _emit(args, document("classify", inputs, results), text)
    return EXIT_OK


def cmd_oracle(args) -> int:
    base = args.base
    if base is None:
        env = os.environ.get("PERMUTIPLE_BASE")
        if env is None:
            raise UsageError("--base is required (or set PERMUTIPLE_BASE)")
        base = _int(env, "PERMUTIPLE_BASE")
    n = args.n
    parts = [s for s in args.digits.split(",")]
    try:
        values = [int(s) for s in parts]
    except ValueError:
        raise UsageError(f"digits must be a comma-separated list of integers, got {args.digits!r}") from None
    if base < 3:
        raise UsageError("base must be at least 3")
    if not 1 < n < base:
        raise UsageError(f"n must satisfy 1 < n < b = {base}")
    bad = [v for v in values if not 0 <= v < base]
    if bad:
        raise UsageError(f"digits {bad} are not base-{base} digits")
    hits = oracle.enumerate_all(values, n, base, allow_leading_zero=args.allow_leading_zero,
                                parallel=args.parallel)
    inputs = {"digits": sorted(values), "base": base, "n": n,
              "allow_leading_zero": args.allow_leading_zero}
    results = {"count": len(hits), "hits": [hit_record(h) for h in hits]}
    rows = [
        [str(h.product_arrangement), f"{n}*{h.multiplicand_arrangement}",
         " ".join(s.cycle_notation() for s in h.sigmas)]
        for h in hits
    ]
    text = (render_table(rows, ["product", "multiplicand", "sigma"]) + "\n" if rows else "") + f"{len(hits)} hit(s)"
    _emit(args, document("oracle", inputs, results), text)
    return EXIT_OK


def cmd_closed_form(args) -> int:
    n = args.n
    if args.digits_from_carries is not None:
        if args.base is None:
            raise UsageError("--digits-from-carries needs --base")
        carries = _parse_carries(args.digits_from_carries)
        sigma = parse_perm(args.sigma, len(carries))
        if not 1 < n < args.base:
            raise UsageError(f"n must satisfy 1 < n < b = {args.base}")
        if carries[0] != 0 or any(not 0 <= c < n for c in carries):
            raise UsageError(f"carries must be base-{n} digits with c_0 = 0")
        inputs = {"carries": list(reversed(carries)), "sigma": perm_record(sigma), "n": n,
                  "base": args.base}
        try:
            d = theorems.digits_from_carries(carries, sigma, n, args.base)
        except theorems.NonIntegral as exc:
            _emit(args, document("closed-form", inputs, {"integral": False, "reason": str(exc)}),
                  f"non-integral: {exc}")
            return EXIT_NEGATIVE
        _emit(args, document("closed-form", inputs, {"integral": True, "digits": list(d.msf)}), str(d))
        return EXIT_OK
    digits = parse_tuple(args.carries_from_digits)
    sigma = parse_perm(args.sigma, len(digits))
    if not 1 < n < digits.base:
        raise UsageError(f"n must satisfy 1 < n < b = {digits.base}")
    inputs = {"tuple": str(digits), "sigma": perm_record(sigma), "n": n}
    try:
        c = theorems.carries_from_digits(digits, sigma, n)
    except theorems.NonIntegral as exc:
        _emit(args, document("closed-form", inputs, {"integral": False, "reason": str(exc)}),
              f"non-integral: {exc}")
        return EXIT_NEGATIVE
    _emit(args, document("closed-form", inputs, {"integral": True, "carries": list(c.msf)}), str(c))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permutiple",
        description="Verify, derive and enumerate permutiples (numbers that are n times a permutation of their digits).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def witness_args(p):
        p.add_argument("tuple", help="digit tuple, most significant first, e.g. '(8,7,9,1,2)_10'")
        p.add_argument("n", help="multiplier, 1 < n < base")
        p.add_argument("sigma", help="digit permutation: cycles '(0,4)(1,3)', one-line '[4,3,2,1,0]', rho, psi^j")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("verify", help="check that a tuple is an (n,b,sigma)-permutiple")
    witness_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("carries", help="carries of n times the sigma-permuted tuple")
    witness_args(p)
    p.set_defaults(func=cmd_carries)

    p = sub.add_parser("derive", help="derive a new permutiple by rearranging a known one")
    witness_args(p)
    p.add_argument("--pi", help="digit rearrangement")
    p.add_argument("--mu", help="carry rearrangement (default identity)")
    p.add_argument("--shift", help="rotate so that zero-carry position j becomes the units digit")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("classify", help="all permutiples with the same digits, by conjugacy class")
    witness_args(p)
    p.add_argument("--oracle-check", action="store_true", help="cross-check against exhaustive search")
    p.add_argument("--parallel", type=int, default=None, metavar="N", help="oracle worker processes")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("oracle", help="exhaustive search over arrangements of a digit multiset")
    p.add_argument("digits", help="comma-separated digit values, e.g. 1,2,3,4,5")
    p.add_argument("--base", type=int, default=None, help="radix (default: $PERMUTIPLE_BASE)")
    p.add_argument("--n", type=int, required=True, help="multiplier")
    p.add_argument("--allow-leading-zero", action=argparse.BooleanOptionalAction, default=True,
                   help="admit products whose top digit is 0 (default: yes)")
    p.add_argument("--parallel", type=int, default=None, metavar="N")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("closed-form", help="digits from carries or carries from digits")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--digits-from-carries", metavar="CARRIES", help="carries c_k..c_0, e.g. '(0,3,3,3,0)'")
    g.add_argument("--carries-from-digits", metavar="TUPLE", help="digit tuple, e.g. '(8,7,9,1,2)_10'")
    p.add_argument("--sigma", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--base", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_closed_form)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except classify.CrossCheckFailure as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK


if __name__ == "__main__":
    sys.exit(main())
