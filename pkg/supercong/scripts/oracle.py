#!/usr/bin/env python
import argparse
import json
import sys

from supercong import (
    ag_identity_check,
    chu_vandermonde_check,
    reduce_mod,
    rhs_residue,
    staver_identity_check,
    sum_exact,
)
from supercong.src.config import ConfigError
from supercong.src.data_loader import UnknownCheckId, get_check
from supercong.src.hypersum import CongruenceSpec
from supercong.src.oracle import NotPIntegral
from supercong.src.padic import PadicCtx

IDENTITIES = {
    "staver": (staver_identity_check, 1, 1),
    "almkvist-granville": (ag_identity_check, 1, 1),
    "chu-vandermonde": (chu_vandermonde_check, 3, 2),
}


def get_cmd_line_args(argv=None):
    parser = argparse.ArgumentParser("Exact rational evaluation of a truncated sum")
    parser.add_argument("--check", help="hypergeometric check id, e.g. J1")
    parser.add_argument("--p", help="the prime", type=int)
    parser.add_argument(
        "--identity",
        help="check a finite identity for every parameter up to --upto instead",
        choices=sorted(IDENTITIES),
    )
    parser.add_argument(
        "--upto", help="largest identity parameter", type=int, default=12
    )
    parser.add_argument("--json", help="write a JSON object", action="store_true")
    return parser.parse_args(argv)


def run_identity(name: str, upto: int, as_json: bool) -> int:
    check, first, step = IDENTITIES[name]
    reports = [check(n) for n in range(first, upto + 1, step)]
    failures = [report for report in reports if not report]
    if as_json:
        print(json.dumps({"identity": name, "upto": upto, "failures": len(failures)}))
    else:
        print(f"{name}: {len(reports) - len(failures)}/{len(reports)} exact")
    for report in failures:
        print(f"[ORACLE] {report}", file=sys.stderr)
    return 0 if not failures else 1


def run_sum(check_id: str, p: int, as_json: bool) -> int:
    spec = get_check(check_id)
    if not isinstance(spec, CongruenceSpec):
        raise ConfigError(f"{check_id} is not a hypergeometric sum")
    ctx = PadicCtx(p, spec.mod_exp)
    exact = sum_exact(spec, p)
    residue = reduce_mod(exact, ctx)
    rhs = rhs_residue(spec, p)
    if as_json:
        record = {
            "check": check_id,
            "p": p,
            "modulus": str(ctx),
            "exact": str(exact),
            "lhs": str(residue.r),
            "rhs": str(rhs.r),
            "pass": residue == rhs,
        }
        print(json.dumps(record))
    else:
        print(f"{exact} ≡ {residue.r} (mod {ctx.pk})")
        print(
            f"[ORACLE] {check_id} right-hand side {rhs.r} (mod {ctx})", file=sys.stderr
        )
    return 0 if residue == rhs else 1


def main(argv=None):
    args = get_cmd_line_args(argv)
    try:
        if args.identity:
            return run_identity(args.identity, args.upto, args.json)
        if args.check is None or args.p is None:
            raise ConfigError("need --check and --p, or --identity")
        return run_sum(args.check, args.p, args.json)
    except UnknownCheckId as err:
        print(f"[ORACLE] {err.args[0]}", file=sys.stderr)
        return 2
    except NotPIntegral as err:
        print(f"[ORACLE] {err}", file=sys.stderr)
        return 1
    except ValueError as err:
        # ConfigError, or a p that is not an odd prime
        print(f"[ORACLE] {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
