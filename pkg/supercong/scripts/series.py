#!/usr/bin/env python
import argparse
import json
import sys
from time import time

import mpmath

from supercong import SERIES, eval_series, get_series, quadratic_transform_check
from supercong.src.config import ConfigError, RunConfig
from supercong.src.series import NoConvergence

TRANSFORM_POINTS = (-0.1, -0.3, -0.5, -0.7, -0.9)


def get_cmd_line_args(argv=None):
    parser = argparse.ArgumentParser("Evaluate the convergent series at high precision")
    parser.add_argument(
        "--id",
        help="which series to evaluate, or ALL",
        choices=sorted(SERIES) + ["ALL"],
        default="ALL",
    )
    parser.add_argument(
        "--digits", help="working precision in decimal digits", type=int, default=30
    )
    parser.add_argument(
        "--terms",
        help="partial sums fed to Wynn epsilon for |z| = 1 series",
        type=int,
        default=300,
    )
    parser.add_argument(
        "--transform",
        help="also check the quadratic transformation at z = -0.1 ... -0.9",
        action="store_true",
    )
    parser.add_argument(
        "--json", help="write one JSON object per value", action="store_true"
    )
    return parser.parse_args(argv)


def main(argv=None):
    args = get_cmd_line_args(argv)
    try:
        config = RunConfig(
            command="series",
            precision=args.digits,
            output_format="json" if args.json else "human",
        )
        if not 3 <= args.terms <= 400:
            raise ConfigError(f"--terms must be in 3..400, got {args.terms}")
    except ConfigError as err:
        print(f"[SERIES] {err}", file=sys.stderr)
        return 2

    ok = True
    series_ids = sorted(SERIES) if args.id == "ALL" else [args.id]
    for series_id in series_ids:
        start = time()
        try:
            result = eval_series(
                get_series(series_id), digits=config.precision, n_terms=args.terms
            )
        except NoConvergence as err:
            print(f"[SERIES] {err}", file=sys.stderr)
            ok = False
            continue
        if config.json:
            record = {
                "series": series_id,
                "value": mpmath.nstr(result.value, config.precision),
                "target": mpmath.nstr(result.target, config.precision),
                "difference": mpmath.nstr(result.difference, 5),
                "error": mpmath.nstr(result.error, 5),
                "terms": result.terms,
                "method": result.method,
            }
            print(json.dumps(record))
        else:
            print(result)
        print(f"[SERIES] {series_id} took {time() - start:.2f}s", file=sys.stderr)

    if args.transform:
        for z in TRANSFORM_POINTS:
            report = quadratic_transform_check(z)
            print(
                f"quadratic transformation at z={z}: "
                f"|difference| {mpmath.nstr(report.difference, 3)}"
            )
            ok = ok and report.holds
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
