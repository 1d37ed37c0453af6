#!/usr/bin/env python
import argparse
import sys

import pandas as pd

from supercong import sweep
from supercong.src.config import ConfigError, RunConfig, get_num_threads
from supercong.src.data_loader import UnknownCheckId, resolve_check_ids
from supercong.src.suite import OracleMismatch
from supercong.src.utils import write_results


def get_cmd_line_args(argv=None):
    parser = argparse.ArgumentParser("Check registered congruences over a prime range")
    parser.add_argument(
        "--check",
        help="comma-separated list of check ids, or ALL",
        required=True,
    )
    parser.add_argument("--pmin", help="smallest prime to try", type=int, default=3)
    parser.add_argument("--pmax", help="largest prime to try", type=int, default=100)
    parser.add_argument(
        "--json", help="write one JSON object per result", action="store_true"
    )
    parser.add_argument(
        "--parallel", help="spread the primes over a process pool", action="store_true"
    )
    parser.add_argument(
        "--num_thread",
        help="pool size, defaults to SUPERCONG_NUM_THREADS or every core",
        type=int,
    )
    parser.add_argument("--output_csv", help="also write every result to this CSV")
    parser.add_argument(
        "--verbose", help="progress lines on stderr", action="store_true"
    )
    return parser.parse_args(argv)


def build_config(args) -> RunConfig:
    num_thread = args.num_thread if args.num_thread else get_num_threads()
    return RunConfig(
        command="sweep",
        check_ids=tuple(args.check.split(",")),
        p_lo=args.pmin,
        p_hi=args.pmax,
        parallel=args.parallel,
        num_thread=num_thread,
        output_format="json" if args.json else "human",
    )


def main(argv=None):
    args = get_cmd_line_args(argv)
    try:
        config = build_config(args)
        check_ids = resolve_check_ids(config.check_ids)
    except ConfigError as err:
        print(f"[SWEEP] {err}", file=sys.stderr)
        return 2
    except UnknownCheckId as err:
        print(f"[SWEEP] {err.args[0]}", file=sys.stderr)
        return 2

    reports = []
    try:
        for check_id in check_ids:
            report = sweep(
                check_id,
                config.p_lo,
                config.p_hi,
                parallel=config.parallel,
                num_thread=config.num_thread,
                verbose=args.verbose,
            )
            reports.append(report)
    except OracleMismatch as err:
        print(f"[SWEEP] {err}", file=sys.stderr)
        return 1

    results = [result for report in reports for result in report.results]
    write_results(sorted(results, key=lambda r: (r.check_id, r.p)), config.json)

    for report in reports:
        print(f"[SWEEP] {report}", file=sys.stderr)
    if args.output_csv:
        df = pd.concat([report.to_dataframe() for report in reports])
        df.to_csv(args.output_csv, index=False)
    return 0 if all(report.ok for report in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
