#!/usr/bin/env python
import argparse
import sys

from supercong import summarise, verify_all
from supercong.src.config import ConfigError, RunConfig, get_num_threads
from supercong.src.data_loader import UnknownCheckId, resolve_check_ids
from supercong.src.suite import OracleMismatch, status_summary
from supercong.src.utils import write_results


def get_cmd_line_args(argv=None):
    parser = argparse.ArgumentParser("Run every registered congruence check")
    parser.add_argument("--pmin", help="smallest prime to try", type=int, default=3)
    parser.add_argument("--pmax", help="largest prime to try", type=int, default=100)
    parser.add_argument(
        "--check", help="comma-separated subset of check ids", default="ALL"
    )
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
    parser.add_argument(
        "--half_full",
        help="also compare every half-range sum with its full-range sum",
        action="store_true",
    )
    parser.add_argument("--output_csv", help="write the per-check summary here")
    return parser.parse_args(argv)


def main(argv=None):
    args = get_cmd_line_args(argv)
    try:
        config = RunConfig(
            command="verify_all",
            check_ids=tuple(args.check.split(",")),
            p_lo=args.pmin,
            p_hi=args.pmax,
            parallel=args.parallel,
            num_thread=args.num_thread if args.num_thread else get_num_threads(),
            output_format="json" if args.json else "human",
        )
        check_ids = resolve_check_ids(config.check_ids)
    except ConfigError as err:
        print(f"[SWEEP] {err}", file=sys.stderr)
        return 2
    except UnknownCheckId as err:
        print(f"[SWEEP] {err.args[0]}", file=sys.stderr)
        return 2

    try:
        reports = verify_all(
            config.p_hi,
            p_lo=config.p_lo,
            check_ids=check_ids,
            parallel=config.parallel,
            num_thread=config.num_thread,
            half_full=args.half_full,
        )
    except ValueError as err:
        print(f"[SWEEP] {err}", file=sys.stderr)
        return 2
    except OracleMismatch as err:
        print(f"[SWEEP] {err}", file=sys.stderr)
        return 1

    summary_df = summarise(reports)
    if config.json:
        results = [result for report in reports for result in report.results]
        write_results(sorted(results, key=lambda r: (r.check_id, r.p)), as_json=True)
    else:
        print(summary_df.to_string(index=False))
    for line in status_summary(reports):
        print(f"[SWEEP] {line}", file=sys.stderr)
    if args.output_csv:
        summary_df.to_csv(args.output_csv, index=False)
    return 0 if all(report.ok for report in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
