#!/usr/bin/env python
import argparse
import json
import sys
from time import time

from supercong import WZ_PAIRS, check_pair, get_pair
from supercong.src.config import ConfigError, RunConfig
from supercong.src.data_loader import parse_rational
from supercong.src.wz import (
    GridReport,
    check_g_zero_convention,
    sample_x,
    telescoped_reports,
)


def get_cmd_line_args(argv=None):
    parser = argparse.ArgumentParser("Certify the WZ pairs exactly on a grid")
    parser.add_argument(
        "--pair",
        help="which pair to check, or ALL",
        choices=sorted(WZ_PAIRS) + ["ALL"],
        default="ALL",
    )
    parser.add_argument(
        "--grid", help="check 0 <= n <= grid, 1 <= k <= grid", type=int, default=12
    )
    parser.add_argument(
        "--x",
        help="comma-separated rationals for the LEMMA3 pair (default: random draws)",
    )
    parser.add_argument(
        "--num_x", help="how many random x to draw for LEMMA3", type=int, default=10
    )
    parser.add_argument("--seed", help="seed for the random x draws", type=int)
    parser.add_argument(
        "--telescoped",
        help="also check the telescoped sums of the pairs",
        action="store_true",
    )
    parser.add_argument(
        "--json", help="write one JSON object per grid", action="store_true"
    )
    return parser.parse_args(argv)


def get_x_values(args):
    if args.x:
        try:
            x_values = [parse_rational(x) for x in args.x.split(",")]
        except ValueError as err:
            raise ConfigError(str(err)) from err
        if 0 in x_values:
            raise ConfigError("x = 0 makes the LEMMA3 pair vanish, choose another x")
        return x_values
    return sample_x(args.num_x, args.seed)


def main(argv=None):
    args = get_cmd_line_args(argv)
    try:
        config = RunConfig(
            command="wz",
            grid=(args.grid, args.grid),
            output_format="json" if args.json else "human",
        )
        x_values = get_x_values(args)
    except ConfigError as err:
        print(f"[WZ] {err}", file=sys.stderr)
        return 2

    start = time()
    pair_ids = sorted(WZ_PAIRS) if args.pair == "ALL" else [args.pair]
    n_max, k_max = config.grid
    reports = []
    for pair_id in pair_ids:
        pair = get_pair(pair_id)
        for x in x_values if pair.needs_x else [None]:
            report = check_pair(pair, n_max, k_max, x)
            if report.all_pass and not check_g_zero_convention(pair, k_max, x):
                report = GridReport(pair_id, n_max, k_max, x, (0, 0, "G(0,k) != 0"))
            reports.append(report)

    for report in reports:
        if config.json:
            record = {
                "pair": report.pair_id,
                "x": None if report.x is None else str(report.x),
                "grid": [report.n_max, report.k_max],
                "pass": report.all_pass,
            }
            print(json.dumps(record))
        else:
            print(report)
    ok = all(report.all_pass for report in reports)

    if args.telescoped:
        identities = telescoped_reports()
        failures = [identity for identity in identities if not identity]
        n_exact = len(identities) - len(failures)
        print(f"telescoped sums: {n_exact}/{len(identities)} exact")
        for identity in failures:
            print(f"[WZ] {identity}", file=sys.stderr)
        ok = ok and not failures

    print(f"[WZ] certification took {time() - start:.2f}s", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
