#!/usr/bin/env python

import argparse

import matplotlib.pyplot as plt
import mpmath
import numpy as np

from supercong import SERIES, get_series
from supercong.src.series import epsilon_estimates, series_partial_sums


def main(argv=None):
    parser = argparse.ArgumentParser(
        description="plot how fast raw partial sums and Wynn epsilon approach the limit"
    )
    parser.add_argument(
        "--id", help="which series", choices=sorted(SERIES), default="sqrt7-over-pi"
    )
    parser.add_argument("--terms", help="number of partial sums", type=int, default=200)
    parser.add_argument("--digits", help="working precision", type=int, default=60)
    parser.add_argument("--output_png", help="location of output file")
    args = parser.parse_args(argv)

    spec = get_series(args.id)
    with mpmath.workdps(args.digits + args.terms // 8):
        target = spec.target.limit()
        partials = series_partial_sums(spec, args.terms)
        estimates = epsilon_estimates(partials)
        # floor at 1e-300 so the log axis never sees zero
        raw_error = [max(float(abs(s - target)), 1e-300) for s in partials]
        wynn_error = [max(float(abs(e - target)), 1e-300) for e in estimates]

    fig, ax = plt.subplots()
    ax.semilogy(np.arange(len(raw_error)) + 1, raw_error, label="partial sums")
    # estimate j comes from the first j + 3 partial sums
    ax.semilogy(np.arange(len(wynn_error)) + 3, wynn_error, label="Wynn epsilon")
    ax.set_xlabel("number of terms")
    ax.set_ylabel("|S - target|")
    ax.set_title(f"{spec.id} -> {spec.target.value}")
    ax.legend()
    fig.tight_layout()
    if args.output_png:
        plt.savefig(args.output_png)
    else:
        plt.show()
    return 0


if __name__ == "__main__":
    main()
