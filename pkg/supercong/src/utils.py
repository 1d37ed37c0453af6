"""
Assorted helpers: the shared prime sieve and human-readable report lines.
"""
import json
import sys
from functools import lru_cache
from typing import Iterable, List, Optional, TextIO

import numpy as np

from .hypersum import CheckResult


@lru_cache(maxsize=8)
def prime_sieve(limit: int) -> np.ndarray:
    """
    Boolean array is_prime[0..limit].
    """
    is_prime = np.ones(max(limit + 1, 2), dtype=bool)
    is_prime[:2] = False
    for n in range(2, int(limit**0.5) + 1):
        if is_prime[n]:
            is_prime[n * n :: n] = False
    is_prime.flags.writeable = False
    return is_prime


def primes_between(p_lo: int, p_hi: int) -> List[int]:
    """
    Odd primes p with p_lo <= p <= p_hi; empty when p_lo > p_hi.
    """
    if p_hi < 3 or p_lo > p_hi:
        return []
    is_prime = prime_sieve(p_hi)
    lo = max(p_lo, 3)
    return [int(p) for p in np.flatnonzero(is_prime[lo:]) + lo]


def format_check_result(result: CheckResult) -> str:
    if result.skipped is not None:
        return f"{result.check_id:<16} p={result.p:<6} SKIPPED ({result.skipped})"
    status = "pass" if result.passed else "FAIL"
    route = " [oracle]" if result.route == "oracle" else ""
    return (
        f"{result.check_id:<16} p={result.p:<6} {result.lhs} vs {result.rhs} "
        f"(mod {result.modulus}) {status}{route}"
    )


def write_results(
    results: Iterable[CheckResult], as_json: bool, stream: Optional[TextIO] = None
) -> None:
    """
    One line per result: a JSON object, or the human-readable form. Writes to
    stdout unless another stream is given.
    """
    stream = stream or sys.stdout
    for result in results:
        if as_json:
            stream.write(json.dumps(result.to_dict()) + "\n")
        else:
            stream.write(format_check_result(result) + "\n")
