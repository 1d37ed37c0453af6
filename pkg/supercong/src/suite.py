"""
Runner for every registered congruence: single checks, prime sweeps and the
verify-all pass.
"""
import sys
from dataclasses import dataclass, field
from multiprocessing import Pool
from time import time
from typing import Dict, Iterable, List, Optional, Tuple, Union

import pandas as pd

from .data_loader import (
    Check,
    UnknownCheckId,
    get_check,
    get_check_ids,
    get_half_full_pairs,
)
from .hypersum import (
    CheckResult,
    CongruenceSpec,
    Skip,
    Status,
    eval_sum_mod,
    half_full_residues,
    rhs_residue,
)
from .lemmas import LemmaCheck
from .oracle import reduce_mod, sum_exact
from .padic import PadicCtx
from .utils import primes_between

DOUBLE_ENTRY_BOUND = 31

__all__ = [
    "LemmaCheck",
    "OracleMismatch",
    "SweepReport",
    "UnknownCheckId",
    "half_full_sweep",
    "run_check",
    "status_summary",
    "summarise",
    "sweep",
    "verify_all",
]


class OracleMismatch(RuntimeError):
    pass


def _resolve(check: Union[str, Check]) -> Check:
    return get_check(check) if isinstance(check, str) else check


def _below_bound_reason(p_min: int) -> str:
    # a bound of 7 reads "p>5"
    smaller = primes_between(3, p_min - 1)
    return f"p>{smaller[-1]}" if smaller else f"p>={p_min}"


def _inadmissible_reason(check: Check, p: int) -> Optional[str]:
    if p < check.p_min:
        return _below_bound_reason(check.p_min)
    p_max = getattr(check, "p_max", None)
    if p_max is not None and p > p_max:
        return f"sampled for p<={p_max}"
    return None


def _run_hypergeometric(
    spec: CongruenceSpec, p: int, double_entry: bool
) -> CheckResult:
    ctx = PadicCtx(p, spec.mod_exp)
    try:
        lhs = eval_sum_mod(spec, p)
        route = "modular"
    except Skip:
        lhs = reduce_mod(sum_exact(spec, p), ctx)
        route = "oracle"
    if double_entry and route == "modular":
        exact = reduce_mod(sum_exact(spec, p), ctx)
        if exact != lhs:
            raise OracleMismatch(
                f"{spec.id} at p={p}: modular {lhs.r} but exact {exact.r} (mod {ctx})"
            )
    return CheckResult.compare(spec.id, p, lhs, rhs_residue(spec, p), route=route)


def _run_lemma(check: LemmaCheck, p: int, double_entry: bool) -> CheckResult:
    try:
        lhs, rhs = check.evaluate(p)
    except Skip as err:
        return CheckResult.skip(check.id, p, check.mod_exp, str(err))
    if double_entry:
        exact, _ = check.evaluate(p, exact=True)
        if exact != lhs:
            raise OracleMismatch(
                f"{check.id} at p={p}: modular {[v.r for v in lhs]} "
                f"but exact {[v.r for v in exact]}"
            )
    # first failing k, or the last k when every k passes
    mismatched = (i for i, (a, b) in enumerate(zip(lhs, rhs)) if a != b)
    index = next(mismatched, len(lhs) - 1)
    return CheckResult.compare(check.id, p, lhs[index], rhs[index])


def run_check(
    check: Union[str, Check], p: int, double_entry: bool = True
) -> CheckResult:
    """
    Evaluate one registered check at the prime p.

    Primes below the check's bound (or above its sampling bound) give a skipped
    result. A hypergeometric check the modular path has to skip is re-evaluated
    exactly and marked route="oracle". For p <= 31 the left-hand side is
    recomputed in exact rationals and OracleMismatch is raised on disagreement.
    """
    check = _resolve(check)
    reason = _inadmissible_reason(check, p)
    if reason is not None:
        return CheckResult.skip(check.id, p, check.mod_exp, reason)
    double_entry = double_entry and p <= DOUBLE_ENTRY_BOUND
    if isinstance(check, CongruenceSpec):
        return _run_hypergeometric(check, p, double_entry)
    return _run_lemma(check, p, double_entry)


@dataclass
class SweepReport:
    check_id: str
    p_lo: int
    p_hi: int
    status: Status
    results: List[CheckResult] = field(default_factory=list)
    wall_time: float = 0.0
    kind: str = "hypergeometric"

    @property
    def n_pass(self) -> int:
        return sum(1 for r in self.results if r.passed is True)

    @property
    def n_fail(self) -> int:
        return sum(1 for r in self.results if r.passed is False)

    @property
    def n_skipped(self) -> int:
        return sum(1 for r in self.results if r.skipped is not None)

    @property
    def n_attempted(self) -> int:
        return len(self.results)

    @property
    def counts(self) -> Dict[str, int]:
        return {"pass": self.n_pass, "fail": self.n_fail, "skipped": self.n_skipped}

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if r.passed is False]

    @property
    def oracle_routed(self) -> List[int]:
        return [r.p for r in self.results if r.route == "oracle" and r.skipped is None]

    @property
    def ok(self) -> bool:
        return self.n_fail == 0

    def to_dataframe(self) -> pd.DataFrame:
        columns = ["check", "p", "modulus", "lhs", "rhs", "pass", "skipped", "route"]
        return pd.DataFrame([r.to_dict() for r in self.results], columns=columns)

    def __str__(self):
        oracle = f", oracle-routed p={self.oracle_routed}" if self.oracle_routed else ""
        return (
            f"{self.check_id} [{self.status.value}] p in [{self.p_lo}, {self.p_hi}]: "
            f"{self.n_pass} pass, {self.n_fail} fail, {self.n_skipped} skipped"
            f"{oracle} ({self.wall_time:.2f}s)"
        )


def _run_wrapper(args: Tuple[str, int]) -> CheckResult:
    check_id, p = args
    return run_check(check_id, p)


def sweep(
    check_id: str,
    p_lo: int,
    p_hi: int,
    parallel: bool = False,
    num_thread: int = 1,
    verbose: bool = False,
) -> SweepReport:
    """
    run_check on every odd prime in [p_lo, p_hi]. An empty range gives an empty
    report. Results are sorted by p, so serial and parallel sweeps agree.
    """
    check = get_check(check_id)
    primes = primes_between(p_lo, p_hi)
    start = time()
    if parallel and num_thread > 1 and len(primes) > 1:
        with Pool(num_thread) as pool:
            jobs = ((check_id, p) for p in primes)
            results = list(pool.imap_unordered(_run_wrapper, jobs))
    else:
        results = [run_check(check, p) for p in primes]
    results.sort(key=lambda r: r.p)
    report = SweepReport(
        check_id, p_lo, p_hi, check.status, results, time() - start, check.kind()
    )
    if verbose:
        print(f"[SWEEP] {report}", file=sys.stderr)
        for failure in report.failures:
            print(f"[SWEEP] FAIL {failure.to_dict()}", file=sys.stderr)
    return report


def half_full_sweep(p_lo: int, p_hi: int, verbose: bool = False) -> List[SweepReport]:
    """
    For every registered half-range sum, compare it with its full-range sum at
    each odd prime in [p_lo, p_hi]. The result reads lhs = full sum, rhs = half
    sum, both mod p^K.
    """
    reports = []
    primes = primes_between(p_lo, p_hi)
    for full, half in get_half_full_pairs():
        check_id = f"half-full[{half.id}]"
        p_min = max(full.p_min, half.p_min)
        start = time()
        results = []
        for p in primes:
            if p < p_min:
                reason = _below_bound_reason(p_min)
                results.append(CheckResult.skip(check_id, p, half.mod_exp, reason))
                continue
            try:
                full_sum, half_sum = half_full_residues(full, half, p)
            except Skip as err:
                results.append(CheckResult.skip(check_id, p, half.mod_exp, str(err)))
                continue
            results.append(CheckResult.compare(check_id, p, full_sum, half_sum))
        report = SweepReport(
            check_id, p_lo, p_hi, half.status, results, time() - start, "half-full"
        )
        if verbose:
            print(f"[SWEEP] {report}", file=sys.stderr)
        reports.append(report)
    return reports


def verify_all(
    p_hi: int,
    p_lo: int = 3,
    check_ids: Optional[Iterable[str]] = None,
    parallel: bool = False,
    num_thread: int = 1,
    verbose: bool = False,
    half_full: bool = False,
) -> List[SweepReport]:
    """
    Sweep every check (or the given ids) over [p_lo, p_hi]; with half_full the
    half-range against full-range comparisons are appended.
    """
    if p_hi < 3:
        raise ValueError(f"verify_all needs p_hi >= 3, got {p_hi}")
    ids = list(check_ids) if check_ids is not None else get_check_ids()
    reports = []
    for check_id in ids:
        reports.append(sweep(check_id, p_lo, p_hi, parallel, num_thread, verbose))
    if half_full:
        reports.extend(half_full_sweep(p_lo, p_hi, verbose))
    if verbose:
        for line in status_summary(reports):
            print(f"[SWEEP] {line}", file=sys.stderr)
    return reports


def status_summary(reports: List[SweepReport]) -> List[str]:
    """One line per status, naming the checks that failed."""
    lines = []
    for status in Status:
        group = [r for r in reports if r.status == status]
        failed = [r.check_id for r in group if not r.ok]
        lines.append(
            f"{status.value}: {len(group)} checks, "
            f"{sum(r.n_pass for r in group)} passes, failing: {failed or 'none'}"
        )
    return lines


def summarise(reports: List[SweepReport]) -> pd.DataFrame:
    rows = [
        {
            "check": r.check_id,
            "kind": r.kind,
            "status": r.status.value,
            "pass": r.n_pass,
            "fail": r.n_fail,
            "skipped": r.n_skipped,
            "oracle_routed": len(r.oracle_routed),
            "wall_time": round(r.wall_time, 3),
        }
        for r in reports
    ]
    return pd.DataFrame(rows)
