"""
Ratio law c_n / c_{n+1} = y^-1 e^{-delta_n + o(delta_n)} and the numeric
hypotheses of the logical limit law.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from apps.exact import Kind, count
from core.precision import engine_setting, resolve_precision, to_fraction, to_mpf
from enumeration_engine.exceptions import NotExpansive, RangeMismatch
from .tasks import solve_saddles

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RatioReport:
    seq_id: str
    kind: Kind
    y: object
    n_range: tuple
    ratios: tuple
    normalized: tuple
    threshold_observed: object
    precision_bits: int = 128

    @property
    def deviations(self):
        return tuple(abs(value - 1) for value in self.normalized)


@dataclass(frozen=True)
class LimitLawVerdict:
    seq_id: str
    kind: Kind
    y: object
    n_max: int
    hypotheses_hold_over_sample: bool
    threshold_observed: object
    final_normalized_deviation: object
    precision_bits: int = 128


def resolve_y(seq, y=None):
    if y is not None:
        return y
    params = seq.declared_params()
    if params is None:
        raise NotExpansive(f"{seq.descriptor} declares no y; pass it explicitly", seq=seq.descriptor)
    return params.y


def observed_threshold(counts, y, n_min=1):
    """
    Smallest N with c_n / c_{n+1} <= 1/y for every table n > N, or None
    when the last comparable n still violates it.
    """
    y = to_fraction(y)
    last = None
    for n in range(n_min, counts.N):
        if y * counts[n] > counts[n + 1]:
            last = n
    if last is None:
        return n_min - 1
    if last == counts.N - 1:
        return None
    return last


def ratio_report(seq, counts, saddles, y=None, precision_bits=None):
    """c_n / c_{n+1} and y e^{delta_n} c_n / c_{n+1} at the n of the given saddles."""
    bits = resolve_precision(precision_bits)
    y = resolve_y(seq, y)
    saddles = sorted(saddles, key=lambda solution: solution.n)
    if not saddles:
        raise RangeMismatch("no saddle solutions supplied")
    n_range = tuple(solution.n for solution in saddles)
    if n_range[-1] + 1 > counts.N:
        raise RangeMismatch(
            f"counts cover n <= {counts.N}, ratios up to n={n_range[-1]} need n <= {n_range[-1] + 1}",
            N=counts.N, n_max=n_range[-1],
        )
    if any(solution.kind != counts.kind for solution in saddles):
        raise RangeMismatch(f"saddles and counts disagree on kind ({counts.kind.value})")

    ratios, normalized = [], []
    with mp.workprec(bits):
        log_y = mp.log(to_mpf(y))
        for solution in saddles:
            n = solution.n
            if counts[n + 1] == 0:
                raise RangeMismatch(f"c_{n + 1} = 0, the ratio is undefined", n=n + 1)
            exact = Fraction(counts[n], counts[n + 1])
            ratio = to_mpf(exact)
            delta = solution.delta if solution.delta is not None else solution.sigma - log_y
            ratios.append(ratio)
            normalized.append(to_mpf(y) * mp.exp(delta) * ratio)

    threshold = observed_threshold(counts, y)
    logger.debug(f"Ratio report for {counts.seq_id}: threshold {threshold} over n <= {counts.N}")
    return RatioReport(
        seq_id=counts.seq_id, kind=counts.kind, y=y, n_range=n_range,
        ratios=tuple(ratios), normalized=tuple(normalized),
        threshold_observed=threshold, precision_bits=bits,
    )


def limit_law_check(seq, y=None, n_max=1500, kind=Kind.MULTISET, precision_bits=None):
    """
    c_n / c_{n+1} -> 1/y, and for y > 1 eventually c_n / c_{n+1} <= 1/y, over n <= n_max.
    """
    kind = Kind(kind)
    bits = resolve_precision(precision_bits)
    y = resolve_y(seq, y)
    counts = count(seq, n_max, kind)
    last_n = n_max - 1
    report = ratio_report(seq, counts, solve_saddles(seq, [last_n], kind, bits), y, bits)
    deviation = report.deviations[-1]
    hold = deviation < engine_setting('LIMIT_LAW_TOLERANCE') and report.threshold_observed is not None
    logger.info(
        f"Limit-law hypotheses for {seq.descriptor} up to n={n_max}: "
        f"{'hold' if hold else 'fail'} (deviation {mp.nstr(deviation, 5)})"
    )
    return LimitLawVerdict(
        seq_id=seq.descriptor, kind=kind, y=y, n_max=n_max,
        hypotheses_hold_over_sample=hold,
        threshold_observed=report.threshold_observed,
        final_normalized_deviation=deviation, precision_bits=bits,
    )
