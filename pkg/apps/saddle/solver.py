"""
The saddle equation M_n(sigma) = n.

A double-precision bisection on log M_n(sigma) - log n locates sigma to about
16 digits, and a safeguarded Newton iteration at the working precision takes
it the rest of the way using dM/dsigma = -B_n^2(sigma).
"""
import logging
import math
from dataclasses import dataclass, field

import numpy as np
from mpmath import mp
from scipy.optimize import bisect
from scipy.special import logsumexp

from apps.exact import Kind
from core.precision import engine_setting, resolve_precision, to_mpf
from enumeration_engine.exceptions import NoSaddle, PrecisionExhausted
from .moments import ComponentSums

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SaddleSolution:
    n: int
    kind: Kind
    sigma: object
    delta: object
    residual: object
    B2: object
    rho: dict = field(default_factory=dict)
    precision_bits: int = 128

    @property
    def tolerance(self):
        return saddle_tolerance(self.n, self.precision_bits)


def saddle_tolerance(n, precision_bits):
    """n 2^-(precision - margin); about n 1.4e-20 at 128 bits."""
    margin = engine_setting('SADDLE_TOLERANCE_MARGIN_BITS')
    with mp.workprec(precision_bits):
        return n * mp.mpf(2) ** (margin - precision_bits)


def leading_delta(params, n):
    """(K Gamma(r+1) / n)^(1/(r+1)), the first-order offset sigma_n - log y."""
    K, r = float(params.K), float(params.r)
    return (K * math.gamma(r + 1) / n) ** (1 / (r + 1))


def partition_sigma_asymptotic(n):
    """pi / sqrt(6n) - 1/(4n), the two-term saddle of the partition function."""
    return math.pi / math.sqrt(6 * n) - 1 / (4 * n)


def solve_saddle(seq, n, kind=Kind.MULTISET, precision_bits=None, rho_orders=()):
    """Solve M_n(sigma) = n and evaluate B_n^2 and the requested rho_l there."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    kind = Kind(kind)
    bits = resolve_precision(precision_bits)
    sums = ComponentSums(seq, n, kind, bits)
    if sums.empty:
        raise NoSaddle(f"a_j = 0 for every j <= {n}, so M_n vanishes", n=n, seq=seq.descriptor)
    if kind == Kind.SELECTION:
        _check_selection_feasible(seq, sums, n)

    params = seq.declared_params()
    seed = math.log(params.y) + leading_delta(params, n) if params is not None else 1 / n
    lo, hi = _bracket(sums, n, seed)
    sigma_f, result = bisect(
        lambda s: sums.log_mean(s) - math.log(n), lo, hi,
        xtol=1e-300, rtol=4 * np.finfo(float).eps,
        maxiter=engine_setting('BISECTION_MAX_ITER'), full_output=True, disp=False,
    )
    logger.debug(
        f"Bisection for {seq.descriptor} n={n} {kind.value}: sigma={sigma_f!r} "
        f"after {result.iterations} iterations (converged={result.converged})"
    )

    sigma, mean, slope = _newton_polish(sums, n, sigma_f, lo, hi, bits)
    with mp.workprec(bits + sums.guard_bits(sigma_f)):
        delta = sigma - mp.log(to_mpf(params.y)) if params is not None else None
        rho = {order: sums.rho(sigma, order) for order in sorted(set(rho_orders))}
        return SaddleSolution(
            n=n, kind=kind, sigma=sigma, delta=delta, residual=mean - n,
            B2=-slope, rho=rho, precision_bits=bits,
        )


def _check_selection_feasible(seq, sums, n):
    """M*_n decreases from (1/2) sum j a_j at sigma = 0, so that must exceed n."""
    if n <= 10_000:
        half_total = sum(j * seq.eval(j) for j in range(1, n + 1))
        feasible = half_total > 2 * n
    else:
        logs = sums.log_a + sums.log_j
        finite = np.isfinite(logs)
        feasible = float(logsumexp(logs[finite])) > math.log(2 * n)
        half_total = None
    if not feasible:
        raise NoSaddle(
            f"selection saddle needs (1/2) sum j a_j > {n}",
            n=n, seq=seq.descriptor, total=half_total,
        )


def _bracket(sums, n, seed):
    """Expand geometrically from the seed until log M_n - log n changes sign."""
    target = math.log(n)
    max_expansions = engine_setting('BRACKET_MAX_EXPANSIONS')
    lo = hi = seed
    for _ in range(max_expansions):
        if sums.log_mean(hi) <= target:
            break
        hi *= 2
    else:
        raise NoSaddle(f"no upper bracket for the saddle at n={n}", n=n)
    for _ in range(max_expansions):
        if sums.log_mean(lo) >= target:
            break
        lo /= 2
    else:
        raise NoSaddle(f"no lower bracket for the saddle at n={n}", n=n)
    logger.debug(f"Saddle bracket for n={n}: [{lo!r}, {hi!r}]")
    return lo, hi


def _newton_polish(sums, n, sigma_f, lo_f, hi_f, bits):
    """Newton on M_n(sigma) - n, kept inside the bracket, to n 2^-(bits - margin)."""
    tolerance = saddle_tolerance(n, bits)
    with mp.workprec(bits + sums.guard_bits(sigma_f)):
        lo, hi = mp.mpf(lo_f), mp.mpf(hi_f)
        sigma = mp.mpf(sigma_f)
        residual = None
        for iteration in range(engine_setting('NEWTON_MAX_ITER')):
            mean, slope = sums.mean_and_slope(sigma)
            residual = mean - n
            if abs(residual) <= tolerance:
                logger.debug(f"Newton polish converged after {iteration} steps, residual={residual}")
                return sigma, mean, slope
            if residual > 0:
                lo = sigma
            else:
                hi = sigma
            step = residual / slope
            candidate = sigma - step
            if not lo < candidate < hi:
                candidate = (lo + hi) / 2
            if candidate == sigma:
                break
            sigma = candidate
    raise PrecisionExhausted(
        f"saddle residual not below {mp.nstr(tolerance, 5)} at {bits} bits"
        + (f" (last {mp.nstr(residual, 5)})" if residual is not None else ""),
        n=n, precision_bits=bits,
    )
