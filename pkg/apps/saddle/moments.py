"""
Moment sums of Y_n = X_1 + ... + X_n under the tilt sigma.

With q_j = exp(-j sigma), a multiset component contributes

    mean      j a_j q_j / (1 - q_j)
    variance  j^2 a_j q_j / (1 - q_j)^2
    log-norm  -a_j log(1 - q_j)

and a selection component the same with (1 + q_j) in place of (1 - q_j) and
+a_j log(1 + q_j) as log-normaliser.

Only the window of j whose terms exceed the largest term by at most the
working precision is summed at high precision; the window is located with a
double-precision pass over log a_j.
"""
import logging
import math

import numpy as np
from mpmath import mp
from scipy.special import logsumexp

from apps.exact import Kind
from core.precision import engine_setting, resolve_precision, to_mpf

logger = logging.getLogger(__name__)

GUARD_BITS = 32
# Above this j sigma, log|log(1 -+ q)| is -x +- q/2 to double precision.
ASYMPTOTIC_X = 30.0


def eulerian_row(m):
    """Eulerian numbers A(m, 0..m-1); sum_k k^m x^k = x A_m(x) / (1 - x)^(m+1)."""
    row = [1]
    for size in range(2, m + 1):
        row = [
            (k + 1) * (row[k] if k < len(row) else 0) + (size - k) * (row[k - 1] if k >= 1 else 0)
            for k in range(size)
        ]
    return row if m >= 1 else [1]


class ComponentSums:
    """Window-restricted high-precision sums over j = 1..n for one sequence and kind."""

    def __init__(self, seq, n, kind=Kind.MULTISET, precision_bits=None):
        self.seq = seq
        self.n = n
        self.kind = Kind(kind)
        self.selection = self.kind == Kind.SELECTION
        self.precision_bits = resolve_precision(precision_bits)
        self.log_a = seq.log_weights(n)
        self.log_j = np.log(np.arange(1, n + 1, dtype=np.float64))
        self.cut = self.precision_bits * math.log(2) + math.log(n) + 20

    @property
    def empty(self):
        return not np.isfinite(self.log_a).any()

    def guard_bits(self, sigma):
        """Extra bits for the cancellation in 1 - q_1 when sigma is small."""
        lost = max(0, math.ceil(-math.log2(float(sigma)))) if float(sigma) < 1 else 0
        return GUARD_BITS + lost

    def log_denominator(self, sigma):
        """float log(1 -+ q_j) for every j."""
        x = np.arange(1, self.n + 1, dtype=np.float64) * float(sigma)
        if self.selection:
            return np.log1p(np.exp(-x)), x
        return _log1mexp(x), x

    def log_abs_log_denominator(self, sigma):
        """float log|log(1 -+ q_j)| for every j, finite however small q_j gets."""
        x = np.arange(1, self.n + 1, dtype=np.float64) * float(sigma)
        q = np.exp(-x)
        sign = -1.0 if self.selection else 1.0
        with np.errstate(divide='ignore'):
            if self.selection:
                near = np.log(np.log1p(q))
            else:
                near = np.log(-_log1mexp(x))
        return np.where(x < ASYMPTOTIC_X, near, -x + sign * q / 2)

    def window(self, sigma, power, den_power):
        """(lo, hi) bounding every j with a non-negligible j^power a_j q_j / (1 -+ q_j)^den_power."""
        log_den, x = self.log_denominator(sigma)
        logs = self.log_a + power * self.log_j - x - den_power * log_den
        finite = np.isfinite(logs)
        if not finite.any():
            return None
        peak = logs[finite].max()
        keep = np.nonzero(finite & (logs >= peak - self.cut))[0]
        return int(keep[0]) + 1, int(keep[-1]) + 1

    def log_mean(self, sigma):
        """float log M_n(sigma), for the double-precision bracketing stage."""
        log_den, x = self.log_denominator(sigma)
        logs = self.log_a + self.log_j - x - log_den
        finite = np.isfinite(logs)
        if not finite.any():
            return -math.inf
        return float(logsumexp(logs[finite]))

    def _tilted_terms(self, sigma, lo, hi):
        """Yield (j, a_j, q_j) over the window; q_j stepped by multiplication."""
        step = mp.exp(-sigma)
        q = mp.exp(-lo * sigma)
        for j, a in self.seq.iter_weights(lo, hi):
            if a:
                yield j, a, q
            q *= step

    def mean_and_slope(self, sigma):
        """(M_n(sigma), dM_n/dsigma); the slope is -sum j^2 a_j q_j / (1 -+ q_j)^2."""
        sigma_f = float(sigma)
        bounds = self.window(sigma_f, 1, 1)
        if bounds is None:
            return mp.zero, mp.zero
        lo, hi = bounds
        lo_2, hi_2 = self.window(sigma_f, 2, 2)
        lo, hi = min(lo, lo_2), max(hi, hi_2)
        with mp.workprec(self.precision_bits + self.guard_bits(sigma)):
            s = to_mpf(sigma)
            mean = mp.zero
            slope = mp.zero
            for j, a, q in self._tilted_terms(s, lo, hi):
                denominator = 1 + q if self.selection else 1 - q
                term = j * a * q / denominator
                mean += term
                slope -= j * term / denominator
            return +mean, +slope

    def mean(self, sigma):
        return self.mean_and_slope(sigma)[0]

    def variance(self, sigma):
        return -self.mean_and_slope(sigma)[1]

    def log_normaliser(self, sigma):
        """log prod_j (1 - q_j)^(-a_j) for multisets, log prod_j (1 + q_j)^(a_j) for selections."""
        logs = self.log_a + self.log_abs_log_denominator(sigma)
        finite = np.isfinite(logs)
        if not finite.any():
            return mp.zero
        peak = logs[finite].max()
        keep = np.nonzero(finite & (logs >= peak - self.cut))[0]
        lo, hi = int(keep[0]) + 1, int(keep[-1]) + 1
        with mp.workprec(self.precision_bits + self.guard_bits(sigma)):
            s = to_mpf(sigma)
            total = mp.zero
            for j, a, q in self._tilted_terms(s, lo, hi):
                total += a * mp.log1p(q) if self.selection else -a * mp.log1p(-q)
            return +total

    def log2_normaliser_magnitude(self, sigma):
        """float log2 of sum_j a_j |log(1 -+ q_j)|; -inf for an empty sum."""
        logs = self.log_a + self.log_abs_log_denominator(sigma)
        finite = np.isfinite(logs)
        if not finite.any():
            return -math.inf
        return float(logsumexp(logs[finite])) / math.log(2)

    def rho(self, sigma, order):
        """
        rho_l = sum_j j^l a_j sum_k k^(l-1) q_j^k.

        The inner series is summed term by term while it needs few terms and
        otherwise replaced by its exact rational form q A_{l-1}(q) / (1 - q)^l.
        """
        if order < 3:
            raise ValueError(f"rho_l is defined for l >= 3, got {order}")
        sigma_f = float(sigma)
        x = np.arange(1, self.n + 1, dtype=np.float64) * sigma_f
        logs = self.log_a + order * self.log_j - x - order * _log1mexp(x)
        finite = np.isfinite(logs)
        if not finite.any():
            return mp.zero
        peak = logs[finite].max()
        keep = np.nonzero(finite & (logs >= peak - self.cut))[0]
        lo, hi = int(keep[0]) + 1, int(keep[-1]) + 1

        tolerance = engine_setting('RHO_RELATIVE_TOLERANCE')
        max_terms = engine_setting('RHO_MAX_SERIES_TERMS')
        eulerian = eulerian_row(order - 1)
        with mp.workprec(self.precision_bits + self.guard_bits(sigma)):
            s = to_mpf(sigma)
            total = mp.zero
            closed = 0
            for j, a, q in self._tilted_terms(s, lo, hi):
                inner = _power_series(q, order - 1, j * sigma_f, tolerance, max_terms)
                if inner is None:
                    inner = q * mp.polyval(eulerian[::-1], q) / (1 - q) ** order
                    closed += 1
                total += mp.mpf(j) ** order * a * inner
            if closed:
                logger.debug(f"rho_{order}: {closed} inner sums taken in closed form")
            return +total


def _log1mexp(x):
    """log(1 - exp(-x)) for x > 0."""
    with np.errstate(divide='ignore'):
        return np.where(x < math.log(2), np.log(-np.expm1(-x)), np.log1p(-np.exp(-x)))


def _power_series(q, power, x, tolerance, max_terms):
    """sum_k k^power q^k by truncation, or None when that would take too many terms."""
    # Terms shrink once k > power / x; the tail is geometric after that.
    needed = (power + math.log(1 / tolerance) + 10) / max(x, 1e-300)
    if needed > max_terms:
        return None
    total = mp.zero
    q_k = q
    k = 1
    while True:
        term = mp.mpf(k) ** power * q_k
        total += term
        if k > power / x and term <= tolerance * total:
            return total
        k += 1
        q_k *= q


def mean_M(seq, n, sigma, kind=Kind.MULTISET, precision_bits=None):
    """M_n(sigma) = E[Y_n]; strictly decreasing in sigma."""
    return ComponentSums(seq, n, kind, precision_bits).mean(sigma)


def variance_B2(seq, n, sigma, kind=Kind.MULTISET, precision_bits=None):
    """B_n^2(sigma) = Var(Y_n)."""
    return ComponentSums(seq, n, kind, precision_bits).variance(sigma)


def rho_l(seq, n, sigma, order, precision_bits=None):
    return ComponentSums(seq, n, Kind.MULTISET, precision_bits).rho(sigma, order)
