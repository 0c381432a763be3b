"""
Exponent scalings at the saddle, the local limit law and parameter fits.

Growth claims are checked as log-log slopes or as trends between sampled
scales; the o(.) rates behind them are not quantified.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from django.db import models
from django.utils.translation import gettext_lazy as _
from mpmath import mp

from apps.exact import Kind
from apps.saddle import exact_point_prob
from core.precision import engine_setting, resolve_precision, to_mpf
from enumeration_engine.exceptions import InsufficientSamples, NotExpansive
from .tasks import solve_saddles

logger = logging.getLogger(__name__)

MIN_SAMPLES = 4
MIN_DECADES = 2


class Quantity(models.TextChoices):
    DELTA = 'delta', _('delta_n = sigma_n - log y')
    B2 = 'B2', _('Variance B_n^2 at the saddle')
    RHO = 'rho', _('rho_l at the saddle')


@dataclass(frozen=True)
class ScalingReport:
    quantity: str
    samples: tuple
    fitted_slope: float
    expected_slope: float
    deviation: float
    band: tuple = None

    def within(self, tolerance):
        if self.band is not None:
            lower, upper = self.band
            return lower - tolerance <= self.fitted_slope <= upper + tolerance
        return self.deviation <= tolerance


@dataclass(frozen=True)
class TrendReport:
    """Samples (n, value, |value - 1|) of a quantity expected to tend to 1."""

    seq_id: str
    kind: Kind
    samples: tuple

    @property
    def deviations(self):
        return [deviation for _, _, deviation in self.samples]

    @property
    def final_deviation(self):
        return self.deviations[-1]

    @property
    def decreasing(self):
        """Eventually decreasing: the last step shrinks and the end beats the start."""
        deviations = self.deviations
        if len(deviations) < 2:
            return True
        return deviations[-1] < deviations[-2] and deviations[-1] < deviations[0]


@dataclass(frozen=True)
class FittedParams:
    K: float
    r: float
    y: float
    residual_rms: float
    j_min: int
    j_max: int


def scaling_exponent(samples, expected, quantity=Quantity.DELTA, band=None):
    """Least-squares slope of log value against log n."""
    samples = sorted(samples, key=lambda sample: sample[0])
    if len(samples) < MIN_SAMPLES:
        raise InsufficientSamples(
            f"need at least {MIN_SAMPLES} samples, got {len(samples)}", samples=len(samples)
        )
    ns = [n for n, _ in samples]
    if math.log10(ns[-1] / ns[0]) < MIN_DECADES:
        raise InsufficientSamples(
            f"samples span n = {ns[0]}..{ns[-1]}, need {MIN_DECADES} decades",
            n_min=ns[0], n_max=ns[-1],
        )
    if any(value <= 0 for _, value in samples):
        raise ValueError("scaling fits need positive values")

    log_n = np.log(np.array(ns, dtype=np.float64))
    log_value = np.array([float(mp.log(to_mpf(value))) for _, value in samples])
    slope, _ = np.polyfit(log_n, log_value, 1)
    slope = float(slope)
    return ScalingReport(
        quantity=str(quantity), samples=tuple(samples), fitted_slope=slope,
        expected_slope=float(expected), deviation=abs(slope - float(expected)), band=band,
    )


def expected_slope(params, quantity, order=3):
    """-1/(r+1) for delta_n, (r+2)/(r+1) for B_n^2, (r+l)/(r+1) for rho_l."""
    r = float(params.r)
    quantity = Quantity(quantity)
    if quantity == Quantity.DELTA:
        return -1 / (r + 1)
    if quantity == Quantity.B2:
        return (r + 2) / (r + 1)
    return (r + order) / (r + 1)


def oscillation_band(params):
    """[-1/(r1 + 1), -1/(r2 + 1)], the delta_n slope range of an oscillating family."""
    if params.r1 is None:
        return None
    return (-1 / (params.r1 + 1), -1 / (params.r2 + 1))


def scaling_report(seq, n_values, quantity=Quantity.DELTA, kind=Kind.MULTISET, order=3,
                   precision_bits=None):
    """Solve the saddles at ``n_values`` and fit the slope of one saddle quantity."""
    quantity = Quantity(quantity)
    params = seq.declared_params()
    if params is None:
        raise NotExpansive(f"{seq.descriptor} declares no (K, r, y)", seq=seq.descriptor)
    rho_orders = (order,) if quantity == Quantity.RHO else ()
    solutions = solve_saddles(seq, n_values, kind, precision_bits, rho_orders)

    samples = []
    for solution in solutions:
        if quantity == Quantity.DELTA:
            value = solution.delta
        elif quantity == Quantity.B2:
            value = solution.B2
        else:
            value = solution.rho[order]
        samples.append((solution.n, value))

    band = oscillation_band(params) if quantity == Quantity.DELTA else None
    label = f"rho_{order}" if quantity == Quantity.RHO else quantity.value
    report = scaling_exponent(samples, expected_slope(params, quantity, order), label, band)
    logger.info(f"{label} slope for {seq.descriptor}: {report.fitted_slope:.5f} (expected {report.expected_slope:.5f})")
    return report


def local_limit_report(seq, n_values, kind=Kind.MULTISET, precision_bits=None):
    """P(Y_n = n) sqrt(2 pi B_n^2) at the solved saddle for each n."""
    kind = Kind(kind)
    bits = resolve_precision(precision_bits)
    samples = []
    for solution in solve_saddles(seq, n_values, kind, bits):
        probability = exact_point_prob(seq, solution.n, solution.sigma, kind, bits)
        with mp.workprec(bits):
            value = probability * mp.sqrt(2 * mp.pi * solution.B2)
            samples.append((solution.n, +value, abs(value - 1)))
    return TrendReport(seq_id=seq.descriptor, kind=kind, samples=tuple(samples))


def exponent_identity(seq, n_values, kind=Kind.MULTISET, precision_bits=None):
    """n delta_n (K Gamma(r+1))^(-1/(r+1)) n^(-r/(r+1)), which tends to 1 when y > 1."""
    kind = Kind(kind)
    bits = resolve_precision(precision_bits)
    params = seq.declared_params()
    if params is None:
        raise NotExpansive(f"{seq.descriptor} declares no (K, r, y)", seq=seq.descriptor)
    samples = []
    with mp.workprec(bits):
        K, r = to_mpf(params.K), to_mpf(params.r)
        scale = (K * mp.gamma(r + 1)) ** (-1 / (r + 1))
    for solution in solve_saddles(seq, n_values, kind, bits):
        n = solution.n
        with mp.workprec(bits):
            value = n * solution.delta * scale * mp.power(n, -r / (r + 1))
            samples.append((n, +value, abs(value - 1)))
    return TrendReport(seq_id=seq.descriptor, kind=kind, samples=tuple(samples))


def fit_expansive_params(seq, j_min=1, j_max=200):
    """Least squares for log a_j = log K + (r - 1) log j + j log y over a_j > 0."""
    if j_min < 1 or j_max <= j_min:
        raise ValueError(f"need 1 <= j_min < j_max, got {j_min}, {j_max}")
    j = np.arange(j_min, j_max + 1, dtype=np.float64)
    log_a = seq.log_weights(j_max)[j_min - 1:]
    positive = np.isfinite(log_a)
    if positive.sum() < 3:
        raise InsufficientSamples(
            f"only {int(positive.sum())} positive terms in j = {j_min}..{j_max}",
            j_min=j_min, j_max=j_max,
        )
    j, log_a = j[positive], log_a[positive]
    design = np.column_stack([np.ones_like(j), np.log(j), j])
    coefficients, _, _, _ = np.linalg.lstsq(design, log_a, rcond=None)
    log_K, r_minus_1, log_y = (float(value) for value in coefficients)
    residual = log_a - design @ coefficients
    fitted = FittedParams(
        K=math.exp(log_K), r=r_minus_1 + 1, y=math.exp(log_y),
        residual_rms=float(np.sqrt(np.mean(residual ** 2))), j_min=j_min, j_max=j_max,
    )
    logger.debug(f"Fitted {seq.descriptor}: {fitted}")
    return fitted


def within_tolerance(report, tolerance=None):
    tolerance = engine_setting('DIAGNOSTICS_TOLERANCE') if tolerance is None else tolerance
    return report.within(tolerance)
