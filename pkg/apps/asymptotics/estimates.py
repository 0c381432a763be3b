"""
Saddle-point estimates of c_n, all returned as LogValue.
"""
import logging

from django.db import models
from django.utils.translation import gettext_lazy as _
from mpmath import mp

from apps.exact import Kind
from apps.saddle import ComponentSums, solve_saddle, variance_B2
from apps.sequences import Family, make_sequence
from core.precision import LogValue, resolve_precision, to_mpf

logger = logging.getLogger(__name__)


class Formula(models.TextChoices):
    THEOREM1 = 'theorem1', _('Saddle-point estimate at the solved saddle')
    CLOSED_FORM = 'closed_form', _('Closed form with kappa1 and kappa2')
    HARDY_RAMANUJAN = 'hardy_ramanujan', _('Hardy-Ramanujan')
    PARTITION_SADDLE = 'partition_saddle', _('Partition saddle with modular product')


class SigmaMode(models.TextChoices):
    SOLVED = 'solved', _('Solved saddle')
    LEADING = 'leading', _('Leading term pi / sqrt(6n)')


def theorem1_estimate(seq, n, kind=Kind.MULTISET, precision_bits=None, solution=None):
    """
    e^{n sigma_n} (2 pi B_n^2)^(-1/2) prod_{j<=n} (1 -+ e^{-j sigma_n})^(-+a_j)
    at the solved saddle.
    """
    kind = Kind(kind)
    bits = resolve_precision(precision_bits)
    solution = solution or solve_saddle(seq, n, kind, bits)
    log_normaliser = ComponentSums(seq, n, kind, bits).log_normaliser(solution.sigma)
    logger.debug(f"Saddle estimate for {seq.descriptor} n={n} {kind.value} at sigma={mp.nstr(solution.sigma, 12)}")
    with mp.workprec(bits):
        log_value = (
            n * solution.sigma - mp.log(2 * mp.pi * solution.B2) / 2 + log_normaliser
        )
        return LogValue(+log_value, bits)


def kappa2(K, r, precision_bits=None):
    """((r+1)/r) (K Gamma(r+1))^(1/(r+1))."""
    bits = resolve_precision(precision_bits)
    with mp.workprec(bits):
        K, r = to_mpf(K), to_mpf(r)
        if K <= 0 or r <= 0:
            raise ValueError(f"kappa2 needs K > 0 and r > 0, got K={K}, r={r}")
        return +((r + 1) / r * (K * mp.gamma(r + 1)) ** (1 / (r + 1)))


def hardy_ramanujan(n, precision_bits=None):
    """C sqrt(n) - log(4 n sqrt 3) with C = pi sqrt(2/3)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    bits = resolve_precision(precision_bits)
    with mp.workprec(bits):
        C = mp.pi * mp.sqrt(mp.mpf(2) / 3)
        return LogValue(+(C * mp.sqrt(n) - mp.log(4 * n * mp.sqrt(3))), bits)


def partition_saddle_estimate(n, sigma_mode=SigmaMode.SOLVED, precision_bits=None):
    """
    e^{n sigma} (2 pi B^2)^(-1/2) (sigma / 2 pi)^(1/2) exp(pi^2 / (6 sigma)) for
    integer partitions, where the product over components is replaced by its
    modular-transformation asymptotics. ``sigma_mode`` picks the solved saddle
    or the leading term pi / sqrt(6n).
    """
    sigma_mode = SigmaMode(sigma_mode)
    bits = resolve_precision(precision_bits)
    partitions = make_sequence(Family.PARTITIONS)
    if sigma_mode == SigmaMode.SOLVED:
        sigma = solve_saddle(partitions, n, Kind.MULTISET, bits).sigma
    else:
        with mp.workprec(bits):
            sigma = mp.pi / mp.sqrt(6 * n)
    B2 = variance_B2(partitions, n, sigma, Kind.MULTISET, bits)
    with mp.workprec(bits):
        log_value = (
            n * sigma
            - mp.log(2 * mp.pi * B2) / 2
            + mp.log(sigma / (2 * mp.pi)) / 2
            + mp.pi ** 2 / (6 * sigma)
        )
        return LogValue(+log_value, bits)


def relative_error(estimate, exact):
    """|estimate / exact - 1| in log space; ``exact`` is a positive integer."""
    return estimate.relerr(LogValue.from_int(exact, estimate.precision_bits))
