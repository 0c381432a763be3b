"""
Gamma, zeta and the Poisson-summation constants C_l.
"""
import logging
import math

from mpmath import mp

from core.precision import engine_setting, resolve_precision, to_mpf
from enumeration_engine.exceptions import ExtrapolationNotConverged

logger = logging.getLogger(__name__)

GUARD_BITS = 32
MAX_RICHARDSON_LEVELS = 10


def special_gamma(x, precision_bits=None):
    bits = resolve_precision(precision_bits)
    with mp.workprec(bits):
        x = to_mpf(x)
        if x <= 0:
            raise ValueError(f"gamma is evaluated for x > 0 only, got {x}")
        return +mp.gamma(x)


def special_zeta(s, precision_bits=None):
    bits = resolve_precision(precision_bits)
    with mp.workprec(bits):
        s = to_mpf(s)
        if s <= 1:
            raise ValueError(f"zeta is evaluated for s > 1 only, got {s}")
        return +mp.zeta(s)


def poisson_constant_C(l, precision_bits=None):
    """
    C_l in sum_j j^l e^{-j delta} = Gamma(l+1) delta^(-l-1) + C_l + o(1).

    For l > 0 this is 2 Gamma(l+1) (2 pi)^(-l-1) zeta(l+1) cos(pi (l+1) / 2);
    for -1 < l <= 0 the delta -> 0 limit is extrapolated numerically
    (it equals zeta(-l) there too).
    """
    bits = resolve_precision(precision_bits)
    with mp.workprec(bits + 32):
        l = to_mpf(l)
        if l <= -1:
            raise ValueError(f"C_l needs l > -1, got {l}")
        if l > 0:
            value = (
                2 * mp.gamma(l + 1) * (2 * mp.pi) ** (-l - 1)
                * mp.zeta(l + 1) * mp.cospi((l + 1) / 2)
            )
            return +value
        return _extrapolated_constant(l, bits)


def _richardson_levels(target_bits):
    """Smallest depth whose a-priori error bound 2^-(L(L+1)/2) (2 pi)^-(L+1) clears target_bits."""
    levels = 2
    while (levels < MAX_RICHARDSON_LEVELS
           and levels * (levels + 1) / 2 + math.log2(2 * math.pi) * (levels + 1) < target_bits + 8):
        levels += 1
    return levels


def _extrapolated_constant(l, bits):
    """
    Richardson extrapolation of R(delta) = sum_j j^l e^{-j delta} - Gamma(l+1) delta^(-l-1)
    over delta = 2^-i, i = 0..L.

    R is a power series in delta with radius 2 pi, so each column of the table
    removes one more power of delta. The diagonal entries at depths L and L-1
    are the estimate and its check.
    """
    tolerance_bits = int(bits * engine_setting('SERIES_TAIL_FACTOR'))
    levels = _richardson_levels(tolerance_bits)
    wp = bits + GUARD_BITS + levels
    with mp.workprec(wp):
        leading = mp.gamma(l + 1)
        lengths = [math.ceil((wp * math.log(2) + i + 1) * 2 ** i) for i in range(levels + 1)]
        powers = [mp.power(j, l) for j in range(1, lengths[-1] + 1)]
        table = []
        for i, length in enumerate(lengths):
            delta = mp.ldexp(1, -i)
            row = [_damped_sum(powers[:length], delta) - leading * delta ** (-l - 1)]
            for k in range(1, i + 1):
                row.append(row[k - 1] + (row[k - 1] - table[i - 1][k - 1]) / (2 ** k - 1))
            table.append(row)

        estimate, check = table[levels][levels], table[levels - 1][levels - 1]
        error = abs(estimate - check)
        tolerance = mp.ldexp(1, -tolerance_bits)
        if error > tolerance * max(1, abs(estimate)):
            raise ExtrapolationNotConverged(
                f"C_{mp.nstr(l, 8)} extrapolations differ by {mp.nstr(error, 3)} after {levels} levels",
                l=l, error=error,
            )
        logger.debug(
            f"C_{mp.nstr(l, 8)} = {mp.nstr(estimate, 20)} ({levels} levels, "
            f"{len(powers)} terms, extrapolation error {mp.nstr(error, 3)})"
        )
        return +estimate


def _damped_sum(powers, delta):
    """sum_j powers[j-1] e^{-j delta} over the given prefix."""
    step = mp.exp(-delta)
    q = step
    total = mp.zero
    for power in powers:
        total += power * q
        q *= step
    return total
