"""
Component-count sequences a_j and their expansive metadata.
"""
import logging
import math
import threading
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from django.db import models
from django.utils.translation import gettext_lazy as _
from mpmath import mp
from scipy.special import gammaln

from core.precision import to_fraction, to_mpf
from enumeration_engine.exceptions import InvalidFamilyParams, InvalidSequenceValue

logger = logging.getLogger(__name__)

SQRT_2_OVER_PI = math.sqrt(2 / math.pi)


class Family(models.TextChoices):
    CONSTANT = 'constant', _('Constant')
    POWER_EXP = 'power-exp', _('Power times exponential')
    PARTITIONS = 'partitions', _('Integer partitions')
    PLANE_PARTITIONS = 'plane-partitions', _('Plane partitions')
    COLORED_FORESTS = 'colored-forests', _('k-colored linear forests')
    CENTRAL_BINOMIAL = 'central-binomial', _('Balanced 2-colored linear forests')
    LOLLIPOP = 'lollipop', _('2-colored lollipops')
    PARITY_COLORED = 'parity-colored', _('Parity-colored linear forests')
    PARTITIONS_MIN_PART = 'partitions-min', _('Partitions with parts at least s')
    EXPLICIT = 'explicit', _('Explicit list')
    CUSTOM = 'custom', _('Custom callback')


@dataclass(frozen=True)
class ExpansiveParams:
    """
    Growth metadata a_j ≍ K j^(r-1) y^j.

    ``nu`` is the exponent of the remainder a_j - K j^(r-1) y^j = O(y^(nu j));
    it is present only when that sharper form holds. ``r1``/``r2`` bound an
    oscillating family (j^(r1-1) y^j ⪯ a_j ⪯ j^(r2-1) y^j) and ``d1``/``d2``
    are explicit constants with d1 <= a_j / (j^(r-1) y^j) <= d2.
    """

    K: float
    r: float
    y: float
    nu: float = None
    r1: float = None
    r2: float = None
    d1: float = None
    d2: float = None

    def __post_init__(self):
        if not self.K > 0:
            raise InvalidFamilyParams(f"K must be positive, got {self.K}", K=self.K)
        if not self.r > 0:
            raise InvalidFamilyParams(f"r must be positive, got {self.r}", r=self.r)
        if not self.y >= 1:
            raise InvalidFamilyParams(f"y must be at least 1, got {self.y}", y=self.y)
        if self.nu is not None and not 0 < self.nu < 1:
            raise InvalidFamilyParams(f"nu must lie in (0, 1), got {self.nu}", nu=self.nu)
        if (self.r1 is None) != (self.r2 is None):
            raise InvalidFamilyParams("r1 and r2 must be given together")
        if self.r1 is not None and not 0 < self.r1 <= self.r2:
            raise InvalidFamilyParams(
                f"need 0 < r1 <= r2, got r1={self.r1}, r2={self.r2}", r1=self.r1, r2=self.r2
            )

    @property
    def oscillating(self):
        return self.r1 is not None and self.r1 < self.r2


class ComponentSequence:
    """
    The parameter family a_j, evaluated lazily and memoized.

    Instances are immutable after construction. The memo is guarded by a lock,
    so concurrent readers see consistent values.
    """

    def __init__(self, family, params=None, values=None, callback=None, expansive=None):
        self.family = Family(family)
        self.params = dict(params or {})
        self.values = tuple(values) if values is not None else None
        self.callback = callback
        self._expansive = expansive
        self._memo = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return f"ComponentSequence({self.descriptor})"

    @property
    def descriptor(self):
        from .descriptors import format_descriptor
        return format_descriptor(self)

    def eval(self, j):
        """a_j as an exact nonnegative integer."""
        if j < 1:
            raise ValueError(f"component size must be >= 1, got {j}")
        with self._lock:
            cached = self._memo.get(j)
        if cached is not None:
            return cached

        value = self._term(j)
        if isinstance(value, Fraction) and value.denominator == 1:
            value = value.numerator
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise InvalidSequenceValue(
                f"a_{j} = {value!r} is not a nonnegative integer", j=j, value=value
            )
        with self._lock:
            self._memo.setdefault(j, value)
        return value

    def terms(self, n):
        """[a_1, ..., a_n]."""
        return [self.eval(j) for j in range(1, n + 1)]

    def _term(self, j):
        family = self.family
        p = self.params
        if family == Family.CONSTANT:
            return p['c']
        if family == Family.PARTITIONS:
            return 1
        if family == Family.PLANE_PARTITIONS:
            return j
        if family == Family.COLORED_FORESTS:
            return p['k'] ** j
        if family == Family.CENTRAL_BINOMIAL:
            return math.comb(j, j // 2)
        if family == Family.PARITY_COLORED:
            return p['k'] ** j if j % 2 == 0 else p['k'] ** (j - 1)
        if family == Family.PARTITIONS_MIN_PART:
            return 1 if j >= p['s'] else 0
        if family == Family.LOLLIPOP:
            m = lollipop_tree_size(j, p['alpha'])
            return math.comb(m, m // 2) * p['k'] ** (j - m)
        if family == Family.POWER_EXP:
            return _power_exp_term(j, p['K'], p['r'], p['y'])
        if family == Family.EXPLICIT:
            return self.values[j - 1] if j <= len(self.values) else 0
        if family == Family.CUSTOM:
            value = self.callback(j)
            if isinstance(value, float) and value.is_integer():
                value = int(value)
            return value
        raise InvalidFamilyParams(f"unknown family {family}")

    def log_eval(self, j):
        """log a_j as a float (-inf when a_j = 0), without building huge integers."""
        family = self.family
        p = self.params
        if family == Family.COLORED_FORESTS:
            return j * math.log(p['k'])
        if family == Family.PARITY_COLORED:
            return (j if j % 2 == 0 else j - 1) * math.log(p['k'])
        if family == Family.CENTRAL_BINOMIAL and j > 64:
            return float(gammaln(j + 1) - gammaln(j // 2 + 1) - gammaln(j - j // 2 + 1))
        if family == Family.LOLLIPOP and j > 64:
            m = lollipop_tree_size(j, p['alpha'])
            return float(gammaln(m + 1) - gammaln(m // 2 + 1) - gammaln(m - m // 2 + 1)) + (
                (j - m) * math.log(p['k'])
            )
        if family == Family.POWER_EXP:
            K, r, y = (float(p[key]) for key in ('K', 'r', 'y'))
            log_value = math.log(K) + (r - 1) * math.log(j) + j * math.log(y)
            if log_value > 40:
                return log_value
        value = self.eval(j)
        return math.log(value) if value > 0 else -math.inf

    def log_weights(self, n):
        """numpy vector of log a_j for j = 1..n."""
        family = self.family
        j = np.arange(1, n + 1, dtype=np.float64)
        if family == Family.PARTITIONS:
            return np.zeros(n)
        if family == Family.PLANE_PARTITIONS:
            return np.log(j)
        if family == Family.COLORED_FORESTS:
            return j * math.log(self.params['k'])
        if family == Family.CENTRAL_BINOMIAL:
            half = np.floor(j / 2)
            return gammaln(j + 1) - gammaln(half + 1) - gammaln(j - half + 1)
        return np.array([self.log_eval(i) for i in range(1, n + 1)], dtype=np.float64)

    def weight(self, j):
        """a_j as an mpf at the current working precision."""
        family = self.family
        p = self.params
        if family == Family.COLORED_FORESTS:
            return mp.mpf(p['k']) ** j
        if family == Family.PARITY_COLORED:
            return mp.mpf(p['k']) ** (j if j % 2 == 0 else j - 1)
        if family == Family.CENTRAL_BINOMIAL and j > 4 * mp.prec:
            return mp.binomial(j, j // 2)
        if family == Family.LOLLIPOP and j > 4 * mp.prec:
            m = lollipop_tree_size(j, p['alpha'])
            return mp.binomial(m, m // 2) * mp.mpf(p['k']) ** (j - m)
        if family == Family.POWER_EXP:
            K, r, y = (to_mpf(p[key]) for key in ('K', 'r', 'y'))
            value = K * mp.power(j, r - 1) * mp.power(y, j)
            if value > mp.mpf(2) ** (mp.prec + 2):
                return value
        return mp.mpf(self.eval(j))

    def iter_weights(self, lo, hi):
        """
        Yield (j, a_j as mpf) for lo <= j <= hi.

        Families with a simple term ratio step from one term to the next, so a
        window of 10^6 terms costs one multiplication per term.
        """
        family = self.family
        if family == Family.PARTITIONS:
            one = mp.mpf(1)
            for j in range(lo, hi + 1):
                yield j, one
            return
        if family == Family.COLORED_FORESTS:
            value, base = self.weight(lo), mp.mpf(self.params['k'])
            for j in range(lo, hi + 1):
                yield j, value
                value *= base
            return
        if family == Family.CENTRAL_BINOMIAL:
            value = self.weight(lo)
            for j in range(lo, hi + 1):
                yield j, value
                # C(j+1, floor((j+1)/2)) from C(j, floor(j/2))
                value = value * (j + 1) / (j // 2 + 1) if j % 2 == 0 else value * 2
            return
        for j in range(lo, hi + 1):
            yield j, self.weight(j)

    def declared_params(self):
        """The (K, r, y, nu) metadata this family implies, or None."""
        if self._expansive is not None:
            return self._expansive
        return _family_params(self)

    def with_params(self, expansive):
        return ComponentSequence(
            self.family, self.params, self.values, self.callback, expansive=expansive
        )


def lollipop_tree_size(j, alpha):
    """m = floor(j^alpha), snapping to an integer when j^alpha is one."""
    if alpha == 0:
        return 1
    if alpha == 1:
        return j
    with mp.workprec(96):
        value = mp.power(j, to_mpf(alpha))
        nearest = mp.nint(value)
        if abs(value - nearest) < mp.mpf(2) ** -60:
            return int(nearest)
        return int(mp.floor(value))


def _power_exp_term(j, K, r, y):
    """round(K j^(r-1) y^j), with enough bits for the rounding to be exact."""
    bits = int(j * math.log2(max(float(y), 1.0)) + abs(float(r) - 1) * math.log2(j + 1)) + 96
    with mp.workprec(max(bits, 96)):
        value = to_mpf(K) * mp.power(j, to_mpf(r) - 1) * mp.power(to_mpf(y), j)
        return int(mp.nint(value))


def _family_params(seq):
    family = seq.family
    p = seq.params
    if family == Family.PARTITIONS:
        return ExpansiveParams(K=1, r=1, y=1, d1=1, d2=1)
    if family == Family.CONSTANT:
        if p['c'] == 0:
            return None
        return ExpansiveParams(K=p['c'], r=1, y=1, d1=p['c'], d2=p['c'])
    if family == Family.PLANE_PARTITIONS:
        return ExpansiveParams(K=1, r=2, y=1, d1=1, d2=1)
    if family == Family.COLORED_FORESTS:
        # a_j = k^j exactly, so the remainder vanishes for every nu.
        return ExpansiveParams(K=1, r=1, y=p['k'], nu=0.5, d1=1, d2=1)
    if family == Family.CENTRAL_BINOMIAL:
        return ExpansiveParams(K=SQRT_2_OVER_PI, r=0.5, y=2, d1=0.5, d2=0.798)
    if family == Family.PARITY_COLORED:
        k = p['k']
        # Bounded by D1 = 1/k and D2 = 1 with r = 1; the delta_n band uses r1 = 2r/3.
        return ExpansiveParams(K=1, r=1, y=k, r1=2 / 3, r2=1, d1=1 / k, d2=1)
    if family == Family.PARTITIONS_MIN_PART:
        return ExpansiveParams(K=1, r=1, y=1, d1=None if p['s'] > 1 else 1, d2=1)
    if family == Family.LOLLIPOP:
        alpha, k = p['alpha'], p['k']
        if alpha == 0:
            return ExpansiveParams(K=1 / k, r=1, y=k, nu=0.5, d1=1 / k, d2=1 / k)
        if k == 2:
            return ExpansiveParams(K=SQRT_2_OVER_PI, r=1 - float(alpha) / 2, y=2, d1=0.5, d2=1.13)
        return None
    if family == Family.POWER_EXP:
        return ExpansiveParams(K=float(p['K']), r=float(p['r']), y=float(p['y']), nu=0.5)
    return None


def make_sequence(family, expansive=None, **params):
    """
    Validate family parameters and build a ComponentSequence.

    ``expansive`` supplies (or overrides) the growth metadata, which is how
    Explicit and Custom sequences acquire it.
    """
    family = Family(family)
    values = params.pop('values', None)
    callback = params.pop('callback', None)

    if family == Family.CONSTANT:
        params = {'c': _nonnegative_int(params, 'c')}
    elif family == Family.COLORED_FORESTS or family == Family.PARITY_COLORED:
        params = {'k': _positive_int(params, 'k')}
    elif family == Family.PARTITIONS_MIN_PART:
        params = {'s': _positive_int(params, 's')}
    elif family == Family.LOLLIPOP:
        alpha = to_fraction(params.get('alpha', 0))
        if not 0 <= alpha <= 1:
            raise InvalidFamilyParams(f"alpha must lie in [0, 1], got {alpha}", alpha=alpha)
        params = {'alpha': alpha, 'k': _positive_int({'k': params.get('k', 2)}, 'k')}
    elif family == Family.POWER_EXP:
        try:
            K, r, y = (to_fraction(params[key]) for key in ('K', 'r', 'y'))
        except KeyError as exc:
            raise InvalidFamilyParams(f"power-exp needs K, r and y (missing {exc})") from exc
        if K <= 0 or r <= 0 or y < 1:
            raise InvalidFamilyParams(
                f"power-exp needs K > 0, r > 0, y >= 1; got K={K}, r={r}, y={y}", K=K, r=r, y=y
            )
        params = {'K': K, 'r': r, 'y': y}
    elif family == Family.EXPLICIT:
        if values is None:
            raise InvalidFamilyParams("explicit sequences need a list of values")
        values = list(values)
        for index, value in enumerate(values, start=1):
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise InvalidFamilyParams(
                    f"explicit entry a_{index} = {value!r} must be a nonnegative integer",
                    j=index,
                )
        params = {}
    elif family == Family.CUSTOM:
        if not callable(callback):
            raise InvalidFamilyParams("custom sequences need a callable")
        params = {}
    else:
        params = {}

    seq = ComponentSequence(family, params, values=values, callback=callback, expansive=expansive)
    logger.debug(f"Built sequence {seq.descriptor}")
    return seq


def _positive_int(params, key):
    value = _nonnegative_int(params, key)
    if value < 1:
        raise InvalidFamilyParams(f"{key} must be a positive integer, got {value}", **{key: value})
    return value


def _nonnegative_int(params, key):
    if key not in params:
        raise InvalidFamilyParams(f"missing parameter {key}")
    value = params[key]
    if isinstance(value, str):
        try:
            value = int(value)
        except ValueError as exc:
            raise InvalidFamilyParams(f"{key} must be an integer, got {value!r}") from exc
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise InvalidFamilyParams(f"{key} must be a nonnegative integer, got {value!r}", **{key: value})
    return value


def expansive_bounds(seq, params=None, j_max=1000):
    """
    Observed (min, max) of a_j / (j^(r-1) y^j) over 1 <= j <= j_max.

    Computed in log space, so j_max in the thousands stays cheap for
    exponentially growing families.
    """
    params = params or seq.declared_params()
    if params is None:
        return None
    j = np.arange(1, j_max + 1, dtype=np.float64)
    log_ratio = seq.log_weights(j_max) - (params.r - 1) * np.log(j) - j * math.log(params.y)
    ratios = np.exp(log_ratio)
    return float(ratios.min()), float(ratios.max())

