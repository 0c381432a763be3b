"""
The closed form c_n ~ kappa1 y^n n^(-(r+2)/(2(r+1))) exp(kappa2 n^(r/(r+1)))
for sequences a_j = K j^(r-1) y^j + O(y^(nu j)) with y > 1.

kappa1 = (2 pi Bbar)^(-1/2) exp(K C_{r-1} + S1 + S2), where

    Bbar = K^(-1/(r+1)) Gamma(r+1)^(-(r+2)/(r+1)) Gamma(r+2)
    S1   = sum_j y^(-j) (a_j - K j^(r-1) y^j)
    S2   = sum_j a_j sum_{k>=2} y^(-jk) / k            multisets
         = sum_j a_j sum_{k>=2} (-1)^(k+1) y^(-jk) / k  selections
"""
import logging
import math
from dataclasses import dataclass, field

from mpmath import mp

from apps.exact import Kind
from core.precision import LogValue, engine_setting, resolve_precision, to_mpf
from enumeration_engine.exceptions import InternalInconsistency, NotExpansive, YEqualsOne
from .special import poisson_constant_C

logger = logging.getLogger(__name__)

MAX_SERIES_TERMS = 100_000


@dataclass(frozen=True)
class ClosedFormConstants:
    kind: Kind
    K: object
    r: object
    y: object
    kappa1: object
    kappa2: object
    exponent_poly: object
    exponent_power: object
    provenance: dict = field(default_factory=dict)
    precision_bits: int = 128

    @property
    def log_kappa1(self):
        with mp.workprec(self.precision_bits):
            return mp.log(self.kappa1)


def closed_form_constants(seq, kind=Kind.MULTISET, precision_bits=None, params=None):
    """kappa1, kappa2 and the exponents for a sequence with declared (K, r, y, nu)."""
    kind = Kind(kind)
    bits = resolve_precision(precision_bits)
    params = params or seq.declared_params()
    if params is None:
        raise NotExpansive(f"{seq.descriptor} declares no (K, r, y)", seq=seq.descriptor)
    if params.oscillating:
        raise NotExpansive(
            f"{seq.descriptor} oscillates between r1={params.r1} and r2={params.r2}",
            seq=seq.descriptor,
        )
    if params.y == 1:
        raise YEqualsOne(f"{seq.descriptor} has y = 1", seq=seq.descriptor)
    if params.nu is None:
        raise NotExpansive(
            f"{seq.descriptor} declares no remainder exponent nu", seq=seq.descriptor
        )

    C = poisson_constant_C(to_mpf(params.r) - 1, bits)
    with mp.workprec(bits + 32):
        K, r, y, nu = (to_mpf(value) for value in (params.K, params.r, params.y, params.nu))
        gamma_r1 = mp.gamma(r + 1)
        A = (K * gamma_r1) ** (1 / (r + 1))
        D_r = A / r
        k2 = (r + 1) / r * A
        if abs(k2 - (A + D_r)) > mp.mpf(2) ** (-bits) * k2:
            raise InternalInconsistency(f"kappa2 = {k2} differs from A + D_r = {A + D_r}")
        B_bar = K ** (-1 / (r + 1)) * gamma_r1 ** (-(r + 2) / (r + 1)) * mp.gamma(r + 2)

        tolerance = mp.mpf(2) ** (-int(bits * engine_setting('SERIES_TAIL_FACTOR')))
        ratio = y ** (nu - 1)
        S1, terms_S1 = _sum_remainders(seq, K, r, y, ratio, tolerance, bits)
        S2, terms_S2 = _sum_higher_powers(seq, y, kind, ratio, tolerance, bits)

        log_k1 = -mp.log(2 * mp.pi * B_bar) / 2 + K * C + S1 + S2
        logger.debug(
            f"Closed-form constants for {seq.descriptor} {kind.value}: "
            f"S1 over {terms_S1} terms, S2 over {terms_S2} terms"
        )
        return ClosedFormConstants(
            kind=kind, K=K, r=r, y=y,
            kappa1=+mp.exp(log_k1), kappa2=+k2,
            exponent_poly=r / (r + 1), exponent_power=-(r + 2) / (2 * (r + 1)),
            provenance={
                'C': C, 'S1': S1, 'S2': S2, 'B_bar': B_bar, 'D_r': D_r, 'A': A,
                'terms_S1': terms_S1, 'terms_S2': terms_S2,
            },
            precision_bits=bits,
        )


def closed_form_estimate(constants, y, n):
    """log kappa1 + n log y + exponent_power log n + kappa2 n^exponent_poly."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    bits = constants.precision_bits
    with mp.workprec(bits):
        log_value = (
            constants.log_kappa1
            + n * mp.log(to_mpf(y))
            + constants.exponent_power * mp.log(n)
            + constants.kappa2 * mp.power(n, constants.exponent_poly)
        )
        return LogValue(+log_value, bits)


def _series(term, ratio, tolerance, name):
    """Sum term(1), term(2), ... until the geometric tail bound drops below tolerance."""
    total = mp.zero
    for j in range(1, MAX_SERIES_TERMS + 1):
        value = term(j)
        total += value
        scale = max(abs(total), 1)
        if abs(value) <= tolerance * scale * (1 - ratio) and ratio ** j <= tolerance:
            return total, j
    logger.warning(f"{name} still above tolerance after {MAX_SERIES_TERMS} terms")
    return total, MAX_SERIES_TERMS


def _sum_remainders(seq, K, r, y, ratio, tolerance, bits):
    def term(j):
        a = seq.eval(j)
        with mp.workprec(bits + a.bit_length() + 32):
            return mp.mpf(a) / y ** j - K * mp.power(j, r - 1)

    return _series(term, ratio, tolerance, 'S1')


def _sum_higher_powers(seq, y, kind, ratio, tolerance, bits):
    selection = kind == Kind.SELECTION
    log2_y = float(mp.log(y, 2))

    def term(j):
        a = seq.eval(j)
        if a == 0:
            return mp.zero
        with mp.workprec(bits + a.bit_length() + int(math.ceil(j * log2_y)) + 32):
            u = y ** -j
            inner = mp.log1p(u) - u if selection else -mp.log1p(-u) - u
            return a * inner

    return _series(term, ratio, tolerance, 'S2')
