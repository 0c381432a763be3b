"""
Exact coefficients of the Euler-type products

    multisets:  prod_j (1 - x^j)^(-a_j)
    selections: prod_j (1 + x^j)^(a_j)

through the logarithmic-derivative recurrence n c_n = sum_{m=1..n} b_m c_{n-m}.
"""
import logging
import math
import operator

from enumeration_engine.exceptions import InternalInconsistency
from .tables import CountTable, Kind

logger = logging.getLogger(__name__)


def divisor_weight(seq, m, kind=Kind.MULTISET):
    """
    b_m = sum_{d|m} d a_d for multisets.

    For selections, log(1 + x^j) = -sum_k (-x^j)^k / k, so the logarithmic
    derivative contributes (-1)^(m/d + 1) d a_d and b~_m may be negative.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    total = 0
    for d in _divisors(m):
        term = d * seq.eval(d)
        if Kind(kind) == Kind.SELECTION and (m // d) % 2 == 0:
            term = -term
        total += term
    return total


def divisor_weights(seq, N, kind=Kind.MULTISET):
    """[0, b_1, ..., b_N] by sieving: each d adds +-d a_d to its multiples."""
    selection = Kind(kind) == Kind.SELECTION
    weights = [0] * (N + 1)
    for d in range(1, N + 1):
        term = d * seq.eval(d)
        if term == 0:
            continue
        for k, m in enumerate(range(d, N + 1, d), start=1):
            if selection and k % 2 == 0:
                weights[m] -= term
            else:
                weights[m] += term
    return weights


def count(seq, N, kind=Kind.MULTISET):
    """CountTable c_0..c_N; O(N^2) big-integer multiply-adds."""
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    kind = Kind(kind)
    weights = divisor_weights(seq, N, kind)
    counts = [1]
    for n in range(1, N + 1):
        total = sum(map(operator.mul, weights[1:n + 1], reversed(counts)))
        value, remainder = divmod(total, n)
        if remainder or value < 0:
            raise InternalInconsistency(
                f"recurrence gave {total} / {n} at n={n}",
                n=n, kind=kind.value, seq=seq.descriptor,
            )
        counts.append(value)
    logger.debug(f"Counted {kind.value} table for {seq.descriptor} up to N={N}")
    return CountTable(kind, seq.descriptor, tuple(counts))


def _divisors(m):
    small, large = [], []
    for d in range(1, math.isqrt(m) + 1):
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
    return small + large[::-1]
