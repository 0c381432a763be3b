"""
Brute-force oracle: sum over every partition vector of a product of binomials.
"""
import logging
import math

from core.precision import engine_setting
from enumeration_engine.exceptions import OracleCapExceeded
from .tables import Kind, PartitionVector

logger = logging.getLogger(__name__)


def partition_vectors(n):
    """Yield every PartitionVector of n, largest parts first."""

    def build(remaining, max_part):
        if remaining == 0:
            yield {}
            return
        for part in range(min(remaining, max_part), 0, -1):
            for multiplicity in range(remaining // part, 0, -1):
                for rest in build(remaining - part * multiplicity, part - 1):
                    yield {part: multiplicity, **rest}

    for multiplicities in build(n, n):
        yield PartitionVector(tuple(multiplicities.get(j, 0) for j in range(1, n + 1)))


def brute_force_count(seq, n, kind=Kind.MULTISET, cap=None):
    """
    c_n as sum over eta in Omega_n of prod_j C(a_j + eta_j - 1, eta_j) for
    multisets, or prod_j C(a_j, eta_j) for selections (zero when eta_j > a_j).
    """
    cap = cap if cap is not None else engine_setting('ORACLE_CAP')
    if n > cap:
        raise OracleCapExceeded(f"n={n} exceeds the oracle cap {cap}", n=n, cap=cap)
    if n == 0:
        return 1
    selection = Kind(kind) == Kind.SELECTION

    total = 0
    visited = 0
    for vector in partition_vectors(n):
        visited += 1
        product = 1
        for j, multiplicity in vector.parts():
            a = seq.eval(j)
            if selection:
                product *= math.comb(a, multiplicity)
            else:
                product *= math.comb(a + multiplicity - 1, multiplicity)
            if product == 0:
                break
        total += product
    logger.debug(f"Oracle visited {visited} partitions of {n} for {seq.descriptor}")
    return total
