"""
Star transform a*_j = sum_{lk=j} a_l / k, which writes the multiset generating
function as exp(sum_j a*_j x^j), i.e. as an assembly generating function.
"""
from fractions import Fraction

from .counting import divisor_weights
from .tables import StarSequence


def star_transform(seq, N):
    """a*_1..a*_N; j a*_j is the multiset divisor weight b_j."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    weights = divisor_weights(seq, N)
    return StarSequence(tuple(Fraction(weights[j], j) for j in range(1, N + 1)))


def assembly_counts(star, N):
    """
    Coefficients of exp(g), g = sum a*_j x^j, to degree N, from the Taylor
    series sum_m g^m / m! in exact rationals.

    g has no constant term, so g^m starts at degree m and m runs to N.
    """
    if N > star.N:
        raise ValueError(f"star sequence covers j <= {star.N}, need {N}")
    g = [Fraction(0)] + list(star.terms[:N])
    total = [Fraction(0)] * (N + 1)
    total[0] = Fraction(1)
    term = list(total)

    for m in range(1, N + 1):
        product = [Fraction(0)] * (N + 1)
        for i in range(m - 1, N + 1):
            coefficient = term[i]
            if not coefficient:
                continue
            for k in range(1, N - i + 1):
                if g[k]:
                    product[i + k] += coefficient * g[k]
        term = [value / m for value in product]
        for i in range(m, N + 1):
            total[i] += term[i]
    return total
