"""
Tilted component distributions and the exact Khintchine identity

    c_n = e^{n sigma} prod_{j<=n} (1 -+ e^{-j sigma})^{-+a_j} P(Y_n = n),

valid for every sigma > 0. P(Y_n = n) is obtained by convolving the lattice
PMFs of X_1..X_n exactly, keeping only totals <= n.
"""
import logging
from dataclasses import dataclass

from mpmath import mp

from apps.exact import Kind
from core.precision import LogValue, engine_setting, resolve_precision, to_mpf
from enumeration_engine.exceptions import InternalInconsistency, NoSaddle
from .moments import GUARD_BITS, ComponentSums

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TiltedDistribution:
    """X_j on the lattice {0, j, 2j, ...}: pmf[l] = P(X_j = j l)."""

    j: int
    kind: Kind
    sigma: object
    pmf: tuple
    deficit: object

    @property
    def support(self):
        return [self.j * l for l in range(len(self.pmf))]

    @property
    def mean(self):
        """E[X_j] over the retained atoms."""
        return mp.fsum(self.j * l * p for l, p in enumerate(self.pmf))


def component_pmf(a, q, kind, atoms):
    """
    The first ``atoms`` probabilities of one component at q = e^{-j sigma}.

    Multiset: p_0 = (1 - q)^a, p_{l+1} = p_l q (a + l) / (l + 1).
    Selection: p_0 = (1 + q)^(-a), p_{l+1} = p_l q (a - l) / (l + 1), so the
    support ends at l = a.
    """
    selection = kind == Kind.SELECTION
    if selection:
        atoms = min(atoms, a + 1)
        p = mp.exp(-a * mp.log1p(q))
    else:
        p = mp.exp(a * mp.log1p(-q))
    pmf = [p]
    for l in range(atoms - 1):
        p = p * q * ((a - l) if selection else (a + l)) / (l + 1)
        pmf.append(p)
    return pmf


def tilted_pmf(seq, j, sigma, kind=Kind.MULTISET, cutoff=None, precision_bits=None):
    """TiltedDistribution of X_j with atoms up to the lattice value ``cutoff``."""
    kind = Kind(kind)
    bits = resolve_precision(precision_bits)
    cutoff = j * 64 if cutoff is None else cutoff
    if cutoff < 0:
        raise ValueError(f"cutoff must be >= 0, got {cutoff}")
    a = seq.eval(j)
    with mp.workprec(bits + GUARD_BITS):
        s = to_mpf(sigma)
        pmf = component_pmf(a, mp.exp(-j * s), kind, cutoff // j + 1)
        deficit = 1 - mp.fsum(pmf)
        return TiltedDistribution(j=j, kind=kind, sigma=s, pmf=tuple(pmf), deficit=deficit)


def exact_point_prob(seq, n, sigma, kind=Kind.MULTISET, precision_bits=None):
    """P(Y_n = n) by exact convolution over one array of totals 0..n."""
    kind = Kind(kind)
    bits = resolve_precision(precision_bits)
    probability, dropped = _convolve(seq, n, sigma, kind, bits, skip=True)
    if dropped and dropped > engine_setting('POINT_PROB_DEFICIT_LIMIT') * probability:
        logger.info(
            f"Dropped mass {mp.nstr(dropped, 3)} too large against P={mp.nstr(probability, 3)} "
            f"for {seq.descriptor} n={n}; convolving every component in full"
        )
        probability, _ = _convolve(seq, n, sigma, kind, bits, skip=False)
    return probability


def _convolve(seq, n, sigma, kind, bits, skip):
    """
    Returns (P(Y_n = n), dropped mass).

    A component whose q_j is below 10^-(skip factor * bits) keeps only its l = 0
    atom; the scale it contributes is collected in log space and the mass it
    loses (bounded by the absolute error it causes) is returned alongside.
    """
    skip_below = mp.mpf(10) ** (-engine_setting('POINT_PROB_SKIP_FACTOR') * bits)
    selection = kind == Kind.SELECTION
    with mp.workprec(bits + GUARD_BITS):
        s = to_mpf(sigma)
        dist = [mp.one] + [mp.zero] * n
        log_scale = mp.zero
        dropped = mp.zero
        skipped = 0
        for j in range(1, n + 1):
            a = seq.eval(j)
            if a == 0:
                continue
            q = mp.exp(-j * s)
            if skip and q < skip_below:
                log_p0 = -a * mp.log1p(q) if selection else a * mp.log1p(-q)
                log_scale += log_p0
                dropped += -mp.expm1(log_p0)
                skipped += 1
                continue
            pmf = component_pmf(a, q, kind, n // j + 1)
            for t in range(n, -1, -1):
                dist[t] = mp.fdot(pmf[:t // j + 1], dist[t::-j])
        if skipped:
            logger.debug(f"Kept only the l=0 atom for {skipped} components at n={n}")
        probability = dist[n] * mp.exp(log_scale)
        if probability < 0 or probability > 1:
            raise InternalInconsistency(
                f"point probability {mp.nstr(probability, 10)} outside [0, 1]",
                n=n, seq=seq.descriptor,
            )
        return +probability, +dropped


def khintchine_reconstruct(seq, n, sigma, kind=Kind.MULTISET, precision_bits=None):
    """
    log c_n = n sigma + log prod_j (1 -+ q_j)^(-+a_j) + log P(Y_n = n).

    Precision doubles while sum a_j |log(1 -+ q_j)| exceeds 2^(precision - margin).
    """
    kind = Kind(kind)
    bits = resolve_precision(precision_bits)
    margin = engine_setting('IDENTITY_ESCALATION_MARGIN_BITS')
    sums = ComponentSums(seq, n, kind, bits)
    log2_magnitude = sums.log2_normaliser_magnitude(float(sigma))
    while log2_magnitude > bits - margin:
        bits *= 2
        logger.info(f"Escalating identity precision to {bits} bits for {seq.descriptor} n={n}")
    sums = ComponentSums(seq, n, kind, bits)

    probability = exact_point_prob(seq, n, sigma, kind, bits)
    if probability == 0:
        raise NoSaddle(f"P(Y_{n} = {n}) = 0, so there is no structure of size {n}", n=n)
    log_normaliser = sums.log_normaliser(sigma)
    with mp.workprec(bits + GUARD_BITS):
        log_count = n * to_mpf(sigma) + log_normaliser + mp.log(probability)
        return LogValue(+log_count, bits)
