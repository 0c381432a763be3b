"""
Celery tasks for fanning out saddle solves across worker processes.
"""
import logging

from celery import group, shared_task
from mpmath import mp

from apps.exact import Kind
from apps.saddle import SaddleSolution, solve_saddle
from apps.sequences import Family, parse_descriptor
from core.precision import engine_setting, format_real, resolve_precision

logger = logging.getLogger(__name__)


@shared_task
def solve_saddle_task(descriptor, n, kind, precision_bits, rho_orders=()):
    """Solve one saddle in a worker; the result crosses the broker as decimal strings."""
    seq = parse_descriptor(descriptor)
    solution = solve_saddle(seq, n, kind, precision_bits, rho_orders)
    bits = solution.precision_bits
    return {
        'n': solution.n,
        'kind': solution.kind.value,
        'sigma': format_real(solution.sigma, bits + 32),
        'delta': format_real(solution.delta, bits + 32),
        'residual': format_real(solution.residual, bits),
        'B2': format_real(solution.B2, bits + 32),
        'rho': {str(order): format_real(value, bits) for order, value in solution.rho.items()},
        'precision_bits': bits,
    }


def solution_from_result(result):
    bits = result['precision_bits']
    with mp.workprec(bits + 32):
        return SaddleSolution(
            n=result['n'],
            kind=Kind(result['kind']),
            sigma=mp.mpf(result['sigma']),
            delta=mp.mpf(result['delta']) if result['delta'] is not None else None,
            residual=mp.mpf(result['residual']),
            B2=mp.mpf(result['B2']),
            rho={int(order): mp.mpf(value) for order, value in result['rho'].items()},
            precision_bits=bits,
        )


def solve_saddles(seq, n_values, kind=Kind.MULTISET, precision_bits=None, rho_orders=()):
    """
    SaddleSolution for every n, ordered by n.

    With USE_WORKERS the solves run as a Celery group; otherwise, and always
    for callback sequences that cannot travel as a descriptor, in-process.
    """
    kind = Kind(kind)
    bits = resolve_precision(precision_bits)
    n_values = sorted(n_values)
    if engine_setting('USE_WORKERS') and seq.family != Family.CUSTOM:
        job = group(
            solve_saddle_task.s(seq.descriptor, n, kind.value, bits, list(rho_orders))
            for n in n_values
        )
        logger.info(f"Dispatching {len(n_values)} saddle solves for {seq.descriptor} to workers")
        return [solution_from_result(result) for result in job.apply_async().get()]
    return [solve_saddle(seq, n, kind, bits, rho_orders) for n in n_values]
