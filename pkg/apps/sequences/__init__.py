from .descriptors import format_descriptor, parse_descriptor, read_explicit_file
from .families import (
    ComponentSequence, ExpansiveParams, Family, expansive_bounds, make_sequence,
)


def eval(seq, j):
    """a_j for ``seq``; memoized on the sequence."""
    return seq.eval(j)


def declared_params(seq):
    return seq.declared_params()


__all__ = [
    'ComponentSequence', 'ExpansiveParams', 'Family', 'declared_params', 'eval',
    'expansive_bounds', 'format_descriptor', 'make_sequence', 'parse_descriptor',
    'read_explicit_file',
]
