"""
Domain errors and the handler that turns any exception into the standard
error payload and process exit code.
"""
import logging

logger = logging.getLogger(__name__)


class EnumerationError(Exception):
    """Base class for every error the engine reports to its callers."""

    default_code = 'enumeration_error'
    default_message = 'Enumeration failed'
    exit_code = 1

    def __init__(self, message=None, **details):
        self.message = message or self.default_message
        self.details = details
        super().__init__(self.message)

    @property
    def code(self):
        return self.default_code


class UsageError(EnumerationError):
    default_code = 'usage_error'
    default_message = 'Invalid invocation'
    exit_code = 2


class InvalidFamilyParams(EnumerationError):
    default_code = 'invalid_family_params'
    default_message = 'Parameters are not valid for this sequence family'


class InvalidSequenceValue(EnumerationError):
    default_code = 'invalid_sequence_value'
    default_message = 'Sequence produced a value that is not a nonnegative integer'


class InternalInconsistency(EnumerationError):
    """Raised when an exact identity fails; always a bug, never bad input."""

    default_code = 'internal_inconsistency'
    default_message = 'Internal consistency check failed'


class OracleCapExceeded(EnumerationError):
    default_code = 'oracle_cap_exceeded'
    default_message = 'Brute-force oracle size cap exceeded'


class NoSaddle(EnumerationError):
    default_code = 'no_saddle'
    default_message = 'Saddle equation has no solution'


class PrecisionExhausted(EnumerationError):
    default_code = 'precision_exhausted'
    default_message = 'Tolerance unreachable at the requested precision'


class ExtrapolationNotConverged(EnumerationError):
    default_code = 'extrapolation_not_converged'
    default_message = 'Richardson extrapolation did not converge'


class NotExpansive(EnumerationError):
    default_code = 'not_expansive'
    default_message = 'Sequence has no declared expansive parameters for this formula'


class YEqualsOne(EnumerationError):
    default_code = 'y_equals_one'
    default_message = 'Closed-form asymptotics require y > 1'


class RangeMismatch(EnumerationError):
    default_code = 'range_mismatch'
    default_message = 'Inputs do not cover the requested range'


class InsufficientSamples(EnumerationError):
    default_code = 'insufficient_samples'
    default_message = 'Not enough samples for a slope fit'


def custom_exception_handler(exc, context=None):
    """
    Build the standard error payload for an exception.

    Domain errors keep their own exit code and details; anything else is
    logged with its traceback and reported as a generic failure.
    Returns ``(exit_code, payload)``.
    """
    context = context or {}

    if isinstance(exc, EnumerationError):
        if isinstance(exc, InternalInconsistency):
            logger.error(f"Internal inconsistency in {context.get('command', 'engine')}: {exc}")
        payload = {
            'error': True,
            'status_code': exc.exit_code,
            'code': exc.code,
            'message': exc.message,
            'details': {key: str(value) for key, value in exc.details.items()},
        }
        return exc.exit_code, payload

    logger.error(f"Unexpected error: {exc}", exc_info=True)
    payload = {
        'error': True,
        'status_code': 1,
        'code': 'unexpected_error',
        'message': 'An unexpected error occurred',
        'details': {'reason': str(exc)},
    }
    return 1, payload
