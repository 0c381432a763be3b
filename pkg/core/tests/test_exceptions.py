from enumeration_engine.exceptions import (
    InternalInconsistency, NoSaddle, OracleCapExceeded, UsageError, custom_exception_handler,
)


def test_domain_error_payload():
    exit_code, payload = custom_exception_handler(OracleCapExceeded(n=41, cap=40))
    assert exit_code == 1
    assert payload['code'] == 'oracle_cap_exceeded'
    assert payload['message'] == 'Brute-force oracle size cap exceeded'
    assert payload['details'] == {'n': '41', 'cap': '40'}


def test_usage_errors_exit_with_two():
    exit_code, payload = custom_exception_handler(UsageError('bad option'))
    assert exit_code == 2
    assert payload['status_code'] == 2


def test_custom_message():
    _, payload = custom_exception_handler(NoSaddle('a_j vanishes', n=5))
    assert payload['message'] == 'a_j vanishes'


def test_internal_inconsistency_is_logged(caplog):
    custom_exception_handler(InternalInconsistency('sum mismatch'), {'command': 'count'})
    assert 'Internal inconsistency in count' in caplog.text


def test_unexpected_errors(caplog):
    exit_code, payload = custom_exception_handler(ZeroDivisionError('boom'))
    assert exit_code == 1
    assert payload['code'] == 'unexpected_error'
    assert payload['details'] == {'reason': 'boom'}
    assert 'Unexpected error' in caplog.text
