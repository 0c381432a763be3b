"""
Text renderers for command output: JSON, CSV and plot data.
"""
import csv
import io

from rest_framework.exceptions import ParseError
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

SCHEMA_VERSION = 1


def render_json(payload):
    """Render one top-level object; key order follows the serializer."""
    body = {'schema_version': SCHEMA_VERSION}
    body.update(payload)
    rendered = JSONRenderer().render(body, renderer_context={'indent': 2})
    return rendered.decode('utf-8') + '\n'


def render_csv(rows, header=('n', 'value')):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()


def render_plot_data(rows, header=('n', 'value')):
    """Two space-separated columns under a '#'-prefixed header."""
    lines = ['# ' + ' '.join(header)]
    lines.extend(' '.join(str(cell) for cell in row) for row in rows)
    return '\n'.join(lines) + '\n'


def read_csv_rows(text):
    """Parse ``n,value`` CSV text back into (int n, str value) pairs."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or [cell.strip() for cell in header[:2]] != ['n', 'value']:
        raise ValueError("expected a CSV header 'n,value'")
    return [(int(row[0]), row[1].strip()) for row in reader if row]


def read_json_payload(text):
    """Parse a rendered payload back into a dict, checking its schema version."""
    try:
        payload = JSONParser().parse(io.BytesIO(text.encode('utf-8')))
    except ParseError as exc:
        raise ValueError(f"malformed JSON payload: {exc.detail}") from exc
    if not isinstance(payload, dict) or payload.get('schema_version') != SCHEMA_VERSION:
        raise ValueError(f"expected a schema_version {SCHEMA_VERSION} object")
    return payload
