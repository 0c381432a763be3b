"""
Base class for the engine's management commands.

Subclasses declare which shared options they take, implement ``compute`` and
return an ``Output``; this class validates options, renders the requested
format and maps domain errors to exit codes.
"""
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from apps.api.serializers import RunConfigSerializer
from apps.sequences import parse_descriptor
from core.output import render_csv, render_json, render_plot_data
from core.precision import engine_setting
from enumeration_engine.exceptions import EnumerationError, UsageError, custom_exception_handler

logger = logging.getLogger(__name__)


@dataclass
class Output:
    """A JSON payload plus the (n, value) rows used for csv and plot-data."""

    payload: dict
    rows: list = field(default_factory=list)
    tabular: bool = True


def parse_n_values(text):
    """``50,100,200`` or ``start:stop[:step]`` (inclusive)."""
    text = text.strip()
    try:
        if ':' in text:
            parts = [int(part) for part in text.split(':')]
            if len(parts) not in (2, 3):
                raise ValueError(text)
            start, stop = parts[0], parts[1]
            step = parts[2] if len(parts) == 3 else 1
            if step < 1:
                raise ValueError(text)
            return list(range(start, stop + 1, step))
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot parse n values {text!r}") from exc


class EnumerationCommand(BaseCommand):
    requires_system_checks = []
    takes_seq = True
    takes_kind = True
    takes_n = False
    n_required = True
    takes_n_values = False
    default_n_values = None

    def add_arguments(self, parser):
        if self.takes_seq:
            parser.add_argument('--seq', required=True, help='Sequence descriptor, e.g. colored-forests:k=2')
        if self.takes_kind:
            parser.add_argument('--kind', default='multiset', help='multiset or selection')
        if self.takes_n:
            parser.add_argument('--n', type=int, required=self.n_required and not self.takes_n_values)
        if self.takes_n_values:
            parser.add_argument(
                '--n-values', default=self.default_n_values,
                help='Comma list (50,100,200) or inclusive range start:stop[:step]',
            )
        parser.add_argument('--precision', type=int, default=None, help='Working precision in bits')
        parser.add_argument('--format', default='json', help='json, csv or plot-data')
        parser.add_argument('--output', default=None, help='Write output here instead of stdout')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        try:
            config = self.validate(options)
            self.seq = parse_descriptor(config['seq']) if self.takes_seq else None
            output = self.compute(config, options)
            text = self.render(output, config['format'])
        except EnumerationError as exc:
            self.fail(exc)
        except ValueError as exc:
            self.fail(UsageError(str(exc)))
        except Exception as exc:
            self.fail(exc)

        if config.get('output'):
            Path(config['output']).write_text(text)
            logger.info(f"Wrote {self.command_name} output to {config['output']}")
        else:
            self.stdout.write(text, ending='')

    def fail(self, exc):
        exit_code, payload = custom_exception_handler(exc, {'command': self.command_name})
        self.stderr.write(json.dumps(payload, sort_keys=True))
        raise CommandError(payload['message'], returncode=exit_code) from exc

    @property
    def command_name(self):
        return self.__module__.rsplit('.', 1)[-1].replace('_', '-')

    def validate(self, options):
        data = {
            'kind': options.get('kind') or 'multiset',
            'precision': options['precision'] or engine_setting('PRECISION_BITS'),
            'format': options['format'],
            'output': options['output'],
        }
        if self.takes_seq:
            data['seq'] = options['seq']
        if self.takes_n and options.get('n') is not None:
            data['n'] = options['n']
        if self.takes_n_values and options.get('n_values'):
            data['n_values'] = parse_n_values(options['n_values'])
        serializer = RunConfigSerializer(data=data)
        if not serializer.is_valid():
            raise UsageError(f"invalid options: {dict(serializer.errors)}", **serializer.errors)
        return serializer.validated_data

    def compute(self, config, options):
        raise NotImplementedError

    def render(self, output, output_format):
        if output_format == 'json':
            return render_json(output.payload)
        if not output.tabular:
            raise UsageError(f"{self.command_name} output is available as json only")
        if output_format == 'csv':
            return render_csv(output.rows)
        return render_plot_data(output.rows)
