"""
Result types of exact counting.
"""
from dataclasses import dataclass
from fractions import Fraction

from django.db import models
from django.utils.translation import gettext_lazy as _

from core.output import read_csv_rows, read_json_payload


class Kind(models.TextChoices):
    MULTISET = 'multiset', _('Multiset')
    SELECTION = 'selection', _('Selection')


@dataclass(frozen=True)
class CountTable:
    """c_0..c_N for one sequence and one kind."""

    kind: Kind
    seq_id: str
    counts: tuple

    def __post_init__(self):
        if not self.counts or self.counts[0] != 1:
            raise ValueError("counts[0] must be 1 (the empty structure)")
        if any(value < 0 for value in self.counts):
            raise ValueError("counts must be nonnegative")

    @property
    def N(self):
        return len(self.counts) - 1

    def __getitem__(self, n):
        return self.counts[n]

    def rows(self):
        return [(n, str(value)) for n, value in enumerate(self.counts)]

    @classmethod
    def from_csv(cls, text, kind, seq_id):
        rows = read_csv_rows(text)
        if [n for n, _ in rows] != list(range(len(rows))):
            raise ValueError("count CSV rows must run n = 0, 1, 2, ... without gaps")
        return cls(Kind(kind), seq_id, tuple(int(value) for _, value in rows))

    @classmethod
    def from_json(cls, text):
        """Re-ingest a ``count`` JSON payload."""
        payload = read_json_payload(text)
        try:
            counts = tuple(int(value) for value in payload['counts'])
            table = cls(Kind(payload['kind']), payload['seq_id'], counts)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"not a count table payload: {exc}") from exc
        if payload.get('N', table.N) != table.N:
            raise ValueError(f"payload declares N={payload['N']} but carries {len(counts)} counts")
        return table


@dataclass(frozen=True)
class StarSequence:
    """Exact rationals a*_1..a*_N of the star transform."""

    terms: tuple

    @property
    def N(self):
        return len(self.terms)

    def __getitem__(self, j):
        return self.terms[j - 1]

    def rows(self):
        return [(j, str(value)) for j, value in enumerate(self.terms, start=1)]

    @classmethod
    def from_csv(cls, text):
        rows = read_csv_rows(text)
        if [j for j, _ in rows] != list(range(1, len(rows) + 1)):
            raise ValueError("star CSV rows must run j = 1, 2, ... without gaps")
        return cls(tuple(Fraction(value) for _, value in rows))


@dataclass(frozen=True)
class PartitionVector:
    """Multiplicities (eta_1..eta_n) of an unordered integer partition of n."""

    eta: tuple

    @property
    def n(self):
        return sum(j * count for j, count in enumerate(self.eta, start=1))

    def parts(self):
        """Nonzero (j, eta_j) pairs."""
        return [(j, count) for j, count in enumerate(self.eta, start=1) if count]
