"""
Text descriptors for sequences: ``partitions``, ``colored-forests:k=2``,
``lollipop:alpha=1/2,k=2``, ``explicit:file=aj.txt``, ``explicit:values=0;0;1``.

Explicit sequences may carry growth metadata through ``K``, ``r``, ``y`` and
``nu`` keys.
"""
from pathlib import Path

from enumeration_engine.exceptions import InvalidFamilyParams
from .families import ExpansiveParams, Family, make_sequence

_METADATA_KEYS = ('K', 'r', 'y', 'nu')


def parse_descriptor(text):
    """Build a ComponentSequence from its text descriptor."""
    text = text.strip()
    name, _, raw_options = text.partition(':')
    try:
        family = Family(name.strip())
    except ValueError as exc:
        known = ', '.join(value for value in Family.values if value != Family.CUSTOM)
        raise InvalidFamilyParams(f"unknown sequence family {name!r}; known: {known}") from exc
    if family == Family.CUSTOM:
        raise InvalidFamilyParams("custom sequences are built programmatically, not from text")

    options = {}
    for item in filter(None, (part.strip() for part in raw_options.split(','))):
        key, sep, value = item.partition('=')
        if not sep:
            raise InvalidFamilyParams(f"option {item!r} is not of the form key=value")
        options[key.strip()] = value.strip()

    if family == Family.EXPLICIT:
        return _parse_explicit(options)
    if family == Family.POWER_EXP:
        return make_sequence(family, **{key: options[key] for key in options if key in ('K', 'r', 'y')})
    return make_sequence(family, **options)


def _parse_explicit(options):
    if 'file' in options:
        values = read_explicit_file(options['file'])
    elif 'values' in options:
        values = _parse_integers(options['values'].split(';'), source='values option')
    else:
        raise InvalidFamilyParams("explicit sequences need file=... or values=...")

    expansive = None
    if any(key in options for key in _METADATA_KEYS):
        try:
            expansive = ExpansiveParams(
                K=float(options['K']),
                r=float(options['r']),
                y=float(options['y']),
                nu=float(options['nu']) if 'nu' in options else None,
            )
        except KeyError as exc:
            raise InvalidFamilyParams(f"explicit metadata needs K, r and y (missing {exc})") from exc
    return make_sequence(Family.EXPLICIT, values=values, expansive=expansive)


def read_explicit_file(path):
    """
    One integer per line, line i holding a_i. Blank lines and '#' comments
    are skipped. Anything else (a CSV table, a JSON count dump) is rejected.
    """
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise InvalidFamilyParams(f"cannot read explicit sequence file {path}: {exc}") from exc
    entries = [line.strip() for line in lines]
    entries = [entry for entry in entries if entry and not entry.startswith('#')]
    return _parse_integers(entries, source=str(path))


def _parse_integers(entries, source):
    values = []
    for index, entry in enumerate(entries, start=1):
        try:
            value = int(entry.strip())
        except ValueError as exc:
            raise InvalidFamilyParams(
                f"{source}: entry {index} ({entry!r}) is not an integer", j=index
            ) from exc
        if value < 0:
            raise InvalidFamilyParams(f"{source}: entry {index} is negative", j=index)
        values.append(value)
    return values


def format_descriptor(seq):
    """Canonical descriptor text, used as the ``seq_id`` of tables and reports."""
    family = seq.family
    p = seq.params
    if family == Family.CONSTANT:
        return f"constant:c={p['c']}"
    if family in (Family.COLORED_FORESTS, Family.PARITY_COLORED):
        return f"{family.value}:k={p['k']}"
    if family == Family.PARTITIONS_MIN_PART:
        return f"partitions-min:s={p['s']}"
    if family == Family.LOLLIPOP:
        return f"lollipop:alpha={p['alpha']},k={p['k']}"
    if family == Family.POWER_EXP:
        return f"power-exp:K={p['K']},r={p['r']},y={p['y']}"
    if family == Family.EXPLICIT:
        text = 'explicit:values=' + ';'.join(str(value) for value in seq.values)
        params = seq.declared_params()
        if params is not None:
            text += f",K={params.K},r={params.r},y={params.y}"
            if params.nu is not None:
                text += f",nu={params.nu}"
        return text
    if family == Family.CUSTOM:
        name = getattr(seq.callback, '__name__', 'callback')
        return f"custom:{name}"
    return family.value
