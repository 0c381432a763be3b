"""
Command dispatcher: ``manage.py <command> [options]`` for the engine's commands.

Commands with hyphenated names map onto management command modules
(``limit-law`` -> ``limit_law``). The exit code is returned, not raised.
"""
import os
import sys

COMMANDS = {
    'count': 'count',
    'brute': 'brute',
    'star': 'star',
    'saddle': 'saddle',
    'identity': 'identity',
    'estimate': 'estimate',
    'ratio': 'ratio',
    'scaling': 'scaling',
    'limit-law': 'limit_law',
    'local-limit': 'local_limit',
    'fit': 'fit',
}

SYNOPSIS = (
    "usage: manage.py <command> [options]\n"
    "commands: " + ', '.join(COMMANDS) + "\n"
    "common options: --seq DESCRIPTOR --kind {multiset,selection} --n N | --n-values LIST "
    "--precision BITS --format {json,csv,plot-data} --output PATH\n"
    "run 'manage.py <command> --help' for the options of one command\n"
)


def run(argv=None, prog='manage.py'):
    """Run one command; returns 0 on success, 1 on domain errors, 2 on usage errors."""
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in ('-h', '--help', 'help'):
        sys.stderr.write(SYNOPSIS)
        return 0 if argv else 2
    name = argv[0]
    if name not in COMMANDS:
        sys.stderr.write(f"unknown command {name!r}\n{SYNOPSIS}")
        return 2

    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'enumeration_engine.settings')
    import django
    from django.core.management import get_commands, load_command_class

    django.setup()
    module = COMMANDS[name]
    command = load_command_class(get_commands()[module], module)
    try:
        command.run_from_argv([prog, module, *argv[1:]])
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else (0 if exc.code is None else 2)
    return 0
