#!/usr/bin/env python
"""Command-line entry point for the enumeration engine and Django's own commands."""
import os
import sys


def main():
    """Run an engine command, or fall through to Django's administrative tasks."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'enumeration_engine.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    from enumeration_engine.cli import COMMANDS, run

    if len(sys.argv) > 1 and sys.argv[1] in COMMANDS:
        sys.exit(run(sys.argv[1:]))
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
