#!/usr/bin/env python
"""Entry point for the toolkit commands: hilbert, smooth, wlp, etale, demo, probe."""
import os
import sys

if __name__ == "__main__":
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings")
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Is it installed in this environment? "
            "See requirements.txt."
        ) from exc
    execute_from_command_line(sys.argv)
