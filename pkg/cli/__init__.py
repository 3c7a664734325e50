"""Command-line front end: ``python -m cli <command>``."""
