"""Command-line front end."""

from acylbounds.cli.commands import build_parser, run_cli

__all__ = ["build_parser", "run_cli"]
