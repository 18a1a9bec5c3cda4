#!/usr/bin/env uv run -m
# /// script
# dependencies = [
#     "duckdb",
# ]
# ///
"""
Turan-Count: exact copy counts of colour-critical graphs above the Turán threshold.
"""

import sys

from Turan_Count.user_interface.commands import run_command


def main() -> None:
    """
    Parses the command line, runs the chosen subcommand and exits with its code
    (0 success, 1 diagnostic finding, 2 usage or input error).
    """
    run_command(sys.argv[1:])


if __name__ == "__main__":
    main()
