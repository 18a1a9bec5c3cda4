#! /usr/bin/env python3
"""
Module for managing application settings and configuration.

The Settings class holds the parsed CLI arguments, the application Logger, and
the values resolved from them: worker count, seed, epsilon, output format and
output path.
"""

import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import NoReturn

from .cli_parser import CLIArgs, parse_fraction, validate_format
from .logger import Logger

THREADS_ENV_VAR: str = "TURANCOUNT_THREADS"

EXIT_OK: int = 0
EXIT_FINDING: int = 1
EXIT_USAGE: int = 2


class Settings:
    """
    Settings class for managing application configuration.
    """

    def __init__(self, args: CLIArgs, logger: Logger | None = None) -> None:
        """
        Initialize the Settings object.
        """
        # CLI arguments.
        self.args: CLIArgs = args
        # Logger.
        self.logger: Logger = logger if logger is not None else Logger(self.args.log_level)

        self.seed: int = self.args.seed if self.args.seed is not None else 0
        self.threads: int = self._resolve_threads()
        self.output_format: str | None = validate_format(self.args.output_format or "text")
        self.out_path: Path | None = self.args.out
        self.epsilon: Fraction | None = self._resolve_epsilon()

    def _resolve_threads(self) -> int:
        """--threads, else TURANCOUNT_THREADS, else every core."""
        if self.args.threads is not None:
            return max(1, self.args.threads)
        env_value = os.environ.get(THREADS_ENV_VAR)
        if env_value:
            try:
                return max(1, int(env_value))
            except ValueError:
                self.logger.warning(
                    f"Ignoring {THREADS_ENV_VAR}={env_value!r}: not an integer."
                )
        return os.cpu_count() or 1

    def _resolve_epsilon(self) -> Fraction | None:
        if self.args.eps is None:
            return None
        try:
            epsilon = parse_fraction(self.args.eps)
        except ValueError as error:
            self.logger.error(str(error))
            return None
        if not 0 < epsilon < 1:
            self.logger.error(f"Epsilon must lie strictly between 0 and 1, got {epsilon}.")
            return None
        return epsilon

    @property
    def valid(self) -> bool:
        """False when a supplied option could not be resolved."""
        if self.output_format is None:
            return False
        return not (self.args.eps is not None and self.epsilon is None)

    def exit_program(
        self, message: str, error_type: str | None = "info", code: int = EXIT_OK
    ) -> NoReturn:
        """
        Exit program with logging and cleanup.

        Args:
            message: Message to log
            error_type: Type of message ('info', 'warning', 'error' or 'exception')
            code: Process exit code
        """
        message = f"{message} Exiting program."
        if error_type == "error":
            self.logger.error(message)
        elif error_type == "exception":
            self.logger.exception(message)
        elif error_type == "warning":
            self.logger.warning(message)
        else:
            self.logger.info(message)

        self.logger.stop_logging()
        sys.exit(code)
