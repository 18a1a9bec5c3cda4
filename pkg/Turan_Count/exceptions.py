#! /usr/bin/env python3
"""
Exception types raised by the Turan-Count library.

Library modules raise these; only the user interface turns them into log
messages and exit codes.
"""


class TuranCountError(ValueError):
    """Base class for every error raised by Turan-Count."""


class CapacityError(TuranCountError):
    """A graph would need more vertices than a 64-bit adjacency row holds."""


class InvalidEdgeError(TuranCountError):
    """An edge refers to a missing vertex, is a loop, or is (not) present when it must (not) be."""


class BlockTooSmallError(TuranCountError):
    """A vertex block cannot host the requested matching or edge."""


class GraphFormatError(TuranCountError):
    """Malformed graph6 or edge-list text."""

    def __init__(self, message: str, offset: int | None = None) -> None:
        self.offset: int | None = offset
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)


class PatternSyntaxError(TuranCountError):
    """A pattern spec string does not match the pattern grammar."""

    def __init__(self, message: str, offset: int) -> None:
        self.offset: int = offset
        super().__init__(f"{message} (at byte {offset})")


class NotCriticalError(TuranCountError):
    """The pattern has no edge whose deletion lowers its chromatic number."""


class PatternTooLargeError(TuranCountError):
    """The pattern exceeds the vertex limit of the exact searches."""


class HostTooSmallError(TuranCountError):
    """The host has fewer vertices than the pattern needs."""


class DivisibilityError(TuranCountError):
    """The class count r does not divide n."""


class DeviationBoundError(TuranCountError):
    """Part sizes deviate too far from n/r for the multipartite gap estimate."""


class InconsistentColoringError(TuranCountError):
    """A fixed colour map gives two adjacent vertices the same colour."""


class SearchSpaceTooLargeError(TuranCountError):
    """An exhaustive scan would visit more graphs than the configured cap."""


class InvariantBreachError(TuranCountError):
    """An internal identity that must hold exactly did not."""
