"""Exception hierarchy.

Every error raised on purpose by this package derives from :class:`NcpError`,
and carries the CLI exit code it maps to.
"""

from __future__ import annotations


class NcpError(Exception):
    exit_code = 1


class ParseError(NcpError, ValueError):
    exit_code = 2


class NotAPartition(ParseError):
    """Blocks do not cover ``{1, ..., n}`` exactly once."""


class Crossing(ParseError):
    """Two blocks interleave as ``x < y < z < t``."""


class DegreeOverflow(NcpError):
    """A configured size guard was exceeded; nothing is silently truncated."""

    exit_code = 3


class OrderOverflow(DegreeOverflow):
    pass


class NotContractible(NcpError, ValueError):
    exit_code = 2


class NotAugmentation(NcpError, ValueError):
    exit_code = 2


class NonInvertible(NcpError, ZeroDivisionError):
    exit_code = 4


class UnknownSuite(NcpError, KeyError):
    exit_code = 2
