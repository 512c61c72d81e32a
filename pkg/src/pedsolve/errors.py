"""Exception types shared across the package."""

from __future__ import annotations


class GraphParseError(ValueError):
    """Raised for malformed edge-list input (bad line, loop, duplicate, range)."""


class NotP6FreeError(Exception):
    """Raised when an operation requires a P6-free graph but an induced P6 exists.

    The witness is the offending six-tuple of vertices in path order.
    """

    def __init__(self, witness: tuple[int, ...]):
        self.witness = witness
        super().__init__(f"graph contains an induced P6: {witness}")


class OracleBoundError(ValueError):
    """Raised when a brute-force enumeration exceeds its configured size bound."""


class NoStructureError(RuntimeError):
    """No dominating structure found on a connected P6-free graph.

    This signals an implementation bug: the structure theorem guarantees one.
    """
