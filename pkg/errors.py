"""Exception hierarchy for the Point Line Cover toolkit.

Every error derives from :class:`fastmcp.exceptions.ToolError` so that a
failure raised deep inside the geometry or solver layers surfaces to MCP
clients as a clean tool error, and to the CLI as exit status 2.
"""

from fastmcp.exceptions import ToolError


class PlcToolkitError(ToolError):
    """Base class for all toolkit errors."""


class InvalidCoordinateError(PlcToolkitError):
    """A coordinate could not be interpreted as an exact rational."""


class IdenticalPointsError(PlcToolkitError):
    """Two points that must be distinct are equal."""


class IdenticalLinesError(PlcToolkitError):
    """Two lines that must be distinct are equal."""


class DuplicatePointError(PlcToolkitError):
    """A point set contains the same point twice."""


class DuplicateLineError(PlcToolkitError):
    """A line set contains the same line twice."""


class InvalidInstanceError(PlcToolkitError):
    """An instance violates a structural invariant (negative k, bad edge...)."""


class CapExceededError(PlcToolkitError):
    """An exhaustive routine was asked to run above its size cap."""


class BudgetExceededError(PlcToolkitError):
    """An enumeration would exceed the configured work budget."""


class OffGridError(PlcToolkitError):
    """A point lies outside the grid shared by the protocol players."""


class CatalogMissError(PlcToolkitError):
    """Binary search over an order type catalog failed to locate a key."""


class ConstructionError(PlcToolkitError):
    """A randomized construction ran out of trials."""


class InfeasibleSpecError(PlcToolkitError):
    """A generator specification cannot be satisfied."""


class FormatSyntaxError(PlcToolkitError):
    """Malformed instance text. ``line_number`` is 1-based, or 0 when unknown."""

    def __init__(self, message: str, line_number: int = 0):
        self.line_number = line_number
        if line_number:
            message = f"line {line_number}: {message}"
        super().__init__(message)
