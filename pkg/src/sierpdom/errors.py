"""Exception types raised across the package."""

from __future__ import annotations


class SierpdomError(Exception):
    """Base class for all package errors."""


class InvalidOrderError(SierpdomError, ValueError):
    pass


class InvalidListError(SierpdomError, ValueError):
    pass


class VertexError(SierpdomError, ValueError):
    """A vertex id outside ``1..n`` or an invalid vertex set."""


class ParseError(SierpdomError, ValueError):
    """Malformed serialized graph; ``position`` is a line or byte offset."""

    def __init__(self, message: str, *, line: int | None = None, byte: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if byte is not None:
            where.append(f"byte {byte}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.byte = byte


class UnsupportedStructureError(SierpdomError, ValueError):
    pass


class FunctionError(SierpdomError, ValueError):
    """A function assignment that is not total or maps outside V(H)."""


class SolverCapError(SierpdomError, ValueError):
    """Instance exceeds the solver (or oracle) size cap."""


class InfeasibleError(SierpdomError):
    """Some vertex that must be dominated has no admissible dominator."""


class BudgetExceededError(SierpdomError):
    """A search ran out of budget; ``partial`` holds the best non-exact result."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class TheoremViolationError(SierpdomError):
    """A computed value contradicts a proven statement; indicates a bug."""


class ConstructionError(SierpdomError):
    """An explicit construction failed its validator."""


class PreconditionError(SierpdomError, ValueError):
    pass
