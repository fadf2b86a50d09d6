"""Exception types shared across the package."""


class OpcatError(Exception):
    """Base class for all errors raised by this package."""


class StructureError(OpcatError):
    """Malformed data: wrong shapes, out-of-range indices, missing table entries.

    Distinct from a *validation failure* (well-formed data violating an axiom),
    which is reported through a ValidationReport instead of raised.
    """


class NotAHorn(OpcatError):
    """Raised when a (3,2)-horn query is made with incompatible faces."""


class UndecidedAtBound(OpcatError):
    """Word-problem query exhausted its bound without deciding equality."""

    def __init__(self, bound: int):
        super().__init__(f"undecided at bound {bound}")
        self.bound = bound


class UnsupportedPresentation(OpcatError):
    """Presentation whose relations cannot be used as tree rewrite rules."""
