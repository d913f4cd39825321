"""Exception hierarchy shared by all modules.

Every error raised on bad *input* derives from ``InputError`` (CLI exit
code 2); everything else derives from ``PlabicError`` (exit code 1 when it
aborts a verification run).
"""


class PlabicError(Exception):
    """Base class for all package errors."""


class InputError(PlabicError):
    """Malformed or out-of-contract input."""


class ParseError(InputError):
    pass


class EmptyInput(InputError):
    pass


class SizeMismatch(InputError):
    pass


class IndexMismatch(InputError):
    pass


class InvalidInput(InputError):
    pass


class InvalidNecklace(InputError):
    """The one-element step rule fails at some position."""

    def __init__(self, position, message=None):
        self.position = position
        super().__init__(message or f"necklace step rule fails at position {position}")


class NoGaleMinimum(PlabicError):
    """A rotated Gale order has no minimum element (input is not a matroid)."""


class NotPositroid(InputError):
    pass


class NotOrientable(PlabicError):
    """The graph admits no perfect orientation."""


class ClosedStrand(PlabicError):
    """A strand is a closed loop in the internal subgraph; carries the cycle."""

    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"closed internal strand through half-edges {self.cycle}")


class NotReduced(PlabicError):
    def __init__(self, certificate=None):
        self.certificate = certificate
        super().__init__(f"graph is not reduced: {certificate}")


class NotComplete(PlabicError):
    pass


class TypeMismatch(InputError):
    """Refining graph does not match the vertex type it is glued into."""


class PatternMismatch(InputError):
    """Move site does not match the requested local pattern."""


class BuildError(PlabicError):
    """Post-hoc verification of a constructed graph failed."""


class CapExceeded(PlabicError):
    """BFS hit the node cap; carries the partial result."""

    def __init__(self, cap, partial):
        self.cap = cap
        self.partial = partial
        super().__init__(f"move-equivalence BFS exceeded cap {cap}")


class BoundExceeded(InputError):
    """Requested (k, n) is above the configured enumeration bound."""


class NotMaximal(InputError):
    pass


class NotWS(InputError):
    pass


class InvalidVertexData(InputError):
    pass


class FixedPointsPresent(InputError):
    pass
