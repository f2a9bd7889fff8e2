"""Exception types shared across the library."""


class PositroidError(Exception):
    """Base class for all errors raised by this library."""


# --- matroid construction and operations ---

class EmptyBases(PositroidError):
    pass


class UnequalCardinality(PositroidError):
    pass


class ExchangeViolation(PositroidError):
    """Basis exchange axiom fails; carries a concrete witness."""

    def __init__(self, b1, b2, element):
        self.b1 = frozenset(b1)
        self.b2 = frozenset(b2)
        self.element = element
        super().__init__(
            f"no exchange partner in {sorted(self.b2)} for element "
            f"{element} of {sorted(self.b1)}"
        )


class ElementOutOfRange(PositroidError):
    pass


class ShiftOutOfRange(PositroidError):
    pass


class OverlappingEmbedding(PositroidError):
    pass


# --- bijections ---

class SizeMismatch(PositroidError):
    pass


class MalformedDiagram(PositroidError):
    pass


class NotFound(PositroidError):
    pass


class BoundExceeded(PositroidError):
    pass


class OverlappingSupports(PositroidError):
    pass


# --- plabic graphs ---

class StuckTrip(PositroidError):
    pass


class NotPerfectlyOrientable(PositroidError):
    pass


class MissingGeometry(PositroidError):
    pass


class BadEndpoints(PositroidError):
    pass


# --- polytopes ---

class InvalidFlag(PositroidError):
    pass


class SubsetBlowup(PositroidError):
    pass


class NotAPositroid(PositroidError):
    pass


# --- non-crossing partitions ---

class CrossingComponents(PositroidError):
    pass


class FactorNotConnected(PositroidError):
    pass


class FactorNotPositroid(PositroidError):
    pass


class BlocksCross(PositroidError):
    pass


class MismatchedType(PositroidError):
    pass


# --- counting ---

class InsufficientPrefix(PositroidError):
    pass


# --- cli / serialization ---

class ParseError(PositroidError):
    pass


class UnknownSuite(PositroidError):
    pass
