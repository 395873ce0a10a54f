"""Exception types raised across the package."""


class NspathError(Exception):
    """Base class for all errors raised by this package."""


# --- graph parsing ---

class MalformedLine(NspathError):
    pass


class VertexOutOfRange(NspathError):
    pass


class DuplicateEdge(NspathError):
    pass


class SelfLoop(NspathError):
    pass


# --- graph operations ---

class NotConnectedSet(NspathError):
    pass


class NotChordal(NspathError):
    """Graph is not chordal.  ``witness`` holds an induced cycle of length
    >= 4 (vertex tuple) when one could be located, else None."""

    def __init__(self, message="graph is not chordal", witness=None):
        super().__init__(message)
        self.witness = tuple(witness) if witness is not None else None


# --- solver preconditions ---

class GraphNotConnected(NspathError):
    pass


class SameEndpoints(NspathError):
    pass


# --- matroid / representative families ---

class RankTooLarge(NspathError):
    pass


class RankTooSmall(NspathError):
    pass


class NonUniformFamily(NspathError):
    pass


class DependentMember(NspathError):
    pass


# --- instance generators ---

class BadPartition(NspathError):
    pass


class MixedVariants(NspathError):
    pass


class MixedK(NspathError):
    pass


class EmptyList(NspathError):
    pass


# --- oracle ---

class ExplicitBudgetExceeded(NspathError):
    pass


# --- chordal solver ---

class NoBranchLayer(NspathError):
    pass
