"""Exception hierarchy shared by every module of the package."""


class B1FError(ValueError):
    """Base class for all errors raised by circb1f."""


# graph construction ---------------------------------------------------------


class InvalidOrder(B1FError):
    pass


class OddOrder(InvalidOrder):
    def __init__(self, order):
        super().__init__(f"order must be even, got {order}")
        self.order = order


class DistanceOutOfRange(B1FError):
    def __init__(self, distance, order):
        super().__init__(
            f"distance {distance} outside [1, {order // 2}] for order {order}"
        )
        self.distance = distance
        self.order = order


class DuplicateDistance(B1FError):
    def __init__(self, distance):
        super().__init__(f"distance {distance} listed more than once")
        self.distance = distance


class UnsupportedConnectionSetSize(B1FError):
    pass


# factor validation ----------------------------------------------------------


class FactorisationError(B1FError):
    """A list of factors failed validation against its host graph."""


class NotPerfectMatching(FactorisationError):
    def __init__(self, factor_index, vertex, detail="is not matched exactly once"):
        super().__init__(f"factor {factor_index}: vertex {vertex} {detail}")
        self.factor_index = factor_index
        self.vertex = vertex


class EdgeNotInGraph(FactorisationError):
    def __init__(self, edge, factor_index=None):
        where = "" if factor_index is None else f" (factor {factor_index})"
        super().__init__(f"edge {tuple(edge)} is not an edge of the graph{where}")
        self.edge = tuple(edge)
        self.factor_index = factor_index


class OverlappingFactors(FactorisationError):
    def __init__(self, edge, factor_indices):
        super().__init__(
            f"edge {tuple(edge)} appears in factors {list(factor_indices)}"
        )
        self.edge = tuple(edge)
        self.factor_indices = tuple(factor_indices)


class IncompleteCover(FactorisationError):
    def __init__(self, covered, total):
        super().__init__(
            f"factors cover {covered} of {total} edges "
            f"({total - covered} uncovered)"
        )
        self.covered = covered
        self.total = total


class FactorsShareEdge(B1FError):
    def __init__(self, edge):
        super().__init__(f"both factors contain edge {tuple(edge)}")
        self.edge = tuple(edge)


# constructions --------------------------------------------------------------


class ParameterOutOfRange(B1FError):
    """Construction parameters outside the range where the family exists.

    ``reason`` distinguishes proven non-existence from degenerate or
    infeasible parameters, so callers can report the difference.
    """

    def __init__(self, message, reason="out of range"):
        super().__init__(f"{message}: {reason}")
        self.reason = reason


class DisconnectedParameter(ParameterOutOfRange):
    def __init__(self, message):
        super().__init__(message, reason="graph is disconnected")


class InvalidParams(ParameterOutOfRange):
    pass


class UnsupportedBase(B1FError):
    pass


class WrongConnectionSet(B1FError):
    def __init__(self, expected, got):
        super().__init__(f"expected connection set {expected}, got {got}")


class ConditionCNotSatisfied(B1FError):
    pass


# search ---------------------------------------------------------------------


class NotRegular34(B1FError):
    pass


class Disconnected(B1FError):
    pass


# documents ------------------------------------------------------------------


class DocumentError(B1FError):
    """Malformed factorisation document; carries a location when known."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "")
            loc += ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column
