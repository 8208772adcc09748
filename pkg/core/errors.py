from typing import List, Optional, Sequence


class DRGError(Exception):
    """Base class for every failure raised by the analyzer."""


class ArrayParseError(DRGError, ValueError):
    def __init__(self, message: str, position: int, diameter: Optional[int] = None):
        super().__init__(f"{message} (at position {position})")
        self.position = position
        # number of b-values read, set when only the halves disagree in length
        self.diameter = diameter


class InfeasibleArray(DRGError):
    def __init__(self, violations: Sequence[str]):
        self.violations: List[str] = list(violations)
        super().__init__("; ".join(self.violations) or "infeasible intersection array")


class KreinConditionViolated(InfeasibleArray):
    def __init__(self, h: int, i: int, j: int, value):
        self.index = (h, i, j)
        self.value = value
        super().__init__([f"Krein condition fails: q^{h}_{i},{j} = {value}"])


class DegenerateDuals(DRGError):
    pass


class UnsupportedDegree(DRGError, ValueError):
    def __init__(self, degree: int):
        super().__init__(f"real root extraction supports degree 1..4, got {degree}")
        self.degree = degree


class DiameterTooSmall(DRGError):
    def __init__(self, needed: int, diameter: int, what: str = "this computation"):
        super().__init__(f"{what} requires D >= {needed}, got D = {diameter}")
        self.needed = needed
        self.diameter = diameter


class InfeasibleParameters(DRGError, ValueError):
    pass


class ParameterInconsistency(DRGError):
    pass


class GraphTooLarge(DRGError):
    def __init__(self, n: int, limit: int):
        super().__init__(f"graph would have {n} vertices, limit is {limit}")
        self.n = n
        self.limit = limit


class DisconnectedGraph(DRGError):
    pass


class NotDistanceRegular(DRGError):
    def __init__(self, x: int, y: int, distance: int, quantity: str, expected: int, found: int,
                 note: Optional[str] = None):
        self.witness = (x, y, distance, quantity, expected, found)
        msg = f"{quantity} differs for pair ({x}, {y}) at distance {distance}: expected {expected}, found {found}"
        super().__init__(msg if note is None else f"{msg} ({note})")
