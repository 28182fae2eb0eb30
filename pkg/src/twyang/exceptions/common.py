from collections.abc import Sequence
from typing import Any


class InvalidIndex(ValueError):
    def __init__(self, message: str, index: object = None) -> None:
        super().__init__(message)
        self.index = index


class ShapeMismatch(ValueError):
    def __init__(
        self,
        message: str | None = None,
        expected: object = None,
        actual: object = None,
    ) -> None:
        super().__init__(message or 'Shape mismatch.')
        self.expected = expected
        self.actual = actual


class SizeLimitExceeded(ValueError):
    def __init__(self, message: str, size: int, limit: int) -> None:
        super().__init__(message)
        self.size = size
        self.limit = limit


class EmptySkewSpace(ValueError):
    def __init__(self, message: str | None = None, inequality: str | None = None) -> None:
        super().__init__(message or f'Skew space is empty: {inequality} fails.')
        self.inequality = inequality


class PoleError(ArithmeticError):
    def __init__(self, message: str | None = None, point: Any = None) -> None:
        super().__init__(message or f'Pole at {point}.')
        self.point = point


class NonLinearFactor(ArithmeticError):
    def __init__(self, message: str, factor: Any = None) -> None:
        super().__init__(message)
        self.factor = factor


class InconsistentSamples(ArithmeticError):
    def __init__(self, message: str, points: Sequence[tuple[Any, Any]] = ()) -> None:
        super().__init__(message)
        self.points = tuple(points)


class UnpairableRoots(ArithmeticError):
    def __init__(
        self,
        message: str,
        numerator_roots: Sequence[Any] = (),
        denominator_roots: Sequence[Any] = (),
    ) -> None:
        super().__init__(message)
        self.numerator_roots = tuple(numerator_roots)
        self.denominator_roots = tuple(denominator_roots)


class InfiniteIntersection(ArithmeticError):
    def __init__(self, message: str, row: int | None = None) -> None:
        super().__init__(message)
        self.row = row


class NoHighestVector(ValueError):
    def __init__(self, message: str, weight: Sequence[Any] = ()) -> None:
        super().__init__(message)
        self.weight = tuple(weight)


class SubspaceNotInvariant(RuntimeError):
    pass


class NotOneDimensional(RuntimeError):
    def __init__(self, message: str, dimension: int) -> None:
        super().__init__(message)
        self.dimension = dimension


class NotEigenvector(RuntimeError):
    def __init__(self, message: str, component: int | None = None) -> None:
        super().__init__(message)
        self.component = component


class RelationCheckFailed(RuntimeError):
    def __init__(self, message: str, witness: str | None = None) -> None:
        super().__init__(message)
        self.witness = witness
