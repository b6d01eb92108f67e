"""Exception and warning types raised across the package."""


class QGenError(Exception):
    """Base class for all package errors."""


class InvalidQ(QGenError, ValueError):
    """The deformation parameter is outside the range an operation accepts."""


class NonInvertibleConstantTerm(QGenError, ArithmeticError):
    pass


class PoleAt(QGenError, ValueError):
    def __init__(self, where):
        super().__init__(f"pole at {where}")
        self.where = where


class DomainError(QGenError, ValueError):
    pass


class DivergentTail(QGenError, ArithmeticError):
    pass


class LatticeConditionWarning(UserWarning):
    """log(1-q)/log(q) is not an integer, so the improper q-integral is not Gamma_q."""
