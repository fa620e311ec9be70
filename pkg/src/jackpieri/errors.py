"""Exception hierarchy shared by all modules."""


class JackPieriError(Exception):
    pass


class ZeroDenominator(JackPieriError, ZeroDivisionError):
    pass


class DivisionByZero(JackPieriError, ZeroDivisionError):
    pass


class ModeMismatch(JackPieriError, TypeError):
    pass


class PoleAtD(JackPieriError, ZeroDivisionError):
    """The chosen specialization of d hits a pole; pick another d."""


class WeightMismatch(JackPieriError, ValueError):
    pass


class RankMismatch(JackPieriError, ValueError):
    pass


class InexactDivision(JackPieriError, ArithmeticError):
    pass


class NotSymmetric(JackPieriError, ValueError):
    pass


class EigenvalueCollision(JackPieriError, ArithmeticError):
    def __init__(self, d, m, k):
        super().__init__(f"eigenvalues of {m} and {k} collide at d={d}")
        self.d, self.m, self.k = d, m, k


class ZeroNormalizer(JackPieriError, ZeroDivisionError):
    pass


class PoleInA(JackPieriError, ZeroDivisionError):
    def __init__(self, x, d, factor):
        super().__init__(f"A-coefficient pole at x={x}, d={d} (factor {factor})")
        self.x, self.d, self.factor = x, d, factor


class SingularSystem(JackPieriError, ArithmeticError):
    def __init__(self, d, m):
        super().__init__(f"vanishing system for {m} is singular at d={d}")
        self.d, self.m = d, m
