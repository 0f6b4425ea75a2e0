"""Exception hierarchy shared by all modhyp modules."""


class ModhypError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(ModhypError, ZeroDivisionError):
    pass


class IncompatibleEmbedding(ModhypError, ValueError):
    pass


class ZeroLeadingCoefficient(ModhypError, ZeroDivisionError):
    pass


class NonMonicLeadingCoefficient(ModhypError, ValueError):
    pass


class InfinitePrecision(ModhypError, ValueError):
    """An operation producing an infinite series was given no finite precision."""


class InvalidWeight(ModhypError, ValueError):
    pass


class InvalidLowerParameter(ModhypError, ValueError):
    pass


class ResonantExponent(ModhypError, ValueError):
    """Two local exponents differ by an integer; logarithmic solutions would be needed."""


ResonantExponents = ResonantExponent


class LogarithmicCase(ResonantExponent):
    pass


class NotAnIndicialRoot(ModhypError, ValueError):
    pass


class NotMonic(ModhypError, ValueError):
    pass


class NonzeroWeight(ModhypError, ValueError):
    pass


class NotFuchsianOnThreePoints(ModhypError, ValueError):
    pass


class BoundViolation(ModhypError, ArithmeticError):
    """A degree or denominator bound guaranteed by the theory failed to hold."""


class NonIntegralWeight(ModhypError, ValueError):
    pass


class EqualExponents(ModhypError, ValueError):
    pass


class CompositeInput(ModhypError, ValueError):
    pass


class PrecisionTooLow(ModhypError, ValueError):
    pass


class NotPrimitive(ModhypError, ValueError):
    pass


class EqualCusps(ModhypError, ValueError):
    pass


class NonHolomorphicCombination(ModhypError, ValueError):
    pass


class UnknownFixture(ModhypError, KeyError):
    pass


class UnknownObject(ModhypError, KeyError):
    pass


class UnknownIdentity(ModhypError, KeyError):
    pass


class ParseError(ModhypError, ValueError):
    pass
