"""Exception hierarchy.

Validation failures (bad input, violated side conditions) derive from
:class:`ValidationError`; failures of internal consistency checks, which
indicate a bug rather than bad input, derive from :class:`ConsistencyError`.
"""


class RQFFError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(RQFFError, ValueError):
    pass


class ConsistencyError(RQFFError, AssertionError):
    pass


# fields
class NonPrime(ValidationError):
    pass


class EvenCharacteristic(ValidationError):
    pass


class ReducibleModulus(ValidationError):
    pass


class ContextMismatch(ValidationError):
    pass


class DivisionByZero(ValidationError, ZeroDivisionError):
    pass


class ZeroInput(ValidationError):
    pass


class NotASquare(ValidationError):
    pass


# polynomials
class BothZero(ValidationError):
    pass


class ConstantInput(ValidationError):
    pass


class NoEmbedding(ValidationError):
    pass


class PolyParseError(ValidationError):
    pass


# discriminants and primes
class NotMonic(ValidationError):
    pass


class OddDegree(ValidationError):
    pass


class PerfectSquare(ValidationError):
    pass


class NotSquarefree(ValidationError):
    pass


class ReducibleInput(ValidationError):
    pass


class NotSplit(ValidationError):
    pass


class Ramified(NotSplit):
    pass


# continued fractions / pell
class InternalDivisibilityViolation(ConsistencyError):
    pass


class PeriodNotFound(RQFFError):
    def __init__(self, max_steps):
        super().__init__(f"period not found within {max_steps} steps")
        self.max_steps = max_steps


class RelationViolated(ConsistencyError):
    pass


class DegreeTooLarge(ValidationError):
    pass


class BudgetExceeded(RQFFError):
    pass


# families / tables
class SideConditionViolated(ValidationError):
    def __init__(self, condition):
        super().__init__(f"side condition violated: {condition}")
        self.condition = condition


class NotMonicA(SideConditionViolated):
    def __init__(self):
        super().__init__("A = 2a+1 must be monic")


class CaseNotCovered(ValidationError):
    pass


# zeta oracle
class MissingCounts(ValidationError):
    pass


class NonPrimeBase(ValidationError):
    pass


class RegulatorNondivisibility(ConsistencyError):
    pass
