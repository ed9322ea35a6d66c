"""Exception hierarchy shared by all vichain modules."""


class VichainError(Exception):
    """Base class for every error raised by this package."""


class BudgetExceeded(VichainError):
    """A binary-encoded horizon asked for more explicit steps than allowed."""

    def __init__(self, needed, budget, what="steps"):
        super().__init__(f"would need {needed} {what} but budget is {budget}")
        self.needed = needed
        self.budget = budget


class EnumerationBudgetExceeded(VichainError):
    """A brute-force enumeration would exceed its instance cap."""


class InvalidHorizon(VichainError):
    """A first-action question was posed for an empty horizon."""


class DiscountOutOfRange(VichainError):
    """Discount factor outside the range a construction supports."""


class OrderMismatch(VichainError):
    """Valuation length does not match the order of the program."""


class NegativeInitialValuation(VichainError):
    """The powering problem requires an entrywise non-negative start."""


class MissingAnnotation(VichainError):
    """A counter-program test lacks the scale witnesses needed to check it."""


class BlankDisciplineViolation(VichainError):
    """A Turing machine (re)wrote a blank over a blank it just read."""


class NotMonotone(VichainError):
    """Operation requires a subtraction-free program."""


class NotLayered(VichainError):
    """Operation requires a layered program."""


class BadSeed(VichainError):
    """Initial valuation is not the one-hot vector the construction expects."""


class FreshNameCollision(VichainError):
    """Input already uses the reserved '$' prefix kept for generated names."""


class ParseError(VichainError):
    def __init__(self, message, line=None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


class SemanticError(VichainError):
    """Input parsed but fails a module validator."""

    def __init__(self, violations):
        super().__init__("; ".join(violations))
        self.violations = tuple(violations)
