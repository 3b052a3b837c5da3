"""Exception types shared across the engine."""


class BeliefBoxError(Exception):
    """Base class for all engine errors."""


class MalformedAttitude(BeliefBoxError):
    """Attitude term does not decompose into a legal nesting path."""


class Inconsistent(BeliefBoxError):
    """Insertion would co-locate a proposition with its contrary."""


class UnboundSchema(BeliefBoxError):
    """A schema variable is still free after binding."""


class UnknownAct(BeliefBoxError):
    """No operator is declared for the act's name and arity."""


class NotFraudulent(BeliefBoxError):
    """A term outside the act's instantiated preconditions was marked fraudulent."""


class NotCommunicated(BeliefBoxError):
    """accept_belief called for a proposition the speaker never communicated."""


class NoMatch(BeliefBoxError):
    """The rule's antecedent does not unify with any available fact."""


class PlanNotFound(BeliefBoxError):
    """No complete plan exists within the step bound."""


class ParseError(BeliefBoxError):
    """Syntax error, carrying line/column information."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{message} (line {line}, column {column})" if line else message)
        self.line = line
        self.column = column


class ValidationError(BeliefBoxError):
    """Scenario is syntactically fine but semantically invalid."""
