"""Exception types shared by all modules."""


class InnzeroError(Exception):
    pass


class WitnessError(InnzeroError):
    """An error carrying the offending tuple."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAssociative(WitnessError):
    pass


class NoIdentity(WitnessError):
    pass


class NoInverse(WitnessError):
    pass


class NotHomomorphism(WitnessError):
    pass


class NotAction(WitnessError):
    pass


class ActionInvalid(WitnessError):
    pass


class NotComposable(WitnessError):
    pass


class SquareInvalid(WitnessError):
    pass


class CocycleInvalid(WitnessError):
    pass


class BudgetExceeded(InnzeroError):
    def __init__(self, needed, budget):
        super().__init__(f"enumeration needs {needed} cells, budget is {budget}")
        self.needed = needed
        self.budget = budget


class DepthExhausted(InnzeroError):
    pass


class ParseError(InnzeroError):
    def __init__(self, message, line=None, source=None):
        where = f"{source or '<input>'}:{line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.source = source


class CheckFailed(InnzeroError):
    def __init__(self, report):
        names = ", ".join(c.name for c in report.failures())
        super().__init__(f"failed checks: {names}")
        self.report = report
