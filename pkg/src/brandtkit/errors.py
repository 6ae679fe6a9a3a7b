"""Exception hierarchy shared by all brandtkit modules."""


class Error(Exception):
    """Base class for every brandtkit error."""


# -- table validation ---------------------------------------------------

class EntryOutOfRange(Error):
    pass


class NonAssociative(Error):
    def __init__(self, a, b, c):
        self.witness = (a, b, c)
        super().__init__(f"(a*b)*c != a*(b*c) for a={a}, b={b}, c={c}")


class ZeroNotAbsorbing(Error):
    pass


class NotAnIdeal(Error):
    pass


class IncompatiblePartition(Error):
    pass


class NotAGroup(Error):
    pass


class NotAHomomorphism(Error):
    pass


class NotClosed(Error):
    pass


class TableFormatError(Error):
    pass


# -- constructions ------------------------------------------------------

class InvalidOrder(Error):
    pass


class IndexTooSmall(Error):
    pass


class GroupTooLarge(Error):
    pass


class GroupTooSmall(Error):
    pass


class BadSubset(Error):
    pass


class BuildSpecError(Error):
    """Raised for an unparsable builtin-semigroup name."""


# -- words and identity checking ----------------------------------------

class ParseError(Error):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ZeroPower(ParseError):
    pass


class UnassignedVariable(Error):
    pass


class BudgetExceeded(Error):
    def __init__(self, required, budget):
        self.required = required
        self.budget = budget
        super().__init__(f"check needs {required} evaluations, budget is {budget}")


class HypothesisViolated(Error):
    pass


class NoValidSplit(Error):
    def __init__(self, message, counterexample=None):
        self.counterexample = counterexample
        super().__init__(message)


# -- rewriting ----------------------------------------------------------

class NotRepeated(Error):
    pass


class HasSingleOccurrence(Error):
    pass


class EmptyStar(Error):
    pass


class NoMatch(Error):
    pass


# -- separation and classification --------------------------------------

class NotRegular(Error):
    pass


class NotDistinct(Error):
    pass


class HypothesisFails(Error):
    def __init__(self, message, counterexample=None):
        self.counterexample = counterexample
        super().__init__(message)
