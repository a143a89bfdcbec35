"""Exception hierarchy.

``InputError`` subclasses mean the caller handed us something unusable;
``ContractViolation`` subclasses mean an internal consistency check failed.
The CLI maps the first family to exit code 1 and the second to exit code 2.
"""


class UpsilonLabError(Exception):
    pass


class InputError(UpsilonLabError, ValueError):
    pass


class ContractViolation(UpsilonLabError, RuntimeError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidParameter(InputError):
    pass


# algebraic module uses the plural spelling for (p, q) checks
InvalidParameters = InvalidParameter


class NotAKnot(InputError):
    pass


class NotPositive(InputError):
    pass


class NotLSpaceForm(InputError):
    pass


class DomainError(InputError):
    pass


class InexactDivision(ContractViolation):
    pass


class NormalizationFailure(ContractViolation):
    pass


class MalformedStaircase(ContractViolation):
    pass


class NoSignChangeFound(ContractViolation):
    pass
