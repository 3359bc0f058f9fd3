# Exception Classes
#
# Three families map onto CLI exit codes: InputError (2), PreconditionError (3),
# VerificationError (4). InternalInconsistencyError (1) means a bound that must
# hold by theory did not, i.e. a bug in an engine.


class FsrError(Exception):
    """Base class for every error raised by the fsr package."""


class InputError(FsrError):
    """Malformed or inconsistent user input."""


class AmbientMismatchError(InputError):
    def __init__(self, expected, actual):
        self.expected = expected
        self.actual = actual
        super().__init__(f"Exponent vector has length {actual}, ambient ring has {expected} variables.")


class UnknownVariableError(InputError):
    def __init__(self, token, variables):
        self.token = token
        self.variables = tuple(variables)
        super().__init__(f"Unknown variable '{token}'; ring variables are {', '.join(self.variables)}.")


class MalformedExponentError(InputError):
    def __init__(self, token):
        self.token = token
        super().__init__(f"Malformed exponent '{token}': exponents must be non-negative integers.")


class NotPrimeError(InputError):
    def __init__(self, p):
        self.p = p
        super().__init__(f"Characteristic {p} is not a prime number.")


class RingFileError(InputError):
    def __init__(self, path, reason):
        self.path = path
        self.reason = reason
        super().__init__(f"Cannot read ring '{path}': {reason}")


class ZeroColonError(InputError):
    def __init__(self):
        super().__init__("Colon by the zero ideal is undefined.")


class PreconditionError(FsrError):
    """Well-formed input that violates a mathematical precondition of an operation."""


class NotSquarefreeError(PreconditionError):
    def __init__(self, what, ideal):
        self.what = what
        self.ideal = ideal
        super().__init__(f"{what} must be squarefree, got {ideal}.")


class UnitIdealError(PreconditionError):
    def __init__(self, what):
        self.what = what
        super().__init__(f"{what} must be a proper ideal, got the unit ideal.")


class NotInRadicalError(PreconditionError):
    def __init__(self, a, j):
        self.a = a
        self.j = j
        super().__init__(f"Ideal {a} is not contained in the radical of {j}.")


class NotContainedError(PreconditionError):
    def __init__(self, what, inner, outer):
        self.what = what
        self.inner = inner
        self.outer = outer
        super().__init__(f"{what}: {inner} is not contained in {outer}.")


class NotRadicalError(PreconditionError):
    def __init__(self, j):
        self.j = j
        super().__init__(
            f"Cartier thresholds need a radical (squarefree) ideal, got {j}; "
            "use 'cartier contraction' for a general monomial ideal at a fixed level."
        )


class InfeasibleSelectionError(PreconditionError):
    def __init__(self):
        super().__init__("Every coordinate selection gives an unbounded program: a is not inside the radical of J.")


class BudgetExceededError(PreconditionError):
    def __init__(self, field, value, limit):
        self.field = field
        self.value = value
        self.limit = limit
        super().__init__(f"Oracle refused: {field} = {value} exceeds the budget limit {limit}.")


class VerificationError(FsrError):
    def __init__(self, command, engine_value, oracle_value):
        self.command = command
        self.engine_value = engine_value
        self.oracle_value = oracle_value
        super().__init__(f"Verification failed for '{command}': engine gave {engine_value}, oracle gave {oracle_value}.")


class InternalInconsistencyError(FsrError):
    def __init__(self, check, detail):
        self.check = check
        self.detail = detail
        super().__init__(f"Internal inconsistency in {check}: {detail}")
