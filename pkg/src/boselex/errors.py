"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class BoseLexError(Exception):
    exit_code = 1


class DomainError(BoseLexError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class OracleTooLargeError(BoseLexError):
    pass


class IngestEncodingError(BoseLexError):
    exit_code = 3

    def __init__(self, message, offset=None, source=None):
        super().__init__(message)
        self.offset = offset
        self.source = source


class DataConflictError(BoseLexError):
    exit_code = 4


class MalformedMapError(DataConflictError):
    pass


class MalformedInputError(DataConflictError):
    pass


class PartitionConflictError(DataConflictError):
    def __init__(self, word, first, second):
        super().__init__(
            f"word {word!r} appears in both class {first!r} and class {second!r}"
        )
        self.word = word
        self.classes = (first, second)


class IncompleteAssignmentError(DataConflictError):
    pass


class DivergenceError(DomainError):
    """Occupation requested at or beyond the condensation boundary."""


class InfeasibleError(BoseLexError):
    exit_code = 5

    def __init__(self, message, achievable=None):
        super().__init__(message)
        self.achievable = achievable


class ConvergenceError(BoseLexError):
    exit_code = 6

    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = residuals
