"""Exception hierarchy for pairrank.

Input/validation problems and numerical failures are kept in separate
branches so callers (CLI, HTTP service) can map them to exit codes and
status codes without string matching.
"""


class PairrankError(Exception):
    """Base class for all pairrank errors."""


class ValidationError(PairrankError):
    """Bad input: malformed matrix, labels, indices, or parse failures."""


class NumericalError(PairrankError):
    """Computation failed on structurally valid input."""


class NonSquare(ValidationError):
    def __init__(self, rows: int, cols) -> None:
        super().__init__(f"matrix must be square, got {rows} rows / {cols} columns")


class NonPositiveEntry(ValidationError):
    def __init__(self, i: int, k: int, value=None) -> None:
        self.i = i
        self.k = k
        detail = "" if value is None else f" (got {value!r})"
        super().__init__(f"entry ({i}, {k}) must be a positive finite number{detail}")


class TooSmall(ValidationError):
    def __init__(self, n: int) -> None:
        super().__init__(f"need at least 2 elements, got {n}")


class TooFewSamples(ValidationError):
    def __init__(self, n: int) -> None:
        super().__init__(f"need at least 2 samples, got {n}")


class NoConvergence(NumericalError):
    def __init__(self, max_iter: int, tol: float) -> None:
        self.max_iter = max_iter
        super().__init__(f"power iteration did not reach tolerance {tol:g} in {max_iter} iterations")


class DegenerateInterval(NumericalError):
    def __init__(self, i: int) -> None:
        self.i = i
        super().__init__(
            f"inverse-value interval for element {i} is degenerate "
            "(squared error exceeds squared mean; cannot convert to normal values)"
        )


class NotApplicable(ValidationError):
    pass


class ParseError(ValidationError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None) -> None:
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f" at line {line}" + (f", column {col}" if col is not None else "")
        super().__init__(message + where)


class BadLabels(ValidationError):
    pass


class BadIndex(ValidationError):
    pass


class SessionNotFound(ValidationError):
    def __init__(self, session_id: str) -> None:
        super().__init__(f"no session with id {session_id!r}")
