"""Shared exception types.

Every error carries a short machine-readable ``code`` slug so the CLI and the
HTTP service can map failures uniformly (usage errors vs. computation errors).
"""


class CurveLabError(Exception):
    code = "error"

    def __init__(self, message, location=None):
        super().__init__(message)
        self.message = message
        self.location = location


class InputError(CurveLabError):
    """Bad user input: syntax errors, unknown names, malformed requests."""

    code = "input-error"


class ComputationError(CurveLabError):
    """The computation itself failed or degenerated."""

    code = "computation-error"


class MissingVariableError(InputError):
    code = "missing-variable"

    def __init__(self, name):
        super().__init__(f"no value bound for variable '{name}'")
        self.name = name


class DeadlineExceeded(ComputationError):
    code = "deadline-exceeded"


class DegenerateConstruction(ComputationError):
    code = "degenerate-construction"


class TrivialResult(ComputationError):
    code = "trivial-result"
