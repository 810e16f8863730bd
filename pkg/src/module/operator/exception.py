class OperatorError(ValueError):
    pass


class SingularKernelError(OperatorError):

    def __init__(self):
        super().__init__("Kernel is singular at z = w; use the diagonal value for self terms.")


class InvalidWeightError(OperatorError):

    def __init__(self, weight):
        super().__init__(f"Cell weight must be positive, got {weight!r}.")


class InvalidDumpError(OperatorError):

    def __init__(self, path: str, reason: str):
        super().__init__(f"Operator dump '{path}' is invalid: {reason}")
