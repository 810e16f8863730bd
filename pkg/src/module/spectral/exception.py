class SpectralError(ValueError):
    pass


class NonFiniteOperatorError(SpectralError):

    def __init__(self):
        super().__init__("Operator matrix has non-finite entries.")


class InvalidOracleError(SpectralError):

    def __init__(self, message: str):
        super().__init__(message)
