class DomainError(ValueError):
    pass


class InvalidDomainSpecError(DomainError):

    def __init__(self, message: str):
        super().__init__(message)


class InvalidPitchError(DomainError):

    def __init__(self, pitch: float):
        super().__init__(f"Grid pitch must be positive and finite, got {pitch!r}.")


class TooFewNodesError(DomainError):

    def __init__(self, count: int, minimum: int, pitch: float):
        super().__init__(
            f"Too few nodes: {count} inside the domain at pitch {pitch!r}, at least {minimum} required."
        )
        self.count = count


class EmptyMaskError(DomainError):

    def __init__(self):
        super().__init__("A domain mask must have at least one node inside.")


class UnpairedGridError(DomainError):

    def __init__(self, message: str = "Grid is not paired with the given polarizer."):
        super().__init__(message)


class GridMismatchError(DomainError):

    def __init__(self):
        super().__init__("Operands live on different grids.")


class NonFiniteFieldError(DomainError):

    def __init__(self):
        super().__init__("Scalar field values must be finite.")
