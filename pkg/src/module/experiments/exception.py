class ExperimentError(ValueError):
    pass


class InvalidRadiiError(ExperimentError):

    def __init__(self, message: str):
        super().__init__(message)


class InvalidRepresentationRadiusError(ExperimentError):

    def __init__(self, r: float, bound: float):
        super().__init__(f"Representation radius must lie in (0, {bound!r}), got {r!r}.")


class FieldSupportError(ExperimentError):

    def __init__(self):
        super().__init__("Field must vanish outside the domain.")
