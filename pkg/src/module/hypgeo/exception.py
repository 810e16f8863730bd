class GeometryError(ValueError):
    pass


class OutsideDiskError(GeometryError):

    def __init__(self, modulus: float):
        super().__init__(f"Point with modulus {modulus!r} is not inside the open unit disk.")


class InvalidGeodesicError(GeometryError):

    def __init__(self, message: str):
        super().__init__(message)


class InvalidRadiusError(GeometryError):

    def __init__(self, rho: float):
        super().__init__(f"Pseudo-hyperbolic radius must lie in (0, 1), got {rho!r}.")
