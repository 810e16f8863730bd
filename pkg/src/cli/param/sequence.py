import click


class SequenceParam(click.ParamType):
    """Comma separated values, e.g. ``128,256,512``."""

    def __init__(self, item_type: type):
        self.item_type = item_type
        self.name = f"{item_type.__name__}s"

    def convert(self, value, param, ctx):
        if isinstance(value, (list, tuple)):
            return list(value)
        try:
            return [self.item_type(part) for part in value.split(",") if part.strip()]
        except ValueError:
            self.fail(f"Invalid {self.item_type.__name__} list: {value}", param, ctx)


class ComplexParam(click.ParamType):
    """A point as ``0.5``, ``0.8j`` or ``0.1+0.2j``."""

    name = "complex"

    def convert(self, value, param, ctx):
        if isinstance(value, complex):
            return value
        try:
            return complex(value.replace(" ", ""))
        except ValueError:
            self.fail(f"Invalid complex number: {value}", param, ctx)
