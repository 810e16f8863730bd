import click


class EnumParam(click.ParamType):
    def __init__(self, enum_cls):
        self.enum_cls = enum_cls
        self.name = enum_cls.__name__

    def convert(self, value, param, ctx):
        if isinstance(value, self.enum_cls):
            return value
        try:
            return self.enum_cls(value.lower())
        except ValueError:
            choices = "|".join(member.value for member in self.enum_cls)
            self.fail(f"Invalid value: {value} (expected {choices})", param, ctx)
