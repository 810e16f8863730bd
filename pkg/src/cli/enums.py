from enum import Enum


class RunCommand(str, Enum):
    SPECTRUM = "spectrum"
    POLARIZE = "polarize"
    ORACLE = "oracle"
    FK = "fk"
    RIESZ = "riesz"
    POSITIVITY = "positivity"
    REPRESENTATION = "representation"
    BOUND = "bound"
    DECAY = "decay"
    EIGENFUNCTION = "eigenfunction"
