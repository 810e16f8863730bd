from enum import Enum


class DiskOp(str, Enum):
    """How a disk term combines with the set accumulated so far."""

    UNION = "union"
    SUBTRACT = "subtract"
