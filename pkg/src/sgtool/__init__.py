"""sgtool: finite semigroup computations, symbolic infinite families, and
weak right noetherian verdicts with machine-checkable witnesses."""

from . import checkers, construct, core, green, kernels, symbolic

__all__ = ["core", "green", "construct", "symbolic", "checkers", "kernels"]
__version__ = "0.1.0"
