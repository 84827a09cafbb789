"""Python bindings for the gpic error-composition and T-count library."""

from ._gpic import *  # noqa: F401,F403
from ._gpic import (  # noqa: F401
    ConvergenceError,
    InfeasibleBudgetError,
    TreeError,
)

__version__ = "0.1.0"
