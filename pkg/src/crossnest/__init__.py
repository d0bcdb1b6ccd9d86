"""crossnest: exact enumeration of set partitions by crossings and nestings.

Five mutually checking routes to the same numbers: brute-force diagram
statistics, reflected lattice-walk dynamic programming, kernel-method
series extraction, Lagrange-inversion closed forms, and P-recurrences,
plus recurrence guessing and asymptotic diagnostics.
"""

from .core import (
    BigSeq,
    CapacityError,
    CrossnestError,
    DisagreementError,
    DomainError,
    InconsistentDataError,
    SingularRecurrenceError,
    UnderdeterminedError,
)

__version__ = "0.1.0"

from . import (  # noqa: E402
    asymptotics,
    closedforms,
    kernel,
    matchings,
    partitions,
    recurrences,
    sequences,
    walks,
)

__all__ = [
    "BigSeq",
    "CapacityError",
    "CrossnestError",
    "DisagreementError",
    "DomainError",
    "InconsistentDataError",
    "SingularRecurrenceError",
    "UnderdeterminedError",
    "__version__",
    "asymptotics",
    "closedforms",
    "kernel",
    "matchings",
    "partitions",
    "recurrences",
    "sequences",
    "walks",
]
