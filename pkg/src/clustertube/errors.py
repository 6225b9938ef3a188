"""Exception types shared across the package."""


class RankMismatchError(ValueError):
    """Two objects from tubes of different rank were combined."""


class StructuralError(ValueError):
    """A value violates the structural invariants of its type."""


class TheoremViolationError(RuntimeError):
    """A computation falsified a claim the whole construction relies on.

    Raised, for example, when an almost complete object does not have
    exactly two completions, or when B-matrix propagation over the
    exchange graph is not path independent.  Seeing this exception means
    either the implementation or the underlying mathematics is wrong.
    """
