"""Exception types shared across the library."""


class JordanTypesError(Exception):
    """Base class for all library errors."""


class WeightMismatchError(JordanTypesError):
    """Two partitions that must partition the same integer do not."""


class EmptyPartitionError(JordanTypesError):
    """An operation requires a nonempty partition."""


class InvalidArgumentError(JordanTypesError):
    """Arguments violate a documented precondition."""


class NotNilpotentError(JordanTypesError):
    """A matrix expected to be nilpotent is not."""


class ExpressionSyntaxError(JordanTypesError):
    """Malformed polynomial expression; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariableError(JordanTypesError):
    """Expression uses a name not declared in the ring."""


class NotHomogeneousError(JordanTypesError):
    """A graded construction received a non-homogeneous input."""


class NotArtinianError(JordanTypesError):
    """Quotient dimension exceeded the configured cap without terminating."""


class NonUnitConstantError(JordanTypesError):
    """An ideal generator has a constant term, so the quotient would not
    have the residue field in degree zero."""


class NotInMaximalIdealError(JordanTypesError):
    """Multiplication element has a nonzero constant term."""


class EmptySubspaceError(JordanTypesError):
    """Sampling was requested from a zero subspace."""


class IncomparableSamplesError(JordanTypesError):
    """Sampled Jordan types form an antichain with no dominance maximum."""

    def __init__(self, antichain):
        self.antichain = list(antichain)
        super().__init__(
            "no dominance maximum among sampled types: "
            + ", ".join(str(p) for p in self.antichain)
        )


class StabilityViolationError(JordanTypesError):
    """Internal check failed: a generic commuting type violated a theorem
    that holds in the admissible characteristic range.  Indicates a bug."""


class TooLargeError(JordanTypesError):
    """Exhaustive search space exceeds the configured budget."""


class InternalInconsistencyError(JordanTypesError):
    """Two routes that must agree disagreed.  Always a library bug, never a
    mathematical fact; please report it."""
