"""Exception hierarchy.

Two families matter to callers (and to the CLI's exit codes):
:class:`MathNegative` means the mathematics says no (no Möbius inversion,
no weighting, ...), :class:`InputError` means the input itself is broken.
"""

from __future__ import annotations


class EulerCatError(Exception):
    """Base class. ``reason`` is a stable machine-readable code."""

    reason = "ERROR"


class InputError(EulerCatError):
    reason = "INPUT_ERROR"


class MathNegative(EulerCatError):
    reason = "NEGATIVE"


class InvalidCategory(InputError):
    reason = "INVALID_CATEGORY"

    def __init__(self, violations):
        self.violations = list(violations)
        lines = [str(v) for v in self.violations[:20]]
        more = len(self.violations) - len(lines)
        if more > 0:
            lines.append(f"... and {more} more")
        super().__init__("category laws violated:\n  " + "\n  ".join(lines))


class NotFunctorial(InputError):
    reason = "NOT_FUNCTORIAL"

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class ParseError(InputError):
    reason = "PARSE_ERROR"

    def __init__(self, message, source="<input>", line=None):
        self.source = source
        self.line = line
        where = source if line is None else f"{source}:{line}"
        super().__init__(f"{where}: {message}")


class UnknownName(InputError):
    reason = "UNKNOWN_NAME"


class ParamOutOfRange(InputError):
    reason = "PARAM_OUT_OF_RANGE"


class SizeOverflow(InputError):
    reason = "SIZE_OVERFLOW"


class CyclicGraph(InputError):
    reason = "CYCLIC_GRAPH"

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__(f"graph has a directed cycle: {self.cycle}")


class SubcategoryNotClosed(InputError):
    reason = "SUBCATEGORY_NOT_CLOSED"


class PreconditionFailed(InputError):
    reason = "PRECONDITION_FAILED"

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class DomainNotCauchyComplete(PreconditionFailed):
    reason = "NOT_CAUCHY_COMPLETE"


class Singular(MathNegative):
    reason = "SINGULAR"

    def __init__(self, rank, size):
        self.rank = rank
        self.size = size
        super().__init__(f"matrix is singular (rank {rank} < {size})")


class NoMobiusInversion(MathNegative):
    reason = "NO_MOBIUS_INVERSION"

    def __init__(self, rank, size):
        self.rank = rank
        self.size = size
        super().__init__(f"zeta is singular (rank {rank} of {size}); no Möbius inversion")


class NoWeighting(MathNegative):
    reason = "NO_WEIGHTING"


class NoCoweighting(MathNegative):
    reason = "NO_COWEIGHTING"


class NotInvertible(MathNegative):
    reason = "NOT_INVERTIBLE"


class NotAFactorizationSystem(MathNegative):
    reason = "NOT_A_FACTORIZATION_SYSTEM"


class NotAnEquivalence(MathNegative):
    reason = "NOT_AN_EQUIVALENCE"


class NotAdjoint(MathNegative):
    reason = "NOT_ADJOINT"

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotFR(MathNegative):
    """The functor is not familially representable."""

    reason = "NOT_FAMILIALLY_REPRESENTABLE"

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class UndefinedChi(MathNegative):
    reason = "UNDEFINED_CHI"


class InvariantViolation(AssertionError):
    """A proved identity failed on a concrete instance. Always a bug."""
