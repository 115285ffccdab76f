"""Failure signals.

Two families: *falsification* errors mean a mathematical claim checked by the
pipeline came out false (these fail a run with exit code 1), and *internal*
errors mean an oracle or bookkeeping cross-check caught an inconsistency that
can only be a bug or an incomplete search (exit code 2).
"""


class SpiegelError(Exception):
    """Base class for all package errors."""


class FalsificationError(SpiegelError):
    """A verified mathematical statement failed; the run must fail loudly."""


class InternalCheckError(SpiegelError):
    """A dual-route oracle or bookkeeping invariant disagreed (bug signal)."""


class EisensteinFailure(InternalCheckError):
    """Torsion polynomial lost the Eisenstein divisibility pattern."""


class SizeBound(SpiegelError):
    """q^d - 1 exceeds the configured tower size limit."""


class DegenerateTower(SpiegelError):
    """q = 2, d = 1 gives a trivial Galois group; explicitly unsupported."""


class NotInvertible(SpiegelError):
    """Galois element requested for a divisible by the prime."""


class NotAUnit(SpiegelError):
    """dlog requested for a non-unit of R."""


class NotIntegral(InternalCheckError):
    """A differential expected to lie in Omega_R does not."""


class NotIntegralAfterClear(InternalCheckError):
    """Denominator clearing in the Cartier closed formula failed."""


class PoleAtQ(InternalCheckError):
    """Local reduction hit a pole at the ramified prime."""


class TruncationTooShort(SpiegelError):
    """Local Cartier needs truncation at least q."""


class FiltrationMismatch(FalsificationError):
    """Graded piece of the local filtration has the wrong generator/character."""


class TheoremViolation(FalsificationError):
    """A verdict of the reflection theorem (or the final remark) is false."""


class OracleMismatch(InternalCheckError):
    """Class-group relation lattice disagrees with the zeta point-count oracle."""


class WitnessNotFound(InternalCheckError):
    """No principalization witness within the search bound."""


class RankDeficit(InternalCheckError):
    """Saturated unit basis has rank below the Dirichlet prediction."""


class DimensionMismatch(InternalCheckError):
    """Kummer-sequence dimension bookkeeping failed."""
