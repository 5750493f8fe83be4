"""Exception hierarchy.

Errors fall into three bands: usage/input problems, structural preconditions
that callers can check for themselves, and "violation" signals that are never
expected to fire (they would mean an internal inconsistency in a verified
mathematical statement, and the CLI turns them into exit code 3).
"""


class HeckecongError(Exception):
    """Base class for all package errors."""


# --- input / usage -------------------------------------------------------

class ParseError(HeckecongError):
    """Malformed eigenform file or report document."""


class SchemaError(HeckecongError):
    """Fetched document does not match the expected schema."""


class FetchError(HeckecongError):
    """Remote or fixture lookup failed."""


class WeightUnsupported(HeckecongError):
    """Weight outside the supported level-1 range (even, >= 12)."""


# --- structural preconditions -------------------------------------------

class ZeroPolynomial(HeckecongError):
    """Operation undefined for the zero polynomial."""


class NotIrreducible(HeckecongError):
    """Defining polynomial of a field must be irreducible."""


class NotAlgebraicInteger(HeckecongError):
    """Order generator has a non-integral minimal polynomial."""


class RankDeficient(HeckecongError):
    """Lattice does not have full rank in its field."""


class NotSublattice(HeckecongError):
    """Claimed sublattice is not contained in the larger lattice."""


class NotMaximalOrder(HeckecongError):
    """Operation requires the maximal order."""


class NotSemisimple(HeckecongError):
    """Algebra has a nonzero nilradical."""


class DegreeBoundExceeded(HeckecongError):
    """Field or closure degree above the configured cap."""


class InsufficientPrecision(HeckecongError):
    """Not enough q-expansion coefficients for the requested operation."""


class GeneratorFailure(HeckecongError):
    """No single Hecke operator combination generates the algebra."""


class EmbeddingFailure(HeckecongError):
    """Coefficient field does not embed into the target order's field."""


class HypothesisUnmet(HeckecongError):
    """Witness requested at a prime where the theorem hypothesis fails."""


class NotGalois(HeckecongError):
    """The iff-verification only applies to Galois coefficient fields."""


class StabilizationFailure(HeckecongError):
    """Multiplicative-closure iteration did not stabilize (guards bugs)."""


# --- violation signals (test failures, never expected) -------------------

class ViolationError(HeckecongError):
    """A verified mathematical statement failed to check out."""


class PropositionViolated(ViolationError):
    """Congruence held but neither disjunct of the dichotomy did."""


class WitnessVerificationFailed(ViolationError):
    """Constructed witness did not re-verify."""


class CorollaryViolated(ViolationError):
    """The Galois iff-statement produced mismatched prime sets."""
