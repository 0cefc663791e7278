"""Exception hierarchy for beliefkit.

Every error raised by the library derives from :class:`BeliefError`, so
callers can catch one base class at API boundaries (the CLI does exactly
that to map failures onto exit codes).
"""


class BeliefError(Exception):
    """Base class for all beliefkit errors."""


# --- frame / mass construction -------------------------------------------

class EmptyFrame(BeliefError):
    """A frame needs at least one element."""


class DuplicateLabel(BeliefError):
    """Frame labels must be distinct."""


class FrameTooLarge(BeliefError):
    """Frame exceeds the hard cap (masks must fit a machine word)."""


class UnknownLabel(BeliefError):
    """A set expression referenced a label outside the frame."""


class FrameMismatch(BeliefError):
    """Operands are defined on different frames."""


class NegativeMass(BeliefError):
    """A mass value was negative beyond tolerance."""


class MassSumInvalid(BeliefError):
    """Masses do not sum to 1 within tolerance."""


# --- evidence --------------------------------------------------------------

class TotalConflict(BeliefError):
    """m(empty set) = 1; the pignistic normalization is singular."""


# --- dense transforms -------------------------------------------------------

class FrameTooLargeForDense(BeliefError):
    """Dense 2^n vectors are capped to keep memory desk-scale."""


class KindMismatch(BeliefError):
    """Dense vector has the wrong kind tag for this transform."""


# --- combination -------------------------------------------------------------

class EmptyInput(BeliefError):
    """An n-ary operation received no operands."""


# --- linear reductions --------------------------------------------------------

class EmptySetFocal(BeliefError):
    """The operation requires m(empty set) = 0."""


class NotSorted(BeliefError):
    """Input vector must be sorted in descending order."""


class DuplicateCandidate(BeliefError):
    """Candidate focal elements must be distinct."""


class ArityMismatch(BeliefError):
    """A square system needs as many constraints as candidates."""


class SingularSystem(BeliefError):
    """The constraint matrix is rank-deficient within tolerance."""


class NegativeMassSolution(BeliefError):
    """The linear solve produced negative masses; nothing is clamped.

    Carries the signed solution vector and the candidate masks so callers
    can inspect which candidate went negative.
    """

    def __init__(self, message, solution, candidates):
        super().__init__(message)
        self.solution = list(solution)
        self.candidates = list(candidates)


# --- k-means ---------------------------------------------------------------

class InvalidK(BeliefError):
    """k must satisfy 1 <= k <= |m|."""


class EmptyCluster(BeliefError):
    """A cluster center cannot be computed from zero members."""


# --- oracle ----------------------------------------------------------------

class FrameTooLargeForOracle(BeliefError):
    """Brute-force powerset oracles are capped to stay test-scale."""


# --- I/O -------------------------------------------------------------------

class ParseError(BeliefError):
    """A bba document could not be parsed."""
