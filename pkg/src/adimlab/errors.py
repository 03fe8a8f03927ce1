"""Exception hierarchy shared by all adimlab modules."""


class AdimlabError(Exception):
    """Base class for all library errors."""


class OutOfRange(AdimlabError):
    """A vertex index lies outside 0..n-1."""


class SelfLoop(AdimlabError):
    """An edge (i, i) was supplied; simple graphs have no loops."""


class BadParameter(AdimlabError):
    """A structural parameter is outside its legal range."""


class MalformedHeader(AdimlabError):
    """A graph6 record starts with an invalid or inconsistent header."""


class TruncatedPayload(AdimlabError):
    """A graph6 record is shorter than its header promises."""


class NonCanonicalPadding(AdimlabError):
    """A graph6 record has non-zero padding bits."""


class SamePair(AdimlabError):
    """A pair operation was called with x == y."""


class TooSmall(AdimlabError):
    """The graph has too few vertices for the requested invariant."""


class KTooLarge(AdimlabError):
    """k exceeds the largest pair-set size relevant to the operation."""


class KExceedsDimensionality(AdimlabError):
    """No k-generator exists because k is above the dimensionality bound."""


class Disconnected(AdimlabError):
    """The operation requires a connected graph."""


class CapExceeded(AdimlabError):
    """Brute-force search exhausted its subset-size cap without an answer."""


class BudgetExhausted(AdimlabError):
    """The solver hit its node budget before proving optimality."""


class BasisCountExceeded(AdimlabError):
    """Basis enumeration aborted because the configured cap was reached."""


class NotATree(AdimlabError):
    """The operation requires a tree."""


class OutOfProvenRange(AdimlabError):
    """A closed formula was queried outside the range it is proven for."""


class LimitRequired(AdimlabError):
    """Family enumeration would be astronomically large; pass a limit."""


class TooLarge(AdimlabError):
    """Exhaustive enumeration was requested above the supported order."""


class UnknownTheorem(AdimlabError):
    """sweep_theorem was called with an unrecognised theorem id."""
