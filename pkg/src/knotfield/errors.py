"""Exception hierarchy shared across the package.

Everything that represents a *domain* failure (bad mathematical input,
budget blown, degenerate object) derives from :class:`DomainError` so the
command line layer can map it uniformly to exit code 2.  Plain usage bugs
(wrong types, out-of-contract arguments) stay ordinary ``ValueError``s.
"""


class DomainError(Exception):
    """Base class for all domain-level failures."""


# braid words ---------------------------------------------------------------

class MalformedToken(DomainError):
    """A braid-word token is not a signed integer or ``sK``/``sK^-1`` alias."""


class GeneratorOutOfRange(DomainError):
    """A letter references a generator outside 1..strands-1."""


class StrandMismatch(DomainError):
    """Two braid words on different strand counts were combined."""


# free groups / Artin -------------------------------------------------------

class IndexOutOfRange(DomainError):
    """A generator index does not exist at the given rank."""


class BudgetExceeded(DomainError):
    """A backtracking search ran past its node budget."""


# cluster algebra -----------------------------------------------------------

class DirectionOutOfRange(DomainError):
    """Mutation direction outside 1..rank."""


class NonLaurentResult(DomainError):
    """An exchange step did not divide exactly.

    Reachable only through an arithmetic bug: cluster variables expressed
    in the initial cluster are guaranteed to be Laurent.
    """


class TooSmall(DomainError):
    """Polygon with fewer than 4 vertices has no seed."""


class UnsupportedSurface(DomainError):
    """No explicit exchange matrix is available for this surface."""


# AF-algebra data -----------------------------------------------------------

class DeadVertex(DomainError):
    """Incidence matrix has an all-zero row or column."""


class NotPrimitive(DomainError):
    """No power of the incidence matrix is strictly positive."""


class NoConvergence(DomainError):
    """Power iteration failed to reach the requested tolerance."""


# number fields -------------------------------------------------------------

class PerfectSquare(DomainError):
    """Radicand is a perfect square; the field degenerates to the rationals."""


class TooLargeToFactor(DomainError):
    """Radicand above the 2**63 trial-division guard."""


class NotPrime(DomainError):
    """Splitting was requested at a composite number."""


class FieldMismatch(DomainError):
    """Two ideals over different fields were compared."""


# braid-to-field map --------------------------------------------------------

class WrongStrandCount(DomainError):
    """The monodromy homomorphism is defined on three-strand braids only."""


class NonHyperbolic(DomainError):
    """Monodromy trace has absolute value <= 2; no real quadratic field."""

    def __init__(self, trace: int):
        super().__init__(f"monodromy trace {trace} is not hyperbolic (|trace| <= 2)")
        self.trace = trace
