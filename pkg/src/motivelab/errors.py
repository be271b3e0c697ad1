"""Exception hierarchy shared across the package."""

from __future__ import annotations


class MotiveLabError(Exception):
    """Base class for all errors raised by motivelab."""


# -- group construction ------------------------------------------------------

class NonAssociative(MotiveLabError):
    """A Cayley table failed the associativity check."""


class NoIdentity(MotiveLabError):
    """A Cayley table has no two-sided identity."""


class NotClosed(MotiveLabError):
    """A Cayley table contains entries outside the element range."""


class OrderBound(MotiveLabError):
    """A constructed group exceeds the supported order bound."""


class NotASubgroup(MotiveLabError):
    """A member set is not closed or misses the identity/inverses."""


# -- exact linear algebra ----------------------------------------------------

class SizeBound(MotiveLabError):
    """A matrix or search space exceeds the configured guard."""


class DivisionByZero(MotiveLabError, ZeroDivisionError):
    """Inversion of zero in an exact arithmetic domain."""


class Unsolvable(MotiveLabError):
    """A linear system over Z/n has no solution."""


# -- cocycles and cohomology -------------------------------------------------

class NotACocycle(MotiveLabError):
    """A table violates normalization or the cocycle identity."""


class GroupMismatch(MotiveLabError):
    """Operands are attached to different groups."""


class ModulusMismatch(MotiveLabError):
    """Operands carry incompatible root-of-unity moduli."""


# -- character tables --------------------------------------------------------

class PrimeSearchFailed(MotiveLabError):
    """No suitable prime found for the modular character algorithm."""


class NonIntegralDecomposition(MotiveLabError):
    """An inner-product decomposition produced non-integer multiplicities."""


class NonIntegralCharacter(MotiveLabError):
    """Class-function data does not decompose integrally over irreducibles."""


# -- twisted algebras (numeric path) ----------------------------------------

class ClusterAmbiguity(MotiveLabError):
    """Eigenvalue gaps fall inside the ambiguous (tol, 10*tol) band."""


class NonSquareCluster(MotiveLabError):
    """An eigenvalue cluster size is not a perfect square."""


# -- motive skeletons --------------------------------------------------------

class StabilizerIndexMismatch(MotiveLabError):
    """A block length disagrees with the index of its stabilizer."""


class NonTrivialStabilizerH2(MotiveLabError):
    """A proper stabilizer has nontrivial second cohomology."""


class UnsupportedAtom(MotiveLabError):
    """An operation does not apply to this atom variant."""


class UnsupportedTensor(MotiveLabError):
    """A product of atoms falls outside the supported tensor rules."""


# -- catalog -----------------------------------------------------------------

class UnknownEntry(MotiveLabError):
    """Unknown catalog entry name."""


class ParamRange(MotiveLabError):
    """Catalog entry parameters out of the supported range."""


class InconsistentAction(MotiveLabError):
    """An action description does not fit the entry's block structure."""


class OddCohomology(MotiveLabError):
    """Odd Betti numbers are nonzero; no invariant collection can exist."""


class LengthMismatch(MotiveLabError):
    """Collection length disagrees with the total Betti number."""


# -- measures ----------------------------------------------------------------

class UnsupportedInvariant(MotiveLabError):
    """Unknown invariant name passed to skeleton evaluation."""


class ClassCountMismatch(MotiveLabError):
    """Per-class data has the wrong number of entries."""
