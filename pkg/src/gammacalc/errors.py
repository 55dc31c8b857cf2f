"""Exception hierarchy for gammacalc.

Every failure mode that callers are expected to catch gets its own class so
that the CLI can map them onto exit codes without string matching.
"""


class GammaCalcError(Exception):
    """Base class for all gammacalc errors."""


class DegreeMismatch(GammaCalcError):
    """Objects or maps fed to an operation live at incompatible degrees/sizes."""


class SubsetNotInvariant(GammaCalcError):
    """A subset handed to a group-action routine is not closed under the action."""


class SubobjectNotClosed(GammaCalcError):
    """Levelwise subset is not stable under the structure maps."""


class NotCofibrant(GammaCalcError):
    """Freeness of the symmetric-group action fails off the latching part."""


class NotGenerated(GammaCalcError):
    """An element cannot be expressed within the configured degree bound."""


class BinaturalityViolation(GammaCalcError):
    """A family of components fails the two-sided naturality requirement."""


class TheoryInvalid(GammaCalcError):
    """Unit/multiplication data fails a monad-style law at some checked level."""


class AlgebraInvalid(GammaCalcError):
    """A proposed structure map fails the unit or associativity condition."""


class NotReflexive(GammaCalcError):
    """A parallel pair handed to a reflexive-coequalizer routine has no common section."""


class StructureNotInduced(GammaCalcError):
    """A quotient does not inherit a well-defined structure map."""


class SizeGuardExceeded(GammaCalcError):
    """A requested enumeration is larger than the configured element budget."""
