"""Exception hierarchy for aqtab.

Input problems subclass ValueError so callers that only know stdlib idioms
can still catch them; everything derives from AqtabError.
"""


class AqtabError(Exception):
    """Base class for all aqtab errors."""


class InputError(AqtabError, ValueError):
    """Invalid user-supplied data."""


class EmptyDatumError(InputError):
    """A parabolic datum must contain at least one (p, q) pair."""


class ZeroPairError(InputError):
    """(0, 0) pairs are excluded from parabolic data."""


class LengthMismatchError(InputError):
    """Lambda parameter length differs from the number of pairs."""


class BlockOutOfRangeError(AqtabError, IndexError):
    """Adjacent-block index outside 1..r-1."""


class MissingEntriesError(AqtabError):
    """Operation needs a tableau with entries."""


class MissingSignsError(AqtabError):
    """Operation needs a tableau with signs."""


class NotInNiceRangeError(AqtabError):
    """Operation is only defined for lambda in the nice range."""


class NotInMediocreRangeError(AqtabError):
    """Operation is only defined for lambda in the mediocre range."""


class PreconditionError(AqtabError):
    """A documented operation precondition does not hold."""


class ModuleVanishesError(AqtabError):
    """The module is zero, so the requested verdict does not apply."""


class InternalContradictionError(AqtabError):
    """A result the theory guarantees failed to materialise; implementation bug."""
