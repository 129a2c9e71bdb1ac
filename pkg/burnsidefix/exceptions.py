"""
exceptions.py
=============

Error types raised by ``burnsidefix``.

All errors derive from :class:`BurnsideFixError`, itself a ``ValueError``, so
code that already guards calls with ``except ValueError`` keeps working. The
two branches separate *bad input* from *valid input that violates a
mathematical precondition*; the command-line front end maps them to exit
statuses 2 and 3 respectively.
"""


class BurnsideFixError(ValueError):
    """Base class for every error raised by the library."""


class InputError(BurnsideFixError):
    """Malformed or inconsistent input data."""


class GroupOrderError(InputError):
    """The generated group exceeds the configured order cap."""


class SubgroupMismatchError(InputError):
    """A value lives over a different group than the operation expects."""


class InconsistentImagesError(InputError):
    """Generator images do not define a group homomorphism."""


class SingularImageError(InputError):
    """A representation matrix is not invertible."""


class SceneError(InputError):
    """
    A scene document failed validation.

    :param message: Human readable description of the problem.
    :param field: Dotted path of the offending field, e.g.
        ``representations.sign.generators[0]``.
    """

    def __init__(self, message, field=None):
        self.field = field
        if field:
            message = f"{field}: {message}"
        super().__init__(message)


class PreconditionError(BurnsideFixError):
    """Well-formed input that violates a mathematical precondition."""


class NotInImageError(PreconditionError):
    """A mark vector does not come from an element of the Burnside ring."""


class SingularMapError(PreconditionError):
    """A linear map whose degree is requested is not invertible."""


class ChainMapViolation(PreconditionError):
    """Chain data fails the boundary or chain-map identities."""
