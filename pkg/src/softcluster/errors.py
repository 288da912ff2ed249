"""Exception hierarchy shared by every layer of the package."""


class SoftError(Exception):
    """Base class for all errors raised by softcluster."""


class InputError(SoftError):
    """Bad user input: unknown label, malformed literal, bad file."""


class CarrierMismatch(SoftError):
    """Operands live on different carriers."""


class PreconditionError(SoftError):
    """An operation was called outside its documented precondition."""


class ResourceError(SoftError):
    """A configured size cap would be exceeded."""
