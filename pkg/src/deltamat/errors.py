"""Exception types shared across the package."""


class DeltaMatroidError(Exception):
    """Base class for domain errors raised by this package."""


class EmptyFamilyError(DeltaMatroidError):
    """An operation requiring a nonempty family was given an empty one."""


class AxiomError(DeltaMatroidError):
    """A family failed an exchange axiom it was required to satisfy."""


class NotBinaryError(DeltaMatroidError):
    """A binary representation was required but none exists."""


class ReductionError(DeltaMatroidError):
    """No handle-slide sequence to the requested form was found."""
