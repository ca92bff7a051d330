"""Exception types shared across the package."""


class MismatchError(ValueError):
    """An element does not belong to the lattice it is being used with."""


class UniverseTooLarge(RuntimeError):
    """A lattice universe exceeds the cap for exhaustive enumeration."""


class CapExceeded(RuntimeError):
    """Path, cut, chain or antichain enumeration exceeded its configured cap."""


class DistributivityRequired(RuntimeError):
    """An operation that is only sound on distributive lattices was invoked
    on a lattice that is not certified distributive and no override was given."""


class NoBottomError(RuntimeError):
    """An empty join was needed but the lattice has no bottom element."""


class InstanceError(ValueError):
    """An instance or lattice spec file failed to parse or validate."""
