"""Exception types shared across the package."""


class FanError(Exception):
    """Base class for every error this package raises on purpose."""


class MalformedInput(FanError):
    """Input data (JSON, CLI arguments) does not match the expected schema."""


class InvalidParameters(FanError):
    """Constructor parameters violate their documented constraints."""


class NonUnimodularCone(FanError):
    """A cone's rays are not part of a basis of the integer lattice."""


class NotPointed(FanError):
    """A constraint system describes a cone containing a line."""


class NotPure(FanError):
    """An operation requires all maximal cones to be full-dimensional."""


class NotAFace(FanError):
    """The given ray set is not a face of the fan."""


class TooSmall(FanError):
    """Star subdivision needs a face with at least two rays."""


class RayCollision(FanError):
    """A newly created ray coincides with an existing one."""


class TorsionDetected(FanError):
    """The divisor class group is not free; the input cannot be smooth and complete."""


class NotSmoothProper(FanError):
    """Homotopy analysis requires a validated smooth complete fan."""
