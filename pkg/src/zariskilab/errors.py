"""Exception types shared across the package."""


class LabError(Exception):
    """Base class for every error raised by zariskilab."""


class InvalidParameter(LabError, ValueError):
    pass


class IncompatibleSignatures(LabError, ValueError):
    pass


class DimensionMismatch(LabError, ValueError):
    pass


class CapExceeded(LabError, RuntimeError):
    pass


class SizeGuardExceeded(LabError, RuntimeError):
    pass


class NotAnEndomorphism(LabError, ValueError):
    pass


class InconsistentParts(LabError, ValueError):
    pass


class CopySplit(LabError, ValueError):
    pass


class PreconditionViolated(LabError, ValueError):
    pass


class WindowTooSmall(LabError, RuntimeError):
    pass
