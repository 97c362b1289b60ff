"""Exception types raised by coxlat."""


class CoxlatError(Exception):
    pass


class DiagramError(CoxlatError):
    """A Coxeter matrix that is malformed or not of finite type."""


class UnsupportedRingError(CoxlatError):
    pass


class SizeCapExceeded(CoxlatError):
    pass


class LatticeStructureError(CoxlatError):
    """Raised when a meet or join is not unique, or a relation is not a congruence."""


class CodecError(CoxlatError):
    pass


class VerificationError(CoxlatError):
    pass
