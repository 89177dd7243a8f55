"""
Exception hierarchy shared by the exact and numeric layers.
"""


class ZetaRelationsError(Exception):
    """Base class for all errors raised by zeta_relations"""


class SeriesNotInvertibleError(ZetaRelationsError, ValueError):
    def __init__(self, detail: str = ""):
        message = "series not invertible"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class SeriesUndefinedError(ZetaRelationsError, ValueError):
    def __init__(self, detail: str = ""):
        message = "series undefined"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class PoleProximityError(ZetaRelationsError, ValueError):
    def __init__(self, detail: str = ""):
        message = "argument near pole"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class KernelDimensionError(ZetaRelationsError, RuntimeError):
    """Internal-consistency failure: a kernel has the wrong dimension"""


class VerificationError(ZetaRelationsError, RuntimeError):
    """An exact re-check (A·v = 0, zero pattern, dual path) failed"""
