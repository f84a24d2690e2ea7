"""Exception hierarchy.  Everything raised on purpose derives from ``SupercohoError``."""


class SupercohoError(Exception):
    pass


class StructureError(SupercohoError):
    """A structural identity (Jacobi, skew-symmetry, closure, module axiom) failed."""


class NotClosedError(StructureError):
    pass


class UnsupportedShapeError(SupercohoError):
    pass


class NonAbelianizableWeight(SupercohoError):
    pass


class UndeterminedProjectivity(SupercohoError):
    pass


class IncompatiblePairs(SupercohoError):
    pass


class DimensionCapExceeded(SupercohoError):
    pass
