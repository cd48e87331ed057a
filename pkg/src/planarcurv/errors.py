"""Exception hierarchy shared by every planarcurv module."""


class PlanarError(Exception):
    """Base class for all errors raised by planarcurv."""


# construction
class AsymmetricAdjacency(PlanarError):
    pass


class UnknownVertex(PlanarError):
    pass


class SelfLoop(PlanarError):
    pass


class MultiEdge(PlanarError):
    pass


class Disconnected(PlanarError):
    pass


class EulerViolation(PlanarError):
    pass


class OuterFaceNotFound(PlanarError):
    pass


class InconsistentFaces(PlanarError):
    """Face cycles cannot be oriented into a closed rotation system."""


# lookup / mode
class UnknownFace(PlanarError):
    pass


class ModeMismatch(PlanarError):
    pass


class PatchModeUnsupported(PlanarError):
    pass


# curvature
class BoundaryVertex(PlanarError):
    pass


class BoundaryEdge(PlanarError):
    pass


class NotACorner(PlanarError):
    pass


# operators / generators / analysis
class EmptyInterior(PlanarError):
    pass


class InvalidParameter(PlanarError):
    pass


class TruncatedNeighborhood(PlanarError):
    pass


class EmptyDonorSet(PlanarError):
    pass


class EmptyReceiverSet(PlanarError):
    pass


# io / export
class LayoutSingular(PlanarError):
    pass


class PlanarSyntaxError(PlanarError):
    def __init__(self, line, reason):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason
