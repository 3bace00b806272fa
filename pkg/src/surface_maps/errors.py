"""Exception hierarchy shared by the whole package."""


class MapError(Exception):
    """Base class for structural errors on maps."""


class NonPermutation(MapError):
    pass


class AlphaFixedPoint(MapError):
    pass


class Disconnected(MapError):
    pass


class RootOutOfRange(MapError):
    pass


class NotUnicellular(MapError):
    pass


class Unbalanced(MapError):
    pass


class NotBipartite(MapError):
    pass


class NotPointed(MapError):
    pass


class NotWellBlossoming(MapError):
    pass


class NotQuadrangulation(MapError):
    pass


class NotRootable(MapError):
    pass


class NotRootableCorner(MapError):
    pass


class NotSchemeRooted(MapError):
    pass


class GenusTooSmall(MapError):
    pass


class EmptyCoreOnSphere(MapError):
    pass


class NoOffsetCycle(MapError):
    pass


class NotSpecial(MapError):
    pass


class HasLongOffsetCycle(MapError):
    pass


class BoundTooLarge(MapError):
    pass


class SeriesError(Exception):
    """Base class for truncated-series errors."""


class NonContractive(SeriesError):
    pass


class SqrtUndefined(SeriesError):
    pass


class BadRange(SeriesError):
    pass


class InsufficientTruncation(SeriesError):
    pass
