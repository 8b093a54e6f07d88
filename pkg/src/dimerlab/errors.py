"""Exception types shared across the package."""


class DimerlabError(Exception):
    """Base class for all package-specific errors."""


class ParseError(DimerlabError):
    """Malformed graph/line file; message carries the offending field or line."""


class DuplicateCoordinate(DimerlabError):
    """Two vertices placed at the same point."""


class NonSimple(DimerlabError):
    """Loop edge or parallel edge."""


class EdgeCrossing(DimerlabError):
    """Straight-line drawing is degenerate: edges cross, overlap, or hit a vertex."""


class UnknownVertex(DimerlabError):
    pass


class UnknownEdge(DimerlabError):
    pass


class Disconnected(DimerlabError):
    pass


class EnumerationGuard(DimerlabError):
    """Graph too large for exhaustive enumeration; set force=True or
    DIMERLAB_FORCE_LARGE=1 to override."""


class ZeroPartitionFunction(DimerlabError):
    """Correlation ratio undefined: the unconstrained partition function is 0."""


class OddDimension(DimerlabError):
    pass


class NotSkew(DimerlabError):
    pass


class SignUndetermined(DimerlabError):
    """Pfaffian is nonzero but no perfect matching was found to fix its sign."""


class DegenerateCrossing(DimerlabError):
    """A polyline touches a vertex or meets an edge non-transversally."""


class PathNotInDecomposition(DimerlabError):
    pass


class OverlappingMonomers(DimerlabError):
    """The two monomer sets of a double cover must be disjoint."""


class NonCanonical(DimerlabError):
    """Order-disorder pairs violate the canonical-pair requirements."""


class SharedExitPoint(DimerlabError):
    """Two disorder lines leave the grand-central face through the same point."""


class NotOnBoundary(DimerlabError):
    """Sites are not in cyclic position along the outer boundary."""


class NotConnected(DimerlabError):
    """Requested pair of monomers is not joined by a path of the overlay."""


class MismatchedZ(DimerlabError):
    """Benchmark abort: enumeration and Pfaffian disagree on |Z|."""


class InvalidSize(DimerlabError):
    pass
