"""Exception hierarchy for geometric and DSL failures."""


class GeometryError(Exception):
    """Base class for all geometric construction failures."""


class NonFinitePoint(GeometryError):
    """A coordinate is NaN or infinite; such points are never admitted."""


class CoincidentPoints(GeometryError):
    """Two points coincide where a direction or distinct pair is required."""


class ParallelLines(GeometryError):
    """Lines are parallel within tolerance; no unique intersection."""


class CollinearPoints(GeometryError):
    """Three points are collinear within tolerance; no circle through them."""


class IdenticalCircles(GeometryError):
    """Two circles coincide within tolerance; intersection is not discrete."""


class DegenerateSegment(GeometryError):
    """Segment is too short to define a direction."""


class DegenerateTriangle(GeometryError):
    """Triangle fails the scale-invariant non-degeneracy test."""


class NoFixedPoint(GeometryError):
    """Similarity is a near-pure translation; it has no fixed point."""


class InvalidAngle(GeometryError):
    """Angle lies outside the admitted range."""


class DegenerateCircumscription(GeometryError):
    """Circumscribing lines concur or are parallel; no valid triangle results."""


class IterationCapExceeded(GeometryError):
    """Requested iteration count exceeds the safety cap."""


class EquilateralDegenerate(GeometryError):
    """Circumcenter and orthocenter coincide; the Euler line is undefined.

    The three centers are still available on the exception instance.
    """

    def __init__(self, message, centroid=None, circumcenter=None, orthocenter=None):
        super().__init__(message)
        self.centroid = centroid
        self.circumcenter = circumcenter
        self.orthocenter = orthocenter


class ChordNotOnCircle(GeometryError):
    """Chord endpoints do not lie on the circle within tolerance."""


class UnknownCheckName(ValueError):
    """A check name passed to the suite runner is not registered."""


class EmptyScene(ValueError):
    """A viewport cannot be fitted to a scene with no primitives."""


class SourceError(Exception):
    """Base class for DSL errors that carry a source position."""

    def __init__(self, line, column, message):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message
        self.message = message


class LexError(SourceError):
    """Illegal character or malformed literal in DSL source."""


class ParseError(SourceError):
    """Token stream does not match the DSL grammar."""


class ResolveError(SourceError):
    """Base class for static-validation failures of a parsed program."""


class UnknownName(ResolveError):
    """Name used before assignment."""


class DuplicateName(ResolveError):
    """Name rebound in a scope that does not permit rebinding."""


class ArityMismatch(ResolveError):
    """Callable invoked with the wrong number of arguments."""


class MacroRecursion(ResolveError):
    """Macro calls itself directly or through a cycle."""


class IterationCapError(ResolveError):
    """Iterate count exceeds the safety cap."""


class EvalError(SourceError):
    """A geometric error surfaced while evaluating a statement."""

    def __init__(self, line, column, message, cause=None):
        super().__init__(line, column, message)
        self.cause = cause


class UnknownOverride(ValueError):
    """An evaluation override names something that is not a free point."""
