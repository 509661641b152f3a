from enum import Enum

from sympy import GF, QQ
from sympy.polys.domains.domain import Domain


class Field(str, Enum):
    """Coefficient fields supported by the polynomial layer.

    Counting always happens over the rationals; the two-element field is
    used for the real (mod 2) pipeline and for arithmetic checks.
    """

    RATIONALS = "rationals"
    MOD2 = "mod2"

    @property
    def domain(self) -> Domain:
        """The sympy domain backing this field."""
        return QQ if self is Field.RATIONALS else GF(2)


class MonomialOrder(str, Enum):
    """Monomial orders accepted by the Groebner layer."""

    GREVLEX = "grevlex"  # default for bases and counting
    LEX = "lex"
    ELIMINATION = "elimination"  # grevlex blocks, leading block eliminated first


class Marker(Enum):
    """Non-numeric outcomes of counting and invariant routes."""

    INFINITE = "infinite"  # quotient ring is not finite dimensional
    NOT_APPLICABLE = "not-applicable"  # route hypothesis fails
    UNKNOWN = "unknown"  # no route determines the entry


class Smoothness(str, Enum):
    SMOOTH = "smooth"
    NORMAL = "normal"
    UNKNOWN = "unknown"
    SINGULAR = "singular"

    @property
    def is_regular(self) -> bool:
        """Smooth and normal varieties have vanishing higher cuspidal numbers."""
        return self in (Smoothness.SMOOTH, Smoothness.NORMAL)


class Provenance(str, Enum):
    """How an invariant entry was obtained."""

    DISTINGUISHED = "distinguished"
    DIAGONAL = "diagonal"
    CALIBRATED = "calibrated"
    USER = "user"
    DEGREE = "degree"  # total degree or slice count
    FORMULA = "formula"  # 2g-2+2d or d(d-1)
    MEASURED = "measured"
    REGULAR = "regular"  # zero padding for smooth or normal varieties
    UNKNOWN = "unknown"


class Command(str, Enum):
    INVARIANTS = "invariants"
    CUSPIDAL = "cuspidal"
    DEGREE = "degree"
    PARITY = "parity"
    VERIFY = "verify"


class Mode(str, Enum):
    THEOREM = "theorem"
    MEASURE = "measure"
    BOTH = "both"


class Route(str, Enum):
    """Measurement routes for deg S(f)."""

    CHART = "chart"  # plane curve: affine count plus infinity corrections
    GRAPH = "graph"  # hypersurface: restriction to the graph y(x)
    SECTION = "section"  # generic curve section projected to a plane model


class ReportFormat(str, Enum):
    TEXT = "text"
    YAML = "yaml"
    JSON = "json"


class ErrorCode(str, Enum):
    """Machine-readable error codes surfaced by the CLI."""

    JOB_INVALID = "JOB_INVALID"
    PARSE_ERROR = "PARSE_ERROR"
    NON_DIVISIBLE = "NON_DIVISIBLE"
    UNKNOWN_VARIABLE = "UNKNOWN_VARIABLE"
    AMBIENT_MISMATCH = "AMBIENT_MISMATCH"
    DIVISION_BY_ZERO = "DIVISION_BY_ZERO"
    DEGENERATE_RESULTANT = "DEGENERATE_RESULTANT"
    CHART_BOUNDS = "CHART_BOUNDS"
    DEGENERATE_TRANSFORMATION = "DEGENERATE_TRANSFORMATION"
    CONSTANT_EQUATION = "CONSTANT_EQUATION"
    SINGULAR_SYSTEM = "SINGULAR_SYSTEM"
    NON_INTEGRAL = "NON_INTEGRAL"
    UNKNOWN_ENTRY_NEEDED = "UNKNOWN_ENTRY_NEEDED"
    MISSING_GENUS = "MISSING_GENUS"
    LENGTH_MISMATCH = "LENGTH_MISMATCH"
    POSITIVE_DIMENSIONAL = "POSITIVE_DIMENSIONAL"
    DEGENERATE_SLICE = "DEGENERATE_SLICE"
    SLICE_NOT_SUPPORTED = "SLICE_NOT_SUPPORTED"
    UNSUPPORTED_CUSPIDAL_COMPONENT = "UNSUPPORTED_CUSPIDAL_COMPONENT"
    REFERENCE_RETRIES_EXHAUSTED = "REFERENCE_RETRIES_EXHAUSTED"
    VERIFY_MISMATCH = "VERIFY_MISMATCH"
