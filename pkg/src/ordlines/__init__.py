"""Exact-arithmetic laboratory for ordinary lines and spanned lines and planes
of finite point sets in the plane and in space."""

from .analysis import (
    AlmostCoplanarReport,
    BeckReport,
    BoundConstants,
    ConcurrentProbeReport,
    SkewBoundReport,
    SmallLineReport,
    SylvesterGallaiReport,
    beck_report,
    bound_constants,
    concurrent_lines_probe,
    gamma_prime,
    plane_ordinary_profile,
    small_line_counts,
    verify_almost_coplanar,
    verify_skew_bound,
    verify_sylvester_gallai,
)
from .constructions import (
    BoroczkyModelSummary,
    boroczky_model,
    gen_coplanar_heavy,
    gen_grid2d,
    gen_hesse,
    gen_near_coplanar,
    gen_random,
    gen_two_skew,
)
from .errors import (
    DegenerateInputError,
    DomainError,
    GenerationError,
    InvariantViolationError,
    OrdlinesError,
    ParseError,
    UsageError,
)
from .fields import Eisenstein, Scalar, W, as_scalar, format_eisenstein
from .geometry import (
    CanonLine2,
    CanonLine3,
    CanonPlane,
    Kind,
    Point,
    affine2,
    affine3,
    canon_line,
    canon_plane,
    collinear,
    coplanar,
    incident,
    make_point,
    projective2,
)
from .incidence import (
    KellyTraceReport,
    PlaneSummary,
    PointSet,
    ProjectionImage,
    SpanSummary,
    image_point_set,
    kelly_trace,
    max_collinear,
    ordinary_lines,
    plane_summary,
    point_degrees,
    project_from,
    span_summary,
)
from .pointset_io import parse_pointset, read_pointset_file, write_pointset
from .search import SearchConfig, SearchResult, minimize_ordinary

__version__ = "0.1.0"

__all__ = [
    "AlmostCoplanarReport",
    "BeckReport",
    "BoroczkyModelSummary",
    "BoundConstants",
    "CanonLine2",
    "CanonLine3",
    "CanonPlane",
    "ConcurrentProbeReport",
    "DegenerateInputError",
    "DomainError",
    "Eisenstein",
    "GenerationError",
    "InvariantViolationError",
    "KellyTraceReport",
    "Kind",
    "OrdlinesError",
    "ParseError",
    "PlaneSummary",
    "Point",
    "PointSet",
    "ProjectionImage",
    "Scalar",
    "SearchConfig",
    "SearchResult",
    "SkewBoundReport",
    "SmallLineReport",
    "SpanSummary",
    "SylvesterGallaiReport",
    "UsageError",
    "W",
    "affine2",
    "affine3",
    "as_scalar",
    "beck_report",
    "boroczky_model",
    "bound_constants",
    "canon_line",
    "canon_plane",
    "collinear",
    "concurrent_lines_probe",
    "coplanar",
    "format_eisenstein",
    "gamma_prime",
    "gen_coplanar_heavy",
    "gen_grid2d",
    "gen_hesse",
    "gen_near_coplanar",
    "gen_random",
    "gen_two_skew",
    "image_point_set",
    "incident",
    "kelly_trace",
    "make_point",
    "max_collinear",
    "minimize_ordinary",
    "ordinary_lines",
    "parse_pointset",
    "plane_ordinary_profile",
    "plane_summary",
    "point_degrees",
    "project_from",
    "projective2",
    "read_pointset_file",
    "small_line_counts",
    "span_summary",
    "verify_almost_coplanar",
    "verify_skew_bound",
    "verify_sylvester_gallai",
    "write_pointset",
]
