"""Equidistant sets between a ball about the origin and a convex epigraph."""

__version__ = "0.1.0"

from .errors import (BreakpointError, ContainmentError, ConvergenceError, CriticalParameterError,
                     DisjointnessError, EquidistError, GridTooCoarseError, InsideFocalSphereError,
                     MonotonicityError, NoBasePointError, NotParameterizationError, PreconditionError,
                     SpecError)
from .functions import (Exp, FunctionSpec, Jet, PiecewiseSVC, PointwiseMin, Poly1D, QuadFormND, Radial,
                        ShiftedParabola, Spline1D, Sqrt1p, Tabulated, evaluate, from_json, infimum,
                        example_quadform, verify_convexity)
from .geometry import (Ball, DistanceResult, Epigraph, PointCloud, TrimmedEpigraph, dist_point_set,
                       equidistant_residual, hausdorff)
from .vertical import bounds, existence_check, profile, scan_vertical
from .circle import (CriticalDomain, Curve, ParamSample, alpha, critical_domain, equidistant_point,
                     reconstruct_f, trace_curve)
from .sphere import (Patch, alpha_nd, equidistant_point_nd, ray_admissible_segments, trace_patch)
from .characterize import curve_to_G, h_map, invert_h, is_equidistant_function, radial_G
from .minop import min_commute_check, min_family, sandwich_check
from .pathology import build_scene, fat_cantor, segment_membership_test

__all__ = [name for name in dir() if not name.startswith("_")]
