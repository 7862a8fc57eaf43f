"""Volumes and metric data of spherical/hyperbolic Lambert cubes and
double-rectangular spherical orthoschemes."""

from .errors import (DomainError, NonConvergence, NonEuclidError,
                     NonFiniteIntegrand)
from .lambert import (CubeAngles, EdgeLengths, EuclideanRealization,
                      GeometryClass, PrincipalData, abc, classify,
                      edge_lengths_spherical, euclidean_realization,
                      principal_hyperbolic, principal_spherical,
                      volume_hyperbolic, volume_singular,
                      volume_special_family, volume_spherical,
                      volume_spherical_integral)
from .orthoscheme import (Curvature, OrthoschemeAngles, OrthoschemeData,
                          classify_orthoscheme, orthoscheme_edges,
                          volume_orthoscheme_integral,
                          volume_orthoscheme_schlaefli, volume_via_delta)
from .quadrature import (IntegrationProblem, QuadResult, integrate,
                         integrate_semiinfinite)
from .specfun import (SchlaefliArgs, arccot, delta_alpha0, delta_cap,
                      delta_s, delta_s_arccot, delta_s_closed,
                      delta_s_dalpha, delta_s_extended, delta_s_reduced,
                      dilog2, lobachevsky, schlaefli_series)
from .verify import CheckReport, run_all_checks

__version__ = "1.0.0"

__all__ = [
    "CheckReport", "CubeAngles", "Curvature", "DomainError", "EdgeLengths",
    "EuclideanRealization", "GeometryClass", "IntegrationProblem",
    "NonConvergence", "NonEuclidError", "NonFiniteIntegrand",
    "OrthoschemeAngles", "OrthoschemeData", "PrincipalData", "QuadResult",
    "SchlaefliArgs", "abc", "arccot", "classify", "classify_orthoscheme",
    "delta_alpha0", "delta_cap", "delta_s", "delta_s_arccot",
    "delta_s_closed", "delta_s_dalpha", "delta_s_extended",
    "delta_s_reduced", "dilog2", "edge_lengths_spherical",
    "euclidean_realization", "integrate", "integrate_semiinfinite",
    "lobachevsky", "orthoscheme_edges", "principal_hyperbolic",
    "principal_spherical", "run_all_checks", "schlaefli_series",
    "volume_hyperbolic", "volume_orthoscheme_integral",
    "volume_orthoscheme_schlaefli", "volume_singular",
    "volume_special_family", "volume_spherical",
    "volume_spherical_integral", "volume_via_delta",
]
