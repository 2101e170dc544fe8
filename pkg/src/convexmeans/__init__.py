"""p-means of convex bodies, covering radii and the geometric mean G_p."""

from .bodies import HVBody, Polygon, gauge, negate, polar, scale, support, transform
from .bodyfile import read_body, write_body
from .containment import (
    circumradius_with_center,
    covering_radius,
    minkowski_asymmetry,
    optimal_containment_certificate,
    r0_max,
)
from .gmean import gmean, gmean_iterate
from .means import (
    MeanSpec,
    lower_mean_2d,
    lower_mean_sampled,
    mean,
    mean_dispatch,
    upper_mean_2d,
    upper_mean_sampled,
)
from .scalar import power_mean

__all__ = [
    "HVBody", "Polygon", "gauge", "negate", "polar", "scale", "support", "transform",
    "read_body", "write_body",
    "circumradius_with_center", "covering_radius", "minkowski_asymmetry",
    "optimal_containment_certificate", "r0_max",
    "gmean", "gmean_iterate",
    "MeanSpec", "lower_mean_2d", "lower_mean_sampled", "mean", "mean_dispatch",
    "upper_mean_2d", "upper_mean_sampled",
    "power_mean",
]
