"""Exact rational convex geometry in dimensions 2 and 3."""

from .ball import BallApprox, ball_approx
from .mixed import mixed_volume, mixed_volume_polarization, projection_body
from .polytope import (DegenerateBodyError, Polytope, convex_hull,
                       minkowski_sum, random_polytope, support_function,
                       volume)
from .quermass import (Pi1Body, derived_projection, intrinsic_volume,
                       mixed_quermass, quermassintegral, steiner_point)
from .zonotope import Zonotope

__all__ = [
    "BallApprox", "ball_approx", "mixed_volume", "mixed_volume_polarization",
    "projection_body", "support_function", "DegenerateBodyError", "Polytope",
    "convex_hull", "minkowski_sum", "random_polytope", "volume", "Pi1Body",
    "derived_projection", "intrinsic_volume", "mixed_quermass",
    "quermassintegral", "steiner_point", "Zonotope",
]
