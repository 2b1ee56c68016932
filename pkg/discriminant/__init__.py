from discriminant.horn import FactoredRational, NormalizedRational, horn_pullback, normalize, render_rational
from discriminant.intersection import RayPoint, PointLength, WallIntersection, ray_points, wall_intersection_length
from discriminant.expected import ExpectedCountReport, expected_autoequivalences
