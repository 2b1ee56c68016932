from gkz.weights import WeightMatrix, parse_and_validate
from gkz.fan import RayGroup, Wall, GKZFan, Location, LocationKind, group_rays, build_fan, locate

__all__ = [
    "WeightMatrix",
    "parse_and_validate",
    "RayGroup",
    "Wall",
    "GKZFan",
    "Location",
    "LocationKind",
    "group_rays",
    "build_fan",
    "locate",
]
