from lattice.vectors import LatticeVector, primitive, ccw_key, ccw_compare
from lattice.mu import MuValue, mu_of, mu_compare
from lattice.cones import Cone2, Side, dual_cone
from lattice.minimize import HalfPlane, UNBOUNDED, Unbounded, lattice_minimize, brute_force_minimize

__all__ = [
    "LatticeVector",
    "primitive",
    "ccw_key",
    "ccw_compare",
    "MuValue",
    "mu_of",
    "mu_compare",
    "Cone2",
    "Side",
    "dual_cone",
    "HalfPlane",
    "UNBOUNDED",
    "Unbounded",
    "lattice_minimize",
    "brute_force_minimize",
]
