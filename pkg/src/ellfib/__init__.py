"""Exact numerical invariants of genus one fibrations over P^1."""

from . import atiyah, chern, lattice, model_surfaces, p1bundles
from .atiyah import AtiyahType, end_dimension, is_commutative, verify_reg_lemma
from .chern import FibrationInvariants, d2_thresholds, slope_gap_from_cthm1, universal_extension
from .lattice import EvenLattice, ModClass, lambda_d, orbit_partition, pontrjagin
from .model_surfaces import ProjBundleSpace, double_cover, intersect, rational_surface_divisor, triple_cover
from .p1bundles import SplittingType, admissibility_bound, enumerate_admissible, is_admissible

__version__ = "0.1.0"
