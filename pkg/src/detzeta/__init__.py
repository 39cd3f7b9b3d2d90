"""Exact zeta functions of determinantal varieties, with a finite-field counting oracle."""

from .lring import CycloProduct, LClass, LPoly, PoleAtOneError, lclass_eval, lclass_euler, lclass_order_at_one
from .orbits import TOP, NotInDomainError, OrbitIndex, PointClass, class_alpha_orbit, class_orbit, enumerate_orbits
from .oracle import BudgetExceededError, OrbitCensus, count_contact, count_orbits, smith_invariants, verify_class
from .strata import (
    InstabilityError,
    LevelTooSmallError,
    ResolutionData,
    all_strata,
    contact_locus_class,
    determinantal_resolution,
    fiber_class,
    fiber_euler_closed,
    stratum_class,
)
from .zeta import (
    CycloFactored,
    MotivicZeta,
    ZetaRat,
    bernstein_sato_maximal,
    check_holomorphy,
    check_monodromy_conjecture,
    eigenvalue_set,
    monodromy_zeta_at_point,
    motivic_zeta_rational,
    motivic_zeta_series,
    topological_zeta,
    twisted_topological_zeta,
)

__version__ = "0.1.0"
