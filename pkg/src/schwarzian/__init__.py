"""Exact meromorphic solutions of autonomous Schwarzian differential
equations S(u,z)^p = P(u)/Q(u), with numerical certification.

The six canonical equation shapes are classified from root multiplicity
patterns; their closed-form solutions (elliptic, trigonometric,
exponential) are constructed and residual-checked against the equation,
the first-order companion equation, and the Weierstrass identities.
"""

from .certify import ResidualReport, certify_solution
from .equations import (
    CanonicalForm,
    NotCanonical,
    SchwarzianEquation,
    classify,
    elementary_symmetric,
    eval_R,
    q_factor,
    transform_equation,
)
from .errors import (
    AmbiguousMultiplicityError,
    CertificationError,
    CriticalPointError,
    DegenerateLatticeError,
    DocumentError,
    NoTranscendentalSolutionError,
    PoleProximityError,
    SchwarzianError,
    SingularityInDiskError,
)
from .extended import INF, is_inf
from .jets import Jet, schwarzian_numeric, schwarzian_of_jet
from .mobius import MobiusTransform
from .polynomials import Polynomial, RationalFunction
from .solutions import (
    EllipticFractionalSolution,
    ExpSolution,
    Solution,
    TrigSolution,
    WpRationalSolution,
    solution_jet,
)
from .solver import (
    NoSolution,
    SubequationSpec,
    TypeICoefficients,
    Unresolved,
    fit_subequation_scale,
    generate_type1,
    solve_canonical,
    solve_equation,
    solve_type1,
    solve_type2,
    solve_type3,
    solve_type4,
    solve_type5,
    solve_type6,
    subequation_residual,
)
from .weierstrass import (
    LatticeData,
    WeierstrassInvariants,
    carlson_rf,
    half_periods,
    lattice_distance,
    laurent_coefficients,
    stationary_values,
    wp,
    wp_prime,
    wp_second,
    wp_with_prime,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousMultiplicityError",
    "CanonicalForm",
    "CertificationError",
    "CriticalPointError",
    "DegenerateLatticeError",
    "DocumentError",
    "EllipticFractionalSolution",
    "ExpSolution",
    "INF",
    "Jet",
    "LatticeData",
    "MobiusTransform",
    "NoSolution",
    "NoTranscendentalSolutionError",
    "NotCanonical",
    "PoleProximityError",
    "Polynomial",
    "RationalFunction",
    "ResidualReport",
    "SchwarzianEquation",
    "SchwarzianError",
    "SingularityInDiskError",
    "Solution",
    "SubequationSpec",
    "TrigSolution",
    "TypeICoefficients",
    "Unresolved",
    "WeierstrassInvariants",
    "WpRationalSolution",
    "carlson_rf",
    "certify_solution",
    "classify",
    "elementary_symmetric",
    "eval_R",
    "fit_subequation_scale",
    "generate_type1",
    "half_periods",
    "is_inf",
    "lattice_distance",
    "laurent_coefficients",
    "q_factor",
    "schwarzian_numeric",
    "schwarzian_of_jet",
    "solution_jet",
    "solve_canonical",
    "solve_equation",
    "solve_type1",
    "solve_type2",
    "solve_type3",
    "solve_type4",
    "solve_type5",
    "solve_type6",
    "stationary_values",
    "subequation_residual",
    "transform_equation",
    "wp",
    "wp_prime",
    "wp_second",
    "wp_with_prime",
]
