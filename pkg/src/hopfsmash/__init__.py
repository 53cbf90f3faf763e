"""Exact verification of the scalar-extension Hopf algebroid built from
the adjoint functionals of a finite-dimensional Lie algebra.

From structure constants alone the package constructs the enveloping
algebra in PBW form, the dual Hopf algebra generated by the adjoint
matrix-coefficient functionals U[i,j] and Ubar[i,j], the smash product
with its Yetter-Drinfeld structure, and the Hopf algebroid structure
maps on top, and checks every defining identity in exact rational
arithmetic.
"""

__version__ = "0.1.0"

from .lie import (AntisymmetryViolation, JacobiViolation, LieAlgebra,
                  LieStructureError, adjoint_matrix, builtin, lie_from_json,
                  lie_to_json, load_lie_file, modular_vector, validate_structure)
from .uea import (UeaElement, antipode_uea, coproduct_uea, counit_uea, mul_uea,
                  phi, phi_inv)
from .dual import (DualElement, EqualsResult, U, Ubar, antipode_dual,
                   check_theorem61, coproduct_dual, counit_dual, equals_dual,
                   eval_pair, eval_pair_right, mul_dual)
from .smash import (SmashElement, SmashTensor, act_left, act_right,
                    act_right_smash, lambda_coact, smash_equal, smash_mul,
                    yd_suite)
from .algebroid import (BalancedTensor, algebroid_suite, alpha_L, alpha_R,
                        balanced_equal, beta_L, beta_R, delta_L, delta_R,
                        epsilon_L, epsilon_R, reduce_balanced, source_target,
                        tau, tau_inv)
from .exprs import ExprError, eval_expr, parse_expr
from .report import CheckRecord, Report
from .cli import SuiteConfig, load_algebra, run_suite

__all__ = [name for name in dir() if not name.startswith("_")]
