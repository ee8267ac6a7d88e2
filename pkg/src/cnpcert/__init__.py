"""Reproducing-kernel toolkit.

Truncated power series with functional reversion, evaluable kernel
expression trees on the disk and ball, Hermitian/PSD certification, sampled
certification of the complete Nevanlinna-Pick property, the constructive
criterion for de Branges-Rovnyak kernels, and Schur-recursion Pick
interpolation for the Szego kernel.
"""

from .cnp import CertReport, cnp_basepoint_sweep, cnp_certify
from .dbr import (
    CriterionReport,
    CriterionVerdict,
    ExtensionWitness,
    InjectivityStatus,
    cnp_criterion,
    dbr_kernel,
    decomposition_check,
    decomposition_identity_residual,
    extension_margin,
    functional_inverse,
    injectivity_probe,
    reversion_residual,
    schwarz_pick_margin,
)
from .errors import CnpcertError
from .kernels import (
    Congruence,
    Constant,
    DeBrangesRovnyak,
    DruryArveson,
    Kernel,
    NormalizedDefect,
    Pullback,
    Sum,
    Szego,
    WeightedHardy,
    kernel_eval,
    unit_ball_probe,
)
from .linalg import (
    HermitianMatrix,
    PsdVerdict,
    Verdict,
    block_pick_matrix,
    gram,
    matrix_to_csv,
    matrix_to_json_dict,
    pick_matrix,
    psd_verdict,
    smallest_eigenvalue,
)
from .pickinterp import (
    InterpolationProblem,
    SchurInterpolant,
    blaschke_product,
    pick_solvable,
    sampled_sup,
    schur_interpolant,
)
from .sampling import SampleSet, ball_points
from .series import PowerSeries, divide

__version__ = "0.1.0"
