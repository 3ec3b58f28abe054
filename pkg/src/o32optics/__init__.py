"""Two-mode oscillator realization of the O(3,2) algebra and its contraction.

Core layout:

* :mod:`o32optics.fock` -- truncated two-mode Fock space and ladder matrices
* :mod:`o32optics.oscillator` -- the ten generators and their closure checks
* :mod:`o32optics.fiverep` -- 5x5 matrix/differential realization, Poincare set
* :mod:`o32optics.contraction` -- the eps-scaled contraction onto translations
* :mod:`o32optics.states` -- squeezed vacuum and the boost-squeezed Gaussian
* :mod:`o32optics.verify` -- the all-checks report bundle
* :mod:`o32optics.service` -- FastAPI app exposing the above
* :mod:`o32optics.cli` -- thin client over the service
"""

__version__ = "0.1.0"

from .fock import (
    BosonicOperator,
    FockSpace,
    ValiditySubspace,
    annihilation,
    commutator,
    creation,
    make_space,
    quadratures,
    restrict,
)
from .oscillator import (
    GeneratorSet,
    build_generators,
    check_lorentz_set,
    check_q_set,
    check_s0_set,
    completion_deficit,
    su11_triple,
    su2_triple,
)
from .fiverep import (
    FiveMatrix,
    FiveVector,
    PoincareSet,
    check_poincare,
    differential_action,
    exponentiate,
    generator_matrix,
    poincare_set,
    preserve_metric_check,
    translation_matrix,
)
from .contraction import (
    c_matrix,
    commute_with_c_check,
    contract_generator,
    contracted_algebra,
    convergence_scan,
)
from .reports import AlgebraReport, RelationEntry
from .states import (
    EllipseSample,
    SqueezeParameters,
    TruncationError,
    TwoModeState,
    boosted_ground_state,
    mean_photon_number,
    quadrature_covariance,
    squeezed_vacuum,
)
from .verify import run_verification

__all__ = [
    "__version__",
    "BosonicOperator", "FockSpace", "ValiditySubspace", "annihilation",
    "commutator", "creation", "make_space", "quadratures", "restrict",
    "GeneratorSet", "build_generators", "check_lorentz_set", "check_q_set",
    "check_s0_set", "completion_deficit", "su11_triple", "su2_triple",
    "FiveMatrix", "FiveVector", "PoincareSet", "check_poincare",
    "differential_action", "exponentiate", "generator_matrix", "poincare_set",
    "preserve_metric_check", "translation_matrix",
    "c_matrix", "commute_with_c_check", "contract_generator",
    "contracted_algebra", "convergence_scan",
    "AlgebraReport", "RelationEntry",
    "EllipseSample", "SqueezeParameters", "TruncationError", "TwoModeState",
    "boosted_ground_state", "mean_photon_number", "quadrature_covariance",
    "squeezed_vacuum",
    "run_verification",
]
