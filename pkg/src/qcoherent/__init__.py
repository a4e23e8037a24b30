"""q-deformed coherent states: special functions, weights, observables.

The deformation is parametrized by q in (0, 1], with q = 1 reproducing the
conventional coherent states exactly.  See the demos/ scripts for guided
tours of each capability and the qcoherent CLI for point evaluation, figure
datasets, invariant suites, and Monte Carlo checks.
"""

from .errors import (
    DegenerateDivisionError,
    DomainCapError,
    NonConvergenceError,
    QCoherentError,
    TruncationInsufficientError,
    ZeroFactorWarning,
)
from .moments import (
    CarlemanDiagnostic,
    MomentReport,
    QuadratureConfig,
    carleman_diagnostic,
    log_weight_tilde,
    moment_integral,
    weight,
    weight_tilde,
)
from .observables import (
    ObservableSet,
    RhoValue,
    deformed_snr,
    deformed_squeezing_ratio,
    deformed_variance,
    mandel_q,
    mean_inverse_q_power,
    mean_q_number,
    metric_factor,
    observable_set,
    quadrature_variances,
    rho_characteristic,
    snr,
    squeezing_ratio,
)
from .qspecial import (
    DEFAULT_CONTROL,
    Deformation,
    LogFactorialTable,
    SeriesControl,
    jackson_e,
    jackson_e_tail_bound,
    log_jackson_e_pos,
    log_q_factorial,
    log_q_factorial_via_gamma,
    maths_q_number,
    q_factorial_ratio,
    q_number,
    q_number_array,
    sum_series,
)
from .sampling import SampleReport, photon_distribution, sample_mandel
from .states import (
    FockVector,
    SFactorKey,
    StateLabel,
    b_apply,
    eigenstate_residual,
    fock_coefficients,
    mean_photon_number,
    normalization,
    normalization_derivative,
    overlap,
    photon_probability,
    s_factor,
)

__version__ = "0.1.0"
