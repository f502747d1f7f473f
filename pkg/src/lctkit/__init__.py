"""Multidimensional linear canonical transformations over pseudo-Euclidean phase space."""

from .bogoliubov import (
    BogoliubovPair,
    RelationResiduals,
    is_pseudo_unitary,
    pair_to_json_dict,
    pseudo_unitarity_residuals,
    relation_residuals,
    to_bogoliubov,
)
from .dispersion import (
    DispersionSpec,
    ReducedLCT,
    dispersion_from_json_dict,
    dispersion_product_residual,
    dispersion_to_json_dict,
    ilct_transform_dispersion,
    make_dispersion,
    reduced_matrix,
    transform_dispersion_matrices,
)
from .errors import (
    AxisSignatureMismatch,
    ConstraintViolated,
    DegenerateKernel,
    DimensionMismatch,
    EmptySignature,
    GridTooNarrow,
    InvalidDispersion,
    InvalidGenerator,
    LctError,
    MetricMismatch,
    NotIsodispersion,
    NotPseudoOrthogonal,
    NotSymplectic,
    ParseError,
    ZeroSignal,
)
from .liealg import (
    Generator,
    GeneratorResiduals,
    exp_generator,
    generator_from_json_dict,
    generator_residual,
    generator_to_json_dict,
    is_ilct_generator,
    is_ilct_matrix,
    isodispersion_residual,
    make_generator,
    matrix_exp,
    project_generator,
    random_generator,
    random_lct,
)
from .metric import (
    Metric,
    Signature,
    coupling_constant_si,
    metric_matrix,
    omega_matrix,
)
from .symplectic import (
    DEFAULT_TOL,
    BlockLCT,
    InhomogeneousLCT,
    PhaseVector,
    apply,
    blocks_from_matrix,
    boost_matrix,
    compose,
    embed_fourier_like,
    embed_pseudo_orthogonal,
    inverse,
    lct_from_json_dict,
    lct_to_json_dict,
    make_lct,
    make_pseudo_unitary_lct,
    pseudo_orthogonal_residual,
    symplectic_residual,
)
from .transform1d import (
    LCT1D,
    HermiteState,
    SampledSignal,
    SignalMoments,
    apply_lct,
    dft_oracle,
    fractional_fourier_params,
    hermite_state,
    lct1d_from_block,
    lct_kernel,
    read_signal_csv,
    signal_moments,
    write_signal_csv,
)

__version__ = "0.1.0"
