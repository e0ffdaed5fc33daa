"""mu-bases, mu-strata, properness and scroll data for rational curves in P^d."""

from .errors import (
    DegreeMismatchError,
    FieldMismatchError,
    HilbertShapeError,
    LinearDependenceError,
    MustrataError,
    NotCoprimeError,
    PartitionError,
    RetryBudgetExceeded,
    SamplingError,
)
from .fields import DEFAULT_PRIME, GF, QQ, Field
from .forms import BinaryForm, FormMatrix, form_gcd, gcd_many
from .linalg import kernel_basis, rank, rref
from .syzygy import (
    MuBasisResult,
    Parametrization,
    hilbert_of_ideal,
    mu_basis,
    mu_type,
    syzygy_space,
    verify_mu_basis,
)
from .strata import (
    HilbertFunction,
    StratumDescriptor,
    closure_set,
    enumerate_mu_types,
    extremal_mu,
    grass_codim,
    hasse_diagram,
    mu_from_hilbert,
    mu_leq,
    stratum_dim,
    tail_hilbert_from_mu,
)
from .properness import (
    PropernessReport,
    admissible_generic_degrees,
    compose_parametrization,
    generic_degree,
    non_proper_codim,
    strata_admitting_degree,
)
from .ancestor import (
    AncestorDecomposition,
    ScrollInfo,
    ancestor_hilbert,
    ancestor_ideal,
    ancestor_order_equiv,
    scroll_info,
    substratum_closure,
    substratum_dim,
    verify_scroll_containment,
)
from .sampler import SampleSpec, sample_in_stratum, sample_kpu, sample_non_proper

__version__ = "0.1.0"
