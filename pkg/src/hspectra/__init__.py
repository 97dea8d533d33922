"""Laplacian H-eigenvalues of k-uniform hypergraphs.

Generators for cored and power hypergraph families, edge-based tensor
contraction kernels, closed-form spectrum catalogs with certified
eigenvector witnesses, a Collatz-bounded power iteration for the signless
tensor, and a multistart Newton oracle that cross-checks every claim.
"""

from .errors import (
    ChoiceCountMismatch,
    DimensionMismatch,
    DuplicateEdge,
    FamilyMismatch,
    InstanceTooLarge,
    InvalidFamilyParameter,
    MaxIterations,
    NonUniformEdge,
    NoSignChange,
    NotConnected,
    NotCored,
    OddUniformity,
    OddUniformityRequired,
    SignParityViolation,
    SpectraError,
    TrivialHypergraph,
    ValidationError,
    VertexOutOfRange,
    WrongRootForR,
    ZeroVector,
)
from .hypergraphs import (
    DegreeProfile,
    FamilySpec,
    Graph,
    Partition,
    UniformHypergraph,
    complete_hypergraph,
    cored_structure,
    cycle_graph,
    degrees,
    detect_hypercycle,
    detect_hyperpath,
    detect_hyperstar,
    detect_sunflower,
    generate,
    hypercycle,
    hyperpath,
    hyperstar,
    is_connected,
    kth_power,
    load_graph,
    load_hypergraph,
    odd_bipartition,
    path_graph,
    satisfies_odd_bipartition,
    save_graph,
    save_hypergraph,
    star_graph,
    sunflower,
    validate,
)
from .options import DEFAULT_OPTIONS, SolverOptions
from .oracle import (
    OracleFinding,
    SpectrumDiff,
    certify,
    multistart_search,
    save_findings,
    spectrum_compare,
)
from .solvers import (
    all_real_roots,
    bisect,
    flip_cored_signs,
    lambda_l_even_cored,
    power_iteration_q,
)
from .spectra import (
    MonotonicityResult,
    SpectrumEntry,
    SpectrumReport,
    cored_lambda1,
    hypercycle3_spectrum,
    hyperpath3_spectrum,
    hyperstar_eigenvectors,
    hyperstar_lambda1_check,
    hyperstar_spectrum,
    monotonicity_check,
    odd_family_lambda_max,
    star_characteristic,
    star_positive_characteristic,
    sunflower_characteristic,
    sunflower_lambda_max,
)
from .tensor_ops import (
    EigenPair,
    StructuralReport,
    TensorKind,
    apply,
    load_pair,
    load_vector,
    make_pair,
    residual,
    save_pair,
    save_vector,
    structural_checks,
)

__version__ = "0.1.0"
