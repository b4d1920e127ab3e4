"""Fuzzy clustering toolkit: c-means, Gustafson-Kessel, forest-optimization
hybrids, seven validity indexes, and cluster-count sweeps."""

from .core import (
    ClusterConfig,
    ClusterModel,
    CsvParseError,
    DataSet,
    DegenerateClusterError,
    FuzzySweepError,
    MembershipMatrix,
    SingularCovarianceError,
    UndefinedIndexError,
    best_map_accuracy,
    hard_assign,
    load_csv,
    save_csv,
    sq_euclidean,
)
from .cvi import INDEX_DIRECTIONS, INDEX_ORDER, IndexValue, evaluate_all
from .fcm import FcmResult, fcm_run, init_membership, make_rng, objective, update_centers, update_memberships
from .foa import FoaParams, FoaResult, Tree, foa_minimize
from .gk import GkConfig, fuzzy_covariance, gk_distance_sq, gk_run, norm_matrix
from .hybrid import (
    decode_centers,
    encode_centers,
    foa_fcm_run,
    foa_gk_run,
    hybrid_fitness_fcm,
    hybrid_fitness_gk,
)
from .sweep import CviReport, SweepConfig, Tally, classify_detection, run_sweep, tally

__version__ = "0.1.0"

__all__ = [
    "ClusterConfig", "ClusterModel", "CsvParseError", "DataSet",
    "DegenerateClusterError", "FuzzySweepError", "MembershipMatrix",
    "SingularCovarianceError", "UndefinedIndexError", "best_map_accuracy",
    "hard_assign", "load_csv", "save_csv", "sq_euclidean",
    "INDEX_DIRECTIONS", "INDEX_ORDER", "IndexValue", "evaluate_all",
    "FcmResult", "fcm_run", "init_membership", "make_rng", "objective",
    "update_centers", "update_memberships",
    "FoaParams", "FoaResult", "Tree", "foa_minimize",
    "GkConfig", "fuzzy_covariance", "gk_distance_sq", "gk_run", "norm_matrix",
    "decode_centers", "encode_centers", "foa_fcm_run", "foa_gk_run",
    "hybrid_fitness_fcm", "hybrid_fitness_gk",
    "CviReport", "SweepConfig", "Tally", "classify_detection", "run_sweep", "tally",
    "__version__",
]
