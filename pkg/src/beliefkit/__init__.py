"""Sparse Dempster-Shafer belief functions with focal-set size control.

Basic belief assignments are stored sparsely by their focal elements
(bit-mask keyed), combined with the non-normalized conjunctive rule, and
kept small by three reduction families: the least committed isopignistic,
mixed linear reductions preserving the pignistic probability plus one other
body of evidence, and k-means clustering of focal elements. Brute-force
powerset oracles back every fast path.
"""

from .combine import conjunctive, conjunctive_many, conjunctive_via_q
from .core import (
    EPS_MASS,
    EPS_SUM,
    Frame,
    Mask,
    MassFunction,
    make_bba,
    make_frame,
    parse_subset,
    vacuous,
)
from .evidence import PignisticVector, bel, betp, betp_vector, pl, q
from .io import dumps_bba, loads_bba, read_bba, write_bba
from .kmeans import (
    ClusterState,
    KMeansConfig,
    cluster_center,
    kmeans_reduce,
    set_distance,
)
from .linear import (
    ConstraintSystem,
    ReductionReport,
    bet_inverse_apply,
    build_constraint_system,
    least_committed_isopignistic,
    reduce_betp_bel,
    reduce_betp_pl,
    reduction_report,
    solve_reduction,
)
from .oracle import oracle_body, oracle_conjunctive, sample_isopignistic
from .transform import DenseMassVector, from_dense, m_from_q, q_from_m, to_dense
from . import errors

__all__ = [
    "EPS_MASS",
    "EPS_SUM",
    "Frame",
    "Mask",
    "MassFunction",
    "PignisticVector",
    "DenseMassVector",
    "ConstraintSystem",
    "ReductionReport",
    "ClusterState",
    "KMeansConfig",
    "errors",
    "make_frame",
    "parse_subset",
    "make_bba",
    "vacuous",
    "bel",
    "pl",
    "q",
    "betp",
    "betp_vector",
    "to_dense",
    "from_dense",
    "q_from_m",
    "m_from_q",
    "conjunctive",
    "conjunctive_many",
    "conjunctive_via_q",
    "bet_inverse_apply",
    "least_committed_isopignistic",
    "build_constraint_system",
    "solve_reduction",
    "reduce_betp_pl",
    "reduce_betp_bel",
    "reduction_report",
    "set_distance",
    "cluster_center",
    "kmeans_reduce",
    "oracle_body",
    "oracle_conjunctive",
    "sample_isopignistic",
    "dumps_bba",
    "loads_bba",
    "read_bba",
    "write_bba",
]

__version__ = "0.1.0"
