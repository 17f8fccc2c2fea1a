"""Lattice codes for bounded-deletion channels.

Binary words with long enough runs map isometrically to integer vectors
under the Manhattan metric; packings carved from mod-2 and mod-4 preimage
lattices of linear codes then give deletion-correcting codebooks, with
exact generating-function enumeration, explicit search and decoding, and
sphere-packing bounds.
"""

from .bounds import (
    AsymptoticPoint,
    BoundReport,
    ambient_count,
    ball_volume,
    bound_report,
    entropy,
    gilbert_lower,
    hamming_upper,
    johnson_upper,
    lee_exponent,
    rate_bound,
)
from .channel import ChannelConfig, SimulationReport, apply_deletions, run_pipeline
from .codebook import Codebook, exact_packing_number, generate, naive_node_bound, visit_counts
from .decoder import DecodeTrace, count_operations, decode, phi_projection
from .errors import (
    CapacityError,
    ConstructionError,
    DegreeError,
    HypothesisViolation,
    LatdelError,
    ParameterError,
)
from .gf2 import (
    BinaryLinearCode,
    WeightDistribution,
    build_binary_code,
    even_weight,
    hamming8,
    min_hamming_weight,
    reed_muller,
    repetition,
    weight_distribution,
)
from .lattice import ConstructionALattice, coset_structure_check, klemm_generator_matrix, min_distance
from .runlength import (
    RunVector,
    levenshtein_indel_distance,
    manhattan_distance,
    phi,
    phi_inverse,
    validate_hypothesis,
)
from .series import IntSeries, NuSeries, ball_series, geometric_power, hat_coefficient, nu_series
from .z4 import (
    CompleteWeightEnumerator,
    Z4LinearCode,
    build_z4_code,
    bw16_code,
    complete_weight_enumerator,
    golay_z4,
    hensel_lift_golay,
    klemm,
    min_lee_distance,
    shifted_weight_distribution,
)

__version__ = "0.1.0"
