"""Diameter perfect constant-weight ternary codes built from Hamming code cosets.

The package builds the code families (perfect distance-3 codes from linear
maps, distance-5 codes from APN permutations, the 12-word distance-4 code
of length 6, and Preparata-like binary codes) and checks their parameters
by exhaustive computation.
"""

from .codes import (
    Code,
    ConstructionError,
    LazyCode,
    SizeLimitError,
    build_d3,
    build_d4_conference,
    build_d5,
    build_preparata,
    build_preparata_evf,
    d3_length_admissible,
    d4_length_admissible,
    shorten,
    tau_z,
)
from .gf2field import FieldSpec, GaloisField, default_spec, field
from .hamming import ColumnMap, Coset, pair_q, pair_r, syndrome
from .operators import (
    MOperator,
    direct_sum,
    gold,
    inverse,
    is_apn,
    is_bijective,
    is_f_plus_id_bijective,
    matrix,
    parse_operator,
    power,
    primitive_mul,
    satisfies_propf,
)
from .words import (
    Automorphism,
    BinaryWord,
    Edge,
    TernaryWord,
    anticode_A,
    apply_automorphism,
    ball,
    chi,
    chi_inv,
    diameter,
    edge_distance,
    hamming_distance,
    parse_word,
    space_size,
    square_anticode,
)

__version__ = "0.1.0"
