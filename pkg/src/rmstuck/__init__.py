"""Joint stuck-at and random error correction for binary memories.

Masks covering any s stuck cells in a 2^m-bit word are built recursively and
are codewords of the Reed-Muller code RM(s-1, m), so adding one to a codeword
of any RM(r, m) with r >= s-1 stays inside the code: the encoder satisfies the
defects it knows about, and the decoder corrects random errors and undoes the
mask from a handful of label bits, without ever seeing the side information.
"""

from .bitword import StuckPattern, complement, word_from_bits, word_from_hex, word_to_hex
from .codec import CodecConfig, decode, decode_many, encode, new_codec
from .errors import (
    CapacityError,
    DecodeFailure,
    InfeasibleLabelError,
    LabelError,
    ParameterError,
    RmStuckError,
)
from .harness import (
    SimStats,
    VerificationReport,
    reproduce_table,
    simulate,
    verify_coverage,
    verify_theorems,
)
from .kernels import backend
from .labeling import (
    Label,
    count_labels_s2,
    greedy_label,
    label_lower_bound,
    label_s2,
    label_upper_bound,
    label_upper_bound_coarse,
    make_label,
    validate_label,
)
from .masks import (
    MaskSet,
    build_mask_set,
    count_lower_bound,
    count_upper_bound,
    covers,
    is_member,
    load_mask_set,
    mask_count,
    save_mask_set,
    synthesize_mask,
)
from .reed_muller import (
    RmCode,
    anf_degree,
    anf_degrees,
    choose_information_set,
    generator_matrix,
    is_codeword,
    rank,
    rm_params,
    systematic_encode,
)
from .reed_muller import decode as rm_decode
from .reed_muller import decode_words as rm_decode_words

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "CodecConfig",
    "DecodeFailure",
    "InfeasibleLabelError",
    "Label",
    "LabelError",
    "MaskSet",
    "ParameterError",
    "RmCode",
    "RmStuckError",
    "SimStats",
    "StuckPattern",
    "VerificationReport",
    "anf_degree",
    "anf_degrees",
    "backend",
    "build_mask_set",
    "choose_information_set",
    "complement",
    "count_labels_s2",
    "count_lower_bound",
    "count_upper_bound",
    "covers",
    "decode",
    "decode_many",
    "encode",
    "generator_matrix",
    "greedy_label",
    "is_codeword",
    "is_member",
    "label_lower_bound",
    "label_s2",
    "label_upper_bound",
    "label_upper_bound_coarse",
    "load_mask_set",
    "make_label",
    "mask_count",
    "new_codec",
    "rank",
    "reproduce_table",
    "rm_decode",
    "rm_decode_words",
    "rm_params",
    "save_mask_set",
    "simulate",
    "synthesize_mask",
    "validate_label",
    "verify_coverage",
    "verify_theorems",
    "word_from_bits",
    "word_from_hex",
    "word_to_hex",
]
