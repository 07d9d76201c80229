"""Exact chain polynomials, descent enumerators and real-rootedness
certificates for finite posets and noncrossing partition lattices.

Everything is integer or rational arithmetic; no floating point is used
anywhere, so every verdict (real-rooted, interlacing, unimodal, mode,
symmetric decomposition) is a certificate rather than an approximation.
"""

from .coxeter import (
    CoxeterType,
    NCReport,
    ReflectionGroup,
    build_reflection_group,
    flag_f_nc_d,
    nc_chain_polynomial,
    nc_h_formula,
    nc_reversed_h_identity,
    nc_symdec_report,
    noncrossing_lattice,
)
from .descents import (
    colored_descent_enumerator,
    colored_descent_enumerator_bruteforce,
    descent_enumerator,
    descent_enumerator_bruteforce,
    descent_mean_variance,
    descent_set,
    determinant_descent_enumerator,
    expected_descents,
    first_letter_descent_polynomial,
    first_letter_descent_polynomials,
    ratio_monotone,
    signed_word_columns,
    signed_word_descent_enumerator,
    signed_word_descent_enumerator_bruteforce,
    word_ascent_enumerator,
    word_ascent_enumerator_bruteforce,
    word_descent_enumerator,
    word_descent_enumerator_bruteforce,
)
from .errors import (
    DomainError,
    GradedStructureError,
    InvalidDegreeError,
    NotRealRootedError,
    PosetFileError,
    ResourceLimitError,
)
from .polynomials import (
    ONE,
    X,
    ZERO,
    Poly,
    exact_div,
    f_from_h,
    format_poly,
    h_from_f,
    is_log_concave,
    is_symmetric,
    is_unimodal,
    mode,
    parse_poly,
    poly_gcd,
    squarefree_decomposition,
    squarefree_part,
    unimodal_peaks,
    veronese,
)
from .posets import (
    FlagVectors,
    GradedBoundedPoset,
    Poset,
    adjoin_max,
    chain_polynomial,
    flag_vectors,
    load_poset,
    order_h_polynomial,
    rank_selected,
    rank_selected_h,
)
from .realroots import (
    RealRootedness,
    RootIsolation,
    count_distinct_real_roots,
    interlaces,
    is_interlacing_sequence,
    is_real_rooted,
    isolate_real_roots,
    real_rootedness,
    sturm_chain,
    wronskian_semidefinite,
)
from .simplicial import (
    boolean_lattice,
    colored_subset_poset,
    face_poset,
    is_simplicial,
    simplicial_h,
    stanley_flag_beta,
)
from .symdecomp import (
    SymmetricDecomposition,
    has_nonneg_realrooted_symdec,
    symmetric_decomposition,
)

__version__ = "1.0.0"

__all__ = [
    "CoxeterType",
    "DomainError",
    "FlagVectors",
    "GradedBoundedPoset",
    "GradedStructureError",
    "InvalidDegreeError",
    "NCReport",
    "NotRealRootedError",
    "ONE",
    "Poly",
    "Poset",
    "PosetFileError",
    "RealRootedness",
    "ReflectionGroup",
    "ResourceLimitError",
    "RootIsolation",
    "SymmetricDecomposition",
    "X",
    "ZERO",
    "adjoin_max",
    "boolean_lattice",
    "build_reflection_group",
    "chain_polynomial",
    "colored_descent_enumerator",
    "colored_descent_enumerator_bruteforce",
    "colored_subset_poset",
    "count_distinct_real_roots",
    "descent_enumerator",
    "descent_enumerator_bruteforce",
    "descent_mean_variance",
    "descent_set",
    "determinant_descent_enumerator",
    "exact_div",
    "expected_descents",
    "f_from_h",
    "face_poset",
    "first_letter_descent_polynomial",
    "first_letter_descent_polynomials",
    "flag_f_nc_d",
    "flag_vectors",
    "format_poly",
    "h_from_f",
    "has_nonneg_realrooted_symdec",
    "interlaces",
    "is_interlacing_sequence",
    "is_log_concave",
    "is_real_rooted",
    "is_simplicial",
    "is_symmetric",
    "is_unimodal",
    "isolate_real_roots",
    "load_poset",
    "mode",
    "nc_chain_polynomial",
    "nc_h_formula",
    "nc_reversed_h_identity",
    "nc_symdec_report",
    "noncrossing_lattice",
    "order_h_polynomial",
    "parse_poly",
    "poly_gcd",
    "rank_selected",
    "rank_selected_h",
    "ratio_monotone",
    "real_rootedness",
    "signed_word_columns",
    "signed_word_descent_enumerator",
    "signed_word_descent_enumerator_bruteforce",
    "simplicial_h",
    "squarefree_decomposition",
    "squarefree_part",
    "stanley_flag_beta",
    "sturm_chain",
    "symmetric_decomposition",
    "unimodal_peaks",
    "veronese",
    "word_ascent_enumerator",
    "word_ascent_enumerator_bruteforce",
    "word_descent_enumerator",
    "word_descent_enumerator_bruteforce",
    "wronskian_semidefinite",
]
