"""smallstretch: desk-scale verification of the computational machinery
behind small-stretch-factor surface homeomorphisms.

Five areas, one per module: exact Perron-Frobenius brackets for integer
matrices (intmatrix), twist words on filling curve systems and their
dilatations (penner), directed-graph walk counts, girth, and layered
certificates plus the shift-graph family (digraphs), coprime-gap number
theory (numtheory), and entropy bound tables (bounds).  The verify
module runs every claim end to end; the cli module exposes it all.
"""

from .bounds import (BoundRecord, bounds_table, layered_upper, penner_lower,
                     penner_reference_upper, records_to_csv, records_to_json,
                     thurston_interpolation, uniform_lower, uniform_upper)
from .digraphs import (DiGraph, LayeredPartition, ShiftGraph, build_shift_graph,
                       check_girth_threshold, check_layered_partition,
                       check_path_counts, count_paths, from_matrix,
                       girth_directed, layered_path_bound, max_paths,
                       path_counts, path_type_count, predicted_girth,
                       random_layered_graph, shift_graph_girth, to_matrix,
                       weighted_path_cap)
from .intmatrix import (ConvergenceError, IntMatrix, NotPrimitiveError,
                        SpectralBracket, is_primitive, is_primitive_bruteforce,
                        mat_mul, mat_pow, matrix_from_text, matrix_to_text,
                        pf_eigen, row_sum_bracket, wielandt_bound)
from .numtheory import (CoprimeSequence, coprime_interval_check,
                        coprime_near_half, coprime_sequence, crt_shift,
                        genus_from_terms, jacobsthal, jacobsthal_bruteforce,
                        jacobsthal_fit, jacobsthal_table, min_interval_constant)
from .penner import (ALPHA, BETA, CurveSystem, Permute, Twist, TwistWord,
                     chain_system, check_curve_system, check_penner_word,
                     dilatation, genus_two_example_word, necklace_rotation,
                     necklace_system, permutation_matrix, twist_matrix,
                     two_curve_system, two_curve_word, word_matrix)
from .verify import run_all

__version__ = "0.1.0"

__all__ = [
    "ALPHA", "BETA", "BoundRecord", "ConvergenceError", "CoprimeSequence",
    "CurveSystem", "DiGraph", "IntMatrix", "LayeredPartition",
    "NotPrimitiveError", "Permute", "ShiftGraph", "SpectralBracket", "Twist",
    "TwistWord", "bounds_table", "build_shift_graph", "chain_system",
    "check_curve_system", "check_girth_threshold", "check_layered_partition",
    "check_path_counts", "check_penner_word", "coprime_interval_check",
    "coprime_near_half", "coprime_sequence", "count_paths", "crt_shift",
    "dilatation", "from_matrix", "genus_from_terms", "genus_two_example_word",
    "girth_directed", "is_primitive", "is_primitive_bruteforce", "jacobsthal",
    "jacobsthal_bruteforce", "jacobsthal_fit", "jacobsthal_table",
    "layered_path_bound", "layered_upper", "mat_mul", "mat_pow",
    "matrix_from_text", "matrix_to_text", "max_paths", "min_interval_constant",
    "necklace_rotation", "necklace_system", "path_counts", "path_type_count",
    "penner_lower", "penner_reference_upper", "permutation_matrix", "pf_eigen",
    "predicted_girth", "random_layered_graph", "records_to_csv",
    "records_to_json", "row_sum_bracket", "run_all", "shift_graph_girth",
    "thurston_interpolation", "to_matrix", "twist_matrix", "two_curve_system",
    "two_curve_word", "uniform_lower", "uniform_upper", "weighted_path_cap",
    "wielandt_bound", "word_matrix",
]
