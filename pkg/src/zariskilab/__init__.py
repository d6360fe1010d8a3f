"""Finite relational structures, their endomorphism monoids, cores, and witness
synthesis for Zariski basic sets on copies of complete bipartite graphs."""

from .errors import (CapExceeded, CopySplit, DimensionMismatch, IncompatibleSignatures,
                     InconsistentParts, InvalidParameter, LabError, NotAnEndomorphism,
                     PreconditionViolated, SizeGuardExceeded, WindowTooSmall)
from .maps import FiniteMap, PartialInjection
from .relstruct import (Relation, Structure, decode, encode, gen_complete, gen_core_C, gen_G,
                        gen_Kmm, induced_substructure)
from .search import (MorphismKind, automorphisms, check_morphism, endomorphisms,
                     enumerate_morphisms, find_morphism, is_isomorphic, iter_morphisms)
from .monoid import (Side, Word, WordPair, closure, compose, eval_word, member_M,
                     pointwise_basic, translate_wordpair)
from .wreath import (WreathElement, a_minus, a_plus, c_minus, c_plus,
                     check_wreath_characterization, id_ltimes, ltimes, map_to_wreath,
                     part_swap, sgn, wreath_count, wreath_to_map)
from .cores import (check_homogeneity, check_image_bound, compute_core, hom_equivalent,
                    is_core, is_transitive, mobile_core_check, relative_orbit)
from .separation import (IndexWord, SeparationReport, compute_sign_trace,
                         disagreement_neighborhood, eval_index_word, fresh_start_witness,
                         non_hausdorff_witness, required_window, separate,
                         sign_flip_neighborhood)

__all__ = [
    "CapExceeded", "CopySplit", "DimensionMismatch", "IncompatibleSignatures",
    "InconsistentParts", "InvalidParameter", "LabError", "NotAnEndomorphism",
    "PreconditionViolated", "SizeGuardExceeded", "WindowTooSmall", "Relation",
    "Structure", "decode", "encode", "gen_complete", "gen_core_C", "gen_G", "gen_Kmm",
    "induced_substructure", "MorphismKind", "automorphisms", "check_morphism",
    "endomorphisms", "enumerate_morphisms", "find_morphism", "is_isomorphic",
    "iter_morphisms", "Side", "Word", "WordPair", "closure", "compose", "eval_word",
    "member_M", "pointwise_basic", "translate_wordpair", "WreathElement", "a_minus",
    "a_plus", "c_minus", "c_plus", "check_wreath_characterization", "id_ltimes",
    "ltimes", "map_to_wreath", "part_swap", "sgn", "wreath_count", "wreath_to_map",
    "check_homogeneity", "check_image_bound", "compute_core", "hom_equivalent",
    "is_core", "is_transitive", "mobile_core_check", "relative_orbit", "IndexWord",
    "SeparationReport", "compute_sign_trace", "disagreement_neighborhood",
    "eval_index_word", "fresh_start_witness", "non_hausdorff_witness",
    "required_window", "separate", "sign_flip_neighborhood", "FiniteMap",
    "PartialInjection",
]

__version__ = "0.1.0"
