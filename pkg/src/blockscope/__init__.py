"""Exact character theory and p-block computations for finite permutation groups."""
from .blocks import (BlockPartition, block_distribution, central_character, defect_and_heights,
                     height_zero_chars, p_prime_degree, p_rational_chars, principal_block_characters,
                     sigma2_check)
from .chartab import (Character, CharacterTable, ClassFunction, character_kernel, compute_character_table,
                      constituents, extensions_of, induce_character, inflate_character, inner_product,
                      irr_over, restrict_character)
from .correspond import (ActionScene, CorrespondenceResult, compute_C, p_invariant_characters,
                         relative_glauberman, theorem_F_extension)
from .cyclo import (Cyclotomic, E, GaloisAut, ReductionMap, build_reduction, galois_apply, is_p_rational,
                    reduce, sigma_two_special)
from .errors import (BlockscopeError, CapacityError, CyclotomicArithmeticError, DomainError,
                     HypothesisError, InputError, TheoremViolation)
from .permgroup import (ConjugacyClasses, PermGroup, Permutation, QuotientMap, centralizer,
                        centralizer_of_subgroup, conjugacy_classes, core_p_prime, group_from_generators,
                        has_normal_p_complement, is_normal, normalizer, quotient, subgroup_generated,
                        sylow_subgroup)
from .verify import (VerificationReport, corpus_run, reproduce_counterexample_216_158,
                     verify_conjecture_6_2, verify_corollary_3_6, verify_theorem_D, verify_theorem_E_scene,
                     verify_theorem_F_instance)

__all__ = ["BlockPartition", "block_distribution", "central_character", "defect_and_heights",
           "height_zero_chars", "p_prime_degree", "p_rational_chars", "principal_block_characters",
           "sigma2_check", "Character", "CharacterTable", "ClassFunction", "character_kernel",
           "compute_character_table", "constituents", "extensions_of", "induce_character",
           "inflate_character", "inner_product", "irr_over", "restrict_character", "ActionScene",
           "CorrespondenceResult", "compute_C", "p_invariant_characters", "relative_glauberman",
           "theorem_F_extension", "Cyclotomic", "E", "GaloisAut", "ReductionMap", "build_reduction",
           "galois_apply", "is_p_rational", "reduce", "sigma_two_special", "BlockscopeError", "CapacityError",
           "CyclotomicArithmeticError", "DomainError", "HypothesisError", "InputError", "TheoremViolation",
           "ConjugacyClasses", "PermGroup", "Permutation", "QuotientMap", "centralizer",
           "centralizer_of_subgroup", "conjugacy_classes", "core_p_prime", "group_from_generators",
           "has_normal_p_complement", "is_normal", "normalizer", "quotient", "subgroup_generated",
           "sylow_subgroup", "VerificationReport", "corpus_run", "reproduce_counterexample_216_158",
           "verify_conjecture_6_2", "verify_corollary_3_6", "verify_theorem_D", "verify_theorem_E_scene",
           "verify_theorem_F_instance"]

__version__ = "0.1.0"
