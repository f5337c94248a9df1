"""Doubly-even codes, their coset chromotopologies, valise Adinkras, and
exact counts of garden-algebra generator sets."""

from .adinkra import (Dashing, ValiseAdinkra, ValiseRanking, count_dashings, dashing_at, dashing_system,
                      enumerate_dashings, flip_vertex, is_adinkraizable, two_colored_cycles, validate_dashing)
from .bitlinalg import (AffineSolution, AffineSystem, BitMatrix, BitWord, enumerate_subspaces, gaussian_binomial,
                        rank, rref, row_space, solve_affine)
from .census import CensusResult, code_count, dashing_multiplier, signed_class_count, unsigned_class_count
from .chromotopology import Chromotopology, bipartition, build_from_code, coset_graph, to_dot, validate
from .codes import (DoublyEvenCode, codewords, count_doubly_even, enumerate_doubly_even, gaborit_count,
                    is_doubly_even, weight_distribution)
from .errors import Inconsistent, ResourceGuardError, Unsupported
from .garden import (GeneratorList, RowOrderedValiseAdinkra, SignedPermutationMatrix, adinkra_to_generators,
                     check_relations, generators_to_adinkra, same_row_ordered, unsign)
from .report import Check, ValidationReport

__version__ = "0.1.0"
