"""Extreme points of the subtour LP: construction, certification, enumeration and the directed lift."""
from .certify import (ExtremenessCertificate, Refutation, SolutionStats, all_tight_sets, solve_tight_system, stats,
                      tight_cross_value, tight_lemma_triples, tight_sets, uniqueness_chain, verify_extreme)
from .construction import (FIGURE_SOLUTIONS, canonical_laminar_family, construct_fibonacci, fibonacci,
                           fibonacci_pairs, is_laminar, sets_cross)
from .directed import (DirectedSolution, directed_face_extreme, drop_directions, is_atsp_feasible,
                       lift_to_directed, violated_dicut)
from .enumeration import (EnumeratedPoint, EnumerationBoundError, basic_solutions_on_support,
                          brute_force_basic_solutions, candidate_supports, enumerate_extreme_points,
                          enumerate_up_to, solution_label, value_multiset)
