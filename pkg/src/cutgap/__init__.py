"""Exact cut LPs for k-edge-connected spanning subgraphs and extreme points of the subtour polytope."""
from .cutlp import (BOUNDED, UNBOUNDED, CutLP, CutLPResult, FractionalSolution, check_feasible, is_metric,
                    parsimonious_compare, scale, separate, solve, violation)
from .decompose import SplitResult, f_lower_witness, split_search, splitting_gap_bound, verify_split
from .extremepoints import (ExtremenessCertificate, Refutation, SolutionStats, canonical_laminar_family,
                            construct_fibonacci, directed_face_extreme, drop_directions, enumerate_extreme_points,
                            lift_to_directed, stats, tight_cross_value, verify_extreme)
from .gap import CycleColumn, GapResult, domination_gap, tsp_min_cycle
from .graphcore import (CutSet, Edge, GraphError, MultiGraph, canonical_label, cut_edges, edge_connectivity,
                        global_min_cut, is_k_edge_connected)
from .metric import ecsm_to_ecss, expand_to_paths, metric_closure, minimalize
from .reductions import (PathCoverInstance, SetCoverInstance, kecss_from_pcot, path_edges, pcot_is_feasible,
                         pcot_opt, setcover_opt, setcover_to_pcot)

__version__ = "0.1.0"
