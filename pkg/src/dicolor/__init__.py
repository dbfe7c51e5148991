"""Acyclic colorings of digraphs and their dicoloring graphs.

Build digraphs (notably circulant tournaments), enumerate their acyclic
k-colorings, analyze the graph of single-vertex recolorings, construct
explicit recoloring walks, and verify the known quantitative facts about
these families at desk scale.
"""

from .digraph import (CirculantSpec, Digraph, DigraphError,
                      circulant_tournament, classify_max_acyclic,
                      delete_vertex, dichromatic_number, find_cycle_in_subset,
                      format_digraph, is_acyclic_subset,
                      is_forbidden_triangle, parse_digraph,
                      two_coloring_partitions)
from .coloring import (Coloring, ColoringError, KeyCapacityError,
                       acyclic_sets, coloring_key, enumerate_backtrack,
                       enumerate_by_partitions, first_invalid_class, is_valid,
                       parse_coloring, permute_colors, rotate)
from .reconfig import (AnalysisReport, DicoloringGraph,
                       DisconnectedScopeError, ExportCapError, analyze, build,
                       components, degree_extrema, diameter_radius, distance,
                       export_csv, export_dot, format_table, girth,
                       is_freezable, is_mixing, isolated_count, neighbors,
                       orbit_representatives)
from .walks import (CFamilyColoring, RecoloringWalk, WalkPreconditionError,
                    c_family, extend_class_to_interval, frozen_coloring,
                    validate_walk, walk_singleton_classes,
                    walk_singletons_plus_pair)
from .verify import ClaimResult, claim_ids, run_all

__version__ = "0.1.0"
