"""Edge colourings of complete graphs that are good with respect to a mandatory triple set.

Builds the 3-colour colouring of K_3432 on the 7-subsets of [14], verifies
it against M_2 = {r, b0, b1}^3 minus {b0, b1}^3, replays the witness
families edge by edge, and provides generic tools for other mandatory sets.
"""

from .construct import (EdgeColoring, IntersectionRule, base_color, build_affine_coloring,
                        build_cyclic_coloring, build_intersection_coloring, build_m2_coloring)
from .core import PointSet, enumerate_vertices, intersection_size, vertex_from_index, vertex_index
from .mandate import Label, MandatorySet, Need, mandatory_lyndon, mandatory_mn
from .oracle import naive_verify
from .replay import canonical_map, candidate_family, replay_all, replay_edge
from .search import DifferenceSet, is_sum_free, search_split
from .splitgraph import (BlueShade, SplittingGraph, build_cyclic_splitting, find_mono_biclique,
                         find_mono_clique, default_splitting, validate_splitting)
from .verify import check_atom_property, color_rows, verify_good, witness_set

__version__ = "0.1.0"
