"""Exact computations for the walled Brauer algebra B_{r,s}(delta)."""
from .blocks import (AlgebraParams, BlockReport, block_partition, is_balanced,
                     is_semisimple, maximal_balanced_sub, minimal_balanced_weight,
                     semisimple_verdict)
from .cell_modules import (CellLabel, build_cell_module, cell_labels, gram_matrix,
                           hom_space_dim, t_element_matrix)
from .combinatorics import Bipartition, Box, Partition
from .diagrams import (DiagramElement, WalledDiagram, enumerate_basis, idempotent_e,
                       multiply)
from .geometry import (GeometryContext, Weight, dot_reflect, linkage_allows, same_w_orbit,
                       same_wp_orbit, to_weight)
from .harness import SweepSpec, VerifyReport, run_suite
from .scalars import Poly, make_context
from .specht import build_specht

__version__ = "0.1.0"

__all__ = [
    "AlgebraParams", "BlockReport", "block_partition", "is_balanced", "is_semisimple",
    "maximal_balanced_sub", "minimal_balanced_weight", "semisimple_verdict",
    "CellLabel", "build_cell_module", "cell_labels", "gram_matrix", "hom_space_dim",
    "t_element_matrix", "Bipartition", "Box", "Partition", "DiagramElement", "WalledDiagram",
    "enumerate_basis", "idempotent_e", "multiply", "GeometryContext", "Weight", "dot_reflect",
    "linkage_allows", "same_w_orbit", "same_wp_orbit", "to_weight", "SweepSpec", "VerifyReport",
    "run_suite", "Poly", "make_context", "build_specht",
]
