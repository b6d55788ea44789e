"""Homology of links in thickened orientable surfaces.

Diagrams are decorated 4-valent graphs with integer homology labels on arcs;
the library resolves them into dotted cubes of smoothings, assembles exact
rational chain complexes in a plain (trigraded) and a perturbed (bifiltered)
variant, computes their homology, and derives concordance obstruction
reports.
"""

from .algebra import (PERTURBED, PLAIN, ChainComplex, Grading, State,
                      assemble_complex, edge_map, from_rg_basis, grading,
                      state_basis, to_rg_basis)
from .corpus import corpus_get, corpus_list
from .diagram import (Arc, CohomologyClass, Crossing, SurfaceDiagram,
                      component_classes, genus_of_closed_surface,
                      nonzero_classes, parse_diagram, writhe)
from .errors import (DiagramError, DKHError, MoveError,
                     SingleCycleInterferenceError, UnknownCorpusName,
                     ZeroClassWarning)
from .homology import (FilteredBidegrees, GradedDims, homology_perturbed,
                       homology_plain, kernel_basis, rank_rational)
from .moves import apply_r1, apply_r2, apply_r3
from .obstruct import (ObstructionReport, TntResult, ascent_report,
                       elementary_rank, is_totally_nontrivial,
                       perturbed_bidegrees)
from .smoothing import Circle, CubeEdge, DottedCube, Smoothing, build_cube, resolve

__version__ = "0.1.0"

__all__ = [
    "Arc", "ChainComplex", "Circle", "CohomologyClass", "Crossing",
    "CubeEdge", "DiagramError", "DKHError", "DottedCube",
    "FilteredBidegrees", "GradedDims", "Grading", "MoveError",
    "ObstructionReport", "PERTURBED", "PLAIN",
    "SingleCycleInterferenceError", "Smoothing", "State", "SurfaceDiagram",
    "TntResult", "UnknownCorpusName", "ZeroClassWarning",
    "apply_r1", "apply_r2", "apply_r3", "ascent_report", "assemble_complex",
    "build_cube", "component_classes", "corpus_get", "corpus_list",
    "edge_map", "elementary_rank", "from_rg_basis",
    "genus_of_closed_surface", "grading", "homology_perturbed",
    "homology_plain", "is_totally_nontrivial", "kernel_basis",
    "nonzero_classes", "parse_diagram", "perturbed_bidegrees",
    "rank_rational", "resolve", "state_basis", "to_rg_basis", "writhe",
]
