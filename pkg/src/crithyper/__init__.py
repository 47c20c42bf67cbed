"""Critical 3-hypergraphs: modules, primality graphs and the path-forest construction."""

from .config import Bounds, bounds
from .construction import ConstructionInput, build, decompose, validate
from .criteria import CriteriaReport, evaluate_criteria, predict_and_crosscheck
from .errors import CapacityError, CounterexampleError, InputError
from .graphs import (SimpleGraph, classify_components, cycle_graph, find_isomorphism, is_circular,
                     is_isomorphic, path_graph, primality_graph)
from .hypergraph import (Hypergraph, check_two_vertex_removal, extension_partition, induced, is_critical,
                         is_module, is_prime, nontrivial_modules, remove)
from .tournaments import (FAMILIES, Tournament, c3_structure, dual, is_critical_tournament,
                          is_prime_tournament, make_T, make_U, make_W, make_linear, realize)

__version__ = "0.1.0"

__all__ = [
    "Bounds", "bounds",
    "ConstructionInput", "build", "decompose", "validate",
    "CriteriaReport", "evaluate_criteria", "predict_and_crosscheck",
    "CapacityError", "CounterexampleError", "InputError",
    "SimpleGraph", "classify_components", "cycle_graph", "find_isomorphism", "is_circular",
    "is_isomorphic", "path_graph", "primality_graph",
    "Hypergraph", "check_two_vertex_removal", "extension_partition", "induced", "is_critical",
    "is_module", "is_prime", "nontrivial_modules", "remove",
    "FAMILIES", "Tournament", "c3_structure", "dual", "is_critical_tournament",
    "is_prime_tournament", "make_T", "make_U", "make_W", "make_linear", "realize",
]
