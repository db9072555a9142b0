"""Hamiltonicity search, K1/K2-hamiltonicity predicates and the constructions built on them."""

__version__ = "0.1.0"

from .engine import (Constraints, SearchStats, count_hamiltonian_cycles, find_disjoint_spanning_paths,  # noqa: E402
                     find_hamiltonian_cycle, find_hamiltonian_path, is_hamiltonian, iter_hamiltonian_cycles)
from .errors import CapacityError, GraphError, K2HamError, ParseError, PreconditionError, Undecided  # noqa: E402
from .graph import Graph, delete_vertices, girth, is_bipartite_balanced, is_k_connected  # noqa: E402
from .catalog import named, parse_name  # noqa: E402
from .predicates import (exceptional_vertices, is_hypohamiltonian, is_k1_hamiltonian,  # noqa: E402
                         is_k2_hamiltonian, is_k2_hypohamiltonian, is_snark)
