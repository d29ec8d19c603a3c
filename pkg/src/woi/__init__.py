"""Edge ideals of weighted oriented graphs: exact symbolic powers,
Betti numbers, Castelnuovo-Mumford regularity, and machine-checkable
verdicts for the regularity comparison claims, with a CLI."""

from .complexes import SimplicialComplex, homology_dims
from .errors import (ConsistencyError, GraphError, HypothesisError,
                     ResourceCapError, WoiError)
from .graphs import (Classification, SettingPath, Vertex, WeightedOrientedGraph,
                     detect_setting_paths, enumerate_motifs, parse_graph)
from .monomials import MonomialIdeal, intersect_many, minimalize, monomial_str
from .regularity import (DEFAULT_LIMITS, DEFAULT_PRIME, BettiTable, DegreeComplex,
                         EngineLimits, betti_table, degree_complex, lcm_lattice,
                         regularity, takayama_regularity, upper_koszul)
from .symbolic import (edge_ideal, ideals_equal, lemma35_witness, minimal_primes,
                       symbolic_power, underlying_edge_ideal)
from .theorems import (DEFAULT_CONFIG, HarnessConfig, Verdict,
                       check_betti_monotonicity, check_colon_lemmas,
                       check_forest_bound_and_slopes, check_lower_bound,
                       check_second_power_bounds, check_symbolic_vs_ordinary,
                       check_witness_monomials, run_claims)
from .corpus import CorpusEntry, load_corpus, run_corpus

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
