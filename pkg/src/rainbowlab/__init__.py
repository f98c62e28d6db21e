"""Exact rainbow path and cycle search in edge-colored graphs, with
mechanical checks of the known color-degree bounds."""

from .errors import (
    GraphInputError,
    InapplicableError,
    PreconditionError,
    RainbowLabError,
    SchemaError,
    SpecError,
)
from .graph import (
    ColorSet,
    EdgeColoredGraph,
    VertexCycle,
    VertexPath,
    color_degree,
    colors_between,
    distinct_color_count,
    format_graph,
    is_rainbow,
    is_triangle_free,
    min_color_degree,
    parse_graph,
    read_graph,
    write_graph,
)
from .kernels import BACKEND
from .search import (
    UNLIMITED,
    Answer,
    C4Certificate,
    CycleQuery,
    SearchBudget,
    SearchResult,
    certify_c4,
    has_rainbow_c4,
    has_rainbow_cycle_at_least,
    longest_rainbow_cycle,
    longest_rainbow_path,
)
from .oracle import oracle_enumerate, oracle_max_length, oracle_maxima
from .lemmas import check_lemma1, check_lemma2
from .trace import ProofTrace, compute_proof_trace, verify_trace_inequalities
from .theorems import THEOREM_IDS, compare_guarantees, evaluate_theorem, hunt_conjecture
from .generators import GenSpec, filter_certified, generate, parse_genspec

__version__ = "0.1.0"
