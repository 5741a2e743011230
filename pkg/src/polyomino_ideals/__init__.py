"""Polyominoes, inner-2-minor ideals, Krull dimension and Koenig certificates."""

__version__ = "0.1.0"

from .errors import (
    BudgetExceededError,
    DisconnectedCellsError,
    EmptyPolyominoError,
    LogCorruptError,
    NotClosedPathError,
    NotProperIntervalError,
    PolyominoIdealsError,
)
from .lattice import Cell, CornerPair, Interval, Point, cell, cell_vertices, corners
from .polyomino import (
    HORIZONTAL,
    VERTICAL,
    Block,
    ClassificationReport,
    EdgeInterval,
    Polyomino,
    build,
    classify,
    from_file,
    from_text,
    inner_intervals,
    maximal_blocks,
    maximal_edge_intervals,
    to_json_obj,
    to_text,
)
from .configurations import (
    ClosedPathSequence,
    GammaLikePath,
    Ladder,
    LConfiguration,
    SkewPath,
    ZigZagSearch,
    ZigZagWalk,
    closed_path_sequence,
    find_gamma_like_paths,
    find_L_configurations,
    find_ladders,
    find_skew_paths,
    find_zigzag_walks,
    is_prime_closed_path,
)
from .algebra import (
    Binomial,
    GroebnerBasis,
    MonomialOrder,
    VariableSet,
    binomial_str,
    buchberger,
    certify_groebner,
    initial_term,
    inner_minors,
    normal_form,
)
from .dimension import (
    FaceComplex,
    MonomialIdeal,
    face_complex,
    groebner_basis,
    height,
    initial_ideal,
    krull_dim,
    monomial_ideal,
    monomial_quotient_dim,
)
from .koenig import (
    KoenigCertificate,
    SelectionEntry,
    VerificationReport,
    WalkResult,
    certificate_from_json,
    certificate_to_json,
    search_certificate,
    verify_certificate,
    walk_order,
    weight_feasible,
)
from .enumeration import (
    EnumerationConfig,
    canonical_form,
    enumerate_closed_paths,
    enumerate_polyominoes,
)
from .golden import golden_index, golden_names, load_golden
from .harness import HarnessRecord, HarnessSummary, read_log, reverify_log, run_harness, summarize_log
from .render import render_text, save_polyomino_figure
