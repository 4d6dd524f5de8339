"""artinkit: exact combinatorial computation with Artin groups.

Presentation graphs and their classification, dihedral normal forms and word
problems, chunk trees and induced-cycle graphs, dual-tree geometry for
two-generator groups, integer Gauss-Bonnet audits of disc diagrams, edge-twist
families, and automorphism-group generating sets with decision procedures for
Out-finiteness and the co-Hopf property.
"""

from .automorphisms import (
    GeneratorMap,
    HomShape,
    TwistFamily,
    Verdict,
    VerifyResult,
    aut_generators,
    compose,
    conjugation_map,
    decide_cohopfian,
    decide_out_finite,
    edge_twist,
    graph_auto_map,
    graph_hash,
    hom_shapes,
    identity_map,
    inversion_map,
    proper_self_embedding,
    twist_family,
    verify_standard_form,
)
from .curvature import (
    CurvatureReport,
    DiscDiagram,
    RedistributedReport,
    attach_star,
    curvatures,
    dump_diagram,
    load_diagram,
    polygonalize,
    redistribute,
    star_diagram,
    validate,
    with_markings,
)
from .decomposition import (
    ChunkTree,
    InducedCycleGraph,
    chunk_tree,
    chunk_tree_text,
    chunks,
    cut_vertices,
    cycle_chain_witness,
    cycle_graph,
    induced_cycles,
    separating_edges,
)
from .dihedral import (
    GarsideNormalForm,
    alternating_equality,
    alternating_equality_closed_form,
    alt_product,
    delta_word,
    distinguished,
    garside_nf,
    oracle_equal,
    oracle_key,
    words_equal,
)
from .dualtree import (
    AxisDescription,
    PairClassification,
    TreeBall,
    axis_segment,
    classify_pair,
    tree_ball,
)
from .errors import (
    ArtinKitError,
    CapExceeded,
    DiagramError,
    GraphError,
    HypothesisError,
    PreconditionError,
    SearchExhausted,
    WordError,
)
from .presentation import (
    FundamentalDomain,
    PresentationGraph,
    TypeFlags,
    classify,
    fundamental_domain,
    labelled_embeddings,
    labelled_isomorphisms,
    parse_graph,
)
from .words import Word, generator, parse_word

__version__ = "0.1.0"
