"""Exact verification toolkit for crossed products of algebras.

Everything is computed over the rationals with exact arithmetic: algebras are
structure-constant data on finite-dimensional spaces, maps between tensor
products are dense rational matrices, and every axiom check is an entrywise
matrix equality with a basis-labeled witness on failure.
"""

from .algebras import (
    Algebra,
    PointedSpace,
    check_algebra,
    group_algebra,
    scalar_algebra,
    truncated_poly,
    unit_embed,
)
from .bundle import (
    AlgebraEntry,
    BundleGraph,
    CrossedEntry,
    IterationEntry,
    MapEntry,
    bundle_text,
    corpus_graph,
    env_from_graph,
    instance_graph,
    load_bundle,
    save_bundle,
)
from .cli import main, run_command
from .crossed import (
    CrossedData,
    TwistingMap,
    build_crossed_algebra,
    build_twisted_tensor,
    check_crossed_axioms,
    check_twisting_map,
    crossed_axiom_sides,
    flip_twist,
    twisted_to_crossed,
    twisting_axiom_sides,
)
from .dsl import Compose, Env, Id, MapExpr, Name, Tensor, eval_expr, parse, pretty
from .errors import (
    AxiomViolation,
    CrossprodError,
    DimensionMismatch,
    EvalDimensionMismatch,
    FormatError,
    NotACocycle,
    NotAGroup,
    NotGraded,
    ParseError,
    RefError,
    UnboundName,
)
from .gallery import (
    CrossedInstance,
    InstanceBundle,
    action_twist,
    bundled_algebras,
    cocycle_crossed,
    crossed_bundle,
    crossed_instance,
    cyclic_group_algebra,
    direct_iterated_ttp_tensor,
    example_iterated_ttp,
    example_trivial_extension,
    instance_names,
    iteration_bundle,
    iteration_instance,
    klein_four_algebra,
    sign_twist,
    ttp_braid_sides,
    upper_triangular2,
)
from .iteration import (
    DerivedMaps,
    IterationData,
    TheoremCertificate,
    check_hypotheses,
    closed_formula_tensor,
    derive_maps,
    hypothesis_sides,
    iterate_left,
    iterate_right,
    left_crossed_data,
    right_crossed_data,
    s_from_coordinates,
    theta_from_coordinates,
    verify_theorem,
)
from .linalg import (
    MultiLinMap,
    SCALAR_SPACE,
    Space,
    apply,
    basis_expansion,
    compose,
    compose_all,
    embed,
    flatten,
    identity,
    kron,
    kron_all,
    make_map,
    map_from_entries,
    maps_equal,
    refactor,
    scalar,
    scale_map,
    swap,
    tensor_space,
    unflatten,
    vec_kron,
    vector,
)
from .reports import CheckItem, CheckReport, equality_item, witness_labels

__version__ = "0.1.0"
