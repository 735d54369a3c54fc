//! Finite combinatorics of set systems: independence dimension, convex
//! orders for families of independence dimension at most one, type counting
//! and density fitting, ladders and rank-1 type reconstruction.
//!
//! ```
//! use vcw_core::{independence_dimension, SetFamily};
//!
//! let f = SetFamily::from_index_sets(4, &[&[0, 1], &[1, 2]]);
//! assert_eq!(independence_dimension(&f, 8).dimension, 2);
//! ```

pub mod convex;
pub mod density;
pub mod error;
pub mod independence;
pub mod sets;
pub mod structures;
pub mod types;
pub mod udtfs;

pub use convex::{
    alternation_count, boolean_combo, check_laminar, combo_component_bound, find_crossing_pair, leftward_ray,
    order_id1, order_laminar, parse_expr, verify_convex_order, ComboBound, ConvexOrderReport, CrossingPair, Expr,
    MemberConvexity,
};
pub use density::{density_fit, density_points, MIN_POINTS};
pub use error::{Error, Result};
pub use independence::{
    certify_id_at_most_one, independence_dimension, instance_quasi_order, is_independent, ladder_index, CellWitness,
    CrossingWitness, IdResult, LadderResult, LadderWitness, QuasiOrder, DEFAULT_ID_CAP,
};
pub use sets::{
    cell, convex_components, parse_family, parse_family_with, realized_cells, to_json, to_json_pretty, Limits,
    LinearOrder, Member, SetFamily, SignAssignment, SignedMember, SubsetMask, Universe, MAX_MEMBERS_HARD,
};
pub use structures::{
    gen_cyclic, gen_grid, gen_linear, gen_predicates, gen_random_id1, gen_reduct_order, generic_corners, GeneratorSpec,
    PredicateMode, RandomId1, XorShiftRng,
};
pub use types::{endpoint_bound_check, trace_table, type_count, EndpointCheck, TraceTable};
pub use udtfs::{
    delta_decide, minimal_instance_selector, rank1_report, reconstruct_type, Decision, Rank1Report, Rank1Scheme,
    ReconstructionTrace,
};

/// Density estimate in double precision.
pub type DensityEstimate = density::DensityEstimate<f64>;
/// Density estimate in single precision.
pub type DensityEstimate32 = density::DensityEstimate<f32>;
