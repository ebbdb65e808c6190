//! Generators for the graphs on which the omission bound is attained.

pub mod balloon;
pub mod cages;
pub mod gfamily;
pub mod named;

pub use balloon::{build_tree_with_balloons, make_balloon};
pub use cages::{cage, smallest_balloon, smallest_balloon_order, BALLOON_ORDERS};
pub use gfamily::{
    build_g_family, contract_outside, is_simple, neighbours_in_distinct_components, explode, explode_mapped, ExplosionSpec, GFamilyMember,
    GFamilySpec,
};
