//! Soft sets over finite universes, their operations, soft functions and
//! relation-derived soft sets.

mod function;
mod ops;
mod relation;
mod set;

pub use function::{
    compose_soft_functions, make_soft_function, make_soft_function_by_labels, soft_image,
    soft_preimage, SoftFunction,
};
pub use ops::{
    and_intersect, cartesian_product, extended_intersect, extended_union, or_union,
    product_universe, restricted_intersect, restricted_union,
};
pub use relation::{soft_set_from_relation, TernaryRelation};
pub use set::{
    is_soft_subset, relative_null, relative_whole, soft_equal, support, IndexedFamily, SoftSet,
};
