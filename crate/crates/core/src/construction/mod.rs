//! Semigroups built from groups acting on categories, plus the fixture
//! corpus and the small-order enumerator.

mod category;
mod cu;
mod enumerate;
pub mod fixtures;

pub use category::{
    parse_category_text, to_category_text, validate_group_action, ActionProperties, CategoryWithAction,
    FiniteCategory, GroupCategoryAction, Morphism, MorphismId, ObjectId,
};
pub use cu::{
    adjoin_band_category, adjoined_band_map, adjoined_band_semigroup, c_u_monoid, derived_category, CuMonoid,
    MAX_BAND,
};
pub use enumerate::{enumerate_semigroups, MAX_ENUMERATION_ORDER};
pub use fixtures::{fixture, fixture_by_name, Fixture};
