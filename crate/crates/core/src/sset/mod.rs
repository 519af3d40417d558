//! Truncated simplicial sets by presentation: standard complexes, nerves,
//! products, actions, and exhaustive Kan and minimality checks.

mod action;
mod checks;
mod nerve;
mod presentation;
mod product;
mod standard;

pub use action::{check_generator_map, SimplicialAction, SimplicialAutomorphism};
pub use checks::{check_kan, check_minimal, validate, Horn, KanReport};
pub(crate) use checks::{for_each_horn, horn_key, kan_with_tables};
pub use nerve::{nerve_of_group, tuple_face, Nerve, VERTEX_NAME};
pub use presentation::{simplex_tables, SSetPresentation, SimplexTable};
pub use product::{cartesian_product, product_of, Product};
pub use standard::{standard_complex, StandardKind};
