//! Finite groups by multiplication table, automorphisms, semidirect products
//! and crossed homomorphisms.

mod crossed;
mod finite;
mod semidirect;

pub use crossed::{graph_of_crossed_hom, CrossedHom};
pub use finite::{automorphisms, find_isomorphism, Automorphism, FiniteGroup, GroupHom, DEFAULT_AUTOMORPHISM_BOUND};
pub use semidirect::{build_semidirect, DeckSemidirect, SemidirectProduct};
pub(crate) use semidirect::check_action;
