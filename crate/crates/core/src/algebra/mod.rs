//! The free graded-commutative *-algebra on named generators.

mod element;
mod monomial;
pub(crate) mod poly;
mod rewrite;
mod table;

pub(crate) use element::{impl_ring_ops, resolve_map};
pub use element::{Element, TermView};
pub use rewrite::RewriteSystem;
pub use table::{Generator, GeneratorTable, Parity, ParityClass, TableBuilder};
