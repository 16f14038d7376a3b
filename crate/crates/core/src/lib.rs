//! Exact graded-commutative algebra, supermatrices and superforms.
//!
//! The crate builds the charge-`n` monopole projectors over the supersphere
//! `S^{2,2}` and computes their first Chern numbers as exact integers. All
//! arithmetic is symbolic: coefficients are Gaussian rationals times a
//! square root and a power of `π`, and every identity is checked by
//! reduction to a canonical normal form.

pub mod algebra;
pub mod berezin;
pub mod error;
pub mod forms;
pub mod golden;
pub mod json;
pub mod matrix;
pub mod monopole;
pub mod sample;
pub mod scalar;
pub mod trig;

pub use algebra::{Element, Generator, GeneratorTable, Parity, ParityClass, RewriteSystem, TableBuilder, TermView};
pub use error::{Error, Result};
pub use forms::{FormTermView, SuperForm};
pub use matrix::{BlockOrder, BlockShape, Graded, SuperMatrix};
pub use scalar::{Coeff, Gaussian, Rational, Scalar, Surd};
pub use trig::{ChartFunction, HalfAngle, TrigPoly};
pub use monopole::{KLabel, PsiVector, Sign, Supersphere};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/algebra.md")]
    mod algebra {}
    #[doc = include_str!("../../../book/src/supermatrices.md")]
    mod supermatrices {}
    #[doc = include_str!("../../../book/src/superforms.md")]
    mod superforms {}
    #[doc = include_str!("../../../book/src/monopoles.md")]
    mod monopoles {}
    #[doc = include_str!("../../../book/src/chern.md")]
    mod chern {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
