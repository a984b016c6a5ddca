//! Exact computation in quantum boson algebras and their integer-level
//! extensions over any symmetrizable generalized Cartan matrix: Laurent
//! polynomial and rational-function arithmetic, straightening to reduced
//! normal forms, two independent implementations of the bilinear form
//! (algebraic straightening and graphical matching enumeration), the
//! twisted-derivation form on a single level, Gram-matrix kernels, and
//! quiver Hecke algebras with their graded block dimensions.

pub mod cartan;
pub mod diagrams;
pub mod error;
pub mod gram;
pub mod klr;
pub mod lusztig;
pub mod parse;
pub mod scalar;
pub mod straighten;
pub mod verify;
pub mod word;

pub use cartan::{CartanMatrix, Weight};
pub use scalar::{LaurentPoly, RatScalar};
pub use word::{AlgElement, ZLetter, ZWord};
