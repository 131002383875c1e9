//! Exact computation in the group PGL(2,Q).
//!
//! - [`exact`]: canonical projective integer matrices, determinant square
//!   classes, the Möbius action on `Q ∪ {∞}`
//! - [`words`]: the generator alphabet, word grammar, free reduction, evaluation
//! - [`decompose`]: matrices back to words, Borel and Baumslag–Solitar normal forms
//! - [`presentation`]: relator catalogs, dictionary lines and their verification
//! - [`torsion`]: order classification, torsion families, conjugators, order polynomials
//! - [`harness`]: seeded fuzzing, torsion census and a bounded rewriting probe

pub mod decompose;
pub mod error;
pub mod exact;
pub mod harness;
pub mod presentation;
pub mod torsion;
pub mod words;

pub use error::{Error, Result};
pub use exact::{ExtRat, Mat2, ProjMat2, SquareClass};
pub use words::{Base, GenLetter, Word};
