//! Exact algebra for the homology representation of bounding-curve twists
//! on the `Z^{2g-2}` abelian cover, the amalgam structure of
//! `SL2(Q[t, t^-1])`, and certificates that the image is not finitely
//! generated.

pub mod amalgam;
pub mod cover;
pub mod error;
pub mod laurent;
pub mod matrix;
pub mod ratfunc;
pub mod rep;
pub mod sample;
pub mod tree;

pub use error::{Error, ParseError, Result};
pub use laurent::{parse, Coeff, ExponentVector, LaurentPoly, QPoly, Ring, RingHom, ZPoly};
pub use matrix::{Matrix2, MatrixJson};
pub use ratfunc::RationalFunction;
pub use tree::{TranslationReport, TreeVertex};
