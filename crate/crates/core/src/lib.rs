//! Construction and certification of classical MDS codes over F_{q²} that
//! contain (or equal) their Hermitian dual, and of the quantum MDS codes
//! they imply.

pub mod cert;
pub mod circulant;
pub mod codes;
pub mod error;
pub mod gf;
pub mod grs;
pub mod matrix;
pub mod poly;
pub mod search;

pub use error::{Error, Result};
pub use gf::{Elem, Field, FieldRef, Scalar};
pub use matrix::Matrix;
pub use poly::Poly;
