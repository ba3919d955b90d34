pub mod bipermutohedral;
pub mod bits;
pub mod cli;
pub mod conormal;
pub mod corpus;
pub mod error;
pub mod hodge;
pub mod io;
pub mod linalg;
pub mod lp;
pub mod matroid;
pub mod poly;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use matroid::{FlagOfFlats, Matroid};
pub use poly::IntPolynomial;
