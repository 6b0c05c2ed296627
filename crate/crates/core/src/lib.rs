//! Exact computations on the Fano surfaces of cubic threefolds carrying 12 or
//! 30 elliptic curves: Neron-Severi lattices, the Albanese period lattice of
//! the Fermat case, elliptic fibrations and their intersection numbers.
//!
//! Everything is computed over `Z`, `Q` or `Q(w)` with `w^2 + w + 1 = 0`;
//! there is no floating point anywhere.

pub mod albanese;
pub mod arith;
pub mod error;
pub mod fermat;
pub mod fibrations;
pub mod group;
pub mod lattice;
pub mod twelve;
pub mod verify;

pub use error::{Error, Result};
