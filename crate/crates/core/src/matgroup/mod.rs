//! Finite matrix groups over GF(p).

pub mod bsgs;
pub mod enumerate;
pub mod group;
pub mod mat;
pub mod spinor;

pub use bsgs::Bsgs;
pub use enumerate::{enumerate, CodeSet, EnumCache};
pub use group::{MatGroup, DEFAULT_ENUM_CAP};
pub use mat::{Mat, Vector, MAX_DIM};
pub use spinor::spinor_norm;
