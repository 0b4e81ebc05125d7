//! Finite orthogonal groups generated by reflections, string C-groups over GF(p),
//! and the locally toroidal polytopes they yield.

pub mod cgroup;
pub mod cover;
pub mod coxeter;
pub mod error;
pub mod field;
pub mod instance;
pub mod intmat;
pub mod linalg;
pub mod matgroup;
pub mod polytope;
pub mod space;
pub mod workbench;

pub use error::{Error, Result};
