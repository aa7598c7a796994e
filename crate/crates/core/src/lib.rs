pub mod braided;
pub mod catalog;
pub mod cocycle;
pub mod double;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod network;
pub mod report;
pub mod scalar;
pub mod tensor;

pub use scalar::{FieldSpec, Scalar};
