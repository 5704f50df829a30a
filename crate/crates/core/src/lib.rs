pub mod algebra;
pub mod counting;
pub mod brute;
pub mod decompose;
pub mod dynkin;
pub mod error;
pub mod exchange;
pub mod field;
pub mod hom;
pub mod matrix;
pub mod modules;
pub mod mutation;
pub mod pair;
pub mod presentation;
pub mod quiver;
pub mod rep;

pub use algebra::{Algebra, BasisPath, BuildOptions, Element};
pub use error::{Error, Result};
pub use field::{Fp, DEFAULT_PRIME};
pub use matrix::Matrix;
pub use quiver::{Arrow, Quiver, Relation};
pub use rep::{Morphism, Representation};
