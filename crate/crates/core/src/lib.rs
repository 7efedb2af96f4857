//! m-Dyck paths, their m-Tamari order, the Dyck^m algebra of products
//! `*_0, ..., *_m`, colored binary trees spanning the free algebra, the
//! bialgebra structure given by cuttings, and Fuss-Catalan generating series.

pub mod algebra;
pub mod bintree;
pub mod coalgebra;
pub mod error;
pub mod json;
pub mod linalg;
pub mod path;
pub mod report;
pub mod series;
pub mod sum;
pub mod tamari;
pub mod trees;
pub mod verify;

pub use coalgebra::{Slot, TensorSum};
pub use error::{Error, Result};
pub use path::{enumerate, fuss_catalan, validate, wedge_compose, Coloring, MDyckPath, Step, WedgeMode};
pub use report::Report;
pub use series::TruncatedSeries;
pub use sum::{Coeff, FormalSum};
pub use trees::{ColoredTree, TreeSum};

/// Linear combination of paths.
pub type PathSum = FormalSum<MDyckPath>;
