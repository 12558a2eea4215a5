pub mod catalog;
pub mod cla;
pub mod cli;
pub mod coalgebra;
pub mod cobar;
pub mod error;
pub mod exactlin;
pub mod json;
pub mod ore;
pub mod replicate;
pub mod report;
pub mod structure;

pub use coalgebra::{HopfPresentation, Tensor};
pub use error::{Error, Result};
pub use exactlin::{Matrix, Scalar};
pub use ore::{Element, GeneratorInfo, Monomial, OrePresentation};
pub use report::VerificationReport;
