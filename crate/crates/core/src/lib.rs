pub mod algebra;
pub mod bitset;
pub mod catalog;
pub mod error;
pub mod harness;
pub mod io;
pub mod label;
pub mod soft;
pub mod soft_gamma;

pub use bitset::ElemSet;
pub use error::{Error, Result};
pub use label::{Label, Universe};
