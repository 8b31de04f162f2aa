//! Storage, validation and conversion for periodic band matrices, their
//! anti-banded images, dense matrices, and the exchange operator.

mod dense;
pub mod io;
mod periodic;

pub use dense::DenseMatrix;
pub use periodic::{
    apbm_to_pbm, check_bandwidth, dense_to_pbm, pbm_get, pbm_to_dense, pbm_validate, reverse_columns, reverse_rows,
    AntiPeriodicBandMatrix, ExchangeOperator, PeriodicBandMatrix,
};
