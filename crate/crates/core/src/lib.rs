//! Exact computation of generalized adjoint actions `f(x) y f(x)^{-1}` for
//! formal power series `f = 1 + a_1 t + a_2 t^2 + ...`.

pub mod error;
pub mod exactnum;

pub use error::{Error, Result};
pub mod det;
pub mod freealg;
pub mod pfk;
pub mod report;
pub mod series;
pub mod special;
