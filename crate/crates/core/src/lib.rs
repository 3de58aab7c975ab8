//! Tornheim double sums `T(a,b,c) = Σ n^-a m^-b (n+m)^-c` and the special
//! functions, Bernoulli algebra and integral catalog needed to evaluate them.

pub mod bernoulli_algebra;
pub mod dd;
pub mod error;
pub mod polygamma_neg;
pub mod quadrature;
pub mod real;
pub mod specfun;
pub mod tornheim;
pub mod verify;

pub use error::{Error, Result};
pub use real::{ErrorKind, EvalResult, Method, Real};
