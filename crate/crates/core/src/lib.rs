pub mod cancel;
pub mod error;
pub mod galois;
pub mod numtheory;
pub mod poly;
pub mod roots;
pub mod skolem;
pub mod spectral;

pub use cancel::CancelToken;
pub use error::{Error, Result};
pub use poly::IntPolynomial;
