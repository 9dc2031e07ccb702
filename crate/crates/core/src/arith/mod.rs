//! Exact arithmetic: rationals, cyclotomic fields, Laurent polynomials,
//! fractions, truncated series and determinants.

mod cyclotomic;
mod det;
mod fraction;
mod laurent;
mod ring;
mod scalar;
mod series;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use det::{det_bareiss, det_cofactor, det_exact, det_gauss, Matrix};
pub use fraction::Fraction;
pub use laurent::{LaurentPoly, Monomial};
pub use ring::{bar, factorial, rational, rational_to_i128, sigma, Rational, Ring};
pub use scalar::ExactScalar;
pub use series::Series;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("cyclotomic conductors {0} and {1} are incompatible")]
    ConductorMismatch(u32, u32),
    #[error("incompatible domains: {0}")]
    IncompatibleDomains(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("series precision exhausted")]
    PrecisionLoss,
    #[error("{0} vanishes")]
    Vanishing(String),
}
