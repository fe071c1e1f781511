use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

/// Field the simplex engine runs over: `f64` with tolerances, or exact
/// rationals with zero tolerances.
pub trait Scalar: Clone + Debug + PartialOrd + Num + Signed + ToPrimitive {
    /// Exact conversion from a finite double.
    fn from_f64_exact(x: f64) -> Self;

    /// Positive factor that brings a row to unit scale. Exact fields return one.
    fn row_scale(values: &[Self]) -> Self;

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn from_f64_exact(x: f64) -> Self {
        x
    }

    fn row_scale(values: &[Self]) -> Self {
        let m = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        if m > 0.0 {
            1.0 / m
        } else {
            1.0
        }
    }
}

impl Scalar for BigRational {
    fn from_f64_exact(x: f64) -> Self {
        BigRational::from_f64(x).expect("finite value")
    }

    fn row_scale(_values: &[Self]) -> Self {
        BigRational::one()
    }
}

/// Feasibility slack and pivot admissibility thresholds.
#[derive(Clone, Debug, PartialEq)]
pub struct Tolerances<T> {
    pub feasibility: T,
    pub pivot: T,
}

impl Default for Tolerances<f64> {
    fn default() -> Self {
        Tolerances {
            feasibility: 1e-9,
            pivot: 1e-12,
        }
    }
}

impl Tolerances<BigRational> {
    pub fn exact() -> Self {
        Tolerances {
            feasibility: BigRational::zero(),
            pivot: BigRational::zero(),
        }
    }
}

/// `p / q` as an exact rational.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}
