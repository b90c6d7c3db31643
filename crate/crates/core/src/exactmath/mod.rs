//! Exact scalars and dense univariate polynomials.

mod algebra;
mod poly;
mod scalar;
pub mod serde_impl;

pub use algebra::{
    cubic_discriminant, poly_div_rem, poly_gcd, quadratic_discriminant, squarefree_part, wronskian,
    SquarefreeDecomposition,
};
pub use poly::{Degree, Poly};
pub use scalar::{Coefficient, ExactField, Sign};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn big(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}
