//! Scalar traits the polynomial code is generic over.
//!
//! [`Coefficient`] is anything that behaves like a field element (`f64`,
//! `Ratio<i64>`, `BigRational`, ...). Algorithms that branch on exact zero
//! tests or exact signs (gcd, squarefree decomposition, Sturm chains) need
//! [`ExactField`], which is only implemented for rationals.

use std::fmt::Debug;
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

pub trait Coefficient: Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive {
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every coefficient type represents small integers")
    }
}

impl Coefficient for f32 {}
impl Coefficient for f64 {}
impl<I> Coefficient for Ratio<I>
where
    I: Clone + Integer + Signed + Debug,
    Ratio<I>: FromPrimitive,
{
}

/// An ordered field with exact arithmetic.
pub trait ExactField: Coefficient + Ord + Signed {
    /// Denominator in lowest terms, as an integer-valued element.
    fn denominator(&self) -> Self;
    /// Least common multiple of two integer-valued elements.
    fn integer_lcm(&self, other: &Self) -> Self;
    fn floor(&self) -> Self;
    fn ceil(&self) -> Self;
    fn is_integer(&self) -> bool;
}

impl<I> ExactField for Ratio<I>
where
    I: Clone + Integer + Signed + Debug,
    Ratio<I>: FromPrimitive,
{
    fn denominator(&self) -> Self {
        Ratio::from_integer(self.denom().clone())
    }

    fn integer_lcm(&self, other: &Self) -> Self {
        debug_assert!(self.is_integer() && other.is_integer());
        Ratio::from_integer(self.numer().lcm(other.numer()))
    }

    fn floor(&self) -> Self {
        Ratio::floor(self)
    }

    fn ceil(&self) -> Self {
        Ratio::ceil(self)
    }

    fn is_integer(&self) -> bool {
        Ratio::is_integer(self)
    }
}

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of<T: ExactField>(x: &T) -> Sign {
        if x.is_zero() {
            Sign::Zero
        } else if x.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        })
    }
}
