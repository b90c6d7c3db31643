use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{Coefficient, ExactField, Sign};
use crate::error::{Error, Result};

/// Degree of a polynomial. The zero polynomial has degree [`Degree::NegInf`],
/// which orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `t^i`.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: T, power: usize) -> Self {
        let mut coeffs = vec![T::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `t - root`
    pub fn linear_factor(root: T) -> Self {
        Self::new(vec![-root, T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.clone() * T::from_int(i as i64))
            .collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// Divide by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => {
                let inv = T::one() / lc.clone();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitute `t -> t + shift`.
    pub fn shift(&self, shift: &T) -> Self {
        let x = Self::new(vec![shift.clone(), T::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &x) + &Self::constant(c.clone()))
    }

    /// Coefficient list in reverse order, i.e. `t^deg p(1/t)`.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// Euclidean division: `self = divisor * quotient + remainder` with
    /// `deg remainder < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading_coeff().ok_or(Error::DivisionByZeroPoly)?.clone();
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); rem.len() - dlen + 1];
        for shift in (0..quot.len()).rev() {
            let top = rem[shift + dlen - 1].clone();
            if top.is_zero() {
                continue;
            }
            let q = top / lead.clone();
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let v = rem[shift + j].clone() - q.clone() * d.clone();
                rem[shift + j] = v;
            }
            // exact cancellation of the leading term
            rem[shift + dlen - 1] = T::zero();
            quot[shift] = q;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// `f' g - f g'`
    pub fn wronskian(&self, other: &Self) -> Self {
        &(&self.derivative() * other) - &(self * &other.derivative())
    }
}

impl<T: ExactField> Poly<T> {
    pub fn sign_at(&self, x: &T) -> Sign {
        Sign::of(&self.eval(x))
    }

    /// Sign of `f(t)` as `t -> +inf`.
    pub fn sign_at_pos_inf(&self) -> Sign {
        self.leading_coeff().map_or(Sign::Zero, Sign::of)
    }

    /// Sign of `f(t)` as `t -> -inf`.
    pub fn sign_at_neg_inf(&self) -> Sign {
        match self.degree() {
            Degree::NegInf => Sign::Zero,
            Degree::Finite(d) if d % 2 == 1 => self.sign_at_pos_inf().flip(),
            Degree::Finite(_) => self.sign_at_pos_inf(),
        }
    }

    /// Positive rational multiple with integer coefficients: scales by the
    /// lcm of the coefficient denominators.
    pub fn clear_denominators(&self) -> Self {
        let lcm = self
            .coeffs
            .iter()
            .fold(T::one(), |acc, c| acc.integer_lcm(&c.denominator()));
        self.scale(&lcm)
    }

    /// Cauchy bound: every real root lies strictly inside `(-bound, bound)`.
    pub fn cauchy_bound(&self) -> T {
        let Some(lc) = self.leading_coeff() else {
            return T::one();
        };
        let lc = lc.abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / lc.clone())
            .max()
            .unwrap_or_else(T::zero);
        max + T::one()
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl<T: Coefficient> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Coefficient> One for Poly<T> {
    fn one() -> Self {
        Poly { coeffs: vec![T::one()] }
    }
}

impl<T: Coefficient> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.clone() + s.clone();
        }
        Poly::new(coeffs)
    }
}

impl<T: Coefficient> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::new(coeffs)
    }
}

impl<T: Coefficient> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(coeffs)
    }
}

impl<T: Coefficient> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl<T: Coefficient> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $f(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$f(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<T: Coefficient> Neg for Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        -&self
    }
}

/// Renders `3 + 2t - (1/2)t^2`; low powers first.
impl<T> fmt::Display for Poly<T>
where
    T: Coefficient + fmt::Display + PartialOrd,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.partial_cmp(&T::zero()) == Some(Ordering::Less);
            let mag = if negative { -c.clone() } else { c.clone() };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let text = mag.to_string();
            let body = if i == 0 {
                text
            } else if mag.is_one() {
                String::new()
            } else if text.contains('/') {
                format!("({text})")
            } else {
                text
            };
            f.write_str(&body)?;
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}
