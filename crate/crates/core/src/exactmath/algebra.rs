use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use super::poly::{Degree, Poly};
use super::scalar::{Coefficient, ExactField};
use crate::error::{Error, Result};

pub fn poly_div_rem<T: Coefficient>(f: &Poly<T>, g: &Poly<T>) -> Result<(Poly<T>, Poly<T>)> {
    f.div_rem(g)
}

/// Monic greatest common divisor.
pub fn poly_gcd<T: ExactField>(f: &Poly<T>, g: &Poly<T>) -> Result<Poly<T>> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut a, mut b) = (f.monic(), g.monic());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b)?;
        a = b;
        b = r.monic();
    }
    Ok(a)
}

pub fn wronskian<T: Coefficient>(f: &Poly<T>, g: &Poly<T>) -> Poly<T> {
    f.wronskian(g)
}

/// Yun decomposition `f = c * s_1 * s_2^2 * s_3^3 * ...` with each `s_i`
/// monic, squarefree and pairwise coprime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeDecomposition<T> {
    /// `f / gcd(f, f')`, made monic.
    pub radical: Poly<T>,
    /// `(s_i, i)` for every nonconstant `s_i`, in increasing `i`.
    pub factors: Vec<(Poly<T>, usize)>,
}

impl<T: ExactField> SquarefreeDecomposition<T> {
    /// `(degree of s_i, i)` pairs.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        self.factors
            .iter()
            .filter_map(|(p, m)| p.degree().finite().map(|d| (d, *m)))
            .collect()
    }
}

pub fn squarefree_part<T: ExactField>(f: &Poly<T>) -> Result<SquarefreeDecomposition<T>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = f.monic();
    if f.is_constant() {
        return Ok(SquarefreeDecomposition {
            radical: f,
            factors: Vec::new(),
        });
    }
    let df = f.derivative();
    let a0 = poly_gcd(&f, &df)?;
    let radical = f.div_rem(&a0)?.0.monic();

    let mut factors = Vec::new();
    let mut b = radical.clone();
    let mut c = df.div_rem(&a0)?.0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree() > Degree::Finite(0) {
        let s = poly_gcd(&b, &d)?;
        b = b.div_rem(&s)?.0;
        c = d.div_rem(&s)?.0;
        d = &c - &b.derivative();
        if s.degree() > Degree::Finite(0) {
            factors.push((s, i));
        }
        i += 1;
    }
    Ok(SquarefreeDecomposition { radical, factors })
}

fn times<T>(x: T, n: u32) -> T
where
    T: Clone + Zero + Add<Output = T>,
{
    let mut acc = T::zero();
    let mut base = x;
    let mut n = n;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc + base.clone();
        }
        n >>= 1;
        if n > 0 {
            base = base.clone() + base;
        }
    }
    acc
}

/// Discriminant of `a t^3 + b t^2 + c t + d`:
/// `18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2`.
///
/// Generic over the coefficient ring so it can be evaluated with polynomial
/// coefficients. With `a = 0` it reduces to `b^2 (c^2 - 4bd)`.
pub fn cubic_discriminant<T>(a: &T, b: &T, c: &T, d: &T) -> T
where
    T: Clone + Zero + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let ab = a.clone() * b.clone();
    let b2 = b.clone() * b.clone();
    let c2 = c.clone() * c.clone();
    let t1 = times(ab * c.clone() * d.clone(), 18);
    let t2 = times(b2.clone() * b.clone() * d.clone(), 4);
    let t3 = b2 * c2.clone();
    let t4 = times(a.clone() * c2 * c.clone(), 4);
    let t5 = times(a.clone() * a.clone() * d.clone() * d.clone(), 27);
    t1 - t2 + t3 - t4 - t5
}

/// Discriminant of `a t^2 + b t + c`.
pub fn quadratic_discriminant<T>(a: &T, b: &T, c: &T) -> T
where
    T: Clone + Zero + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    b.clone() * b.clone() - times(a.clone() * c.clone(), 4)
}
