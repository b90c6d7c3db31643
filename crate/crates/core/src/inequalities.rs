//! Inequalities on coefficient sequences, and `n`-sequence certificates.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{big, binomial, factorial, rat};
use crate::realroots::roots_all_real_same_sign;
use crate::{RatPoly, Rational};

/// Coefficients `a_0, ..., a_n` of a polynomial, low index first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffSequence(Vec<Rational>);

impl CoeffSequence {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::LengthTooShort { len: 0, need: 1 });
        }
        Ok(CoeffSequence(values))
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| rat(v)).collect())
    }

    /// Coefficients of `p` without trailing zeros. The zero polynomial maps
    /// to the single entry `0`.
    pub fn of_poly(p: &RatPoly) -> Self {
        if p.is_zero() {
            CoeffSequence(vec![Rational::zero()])
        } else {
            CoeffSequence(p.coeffs().to_vec())
        }
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `a_i`, or zero past the end.
    pub fn get(&self, i: usize) -> Rational {
        self.0.get(i).cloned().unwrap_or_else(Rational::zero)
    }
}

/// Multiplier `gamma_0, gamma_1, ...` acting by `t^i -> gamma_i t^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSequence(Vec<Rational>);

impl GammaSequence {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::LengthTooShort { len: 0, need: 1 });
        }
        Ok(GammaSequence(values))
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        GammaSequence(self.0.iter().rev().cloned().collect())
    }

    pub fn truncated(&self, len: usize) -> Self {
        GammaSequence(self.0.iter().take(len.max(1)).cloned().collect())
    }
}

/// Outcome of a sequence test. `witness_*` point at the first violation;
/// for the Turán test they point at the tightest index when everything holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub pass: bool,
    pub witness_index: Option<usize>,
    #[serde(with = "crate::exactmath::serde_impl::rational_opt")]
    pub witness_value: Option<Rational>,
}

impl Verdict {
    pub fn holds() -> Self {
        Verdict {
            pass: true,
            witness_index: None,
            witness_value: None,
        }
    }

    fn violated(index: usize, value: Rational) -> Self {
        Verdict {
            pass: false,
            witness_index: Some(index),
            witness_value: Some(value),
        }
    }
}

fn lc_gap(a: &CoeffSequence, i: usize) -> Rational {
    a.get(i) * a.get(i) - a.get(i - 1) * a.get(i + 1)
}

/// `a_i^2 >= a_{i-1} a_{i+1}` for all interior `i`, and the nonzero entries
/// occupy consecutive indices. An internal zero is reported at its index
/// with value `0`.
pub fn is_log_concave_no_internal_zeros(s: &CoeffSequence) -> Verdict {
    let vals = s.values();
    if let (Some(first), Some(last)) = (
        vals.iter().position(|v| !v.is_zero()),
        vals.iter().rposition(|v| !v.is_zero()),
    ) {
        if let Some(gap) = (first..=last).find(|&i| vals[i].is_zero()) {
            return Verdict::violated(gap, Rational::zero());
        }
    }
    for i in 1..s.len().saturating_sub(1) {
        let gap = lc_gap(s, i);
        if gap.is_negative() {
            return Verdict::violated(i, gap);
        }
    }
    Verdict::holds()
}

/// `4(a_i^2 - a_{i-1}a_{i+1})(a_{i+1}^2 - a_i a_{i+2}) - (a_i a_{i+1} - a_{i-1} a_{i+2})^2`.
pub fn turan_value(s: &CoeffSequence, i: usize) -> Rational {
    let cross = s.get(i) * s.get(i + 1) - s.get(i - 1) * s.get(i + 2);
    rat(4) * lc_gap(s, i) * lc_gap(s, i + 1) - cross.clone() * cross
}

/// Higher-order Turán inequalities for `1 <= i <= n-2`. Shorter sequences
/// pass vacuously.
pub fn higher_order_turan(s: &CoeffSequence) -> Verdict {
    let mut tightest: Option<(usize, Rational)> = None;
    for i in 1..s.len().saturating_sub(2) {
        let v = turan_value(s, i);
        if v.is_negative() {
            return Verdict::violated(i, v);
        }
        if tightest.as_ref().is_none_or(|(_, best)| v < *best) {
            tightest = Some((i, v));
        }
    }
    Verdict {
        pass: true,
        witness_index: tightest.as_ref().map(|(i, _)| *i),
        witness_value: tightest.map(|(_, v)| v),
    }
}

fn binomial_weighted(s: &CoeffSequence, n: usize) -> Result<Vec<Rational>> {
    if s.len() > n + 1 {
        return Err(Error::DegreeExceedsN { degree: s.len() - 1, n });
    }
    if let Some(index) = s.values().iter().position(|v| v.is_negative()) {
        return Err(Error::NegativeInput { index });
    }
    Ok((0..=n)
        .map(|i| s.get(i) * big(binomial(n as u64, i as u64)))
        .collect())
}

/// Newton's inequalities for `sum C(n,i) a_i t^i`: with `b_i = C(n,i) a_i`,
/// `b_i^2 >= b_{i-1} b_{i+1} (i+1)(n-i+1) / (i(n-i))` for `1 <= i <= n-1`.
/// The witness value is `b_i^2` minus the right-hand side.
pub fn newton_ultra_log_concave(s: &CoeffSequence, n: usize) -> Result<Verdict> {
    let b = binomial_weighted(s, n)?;
    for i in 1..n {
        let factor = Rational::new(((i + 1) * (n - i + 1)).into(), (i * (n - i)).into());
        let gap = b[i].clone() * b[i].clone() - b[i - 1].clone() * b[i + 1].clone() * factor;
        if gap.is_negative() {
            return Ok(Verdict::violated(i, gap));
        }
    }
    Ok(Verdict::holds())
}

/// The weaker `b_i^2 >= b_{i-1} b_{i+1}` on `b_i = C(n,i) a_i`.
pub fn newton_weak(s: &CoeffSequence, n: usize) -> Result<Verdict> {
    let b = binomial_weighted(s, n)?;
    for i in 1..n {
        let gap = b[i].clone() * b[i].clone() - b[i - 1].clone() * b[i + 1].clone();
        if gap.is_negative() {
            return Ok(Verdict::violated(i, gap));
        }
    }
    Ok(Verdict::holds())
}

/// `Gamma[(1+t)^n] = sum_{i<=n} gamma_i C(n,i) t^i`.
pub fn gamma_binomial(g: &GammaSequence, n: usize) -> Result<RatPoly> {
    if g.len() < n + 1 {
        return Err(Error::LengthTooShort { len: g.len(), need: n + 1 });
    }
    Ok(RatPoly::new(
        (0..=n)
            .map(|i| g.values()[i].clone() * big(binomial(n as u64, i as u64)))
            .collect(),
    ))
}

/// `Gamma` is an `n`-sequence iff `Gamma[(1+t)^n]` has only real roots, all
/// of one sign. The zero multiplier counts as an `n`-sequence.
pub fn is_n_sequence(g: &GammaSequence, n: usize) -> Result<bool> {
    let p = gamma_binomial(g, n)?;
    if p.is_zero() {
        return Ok(true);
    }
    roots_all_real_same_sign(&p)
}

fn check_range(l: u32, k: u32) -> Result<()> {
    if l < 1 || k < l {
        return Err(Error::InvalidRange { l, k });
    }
    Ok(())
}

fn shifted_product(x: u64, l: u32, k: u32) -> Rational {
    big((l..=k).fold(1u64.into(), |acc: num_bigint::BigInt, j| acc * (x + u64::from(j))))
}

/// `gamma_i = 1 / (i! prod_{j=l}^{k} (i+j))` for `i < length`.
pub fn ms1_sequence(l: u32, k: u32, length: usize) -> Result<GammaSequence> {
    check_range(l, k)?;
    if length == 0 {
        return Err(Error::LengthTooShort { len: 0, need: 1 });
    }
    GammaSequence::new(
        (0..length as u64)
            .map(|i| (big(factorial(i)) * shifted_product(i, l, k)).recip())
            .collect(),
    )
}

/// `gamma_i = 1 / ((d-i)! prod_{j=l}^{k} (d-i+j))` for `0 <= i <= d`.
pub fn ns1_sequence(d: u32, l: u32, k: u32) -> Result<GammaSequence> {
    check_range(l, k)?;
    let d = u64::from(d);
    GammaSequence::new(
        (0..=d)
            .map(|i| (big(factorial(d - i)) * shifted_product(d - i, l, k)).recip())
            .collect(),
    )
}
