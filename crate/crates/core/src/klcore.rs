//! Inverse Kazhdan-Lusztig polynomials of uniform and paving matroids, and
//! the binomial Hadamard transform `B`.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{big, binomial, rat, Degree};
use crate::{RatPoly, Rational};

/// Largest possible degree of `Q_M` for a rank-`d` matroid: `floor((d-1)/2)`.
pub fn max_degree(d: u32) -> usize {
    (d.saturating_sub(1) / 2) as usize
}

/// Uniform matroid `U_{m,d}`: rank `d` on `m + d` elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UniformParams {
    pub m: u32,
    pub d: u32,
}

impl UniformParams {
    pub fn new(m: u32, d: u32) -> Result<Self> {
        if m < 1 || d < 1 {
            return Err(Error::InvalidParams(format!("uniform matroid needs m >= 1 and d >= 1, got m = {m}, d = {d}")));
        }
        Ok(UniformParams { m, d })
    }
}

/// A paving matroid of rank `d` on `m + d` elements, described by how many
/// stressed hyperplanes of each cardinality `h + d - 1` it has.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PavingData {
    pub m: u32,
    pub d: u32,
    /// `h -> lambda_h`; absent keys are zero.
    #[serde(default)]
    pub lambda: BTreeMap<u32, u64>,
}

impl PavingData {
    pub fn new(m: u32, d: u32, lambda: BTreeMap<u32, u64>) -> Result<Self> {
        let data = PavingData { m, d, lambda };
        data.validate()?;
        Ok(data)
    }

    pub fn uniform(m: u32, d: u32) -> Self {
        PavingData {
            m,
            d,
            lambda: BTreeMap::new(),
        }
    }

    pub fn lambda(&self, h: u32) -> u64 {
        self.lambda.get(&h).copied().unwrap_or(0)
    }

    pub fn validate(&self) -> Result<()> {
        UniformParams::new(self.m, self.d)?;
        if let Some((&h, _)) = self.lambda.iter().find(|(&h, _)| h < 1 || h > self.m) {
            return Err(Error::InvalidParams(format!("stressed hyperplane size h = {h} outside 1..={}", self.m)));
        }
        if self.d < 2 && self.lambda.values().any(|&c| c > 0) {
            return Err(Error::InvalidRank { min: 2, got: self.d });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Source {
    Uniform(UniformParams),
    /// `Q_{U_{h,d}} - Q_{U_{h,d-1}}`
    Difference { h: u32, d: u32 },
    Paving(PavingData),
}

/// Whether a computed `Q_M` can come from an actual matroid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Mark {
    Valid,
    /// Some coefficient is negative; matroid inverse KL coefficients never are.
    NegativeCoefficient { index: usize },
    /// Nonnegative but with a vanishing constant term; the constant term of
    /// `Q_M` is `|chi_M(0)| > 0` for every matroid.
    ZeroConstantTerm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPolynomial {
    pub poly: RatPoly,
    pub source: Source,
    pub mark: Mark,
}

impl QPolynomial {
    pub fn is_valid(&self) -> bool {
        self.mark == Mark::Valid
    }

    /// Rank `d` of the underlying matroid.
    pub fn rank(&self) -> u32 {
        match &self.source {
            Source::Uniform(p) => p.d,
            Source::Difference { d, .. } => *d,
            Source::Paving(p) => p.d,
        }
    }

    /// Coefficients as decimal strings, low powers first.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.poly.coeffs().iter().map(|c| c.to_string()).collect()
    }
}

fn mark_of(poly: &RatPoly) -> Mark {
    if let Some(index) = poly.coeffs().iter().position(|c| c.is_negative()) {
        Mark::NegativeCoefficient { index }
    } else if poly.coeff(0).is_zero() {
        Mark::ZeroConstantTerm
    } else {
        Mark::Valid
    }
}

/// Raw `Q_{U_{m,d}}` coefficients with the integrality assertion applied.
fn uniform_poly(m: u32, d: u32) -> Result<RatPoly> {
    let (mi, di) = (i64::from(m), i64::from(d));
    let scale = big(binomial(u64::from(m + d), u64::from(d)));
    let coeffs = (0..=max_degree(d))
        .map(|i| {
            let ii = i as i64;
            let c = Rational::new((mi * (di - 2 * ii)).into(), ((mi + ii) * (di - ii + mi)).into())
                * scale.clone()
                * big(binomial(u64::from(d), i as u64));
            if c.is_integer() {
                Ok(c)
            } else {
                Err(Error::NonIntegerCoefficient {
                    index: i,
                    value: c.to_string(),
                })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RatPoly::new(coeffs))
}

/// `Q_{U_{m,d}}(t) = sum_i m(d-2i) / ((m+i)(d-i+m)) C(m+d,d) C(d,i) t^i`
/// for `0 <= i <= floor((d-1)/2)`.
pub fn inverse_kl_uniform(p: UniformParams) -> Result<QPolynomial> {
    let p = UniformParams::new(p.m, p.d)?;
    let poly = uniform_poly(p.m, p.d)?;
    debug_assert_eq!(poly.degree(), Degree::Finite(max_degree(p.d)));
    Ok(QPolynomial {
        mark: mark_of(&poly),
        poly,
        source: Source::Uniform(p),
    })
}

/// `Q_{U_{h,d}} - Q_{U_{h,d-1}}`, the contribution of one stressed
/// hyperplane of cardinality `h + d - 1`.
pub fn uniform_difference(h: u32, d: u32) -> Result<QPolynomial> {
    if d < 2 {
        return Err(Error::InvalidRank { min: 2, got: d });
    }
    if h < 1 {
        return Err(Error::InvalidParams(format!("h must be positive, got {h}")));
    }
    let poly = &uniform_poly(h, d)? - &uniform_poly(h, d - 1)?;
    Ok(QPolynomial {
        mark: mark_of(&poly),
        poly,
        source: Source::Difference { h, d },
    })
}

/// `Q_M = Q_{U_{m,d}} - sum_h lambda_h (Q_{U_{h,d}} - Q_{U_{h,d-1}})`.
///
/// Any nonnegative profile is accepted. Profiles that cannot come from a
/// matroid show up in [`QPolynomial::mark`], not as errors.
pub fn inverse_kl_paving(data: &PavingData) -> Result<QPolynomial> {
    data.validate()?;
    let mut poly = uniform_poly(data.m, data.d)?;
    for (&h, &count) in data.lambda.iter().filter(|(_, &c)| c > 0) {
        let diff = uniform_difference(h, data.d)?.poly;
        poly = &poly - &diff.scale(&big(count.into()));
    }
    Ok(QPolynomial {
        mark: mark_of(&poly),
        poly,
        source: Source::Paving(data.clone()),
    })
}

/// Coefficientwise product with `(1+t)^n`: `a_i -> C(n,i) a_i`.
pub fn hadamard_binomial(p: &RatPoly, n: usize) -> Result<RatPoly> {
    if let Degree::Finite(deg) = p.degree() {
        if deg > n {
            return Err(Error::DegreeExceedsN { degree: deg, n });
        }
    }
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, a)| a * big(binomial(n as u64, i as u64)))
        .collect();
    Ok(RatPoly::new(coeffs))
}

/// `B` with `n` equal to the polynomial's own degree.
///
/// The real-rootedness argument for paving matroids works with
/// `n = floor((d-1)/2)` instead; use [`hadamard_binomial`] with
/// [`max_degree`] for that.
pub fn b_transform(q: &QPolynomial) -> Result<RatPoly> {
    match q.poly.degree() {
        Degree::NegInf => Err(Error::ZeroPolynomial),
        Degree::Finite(n) => hadamard_binomial(&q.poly, n),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TopCoefficient {
    Zero,
    Positive,
    Negative,
}

/// Coefficient positivity of `Q_M`: every `a_i` with `i < floor((d-1)/2)`
/// should be positive; the top one may vanish.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityProfile {
    /// First index below the top whose coefficient is not positive.
    pub first_nonpositive: Option<usize>,
    pub top: TopCoefficient,
}

impl PositivityProfile {
    pub fn passes(&self) -> bool {
        self.first_nonpositive.is_none() && self.top != TopCoefficient::Negative
    }
}

pub fn positivity_profile(q: &QPolynomial) -> PositivityProfile {
    let top_index = max_degree(q.rank());
    let first_nonpositive = (0..top_index).find(|&i| !q.poly.coeff(i).is_positive());
    let top_value = q.poly.coeff(top_index);
    let top = if top_value.is_zero() {
        TopCoefficient::Zero
    } else if top_value.is_positive() {
        TopCoefficient::Positive
    } else {
        TopCoefficient::Negative
    };
    PositivityProfile { first_nonpositive, top }
}

/// Closed form for the constant term of `Q_{U_{m,d}}`: `C(d+m-1, m)`.
pub fn uniform_constant_closed_form(m: u32, d: u32) -> Rational {
    big(binomial(u64::from(d + m - 1), u64::from(m)))
}

/// Closed form for the linear term of `Q_{U_{m,d}}`:
/// `(d-2) m / (d+m-1) * C(d+m, m+1)`.
pub fn uniform_linear_closed_form(m: u32, d: u32) -> Rational {
    let (m64, d64) = (i64::from(m), i64::from(d));
    Rational::new(((d64 - 2) * m64).into(), (d64 + m64 - 1).into())
        * big(binomial(u64::from(d + m), u64::from(m + 1)))
}

/// Closed form for the constant term of `Q_{U_{h,d}} - Q_{U_{h,d-1}}`:
/// `C(d+h-2, h-1)`.
pub fn difference_constant_closed_form(h: u32, d: u32) -> Rational {
    big(binomial(u64::from(d + h - 2), u64::from(h - 1)))
}

/// Closed form for the linear term of `Q_{U_{h,d}} - Q_{U_{h,d-1}}`, valid
/// for `d >= 4`: `(d^2 + d(h-3) - 2h + 3) (d+h-3)! / ((d-1)! (h-1)!)`.
pub fn difference_linear_closed_form(h: u32, d: u32) -> Rational {
    use crate::exactmath::factorial;
    let (h64, d64) = (i64::from(h), i64::from(d));
    let lead = rat(d64 * d64 + d64 * (h64 - 3) - 2 * h64 + 3);
    lead * big(factorial(u64::from(d + h - 3)))
        / big(factorial(u64::from(d - 1)) * factorial(u64::from(h - 1)))
}
