//! The auxiliary polynomial families behind the interlacing lemmas, their
//! `(1+t)`-power factorizations, discriminants as exact polynomials in the
//! combination scalar `k`, Wronskian constant terms, and the end-to-end
//! real-rootedness pipeline for paving matroids.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{
    big, binomial, cubic_discriminant, factorial, quadratic_discriminant, rat, Degree,
};
use crate::inequalities::{higher_order_turan, is_log_concave_no_internal_zeros, CoeffSequence};
use crate::klcore::{
    hadamard_binomial, inverse_kl_paving, inverse_kl_uniform, max_degree, positivity_profile,
    uniform_difference, Mark, PavingData, TopCoefficient, UniformParams,
};
use crate::realroots::{interlaces, is_real_rooted, isolate_roots, sturm_root_count, Endpoint};
use crate::report::{CheckReport, FamilyReport, LemmaReport, Outcome, Status, TheoremChecks, Witness};
use crate::{RatInterval, RatPoly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilyId {
    P1,
    P2,
    P3,
    P4,
    P5,
}

impl FamilyId {
    pub const ALL: [FamilyId; 5] = [FamilyId::P1, FamilyId::P2, FamilyId::P3, FamilyId::P4, FamilyId::P5];

    /// Cubic families reduce by `(1+t)^{n-3}`, quadratic ones by `(1+t)^{n-2}`.
    pub fn is_cubic(self) -> bool {
        matches!(self, FamilyId::P1 | FamilyId::P3 | FamilyId::P5)
    }

    pub fn core_degree(self) -> u32 {
        if self.is_cubic() {
            3
        } else {
            2
        }
    }

    /// Admissible values of the `m` / `h` parameter.
    pub fn param_range(self, max: u32) -> std::ops::RangeInclusive<u32> {
        match self {
            FamilyId::P1 | FamilyId::P3 => 2..=max,
            FamilyId::P2 | FamilyId::P4 => 1..=1.min(max),
            FamilyId::P5 => 1..=max,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "P1" => Ok(FamilyId::P1),
            "P2" => Ok(FamilyId::P2),
            "P3" => Ok(FamilyId::P3),
            "P4" => Ok(FamilyId::P4),
            "P5" => Ok(FamilyId::P5),
            _ => Err(Error::InvalidParams(format!("unknown family {s:?}"))),
        }
    }
}

/// `d = 2n + 1` or `d = 2n + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub const BOTH: [Parity; 2] = [Parity::Odd, Parity::Even];

    pub fn rank(self, n: u32) -> u32 {
        match self {
            Parity::Odd => 2 * n + 1,
            Parity::Even => 2 * n + 2,
        }
    }

    pub fn of_rank(d: u32) -> Parity {
        if d % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub family: FamilyId,
    pub n: u32,
    pub parity: Parity,
    /// `m` for P1, P2, P5; `h` for P3, P4.
    pub param: u32,
}

impl FamilyParams {
    pub fn new(family: FamilyId, n: u32, parity: Parity, param: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParams(format!("n must be at least 3, got {n}")));
        }
        if !family.param_range(u32::MAX).contains(&param) {
            return Err(Error::InvalidParams(format!("parameter {param} outside the range of {family}")));
        }
        Ok(FamilyParams {
            family,
            n,
            parity,
            param,
        })
    }

    pub fn d(&self) -> u32 {
        self.parity.rank(self.n)
    }

    /// Power of `1 + t` the summand is divisible by.
    pub fn core_power(&self) -> u32 {
        self.n - self.family.core_degree()
    }

    /// Every grid point with `n` in `n_range` and `m|h <= param_max`, in
    /// `(family, n, parity, param)` order.
    pub fn grid(
        families: &[FamilyId],
        n_range: std::ops::RangeInclusive<u32>,
        param_max: u32,
    ) -> Vec<FamilyParams> {
        let mut out = Vec::new();
        let mut fams = families.to_vec();
        fams.sort();
        fams.dedup();
        for family in fams {
            for n in n_range.clone().filter(|&n| n >= 3) {
                for parity in Parity::BOTH {
                    for param in family.param_range(param_max) {
                        out.push(FamilyParams {
                            family,
                            n,
                            parity,
                            param,
                        });
                    }
                }
            }
        }
        out
    }
}

/// Integrand `alpha_i + k beta_i` of the family's defining sum, as the pair
/// `(alpha_i, beta_i)`.
fn integrand(family: FamilyId, i: i128, d: i128, p: i128) -> (i128, i128) {
    match family {
        FamilyId::P1 => ((d - 2 * i + 1) * (i + p) * (d - i + p), (d - 2 * i) * (d - i + 1)),
        FamilyId::P2 => ((d - 2 * i + 1) * (i + 1), d - 2 * i),
        FamilyId::P3 => {
            let h = p;
            (
                h * (d + h - i + 1) * ((d - 2 * i) * (d + h - i) + i),
                (d + h) * (d + h - i - 1) * ((d - 2 * i) * (d + h + 1 - i) + i),
            )
        }
        FamilyId::P4 => (
            (d - 2 * i + 1) * (d - i + 2),
            (d + 1) * ((d - 2 * i) * (d - i + 2) + i),
        ),
        FamilyId::P5 => {
            let m = p;
            let x = (d - 2 * i) * (d + m) * (d - i + m - 1);
            let y = (d - 2 * i - 1) * (d - i) * (d - i + m);
            (x, x - y)
        }
    }
}

/// The `k`-free and `k`-linear parts of the summand,
/// `sum_i (alpha_i + k beta_i) C(n,i) t^i = A(t) + k B(t)`.
fn summand_parts(p: &FamilyParams) -> (RatPoly, RatPoly) {
    let (d, param) = (i128::from(p.d()), i128::from(p.param));
    let (mut alpha, mut beta) = (Vec::new(), Vec::new());
    for i in 0..=p.n {
        let (a, b) = integrand(p.family, i128::from(i), d, param);
        let c = big(binomial(u64::from(p.n), u64::from(i)));
        alpha.push(big(a.into()) * c.clone());
        beta.push(big(b.into()) * c);
    }
    (RatPoly::new(alpha), RatPoly::new(beta))
}

pub fn family_summand_poly(p: &FamilyParams, k: &Rational) -> Result<RatPoly> {
    let p = FamilyParams::new(p.family, p.n, p.parity, p.param)?;
    let (alpha, beta) = summand_parts(&p);
    Ok(&alpha + &beta.scale(k))
}

fn divide_by_one_plus_t_power(f: &RatPoly, power: u32) -> Result<RatPoly> {
    let divisor = RatPoly::from_ints(&[1, 1]).pow(power);
    let (q, r) = f.div_rem(&divisor)?;
    if !r.is_zero() {
        return Err(Error::NonzeroRemainder { power: power as usize });
    }
    Ok(q)
}

/// The summand divided exactly by `(1+t)^{n-3}` (cubic families) or
/// `(1+t)^{n-2}` (quadratic families).
pub fn family_core_poly(p: &FamilyParams, k: &Rational) -> Result<RatPoly> {
    let summand = family_summand_poly(p, k)?;
    divide_by_one_plus_t_power(&summand, p.core_power())
}

/// Discriminant of the core as an exact polynomial in `k`.
pub fn discriminant_in_k(p: &FamilyParams) -> Result<RatPoly> {
    let p = FamilyParams::new(p.family, p.n, p.parity, p.param)?;
    let (alpha, beta) = summand_parts(&p);
    let core_a = divide_by_one_plus_t_power(&alpha, p.core_power())?;
    let core_b = divide_by_one_plus_t_power(&beta, p.core_power())?;
    // coefficient of t^j in the core, as a polynomial in k
    let c = |j: usize| RatPoly::new(vec![core_a.coeff(j), core_b.coeff(j)]);
    Ok(if p.family.is_cubic() {
        cubic_discriminant(&c(3), &c(2), &c(1), &c(0))
    } else {
        quadratic_discriminant(&c(2), &c(1), &c(0))
    })
}

/// `((dn - 2d + 3n) + 2kn)^2 + 4(n-1)(d(d-n) + 2n)`, the closed form for the
/// P2 discriminant.
pub fn p2_discriminant_closed_form(n: u32, d: u32) -> RatPoly {
    let (n, d) = (i64::from(n), i64::from(d));
    let linear = RatPoly::from_ints(&[d * n - 2 * d + 3 * n, 2 * n]);
    let constant = RatPoly::constant(rat(4 * (n - 1) * (d * (d - n) + 2 * n)));
    &(&linear * &linear) + &constant
}

/// Certificate that a polynomial in `k` is positive on all of the real line,
/// or the evidence against it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "certificate", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum KCertificate {
    PositiveForAllK,
    /// The polynomial is not positive at `k`.
    NonpositiveAt {
        #[serde(with = "crate::exactmath::serde_impl::rational")]
        k: Rational,
        #[serde(with = "crate::exactmath::serde_impl::rational")]
        value: Rational,
    },
    /// A real root, and so a sign change or touch, lies in this interval.
    RootIn { interval: RatInterval },
}

impl KCertificate {
    pub fn is_positive(&self) -> bool {
        matches!(self, KCertificate::PositiveForAllK)
    }
}

impl fmt::Display for KCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KCertificate::PositiveForAllK => f.write_str("positive for all k"),
            KCertificate::NonpositiveAt { k, value } => write!(f, "value {value} at k={k}"),
            KCertificate::RootIn { interval } if interval.is_exact() => write!(f, "root at k={}", interval.lo),
            KCertificate::RootIn { interval } => write!(f, "root in ({}, {})", interval.lo, interval.hi),
        }
    }
}

/// Positive everywhere iff there is no real root and the value at `0` is
/// positive.
pub fn certify_positive_for_all_k(q: &RatPoly) -> Result<KCertificate> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let at_zero = q.eval(&Rational::zero());
    if !at_zero.is_positive() {
        return Ok(KCertificate::NonpositiveAt {
            k: Rational::zero(),
            value: at_zero,
        });
    }
    if sturm_root_count(q, &Endpoint::NegInf, &Endpoint::PosInf)? == 0 {
        return Ok(KCertificate::PositiveForAllK);
    }
    let interval = isolate_roots(q)?.into_iter().next().expect("a real root was counted");
    Ok(KCertificate::RootIn { interval })
}

/// Full check of one grid point: factorization at every sample `k`, the
/// discriminant certificate, the P2 closed form, and real-rootedness of the
/// core wherever the discriminant is positive.
pub fn family_check(p: &FamilyParams, k_samples: &[Rational]) -> Result<FamilyReport> {
    let p = FamilyParams::new(p.family, p.n, p.parity, p.param)?;
    let mut cores = Vec::new();
    let mut factorization = Outcome::pass();
    for k in k_samples {
        match family_core_poly(&p, k) {
            Ok(core) => cores.push((k.clone(), core)),
            Err(Error::NonzeroRemainder { power }) => {
                factorization = Outcome::fail(Witness::Reason {
                    reason: format!("(1+t)^{power} does not divide the summand at k={k}"),
                });
                break;
            }
            Err(e) => return Err(e),
        }
    }

    let (discriminant, certificate) = match discriminant_in_k(&p) {
        Ok(q) if q.is_zero() => (Some(q), None),
        Ok(q) => {
            let cert = certify_positive_for_all_k(&q)?;
            (Some(q), Some(cert))
        }
        Err(Error::NonzeroRemainder { .. }) => (None, None),
        Err(e) => return Err(e),
    };

    let closed_form = (p.family == FamilyId::P2).then(|| {
        let expected = p2_discriminant_closed_form(p.n, p.d());
        match &discriminant {
            Some(q) if *q == expected => Outcome::pass(),
            Some(q) => Outcome::fail(Witness::Reason {
                reason: format!("computed {q}, closed form {expected}"),
            }),
            None => Outcome::skipped(),
        }
    });

    let mut real_rooted_cross_check = Outcome::skipped();
    if let Some(q) = &discriminant {
        for (k, core) in &cores {
            if q.eval(k).is_positive() {
                if !is_real_rooted(core)? {
                    real_rooted_cross_check = Outcome::fail(Witness::Reason {
                        reason: format!("core at k={k} has positive discriminant but is not real-rooted"),
                    });
                    break;
                }
                real_rooted_cross_check = Outcome::pass();
            }
        }
    }

    // P2's certificate is informative only; its claim is the closed form
    let certificate_ok = match (&certificate, p.family) {
        (_, FamilyId::P2) => true,
        (Some(c), _) => c.is_positive(),
        (None, _) => false,
    };
    let failed = [Some(&factorization), closed_form.as_ref(), Some(&real_rooted_cross_check)]
        .into_iter()
        .flatten()
        .any(|o| o.status == Status::Fail);
    Ok(FamilyReport {
        family: p.family,
        n: p.n,
        d: p.d(),
        m_or_h: p.param,
        status: Status::from_bool(certificate_ok && !failed),
        factorization,
        discriminant,
        certificate,
        closed_form,
        real_rooted_cross_check,
    })
}

/// Pairs whose Wronskian constant term has a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WronskianPair {
    /// `Q_{U_{m,d}}` against `D_{1,d}`
    M1,
    /// `D_{h+1,d}` against `D_{h,d}`
    HH1,
    /// `Q_{U_{m,d}}` against `D_{m,d}`
    MD,
}

impl WronskianPair {
    pub fn instance(self, param: u32, d: u32) -> LemmaInstance {
        match self {
            WronskianPair::M1 => LemmaInstance::M1 { m: param, d },
            WronskianPair::HH1 => LemmaInstance::HH1 { h: param, d },
            WronskianPair::MD => LemmaInstance::MD { m: param, d },
        }
    }

    /// Factor between the constant term of `W[B(left), B(right)]` and the
    /// closed form: the closed forms for `M1` and `MD` omit `C(n, 1)`.
    pub fn normalization(self, d: u32) -> Rational {
        match self {
            WronskianPair::M1 | WronskianPair::MD => rat(max_degree(d) as i64),
            WronskianPair::HH1 => Rational::one(),
        }
    }
}

/// Closed forms for the constant term of the Wronskian of a lemma pair (up
/// to [`WronskianPair::normalization`]).
pub fn wronskian_constant_closed_form(id: WronskianPair, param: u32, d: u32) -> Result<Rational> {
    if param < 1 || d < 3 {
        return Err(Error::InvalidParams(format!("need m|h >= 1 and d >= 3, got {param}, {d}")));
    }
    let fact = |n: u32| big(factorial(u64::from(n)));
    let choose = |n: u32, k: u32| big(binomial(u64::from(n), u64::from(k)));
    let (p, d64) = (i64::from(param), i64::from(d));
    Ok(match id {
        WronskianPair::M1 => {
            let lead = rat(d64 * p + (d64 - 1) * (d64 - 1) + p * p);
            -(lead * fact(d + param - 2) / (fact(d - 1) * fact(param + 1)))
        }
        WronskianPair::HH1 => {
            let h = param;
            let n = rat(max_degree(d) as i64);
            -(n * choose(d + h - 3, h - 1) * choose(d + h - 1, h) / rat(i64::from(d + h - 1)))
        }
        WronskianPair::MD => {
            let m = param;
            let lead = rat(p * p + (d64 - 1) * (d64 + 2 * p - 2) + 1);
            let den = rat((d64 + p - 1) * (d64 + p));
            -(lead / den * choose(d + m - 3, m - 1) * choose(d + m, m + 1))
        }
    })
}

/// Instances of the interlacing lemmas; each asserts `B(left) << B(right)`
/// with `B` the binomial transform at `n = floor((d-1)/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "lemma")]
pub enum LemmaInstance {
    /// `Q_{U_{m,d}} << D_{1,d}`
    #[serde(rename = "L_M1")]
    M1 { m: u32, d: u32 },
    /// `D_{h+1,d} << D_{h,d}`
    #[serde(rename = "L_HH1")]
    HH1 { h: u32, d: u32 },
    /// `Q_{U_{m,d}} << D_{m,d}`
    #[serde(rename = "L_MD")]
    MD { m: u32, d: u32 },
    /// `Q_{U_{m,d}} << D_{h,d}` for `1 <= h <= m`
    #[serde(rename = "L_HM")]
    HM { m: u32, h: u32, d: u32 },
}

impl LemmaInstance {
    pub fn name(&self) -> &'static str {
        match self {
            LemmaInstance::M1 { .. } => "L_M1",
            LemmaInstance::HH1 { .. } => "L_HH1",
            LemmaInstance::MD { .. } => "L_MD",
            LemmaInstance::HM { .. } => "L_HM",
        }
    }

    pub fn d(&self) -> u32 {
        match *self {
            LemmaInstance::M1 { d, .. }
            | LemmaInstance::HH1 { d, .. }
            | LemmaInstance::MD { d, .. }
            | LemmaInstance::HM { d, .. } => d,
        }
    }

    /// The parameter that varies along the lemma: `h` where present, else `m`.
    pub fn m_or_h(&self) -> u32 {
        match *self {
            LemmaInstance::M1 { m, .. } | LemmaInstance::MD { m, .. } => m,
            LemmaInstance::HH1 { h, .. } | LemmaInstance::HM { h, .. } => h,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.d();
        if d < 3 {
            return Err(Error::InvalidRank { min: 3, got: d });
        }
        let ok = match *self {
            LemmaInstance::M1 { m, .. } | LemmaInstance::MD { m, .. } => m >= 1,
            LemmaInstance::HH1 { h, .. } => h >= 1,
            LemmaInstance::HM { m, h, .. } => 1 <= h && h <= m,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!("{self:?} outside the lemma's range")))
        }
    }

    /// `(left, right)` before the binomial transform.
    pub fn pair(&self) -> Result<(RatPoly, RatPoly)> {
        self.validate()?;
        let q = |m, d| inverse_kl_uniform(UniformParams::new(m, d)?).map(|q| q.poly);
        let diff = |h, d| uniform_difference(h, d).map(|q| q.poly);
        Ok(match *self {
            LemmaInstance::M1 { m, d } => (q(m, d)?, diff(1, d)?),
            LemmaInstance::HH1 { h, d } => (diff(h + 1, d)?, diff(h, d)?),
            LemmaInstance::MD { m, d } => (q(m, d)?, diff(m, d)?),
            LemmaInstance::HM { m, h, d } => (q(m, d)?, diff(h, d)?),
        })
    }

    /// `(B(left), B(right))` with `n = floor((d-1)/2)`.
    pub fn transformed_pair(&self) -> Result<(RatPoly, RatPoly)> {
        let (l, r) = self.pair()?;
        let n = max_degree(self.d());
        Ok((hadamard_binomial(&l, n)?, hadamard_binomial(&r, n)?))
    }
}

/// Constant term of `W[B(left), B(right)]`.
pub fn wronskian_constant_direct(inst: &LemmaInstance) -> Result<Rational> {
    let (f, g) = inst.transformed_pair()?;
    Ok(f.wronskian(&g).coeff(0))
}

/// Check `B(left) << B(right)`. Failures of real-rootedness are reported in
/// the verdict rather than as errors.
pub fn verify_interlacing_lemma(inst: &LemmaInstance) -> Result<LemmaReport> {
    let (left, right) = inst.transformed_pair()?;
    let wronskian_constant = left.wronskian(&right).coeff(0);
    let (status, relation, witness) = match interlaces(&left, &right) {
        Ok(v) => {
            let witness = v.witness.as_ref().map(|(a, b)| Witness::Reason {
                reason: format!("left root in [{}, {}] against right root in [{}, {}]", a.lo, a.hi, b.lo, b.hi),
            });
            (Status::from_bool(v.f_interlaces_g()), Some(v.relation), witness)
        }
        Err(e @ (Error::NotRealRooted(_) | Error::NegativeLeadingCoefficient(_))) => {
            (Status::Fail, None, Some(Witness::Reason { reason: e.to_string() }))
        }
        Err(e) => return Err(e),
    };
    Ok(LemmaReport {
        instance: *inst,
        left,
        right,
        status,
        relation,
        wronskian_constant,
        witness,
    })
}

fn real_rooted_outcome(p: &RatPoly) -> Outcome {
    if p.is_zero() {
        return Outcome::pass();
    }
    match crate::exactmath::squarefree_part(p) {
        Ok(dec) => {
            let distinct = dec.radical.degree().finite().unwrap_or(0);
            let real = sturm_root_count(&dec.radical, &Endpoint::NegInf, &Endpoint::PosInf).unwrap_or(0);
            if distinct <= 1 || real == distinct {
                Outcome::pass()
            } else {
                Outcome::fail(Witness::RealRoots { real, distinct })
            }
        }
        Err(e) => Outcome::fail(Witness::Reason { reason: e.to_string() }),
    }
}

fn verdict_outcome(v: crate::inequalities::Verdict) -> Outcome {
    if v.pass {
        Outcome::pass()
    } else {
        Outcome::fail(Witness::Index {
            index: v.witness_index.unwrap_or(0),
            value: v.witness_value,
        })
    }
}

/// Compute `Q_M` and, for matroidal inputs, check real-rootedness of both
/// binomial transforms, log-concavity, the higher-order Turán inequalities
/// and coefficient positivity.
pub fn theorem_pipeline(data: &PavingData) -> Result<CheckReport> {
    let q = inverse_kl_paving(data)?;
    let coeffs = q.coefficient_strings();
    let reason = match q.mark {
        Mark::Valid => None,
        Mark::NegativeCoefficient { index } => Some(Witness::NegativeCoefficient { index }),
        Mark::ZeroConstantTerm => Some(Witness::ZeroConstantTerm),
    };
    if reason.is_some() {
        return Ok(CheckReport {
            input: data.clone(),
            coeffs,
            status: Status::NotMatroidal,
            reason,
            checks: TheoremChecks::uniform(Outcome::not_matroidal()),
            elapsed_us: None,
        });
    }

    let n = max_degree(data.d);
    let hadamard_real_rooted = real_rooted_outcome(&hadamard_binomial(&q.poly, n)?);
    let own_degree = match q.poly.degree() {
        Degree::Finite(k) => k,
        Degree::NegInf => 0,
    };
    let b_transform_real_rooted = real_rooted_outcome(&hadamard_binomial(&q.poly, own_degree)?);
    let seq = CoeffSequence::of_poly(&q.poly);
    let log_concave = verdict_outcome(is_log_concave_no_internal_zeros(&seq));
    let higher_order_turan = if seq.len() >= 4 {
        verdict_outcome(higher_order_turan(&seq))
    } else {
        Outcome::skipped()
    };
    let profile = positivity_profile(&q);
    let positivity = match (profile.first_nonpositive, profile.top) {
        (Some(index), _) => Outcome::fail(Witness::NegativeCoefficient { index }),
        (None, TopCoefficient::Negative) => Outcome::fail(Witness::NegativeCoefficient { index: n }),
        (None, TopCoefficient::Zero) => {
            Outcome::with_witness(Status::Pass, Some(Witness::TopCoefficientZero { index: n }))
        }
        (None, TopCoefficient::Positive) => Outcome::pass(),
    };
    let checks = TheoremChecks {
        hadamard_real_rooted,
        b_transform_real_rooted,
        log_concave,
        higher_order_turan,
        positivity,
    };
    Ok(CheckReport {
        input: data.clone(),
        coeffs,
        status: CheckReport::summarize(&checks),
        reason: None,
        checks,
        elapsed_us: None,
    })
}

/// Sample values of `k` used for the factorization checks.
pub fn default_k_samples() -> Vec<Rational> {
    use crate::exactmath::ratio;
    vec![rat(-10), rat(-1), ratio(-1, 2), rat(0), ratio(1, 2), rat(1), rat(10)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratio;

    fn params(family: FamilyId, n: u32, parity: Parity, param: u32) -> FamilyParams {
        FamilyParams::new(family, n, parity, param).unwrap()
    }

    #[test]
    fn family_params_validation() {
        assert!(FamilyParams::new(FamilyId::P1, 2, Parity::Odd, 2).is_err());
        assert!(FamilyParams::new(FamilyId::P1, 3, Parity::Odd, 1).is_err());
        assert!(FamilyParams::new(FamilyId::P2, 3, Parity::Odd, 2).is_err());
        assert!(FamilyParams::new(FamilyId::P3, 3, Parity::Odd, 1).is_err());
        assert!(FamilyParams::new(FamilyId::P5, 3, Parity::Even, 1).is_ok());
        assert_eq!(params(FamilyId::P4, 5, Parity::Even, 1).d(), 12);
        assert_eq!("p3".parse::<FamilyId>().unwrap(), FamilyId::P3);
        assert!("p9".parse::<FamilyId>().is_err());
    }

    #[test]
    fn p2_core_at_zero() {
        let p = params(FamilyId::P2, 3, Parity::Odd, 1);
        assert_eq!(p.d(), 7);
        let core = family_core_poly(&p, &rat(0)).unwrap();
        assert_eq!(core, RatPoly::from_ints(&[8, 28, 8]));
    }

    #[test]
    fn p1_at_n3_is_its_own_core() {
        let p = params(FamilyId::P1, 3, Parity::Even, 4);
        for k in default_k_samples() {
            assert_eq!(family_core_poly(&p, &k).unwrap(), family_summand_poly(&p, &k).unwrap());
        }
    }

    #[test]
    fn p5_at_zero_has_positive_coefficients() {
        let p = params(FamilyId::P5, 6, Parity::Odd, 3);
        let s = family_summand_poly(&p, &rat(0)).unwrap();
        assert_eq!(s.degree(), Degree::Finite(6));
        assert!(s.coeffs().iter().all(|c| c.is_positive()));
    }

    #[test]
    fn factorization_holds_at_random_k() {
        for family in FamilyId::ALL {
            for n in 4..=6 {
                for parity in Parity::BOTH {
                    for param in family.param_range(4) {
                        let p = params(family, n, parity, param);
                        for k in [ratio(7, 3), ratio(-13, 5), ratio(101, 17)] {
                            let core = family_core_poly(&p, &k).unwrap();
                            assert!(core.degree() <= Degree::Finite(family.core_degree() as usize));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn discriminant_matches_pointwise() {
        for family in FamilyId::ALL {
            let p = params(family, 5, Parity::Even, family.param_range(3).next().unwrap());
            let q = discriminant_in_k(&p).unwrap();
            assert!(q.degree() <= Degree::Finite(if family.is_cubic() { 6 } else { 2 }));
            for k in default_k_samples() {
                let core = family_core_poly(&p, &k).unwrap();
                let direct = if family.is_cubic() {
                    cubic_discriminant(&core.coeff(3), &core.coeff(2), &core.coeff(1), &core.coeff(0))
                } else {
                    quadratic_discriminant(&core.coeff(2), &core.coeff(1), &core.coeff(0))
                };
                assert_eq!(q.eval(&k), direct, "{family} k={k}");
            }
        }
    }

    #[test]
    fn p2_discriminant_spot_value() {
        let p = params(FamilyId::P2, 3, Parity::Odd, 1);
        let q = discriminant_in_k(&p).unwrap();
        assert_eq!(q.eval(&rat(0)), rat(528));
        assert_eq!(q, p2_discriminant_closed_form(3, 7));
        assert!(certify_positive_for_all_k(&q).unwrap().is_positive());
    }

    #[test]
    fn certificate_examples() {
        assert_eq!(
            certify_positive_for_all_k(&RatPoly::from_ints(&[1, 0, 1])).unwrap(),
            KCertificate::PositiveForAllK
        );
        assert_eq!(
            certify_positive_for_all_k(&RatPoly::from_ints(&[-1, 0, 1])).unwrap(),
            KCertificate::NonpositiveAt {
                k: rat(0),
                value: rat(-1)
            }
        );
        // positive at 0 but with roots at 2 and 3
        match certify_positive_for_all_k(&RatPoly::from_ints(&[6, -5, 1])).unwrap() {
            KCertificate::RootIn { interval } => assert!(interval.contains(&rat(2))),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(certify_positive_for_all_k(&RatPoly::constant(rat(3))).unwrap(), KCertificate::PositiveForAllK);
        assert_eq!(certify_positive_for_all_k(&RatPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn closed_form_wronskian_values() {
        assert_eq!(wronskian_constant_closed_form(WronskianPair::M1, 1, 3).unwrap(), rat(-4));
        assert_eq!(wronskian_constant_closed_form(WronskianPair::M1, 1, 5).unwrap(), rat(-11));
        assert_eq!(wronskian_constant_closed_form(WronskianPair::MD, 2, 5).unwrap(), rat(-110));
        assert_eq!(wronskian_constant_closed_form(WronskianPair::HH1, 1, 5).unwrap(), rat(-2));
        assert!(wronskian_constant_closed_form(WronskianPair::HH1, 2, 5).unwrap().is_negative());
        assert!(wronskian_constant_closed_form(WronskianPair::M1, 0, 5).is_err());
        assert!(wronskian_constant_closed_form(WronskianPair::MD, 2, 2).is_err());
    }

    #[test]
    fn direct_wronskian_matches_normalized_closed_form() {
        for id in [WronskianPair::M1, WronskianPair::HH1, WronskianPair::MD] {
            for param in 1..=6 {
                for d in 3..=12 {
                    let direct = wronskian_constant_direct(&id.instance(param, d)).unwrap();
                    let closed = wronskian_constant_closed_form(id, param, d).unwrap();
                    assert_eq!(direct, closed * id.normalization(d), "{id:?} param={param} d={d}");
                }
            }
        }
        let m1 = LemmaInstance::M1 { m: 1, d: 3 };
        assert_eq!(wronskian_constant_direct(&m1).unwrap(), rat(-4));
    }

    #[test]
    fn lemma_examples() {
        let m1 = LemmaInstance::M1 { m: 1, d: 3 };
        let (l, r) = m1.transformed_pair().unwrap();
        assert_eq!(l, RatPoly::from_ints(&[3, 2]));
        assert_eq!(r, RatPoly::from_ints(&[1, 2]));
        assert_eq!(verify_interlacing_lemma(&m1).unwrap().status, Status::Pass);

        for inst in [LemmaInstance::HM { m: 3, h: 2, d: 7 }, LemmaInstance::MD { m: 2, d: 5 }] {
            let rep = verify_interlacing_lemma(&inst).unwrap();
            assert_eq!(rep.status, Status::Pass, "{inst:?}");
        }
        assert!(LemmaInstance::HM { m: 2, h: 3, d: 7 }.validate().is_err());
        assert!(LemmaInstance::M1 { m: 1, d: 2 }.validate().is_err());
    }

    #[test]
    fn lemma_report_round_trips() {
        let rep = verify_interlacing_lemma(&LemmaInstance::HH1 { h: 2, d: 6 }).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        assert!(json.starts_with(r#"{"lemma":"L_HH1","h":2,"d":6"#), "{json}");
        let back: LemmaReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rep);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn pipeline_examples() {
        let rep = theorem_pipeline(&PavingData::new(2, 3, [(1, 1)].into()).unwrap()).unwrap();
        assert_eq!(rep.coeffs, vec!["5", "3"]);
        assert_eq!(rep.status, Status::Pass);
        assert_eq!(rep.checks.higher_order_turan.status, Status::Skipped);

        let rep = theorem_pipeline(&PavingData::uniform(1, 5)).unwrap();
        assert_eq!(rep.status, Status::Pass);

        let rep = theorem_pipeline(&PavingData::new(1, 3, [(1, 10)].into()).unwrap()).unwrap();
        assert_eq!(rep.status, Status::NotMatroidal);
        assert!(rep.checks.iter().all(|(_, o)| o.status == Status::NotMatroidal));
        assert_eq!(rep.reason, Some(Witness::NegativeCoefficient { index: 0 }));
    }

    #[test]
    fn pipeline_report_round_trips() {
        let rep = theorem_pipeline(&PavingData::new(4, 9, [(1, 2), (3, 1)].into()).unwrap()).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        let back: CheckReport = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
        assert!(!json.contains("elapsed_us"));
    }

    #[test]
    fn family_check_small_grid() {
        for p in FamilyParams::grid(&FamilyId::ALL, 3..=5, 3) {
            let rep = family_check(&p, &default_k_samples()).unwrap();
            assert_eq!(rep.status, Status::Pass, "{p:?}: {rep:?}");
        }
    }

    #[test]
    fn grid_order_is_sorted() {
        let g = FamilyParams::grid(&[FamilyId::P5, FamilyId::P1], 3..=4, 3);
        let mut sorted = g.clone();
        sorted.sort();
        assert_eq!(g, sorted);
        assert_eq!(g.first().unwrap().family, FamilyId::P1);
    }
}
