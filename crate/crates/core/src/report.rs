//! Serializable reports for single cases, lemma-family grid points and the
//! CSV summary.

use serde::{Deserialize, Serialize};

use crate::klcore::PavingData;
use crate::lemmascan::{FamilyId, KCertificate, LemmaInstance};
use crate::realroots::Relation;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    NotMatroidal,
}

impl Status {
    pub fn from_bool(pass: bool) -> Self {
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
            Status::NotMatroidal => "NOT_MATROIDAL",
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Evidence attached to a check outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Index of a violated inequality and the (negative) slack there.
    Index {
        index: usize,
        #[serde(with = "crate::exactmath::serde_impl::rational_opt")]
        value: Option<Rational>,
    },
    NegativeCoefficient { index: usize },
    ZeroConstantTerm,
    /// Fewer distinct real roots than distinct roots.
    RealRoots { real: usize, distinct: usize },
    /// The top admissible coefficient vanishes; recorded, not a failure.
    TopCoefficientZero { index: usize },
    /// Free-form reason, used for arithmetic errors surfaced as findings.
    Reason { reason: String },
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::Index { index, value: Some(v) } => write!(f, "i={index} value={v}"),
            Witness::Index { index, value: None } => write!(f, "i={index}"),
            Witness::NegativeCoefficient { index } => write!(f, "negative coefficient at {index}"),
            Witness::ZeroConstantTerm => f.write_str("zero constant term"),
            Witness::RealRoots { real, distinct } => write!(f, "{real} of {distinct} distinct roots real"),
            Witness::TopCoefficientZero { index } => write!(f, "coefficient {index} is zero"),
            Witness::Reason { reason } => f.write_str(reason),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome {
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn skipped() -> Self {
        Outcome {
            status: Status::Skipped,
            witness: None,
        }
    }

    pub fn not_matroidal() -> Self {
        Outcome {
            status: Status::NotMatroidal,
            witness: None,
        }
    }

    pub fn fail(witness: Witness) -> Self {
        Outcome {
            status: Status::Fail,
            witness: Some(witness),
        }
    }

    pub fn with_witness(status: Status, witness: Option<Witness>) -> Self {
        Outcome { status, witness }
    }
}

/// Per-check results for one paving matroid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremChecks {
    /// `sum C(n,i) a_i t^i` with `n = floor((d-1)/2)` is real-rooted.
    pub hadamard_real_rooted: Outcome,
    /// Same with `n = deg Q`.
    pub b_transform_real_rooted: Outcome,
    pub log_concave: Outcome,
    pub higher_order_turan: Outcome,
    pub positivity: Outcome,
}

impl TheoremChecks {
    pub fn uniform(outcome: Outcome) -> Self {
        TheoremChecks {
            hadamard_real_rooted: outcome.clone(),
            b_transform_real_rooted: outcome.clone(),
            log_concave: outcome.clone(),
            higher_order_turan: outcome.clone(),
            positivity: outcome,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &Outcome)> {
        [
            ("hadamard_real_rooted", &self.hadamard_real_rooted),
            ("b_transform_real_rooted", &self.b_transform_real_rooted),
            ("log_concave", &self.log_concave),
            ("higher_order_turan", &self.higher_order_turan),
            ("positivity", &self.positivity),
        ]
        .into_iter()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub input: PavingData,
    pub coeffs: Vec<String>,
    pub status: Status,
    /// Why the input was classed as not matroidal.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<Witness>,
    pub checks: TheoremChecks,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

impl CheckReport {
    /// Overall status from the individual checks: `FAIL` if any failed.
    pub fn summarize(checks: &TheoremChecks) -> Status {
        if checks.iter().any(|(_, o)| o.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        }
    }

    pub fn first_failure(&self) -> Option<(&'static str, &Outcome)> {
        self.checks.iter().find(|(_, o)| o.status == Status::Fail)
    }
}

/// Result of one lemma-family grid point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: FamilyId,
    pub n: u32,
    pub d: u32,
    pub m_or_h: u32,
    pub status: Status,
    /// Exact division by the claimed power of `1+t` at every sampled `k`.
    pub factorization: Outcome,
    #[serde(default)]
    pub discriminant: Option<crate::RatPoly>,
    pub certificate: Option<KCertificate>,
    /// For the quadratic family with a closed-form discriminant: whether it
    /// matches the computed one identically in `k`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<Outcome>,
    /// Cores with positive discriminant at the sampled `k` are real-rooted.
    pub real_rooted_cross_check: Outcome,
}

/// Result of one interlacing-lemma instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    #[serde(flatten)]
    pub instance: LemmaInstance,
    pub left: crate::RatPoly,
    pub right: crate::RatPoly,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<Relation>,
    #[serde(with = "crate::exactmath::serde_impl::rational")]
    pub wronskian_constant: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// One line of the CSV summary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub family: String,
    pub n: u32,
    pub d: u32,
    pub m_or_h: u32,
    pub verdict: Status,
    pub witness: String,
}

impl From<&CheckReport> for SummaryRow {
    fn from(r: &CheckReport) -> Self {
        let witness = match (&r.reason, r.first_failure()) {
            (Some(w), _) => w.to_string(),
            (None, Some((name, o))) => match &o.witness {
                Some(w) => format!("{name}: {w}"),
                None => name.to_string(),
            },
            (None, None) => String::new(),
        };
        SummaryRow {
            family: "PAVING".into(),
            n: crate::klcore::max_degree(r.input.d) as u32,
            d: r.input.d,
            m_or_h: r.input.m,
            verdict: r.status,
            witness,
        }
    }
}

impl From<&FamilyReport> for SummaryRow {
    fn from(r: &FamilyReport) -> Self {
        let witness = [
            ("factorization", Some(&r.factorization)),
            ("closed_form", r.closed_form.as_ref()),
            ("real_rooted", Some(&r.real_rooted_cross_check)),
        ]
        .into_iter()
        .find_map(|(name, o)| match o {
            Some(o) if o.status == Status::Fail => Some(match &o.witness {
                Some(w) => format!("{name}: {w}"),
                None => name.to_string(),
            }),
            _ => None,
        })
        .or_else(|| match &r.certificate {
            Some(c) if !c.is_positive() => Some(format!("discriminant: {c}")),
            _ => None,
        })
        .unwrap_or_default();
        SummaryRow {
            family: r.family.to_string(),
            n: r.n,
            d: r.d,
            m_or_h: r.m_or_h,
            verdict: r.status,
            witness,
        }
    }
}

impl From<&LemmaReport> for SummaryRow {
    fn from(r: &LemmaReport) -> Self {
        SummaryRow {
            family: r.instance.name().into(),
            n: crate::klcore::max_degree(r.instance.d()) as u32,
            d: r.instance.d(),
            m_or_h: r.instance.m_or_h(),
            verdict: r.status,
            witness: r.witness.as_ref().map(|w| w.to_string()).unwrap_or_default(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratio;
    use crate::lemmascan::{theorem_pipeline, verify_interlacing_lemma};

    #[test]
    fn status_wire_names() {
        for s in [Status::Pass, Status::Fail, Status::Skipped, Status::NotMatroidal] {
            assert_eq!(serde_json::to_string(&s).unwrap(), format!("\"{s}\""));
        }
        assert_eq!(Status::from_bool(false), Status::Fail);
    }

    #[test]
    fn witness_wire_format() {
        let w = Witness::Index { index: 2, value: Some(ratio(-1, 3)) };
        let text = serde_json::to_string(&w).unwrap();
        assert_eq!(text, r#"{"kind":"index","index":2,"value":"-1/3"}"#);
        assert_eq!(serde_json::from_str::<Witness>(&text).unwrap(), w);
        assert_eq!(w.to_string(), "i=2 value=-1/3");
        let w = Witness::ZeroConstantTerm;
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"kind":"zero_constant_term"}"#);
        assert_eq!(serde_json::to_string(&Outcome::pass()).unwrap(), r#"{"status":"PASS"}"#);
    }

    #[test]
    fn summary_and_first_failure() {
        let mut checks = TheoremChecks::uniform(Outcome::pass());
        assert_eq!(CheckReport::summarize(&checks), Status::Pass);
        checks.log_concave = Outcome::fail(Witness::Index { index: 1, value: None });
        checks.positivity = Outcome::fail(Witness::NegativeCoefficient { index: 0 });
        assert_eq!(CheckReport::summarize(&checks), Status::Fail);
        let report = CheckReport {
            input: PavingData::uniform(2, 3),
            coeffs: vec!["1".into()],
            status: Status::Fail,
            reason: None,
            checks,
            elapsed_us: None,
        };
        let (name, _) = report.first_failure().unwrap();
        assert_eq!(name, "log_concave");
        assert_eq!(SummaryRow::from(&report).witness, "log_concave: i=1");
    }

    #[test]
    fn rows_from_real_reports() {
        let data = PavingData::new(1, 3, [(1, 10)].into()).unwrap();
        let row = SummaryRow::from(&theorem_pipeline(&data).unwrap());
        assert_eq!((row.family.as_str(), row.n, row.d, row.m_or_h), ("PAVING", 1, 3, 1));
        assert_eq!(row.verdict, Status::NotMatroidal);
        assert_eq!(row.witness, "negative coefficient at 0");

        let lemma = verify_interlacing_lemma(&LemmaInstance::M1 { m: 1, d: 3 }).unwrap();
        let row = SummaryRow::from(&lemma);
        assert_eq!((row.family.as_str(), row.verdict), ("L_M1", Status::Pass));
        let text = serde_json::to_string(&lemma).unwrap();
        assert!(text.starts_with(r#"{"lemma":"L_M1","m":1,"d":3,"#));
        assert_eq!(serde_json::from_str::<LemmaReport>(&text).unwrap(), lemma);
    }
}
