use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::isolate::{isolate_squarefree, multiplicity_in, IsolatingInterval, RootCell};
use crate::error::{Error, Result, Which};
use crate::exactmath::{squarefree_part, ExactField, Poly, Sign};

/// How the roots of `f` and `g` sit relative to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Relation {
    /// `g << f`
    GInterlacesF,
    /// `f << g`
    FInterlacesG,
    /// Both orderings hold (shared roots, constants, or a zero polynomial).
    Both,
    /// Roots alternate but fit neither degree case. Cannot occur for
    /// real-rooted inputs with positive leading coefficients, which
    /// `interlaces` requires; kept for the wire format.
    AlternatingOnly,
    NotAlternating,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(
    serialize = "T: std::fmt::Display",
    deserialize = "T: std::str::FromStr, T::Err: std::fmt::Display"
))]
pub struct InterlaceVerdict<T> {
    pub relation: Relation,
    /// A root of the first polynomial and a root of the second whose order
    /// breaks both interlacing patterns. `None` when the degrees differ by
    /// more than one, which rules out alternation on its own.
    pub witness: Option<(IsolatingInterval<T>, IsolatingInterval<T>)>,
}

impl<T> InterlaceVerdict<T> {
    pub fn is_alternating(&self) -> bool {
        self.relation != Relation::NotAlternating
    }

    /// `f << g` holds (possibly alongside `g << f`).
    pub fn f_interlaces_g(&self) -> bool {
        matches!(self.relation, Relation::FInterlacesG | Relation::Both)
    }

    /// `g << f` holds (possibly alongside `f << g`).
    pub fn g_interlaces_f(&self) -> bool {
        matches!(self.relation, Relation::GInterlacesF | Relation::Both)
    }
}

/// Joint root structure of two polynomials: the distinct real roots of
/// `f * g` in increasing order, and each root's multiplicity in `f` and `g`.
struct JointRoots<T> {
    cells: Vec<RootCell<T>>,
    mult_f: Vec<usize>,
    mult_g: Vec<usize>,
}

impl<T: ExactField> JointRoots<T> {
    fn new(f: &Poly<T>, g: &Poly<T>) -> Result<Self> {
        let dec_f = squarefree_part(f)?;
        let dec_g = squarefree_part(g)?;
        let joint = squarefree_part(&(&dec_f.radical * &dec_g.radical))?.radical;
        let cells = isolate_squarefree(&joint);
        let mult_f = cells.iter().map(|c| multiplicity_in(c, &dec_f)).collect();
        let mult_g = cells.iter().map(|c| multiplicity_in(c, &dec_g)).collect();
        Ok(JointRoots { cells, mult_f, mult_g })
    }

    /// Root ranks with multiplicity, largest first.
    fn descending(mults: &[usize]) -> Vec<usize> {
        let mut out = Vec::new();
        for (rank, &m) in mults.iter().enumerate().rev() {
            out.extend(std::iter::repeat_n(rank, m));
        }
        out
    }

    fn interval(&self, rank: usize, mults: &[usize]) -> IsolatingInterval<T> {
        IsolatingInterval {
            lo: self.cells[rank].lo.clone(),
            hi: self.cells[rank].hi.clone(),
            multiplicity: mults[rank],
        }
    }
}

/// Checks `v << u` for descending root ranks of the interlacer `v` and the
/// interlaced `u`. On failure returns the offending `(u index, v index)`.
fn check_order(u: &[usize], v: &[usize]) -> std::result::Result<(), Option<(usize, usize)>> {
    let n = u.len();
    if n == v.len() {
        // v_n <= u_n <= v_{n-1} <= ... <= v_1 <= u_1
        for i in 0..n {
            if v[i] > u[i] {
                return Err(Some((i, i)));
            }
            if i + 1 < n && u[i + 1] > v[i] {
                return Err(Some((i + 1, i)));
            }
        }
        Ok(())
    } else if n == v.len() + 1 {
        // u_n <= v_{n-1} <= u_{n-1} <= ... <= v_1 <= u_1
        for i in 0..v.len() {
            if v[i] > u[i] {
                return Err(Some((i, i)));
            }
            if u[i + 1] > v[i] {
                return Err(Some((i + 1, i)));
            }
        }
        Ok(())
    } else {
        Err(None)
    }
}

fn check_preconditions<T: ExactField>(p: &Poly<T>, which: Which) -> Result<()> {
    match p.leading_coeff() {
        Some(lc) if lc.is_negative() => Err(Error::NegativeLeadingCoefficient(which)),
        _ => Ok(()),
    }
}

/// Classify the root interleaving of two real-rooted polynomials with
/// positive leading coefficients. The zero polynomial interlaces, and is
/// interlaced by, everything.
pub fn interlaces<T: ExactField>(f: &Poly<T>, g: &Poly<T>) -> Result<InterlaceVerdict<T>> {
    check_preconditions(f, Which::First)?;
    check_preconditions(g, Which::Second)?;
    if f.is_zero() || g.is_zero() {
        let nonzero = if f.is_zero() { (g, Which::Second) } else { (f, Which::First) };
        if !nonzero.0.is_zero() && !super::is_real_rooted(nonzero.0)? {
            return Err(Error::NotRealRooted(nonzero.1));
        }
        return Ok(InterlaceVerdict {
            relation: Relation::Both,
            witness: None,
        });
    }

    let joint = JointRoots::new(f, g)?;
    let deg_f = f.degree().finite().expect("nonzero");
    let deg_g = g.degree().finite().expect("nonzero");
    if joint.mult_f.iter().sum::<usize>() != deg_f {
        return Err(Error::NotRealRooted(Which::First));
    }
    if joint.mult_g.iter().sum::<usize>() != deg_g {
        return Err(Error::NotRealRooted(Which::Second));
    }

    let u = JointRoots::<T>::descending(&joint.mult_f);
    let v = JointRoots::<T>::descending(&joint.mult_g);
    let g_in_f = check_order(&u, &v);
    let f_in_g = check_order(&v, &u);
    let relation = match (g_in_f.is_ok(), f_in_g.is_ok()) {
        (true, true) => Relation::Both,
        (true, false) => Relation::GInterlacesF,
        (false, true) => Relation::FInterlacesG,
        (false, false) => Relation::NotAlternating,
    };
    // f_in_g reports (g index, f index)
    let offending = match (g_in_f, f_in_g) {
        (Err(Some(pair)), _) => Some(pair),
        (_, Err(Some((iv, iu)))) => Some((iu, iv)),
        _ => None,
    };
    let witness = match (relation, offending) {
        (Relation::NotAlternating, Some((iu, iv))) => Some((
            joint.interval(u[iu], &joint.mult_f),
            joint.interval(v[iv], &joint.mult_g),
        )),
        _ => None,
    };
    Ok(InterlaceVerdict { relation, witness })
}

/// Constant sign of `W[f, g] = f'g - fg'` on the real line, for a pair whose
/// roots alternate. `Negative` (or `Zero`) certifies `f << g`.
pub fn wronskian_orientation<T: ExactField>(f: &Poly<T>, g: &Poly<T>) -> Result<Sign> {
    if !interlaces(f, g)?.is_alternating() {
        return Err(Error::NotAlternating);
    }
    let w = f.wronskian(g);
    if w.is_zero() {
        return Ok(Sign::Zero);
    }
    // W has finitely many roots; probe 0, 1, -1, 2, -2, ...
    let mut k: i64 = 0;
    loop {
        let x = T::from_int(k);
        let s = w.sign_at(&x);
        if s != Sign::Zero {
            return Ok(s);
        }
        k = if k > 0 { -k } else { 1 - k };
    }
}
