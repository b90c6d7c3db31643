use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::sturm::{Endpoint, SturmChain};
use crate::error::{Error, Result};
use crate::exactmath::{squarefree_part, ExactField, Poly, Sign, SquarefreeDecomposition};

/// A rational interval holding exactly one distinct real root.
///
/// When `lo == hi` the root is exactly that rational. Otherwise the root lies
/// in the open interval `(lo, hi)` and neither endpoint is a root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(
    serialize = "T: std::fmt::Display",
    deserialize = "T: std::str::FromStr, T::Err: std::fmt::Display"
))]
pub struct IsolatingInterval<T> {
    #[serde(with = "crate::exactmath::serde_impl::rational")]
    pub lo: T,
    #[serde(with = "crate::exactmath::serde_impl::rational")]
    pub hi: T,
    #[serde(rename = "mult")]
    pub multiplicity: usize,
}

impl<T: ExactField> IsolatingInterval<T> {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &T) -> bool {
        if self.is_exact() {
            *x == self.lo
        } else {
            self.lo < *x && *x < self.hi
        }
    }
}

/// Interval around one root of a squarefree polynomial, before
/// multiplicities are attached.
#[derive(Debug, Clone)]
pub(crate) struct RootCell<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: ExactField> RootCell<T> {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// Whether `p`, a divisor of the polynomial this cell was isolated for,
    /// vanishes at the cell's root.
    pub fn is_root_of(&self, p: &Poly<T>) -> bool {
        if self.is_exact() {
            return p.eval(&self.lo).is_zero();
        }
        let a = p.sign_at(&self.lo);
        let b = p.sign_at(&self.hi);
        a != b && a != Sign::Zero && b != Sign::Zero
    }
}

struct Isolator<'a, T> {
    radical: &'a Poly<T>,
    chain: SturmChain<T>,
    /// Leading coefficient of the radical with denominators cleared; any
    /// rational root has the form `P / denom_bound` for an integer `P`.
    denom_bound: T,
    two: T,
    cells: Vec<RootCell<T>>,
}

impl<'a, T: ExactField> Isolator<'a, T> {
    fn new(radical: &'a Poly<T>) -> Self {
        let integral = radical.clear_denominators();
        let denom_bound = integral.leading_coeff().expect("nonzero").abs();
        Isolator {
            radical,
            chain: SturmChain::for_squarefree(radical),
            denom_bound,
            two: T::one() + T::one(),
            cells: Vec::new(),
        }
    }

    fn count(&self, lo: &T, hi: &T) -> usize {
        self.chain
            .count(&Endpoint::Finite(lo.clone()), &Endpoint::Finite(hi.clone()))
    }

    fn mid(&self, lo: &T, hi: &T) -> T {
        (lo.clone() + hi.clone()) / self.two.clone()
    }

    /// Push the roots in `(lo, hi]`, of which there are `n`, in increasing order.
    fn split(&mut self, lo: T, hi: T, n: usize) {
        match n {
            0 => {}
            1 => self.refine(lo, hi),
            _ => {
                let mid = self.mid(&lo, &hi);
                let left = self.count(&lo, &mid);
                self.split(lo, mid.clone(), left);
                self.split(mid, hi, n - left);
            }
        }
    }

    /// Exactly one root in `(lo, hi]`. Shrink until the root is pinned or the
    /// interval is narrower than `1 / denom_bound`, then test the single
    /// admissible rational left inside.
    fn refine(&mut self, mut lo: T, mut hi: T) {
        let r = self.radical;
        let hi_sign = r.sign_at(&hi);
        if hi_sign == Sign::Zero {
            self.cells.push(RootCell { lo: hi.clone(), hi });
            return;
        }
        // root is now strictly inside (lo, hi)
        while (hi.clone() - lo.clone()) * self.denom_bound.clone() >= T::one() || r.eval(&lo).is_zero() {
            let mid = self.mid(&lo, &hi);
            match r.sign_at(&mid) {
                Sign::Zero => {
                    self.cells.push(RootCell { lo: mid.clone(), hi: mid });
                    return;
                }
                s if s == hi_sign => hi = mid,
                _ => lo = mid,
            }
        }
        // at most one candidate P / denom_bound in (lo, hi)
        let candidate = (hi.clone() * self.denom_bound.clone()).floor() / self.denom_bound.clone();
        if candidate > lo && candidate < hi && r.eval(&candidate).is_zero() {
            self.cells.push(RootCell {
                lo: candidate.clone(),
                hi: candidate,
            });
            return;
        }
        self.cells.push(RootCell { lo, hi });
    }
}

/// Isolate the real roots of a nonconstant squarefree polynomial, in
/// increasing order.
pub(crate) fn isolate_squarefree<T: ExactField>(radical: &Poly<T>) -> Vec<RootCell<T>> {
    if radical.is_constant() {
        return Vec::new();
    }
    let mut iso = Isolator::new(radical);
    let bound = radical.cauchy_bound();
    let lo = -bound.clone();
    let n = iso.count(&lo, &bound);
    iso.split(lo, bound, n);
    iso.cells
}

pub(crate) fn multiplicity_in<T: ExactField>(cell: &RootCell<T>, dec: &SquarefreeDecomposition<T>) -> usize {
    dec.factors
        .iter()
        .find(|(s, _)| cell.is_root_of(s))
        .map_or(0, |(_, m)| *m)
}

/// Isolating intervals for the distinct real roots of `f`, increasing, each
/// carrying its multiplicity. Rational roots come back as exact points.
pub fn isolate_roots<T: ExactField>(f: &Poly<T>) -> Result<Vec<IsolatingInterval<T>>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let dec = squarefree_part(f)?;
    Ok(isolate_squarefree(&dec.radical)
        .into_iter()
        .map(|cell| {
            let multiplicity = multiplicity_in(&cell, &dec);
            IsolatingInterval {
                lo: cell.lo,
                hi: cell.hi,
                multiplicity,
            }
        })
        .collect())
}

/// Halve an isolating interval of a root of `f` until it is narrower than
/// `width`. Exact intervals are returned unchanged.
pub fn refine_interval<T: ExactField>(f: &Poly<T>, iv: &IsolatingInterval<T>, width: &T) -> IsolatingInterval<T> {
    let mut out = iv.clone();
    if out.is_exact() {
        return out;
    }
    let radical = match squarefree_part(f) {
        Ok(d) => d.radical,
        Err(_) => return out,
    };
    let hi_sign = radical.sign_at(&out.hi);
    let two = T::one() + T::one();
    while out.hi.clone() - out.lo.clone() >= *width {
        let mid = (out.lo.clone() + out.hi.clone()) / two.clone();
        match radical.sign_at(&mid) {
            Sign::Zero => {
                out.lo = mid.clone();
                out.hi = mid;
                break;
            }
            s if s == hi_sign => out.hi = mid,
            _ => out.lo = mid,
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio, Degree};
    use crate::{RatPoly, Rational};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    fn assert_isolates(f: &RatPoly, ivs: &[IsolatingInterval<Rational>]) {
        for w in ivs.windows(2) {
            assert!(w[0].hi <= w[1].lo && !(w[0].hi == w[1].lo && w[0].contains(&w[1].lo)));
        }
        for iv in ivs {
            assert!(iv.lo <= iv.hi);
            if iv.is_exact() {
                assert!(f.eval(&iv.lo).is_zero());
            } else {
                assert!(!f.eval(&iv.lo).is_zero() && !f.eval(&iv.hi).is_zero());
                let n = sturm_count_open(f, iv);
                assert_eq!(n, 1);
            }
        }
    }

    fn sturm_count_open(f: &RatPoly, iv: &IsolatingInterval<Rational>) -> usize {
        crate::realroots::sturm_root_count(f, &iv.lo.clone().into(), &iv.hi.clone().into()).unwrap()
    }

    #[test]
    fn irrational_pair() {
        let f = p(&[-2, 0, 1]);
        let ivs = isolate_roots(&f).unwrap();
        assert_eq!(ivs.len(), 2);
        assert!(ivs.iter().all(|iv| iv.multiplicity == 1 && !iv.is_exact()));
        assert!(ivs[0].hi <= rat(0) && ivs[1].lo >= rat(0));
        assert_isolates(&f, &ivs);
    }

    #[test]
    fn rational_roots_are_exact() {
        // (t+1)^2 (t+3)
        let f = &p(&[1, 1]).pow(2) * &p(&[3, 1]);
        let ivs = isolate_roots(&f).unwrap();
        assert_eq!(
            ivs,
            vec![
                IsolatingInterval { lo: rat(-3), hi: rat(-3), multiplicity: 1 },
                IsolatingInterval { lo: rat(-1), hi: rat(-1), multiplicity: 2 },
            ]
        );
    }

    #[test]
    fn golden_ratio_roots() {
        let f = p(&[-1, 1, 1]);
        let ivs = isolate_roots(&f).unwrap();
        assert_eq!(ivs.len(), 2);
        // (-1 - sqrt 5)/2 ~ -1.618, (-1 + sqrt 5)/2 ~ 0.618
        assert_isolates(&f, &ivs);
        let width = ratio(1, 1000);
        let lo = refine_interval(&f, &ivs[0], &width);
        let hi = refine_interval(&f, &ivs[1], &width);
        assert!(lo.hi.clone() - lo.lo.clone() < width && hi.hi.clone() - hi.lo.clone() < width);
        assert!(lo.lo < ratio(-1618, 1000) && lo.hi > ratio(-1619, 1000));
        assert!(hi.lo < ratio(6181, 10000) && hi.hi > ratio(6180, 10000));
    }

    #[test]
    fn non_real_roots_are_skipped() {
        let f = &p(&[1, 0, 1]) * &p(&[-5, 2]);
        let ivs = isolate_roots(&f).unwrap();
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].is_exact() && ivs[0].lo == ratio(5, 2));
        assert!(isolate_roots(&p(&[7])).unwrap().is_empty());
        assert_eq!(isolate_roots(&RatPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn close_roots() {
        // roots 1/1000 apart
        let f = &p(&[-1000, 1]) * &RatPoly::new(vec![ratio(-1001, 1), rat(1)]);
        let f = &f * &p(&[-2, 0, 1]);
        let ivs = isolate_roots(&f).unwrap();
        assert_eq!(ivs.len(), 4);
        assert_isolates(&f, &ivs);
    }

    #[test]
    fn wire_format() {
        let iv = IsolatingInterval { lo: ratio(-3, 2), hi: rat(1), multiplicity: 2 };
        let text = serde_json::to_string(&iv).unwrap();
        assert_eq!(text, r#"{"lo":"-3/2","hi":"1","mult":2}"#);
        assert_eq!(serde_json::from_str::<IsolatingInterval<Rational>>(&text).unwrap(), iv);
    }

    proptest! {
        #[test]
        fn rational_products_isolate_exactly(
            roots in prop::collection::vec((-15i64..=15, 1i64..6), 1..7),
            lead in 1i64..4,
        ) {
            let f = roots
                .iter()
                .fold(p(&[lead]), |acc, &(n, d)| &acc * &RatPoly::new(vec![ratio(-n, d), rat(1)]));
            let mut expected: Vec<(Rational, usize)> = Vec::new();
            let mut sorted: Vec<_> = roots.iter().map(|&(n, d)| ratio(n, d)).collect();
            sorted.sort();
            for r in sorted {
                match expected.last_mut() {
                    Some((x, m)) if *x == r => *m += 1,
                    _ => expected.push((r, 1)),
                }
            }
            let got: Vec<_> = isolate_roots(&f)
                .unwrap()
                .into_iter()
                .map(|iv| {
                    assert!(iv.is_exact());
                    (iv.lo, iv.multiplicity)
                })
                .collect();
            prop_assert_eq!(got, expected);
        }

        #[test]
        fn isolation_is_sound(c in prop::collection::vec(-9i64..=9, 2..8)) {
            let f = p(&c);
            prop_assume!(f.degree() >= Degree::Finite(1));
            let ivs = isolate_roots(&f).unwrap();
            assert_isolates(&f, &ivs);
            let n = crate::realroots::sturm_root_count(&f, &Endpoint::NegInf, &Endpoint::PosInf).unwrap();
            prop_assert_eq!(ivs.len(), n);
            prop_assert!(ivs.iter().all(|iv| iv.multiplicity >= 1));
            prop_assert!(ivs.iter().map(|iv| iv.multiplicity).sum::<usize>() <= f.degree().finite().unwrap());
        }
    }
}
