use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{squarefree_part, ExactField, Poly, Sign};

/// A point of the extended real line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Endpoint<T> {
    NegInf,
    Finite(T),
    PosInf,
}

impl<T: ExactField> Endpoint<T> {
    fn sign_of(&self, p: &Poly<T>) -> Sign {
        match self {
            Endpoint::NegInf => p.sign_at_neg_inf(),
            Endpoint::Finite(x) => p.sign_at(x),
            Endpoint::PosInf => p.sign_at_pos_inf(),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Endpoint::NegInf => 0,
            Endpoint::Finite(_) => 1,
            Endpoint::PosInf => 2,
        }
    }

    fn is_below(&self, other: &Self) -> bool {
        match (self, other) {
            (Endpoint::Finite(a), Endpoint::Finite(b)) => a < b,
            _ => self.rank() < other.rank(),
        }
    }
}

impl<T> From<T> for Endpoint<T> {
    fn from(x: T) -> Self {
        Endpoint::Finite(x)
    }
}

/// Canonical Sturm chain `p, p', -rem(p, p'), ...` of a squarefree polynomial.
/// Each member is rescaled by a positive constant, which leaves every sign
/// variation count unchanged.
#[derive(Debug, Clone)]
pub struct SturmChain<T> {
    chain: Vec<Poly<T>>,
}

fn normalize<T: ExactField>(p: Poly<T>) -> Poly<T> {
    match p.leading_coeff() {
        Some(lc) => {
            let s = T::one() / lc.abs();
            p.scale(&s)
        }
        None => p,
    }
}

impl<T: ExactField> SturmChain<T> {
    /// Build the chain for `p`, which must be squarefree and nonzero.
    pub fn for_squarefree(p: &Poly<T>) -> Self {
        debug_assert!(!p.is_zero());
        let mut chain = vec![normalize(p.clone())];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(normalize(d));
            loop {
                let n = chain.len();
                let (_, r) = chain[n - 2]
                    .div_rem(&chain[n - 1])
                    .expect("chain members are nonzero");
                if r.is_zero() {
                    break;
                }
                chain.push(normalize(-r));
            }
        }
        SturmChain { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn variations(&self, at: &Endpoint<T>) -> usize {
        let mut count = 0;
        let mut last = Sign::Zero;
        for p in &self.chain {
            let s = at.sign_of(p);
            if s == Sign::Zero {
                continue;
            }
            if last != Sign::Zero && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in `(lo, hi]`.
    pub fn count(&self, lo: &Endpoint<T>, hi: &Endpoint<T>) -> usize {
        self.variations(lo) - self.variations(hi)
    }
}

/// Number of distinct real roots of `f` in `(lo, hi]`, computed on the
/// squarefree radical.
pub fn sturm_root_count<T: ExactField>(f: &Poly<T>, lo: &Endpoint<T>, hi: &Endpoint<T>) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !lo.is_below(hi) {
        return Err(Error::InvalidInterval);
    }
    let radical = squarefree_part(f)?.radical;
    Ok(SturmChain::for_squarefree(&radical).count(lo, hi))
}

/// True iff every complex root of `f` is real. Constants count as real-rooted.
pub fn is_real_rooted<T: ExactField>(f: &Poly<T>) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let radical = squarefree_part(f)?.radical;
    let deg = radical.degree().finite().unwrap_or(0);
    if deg <= 1 {
        return Ok(true);
    }
    let chain = SturmChain::for_squarefree(&radical);
    Ok(chain.count(&Endpoint::NegInf, &Endpoint::PosInf) == deg)
}

/// True iff `f` is real-rooted and its roots are all `<= 0` or all `>= 0`.
pub fn roots_all_real_same_sign<T: ExactField>(f: &Poly<T>) -> Result<bool> {
    if !is_real_rooted(f)? {
        return Ok(false);
    }
    let radical = squarefree_part(f)?.radical;
    if radical.is_constant() {
        return Ok(true);
    }
    let chain = SturmChain::for_squarefree(&radical);
    let zero = Endpoint::Finite(T::zero());
    let positive = chain.count(&zero, &Endpoint::PosInf);
    let at_zero = usize::from(radical.eval(&T::zero()).is_zero());
    let negative = chain.count(&Endpoint::NegInf, &zero) - at_zero;
    Ok(positive == 0 || negative == 0)
}
