//! Deterministic scan populations: seeded random paving profiles and the
//! lemma-family grid.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::klcore::PavingData;
use crate::lemmascan::{FamilyId, FamilyParams};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub d_min: u32,
    pub d_max: u32,
    pub m_max: u32,
    pub lambda_max: u64,
    /// Random profiles drawn per `(m, d)`.
    pub profiles: usize,
    pub seed: u64,
    /// Lemma families to scan; empty means the paving scan.
    pub families: Vec<FamilyId>,
    pub n_min: u32,
    pub n_max: u32,
    pub param_max: u32,
    pub jobs: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            d_min: 2,
            d_max: 9,
            m_max: 5,
            lambda_max: 2,
            profiles: 20,
            seed: 0,
            families: Vec::new(),
            n_min: 3,
            n_max: 12,
            param_max: 8,
            jobs: 1,
        }
    }
}

impl ScanConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        if self.d_min < 2 {
            return bad(format!("d_min must be at least 2, got {}", self.d_min));
        }
        if self.d_max < self.d_min {
            return bad(format!("d_max {} below d_min {}", self.d_max, self.d_min));
        }
        if self.m_max < 1 {
            return bad("m_max must be at least 1".into());
        }
        if self.n_min < 3 || self.n_max < self.n_min {
            return bad(format!("need 3 <= n_min <= n_max, got {}..{}", self.n_min, self.n_max));
        }
        if self.param_max < 1 {
            return bad("param_max must be at least 1".into());
        }
        if self.jobs < 1 {
            return bad("jobs must be at least 1".into());
        }
        Ok(())
    }

    pub fn paving_population(&self) -> Vec<PavingData> {
        paving_population(1..=self.m_max, self.d_min..=self.d_max, self.profiles, self.lambda_max, self.seed)
    }

    pub fn family_grid(&self) -> Vec<FamilyParams> {
        FamilyParams::grid(&self.families, self.n_min..=self.n_max, self.param_max)
    }
}

/// Draws `lambda_h` uniformly from `[0, lambda_max]`, independently for each
/// `1 <= h <= m`. Zero counts are left out of the map.
#[derive(Debug, Clone)]
pub struct ProfileGenerator {
    rng: ChaCha8Rng,
    lambda_max: u64,
}

impl ProfileGenerator {
    /// One independent stream per `(m, d)`, so a case's profiles do not
    /// depend on which other cases are scanned.
    pub fn new(seed: u64, m: u32, d: u32, lambda_max: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream((u64::from(m) << 32) | u64::from(d));
        ProfileGenerator { rng, lambda_max }
    }

    pub fn draw(&mut self, m: u32, d: u32) -> PavingData {
        let mut lambda = BTreeMap::new();
        for h in 1..=m {
            let c = self.rng.random_range(0..=self.lambda_max);
            if c > 0 {
                lambda.insert(h, c);
            }
        }
        PavingData { m, d, lambda }
    }
}

/// `per_case` profiles for every `(m, d)`, ordered by `m`, then `d`, then
/// draw index.
pub fn paving_population(
    m_range: std::ops::RangeInclusive<u32>,
    d_range: std::ops::RangeInclusive<u32>,
    per_case: usize,
    lambda_max: u64,
    seed: u64,
) -> Vec<PavingData> {
    let mut out = Vec::new();
    for m in m_range {
        for d in d_range.clone() {
            let mut gen = ProfileGenerator::new(seed, m, d, lambda_max);
            out.extend((0..per_case).map(|_| gen.draw(m, d)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn population_is_deterministic() {
        let a = paving_population(1..=3, 2..=6, 10, 3, 42);
        let b = paving_population(1..=3, 2..=6, 10, 3, 42);
        assert_eq!(a, b);
        assert_eq!(a.len(), 3 * 5 * 10);
        assert_ne!(a, paving_population(1..=3, 2..=6, 10, 3, 43));
    }

    #[test]
    fn cases_do_not_depend_on_grid() {
        let wide = paving_population(1..=4, 2..=8, 5, 2, 7);
        let narrow = paving_population(3..=3, 5..=5, 5, 2, 7);
        let slice: Vec<_> = wide.into_iter().filter(|p| p.m == 3 && p.d == 5).collect();
        assert_eq!(slice, narrow);
    }

    #[test]
    fn draws_respect_bounds() {
        for p in paving_population(1..=6, 2..=9, 20, 3, 1) {
            p.validate().unwrap();
            assert!(p.lambda.values().all(|&c| (1..=3).contains(&c)));
        }
    }

    #[test]
    fn zero_lambda_max_gives_uniform() {
        for p in paving_population(1..=3, 2..=4, 3, 0, 9) {
            assert!(p.lambda.is_empty());
        }
    }

    #[test]
    fn config_validation() {
        assert!(ScanConfig::default().validate().is_ok());
        let bad = [
            ScanConfig { d_min: 1, ..Default::default() },
            ScanConfig { d_max: 1, d_min: 3, ..Default::default() },
            ScanConfig { jobs: 0, ..Default::default() },
            ScanConfig { n_min: 2, ..Default::default() },
        ];
        for c in bad {
            assert!(c.validate().is_err(), "{c:?}");
        }
    }
}
