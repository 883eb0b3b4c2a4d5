use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameters `(n, k, λ, μ)` of a strongly regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SrgParams {
    pub n: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    pub fn new(n: u64, k: u64, lambda: u64, mu: u64) -> Result<Self> {
        let p = SrgParams { n, k, lambda, mu };
        p.validate()?;
        Ok(p)
    }

    /// Checks `0 ≤ λ < k < n − 1`, `μ ≤ k` and the counting identity
    /// `k(k−λ−1) = (n−k−1)μ`.
    pub fn validate(&self) -> Result<()> {
        let &SrgParams { n, k, lambda, mu } = self;
        let bad = || Error::InconsistentParams { n: n as i64, k: k as i64, lambda: lambda as i64, mu: mu as i64 };
        if !(lambda < k && k + 1 < n && mu <= k) {
            return Err(bad());
        }
        let lhs = k as u128 * (k - lambda - 1) as u128;
        let rhs = (n - k - 1) as u128 * mu as u128;
        if lhs != rhs {
            return Err(bad());
        }
        Ok(())
    }

    /// Parameters of the complementary graph.
    pub fn complement(&self) -> SrgParams {
        let &SrgParams { n, k, lambda, mu } = self;
        SrgParams { n, k: n - k - 1, lambda: n + mu - 2 * k - 2, mu: n + lambda - 2 * k }
    }

    /// `μ > 0` and `n − 2k + λ > 0`.
    pub fn is_primitive(&self) -> bool {
        self.mu > 0 && self.n + self.lambda > 2 * self.k
    }

    pub fn as_tuple(&self) -> (u64, u64, u64, u64) {
        (self.n, self.k, self.lambda, self.mu)
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(SrgParams::new(10, 3, 0, 1).is_ok());
        assert!(SrgParams::new(10, 3, 0, 0).is_err());
        assert!(SrgParams::new(5, 5, 0, 1).is_err());
        assert!(SrgParams::new(5, 2, 2, 1).is_err());
        // Complete graphs satisfy the counting identity for any μ.
        assert!(SrgParams::new(9, 8, 7, 6).is_err());
    }

    #[test]
    fn complement_is_involutive_on_valid_params() {
        for p in [(10, 3, 0, 1), (27, 10, 1, 5), (9, 6, 3, 6), (16, 6, 2, 2), (5, 2, 0, 1)] {
            let p = SrgParams::new(p.0, p.1, p.2, p.3).unwrap();
            let c = p.complement();
            c.validate().unwrap();
            assert_eq!(c.complement(), p);
        }
    }
}
