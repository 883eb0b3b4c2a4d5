//! Exact scalars: quadratic-field numbers for SRG eigenvalues, word-sized
//! prime fields for rank computations, and GF(p^k) for the constructions.

mod gf;
mod primefield;
mod quad;

pub use gf::{is_irreducible, prime_power, FiniteField, FIELD_SIZE_GUARD};
pub use primefield::{is_prime_u64, random_prime, PrimeField, DEFAULT_PRIME, SECOND_PRIME};
pub use quad::{square_free_part, QuadExt};

use crate::error::Result;
use crate::graphcore::SrgParams;

/// Restricted eigenvalues `θ ≥ τ` of an SRG with the given parameters,
/// the roots of `x² - (λ-μ)x - (k-μ)`.
pub fn srg_eigenvalues(params: &SrgParams) -> Result<(QuadExt, QuadExt)> {
    params.validate()?;
    let (k, l, m) = (params.k as i64, params.lambda as i64, params.mu as i64);
    let disc = (l - m) * (l - m) + 4 * (k - m);
    let root = QuadExt::sqrt_int(disc as u64);
    let half = QuadExt::rational(num_rational::BigRational::new(1.into(), 2.into()));
    let base = QuadExt::from_int(l - m);
    let theta = &(&base + &root) * &half;
    let tau = &(&base - &root) * &half;
    Ok((theta, tau))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn p(n: u64, k: u64, l: u64, m: u64) -> SrgParams {
        SrgParams::new(n, k, l, m).unwrap()
    }

    #[test]
    fn petersen_eigenvalues() {
        let (t, s) = srg_eigenvalues(&p(10, 3, 0, 1)).unwrap();
        assert_eq!(t, QuadExt::from_int(1));
        assert_eq!(s, QuadExt::from_int(-2));
    }

    #[test]
    fn pentagon_eigenvalues_are_irrational() {
        let (t, s) = srg_eigenvalues(&p(5, 2, 0, 1)).unwrap();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(t, QuadExt::new(-half.clone(), half.clone(), 5));
        assert_eq!(s, QuadExt::new(-half.clone(), -half, 5));
        assert!(t > s);
    }

    #[test]
    fn smith_eigenvalues() {
        let (t, s) = srg_eigenvalues(&p(27, 10, 1, 5)).unwrap();
        assert_eq!((t, s), (QuadExt::from_int(1), QuadExt::from_int(-5)));
    }

    #[test]
    fn vieta_relations_hold() {
        for (n, k, l, m) in [
            (10, 3, 0, 1),
            (5, 2, 0, 1),
            (13, 6, 2, 3),
            (16, 5, 0, 2),
            (35, 16, 6, 8),
            (36, 14, 4, 6),
            (50, 7, 0, 1),
            (9, 6, 3, 6),
        ] {
            let (t, s) = srg_eigenvalues(&p(n, k, l, m)).unwrap();
            assert_eq!(&t + &s, QuadExt::from_int(l as i64 - m as i64));
            assert_eq!(&t * &s, QuadExt::from_int(m as i64 - k as i64));
            assert!(t >= s);
        }
    }

    #[test]
    fn inconsistent_params_rejected() {
        assert!(SrgParams::new(10, 3, 0, 0).is_err());
    }
}
