//! Arithmetic modulo a single word-sized prime.

use rand::Rng;

use crate::error::{Error, Result};

/// 2^62 - 57, the default modulus for rank computations.
pub const DEFAULT_PRIME: u64 = 4_611_686_018_427_387_847;
/// 2^61 - 1, used as the independent second modulus.
pub const SECOND_PRIME: u64 = 2_305_843_009_213_693_951;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Draws a uniformly random prime in `[2^61, 2^62)`.
pub fn random_prime<R: Rng + ?Sized>(rng: &mut R) -> u64 {
    loop {
        let candidate = rng.gen_range((1u64 << 61)..(1u64 << 62)) | 1;
        if is_prime_u64(candidate) {
            return candidate;
        }
    }
}

/// The prime field GF(p) for a word-sized prime `p < 2^63`.
///
/// Elements are plain `u64` residues in `[0, p)`; the field value carries
/// only the modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 63 || !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce_i64(&self, v: i64) -> u64 {
        let r = (v as i128).rem_euclid(self.p as i128);
        r as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    /// Inverse by Fermat; `a` must be nonzero.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0, "inverse of zero");
        pow_mod(a, self.p - 2, self.p)
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_primes_are_prime() {
        assert!(is_prime_u64(DEFAULT_PRIME));
        assert!(is_prime_u64(SECOND_PRIME));
        assert!(!is_prime_u64(DEFAULT_PRIME - 2));
        assert_eq!(DEFAULT_PRIME, (1u64 << 62) - 57);
    }

    #[test]
    fn miller_rabin_matches_trial_division() {
        let trial = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        for n in 0..5000 {
            assert_eq!(is_prime_u64(n), trial(n), "n = {n}");
        }
        // Carmichael numbers
        for n in [561u64, 1105, 1729, 2465, 2821, 6601, 8911] {
            assert!(!is_prime_u64(n));
        }
    }

    #[test]
    fn field_ops() {
        let f = PrimeField::new(13).unwrap();
        assert_eq!(f.mul(5, f.inv(5)), 1);
        assert_eq!(f.reduce_i64(-1), 12);
        assert_eq!(f.sub(3, 5), 11);
        assert!(PrimeField::new(15).is_err());
        let big = PrimeField::default();
        let a = DEFAULT_PRIME - 3;
        assert_eq!(big.mul(a, big.inv(a)), 1);
    }

    #[test]
    fn random_primes_are_prime_and_in_range() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let p = random_prime(&mut rng);
            assert!(is_prime_u64(p));
            assert!((1 << 61..1 << 62).contains(&p));
        }
    }
}
