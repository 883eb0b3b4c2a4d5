//! Finite fields GF(p^k) with a deterministic modulus.
//!
//! Elements are encoded as integers `c_0 + c_1 p + … + c_{k-1} p^{k-1}` where
//! `c_i` is the coefficient of `x^i`. Comparisons between elements (for the
//! "least" primitive element, and the "least" modulus) use this encoding.

use crate::error::{Error, Result};
use crate::size_guard;

/// Default upper bound on the field order.
pub const FIELD_SIZE_GUARD: u64 = 1 << 20;

/// Polynomials over GF(p), coefficients from low to high degree.
mod poly {
    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut r = vec![0; a.len().max(b.len())];
        for (i, x) in r.iter_mut().enumerate() {
            let u = a.get(i).copied().unwrap_or(0);
            let v = b.get(i).copied().unwrap_or(0);
            *x = (u + p - v) % p;
        }
        trim(&mut r);
        r
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut r = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        let mut r: Vec<u32> = r.into_iter().map(|v| v as u32).collect();
        trim(&mut r);
        r
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        let mut r = 1u64;
        let mut b = a as u64;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p as u64;
            }
            b = b * b % p as u64;
            e >>= 1;
        }
        r as u32
    }

    /// Remainder of `a` modulo nonzero `m`.
    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p) as u64;
        while r.len() > dm {
            let shift = r.len() - 1 - dm;
            let c = r[r.len() - 1] as u64 * lead_inv % p as u64;
            for (i, &mi) in m.iter().enumerate() {
                let t = (c * mi as u64 % p as u64) as u32;
                r[i + shift] = (r[i + shift] + p - t) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        x
    }

    pub fn pow_mod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
        let mut r = vec![1];
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                r = rem(&mul(&r, &b, p), m, p);
            }
            b = rem(&mul(&b, &b, p), m, p);
            e >>= 1;
        }
        r
    }

    pub fn eval(a: &[u32], x: u32, p: u32) -> u32 {
        a.iter().rev().fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p as u64) as u32
    }
}

/// Returns `(p, k)` with `q = p^k`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut r = q;
    let mut k = 0;
    while r.is_multiple_of(p) {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Tests irreducibility of a monic polynomial of degree `k ≥ 1` over GF(p):
/// no roots in GF(p), and `gcd(f, x^{p^i} - x) = 1` for `1 ≤ i ≤ k/2`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    if (0..p).any(|x| poly::eval(f, x, p) == 0) {
        return false;
    }
    let x = vec![0, 1];
    let mut xp = x.clone();
    for _ in 1..=k / 2 {
        xp = poly::pow_mod(&xp, p as u64, f, p);
        let g = poly::gcd(f, &poly::sub(&xp, &x, p), p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// The field GF(p^k).
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl FiniteField {
    /// Builds GF(p^k) with the least monic irreducible modulus of degree `k`.
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::DegreeZero);
        }
        if !crate::exactmath::is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        let limit = size_guard(FIELD_SIZE_GUARD);
        let q = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
        if q > limit as u128 {
            return Err(Error::SizeGuardExceeded {
                what: format!("GF({p}^{k})"),
                size: q.min(u64::MAX as u128) as u64,
                limit,
            });
        }
        let (p, q) = (p as u32, q as u32);
        let modulus = (0..q)
            .map(|low| {
                let mut f = digits(low, p, k as usize);
                f.push(1);
                f
            })
            .find(|f| is_irreducible(f, p))
            .expect("an irreducible polynomial of every degree exists");
        let mut field = FiniteField { p, k, q, modulus, generator: 1, exp: Vec::new(), log: Vec::new() };
        field.generator = field.find_primitive();
        field.build_tables();
        Ok(field)
    }

    /// Builds GF(q) for a prime power `q`.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, k)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients of the modulus, low degree first; monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    fn to_poly(&self, a: u32) -> Vec<u32> {
        let mut v = digits(a, self.p, self.k as usize);
        poly::trim(&mut v);
        v
    }

    fn from_poly(&self, v: &[u32]) -> u32 {
        v.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let prod = poly::mul(&self.to_poly(a), &self.to_poly(b), self.p);
        self.from_poly(&poly::rem(&prod, &self.modulus, self.p))
    }

    fn slow_pow(&self, a: u32, mut e: u64) -> u32 {
        let mut r = 1;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.slow_mul(r, b);
            }
            b = self.slow_mul(b, b);
            e >>= 1;
        }
        r
    }

    fn find_primitive(&self) -> u32 {
        let n = (self.q - 1) as u64;
        let factors = prime_factors(n);
        (1..self.q)
            .find(|&a| factors.iter().all(|&r| self.slow_pow(a, n / r) != 1))
            .expect("multiplicative group is cyclic")
    }

    fn build_tables(&mut self) {
        let n = (self.q - 1) as usize;
        self.exp = vec![0; n];
        self.log = vec![u32::MAX; self.q as usize];
        let mut x = 1;
        for i in 0..n {
            self.exp[i] = x;
            self.log[x as usize] = i as u32;
            x = self.slow_mul(x, self.generator);
        }
    }

    /// Least element of multiplicative order `q - 1`.
    pub fn primitive_element(&self) -> Result<u32> {
        if self.q < 3 {
            return Err(Error::TrivialField);
        }
        Ok(self.generator)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut r = 0;
        let mut place = 1;
        for _ in 0..self.k {
            r += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        r
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.k == 1 {
            return (self.p - a) % self.p;
        }
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut r = 0;
        let mut place = 1;
        for _ in 0..self.k {
            r += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        r
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        let s = (self.log[a as usize] + self.log[b as usize]) % n;
        self.exp[s as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let n = (self.q - 1) as u64;
        let l = self.log[a as usize] as u64 * (e % n) % n;
        self.exp[l as usize]
    }

    /// `g^i` for the primitive element `g`.
    pub fn power_of_generator(&self, i: u64) -> u32 {
        self.exp[(i % (self.q as u64 - 1)) as usize]
    }

    /// Discrete log base the primitive element; `None` for zero.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn multiplicative_order(&self, a: u32) -> Option<u64> {
        let l = self.log(a)? as u64;
        let n = self.q as u64 - 1;
        Some(n / num_integer::gcd(l, n))
    }

    pub fn is_square(&self, a: u32) -> bool {
        a == 0 || self.p == 2 || self.log[a as usize].is_multiple_of(2)
    }

    /// The Frobenius map `a ↦ a^p`.
    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.p as u64)
    }
}

fn digits(mut v: u32, p: u32, k: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(v % p);
        v /= p;
    }
    out
}
