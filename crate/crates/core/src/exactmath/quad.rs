//! Elements of a real quadratic field Q(√D).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `a + b√d` with rational `a`, `b` and square-free `d ≥ 1`.
///
/// Rational values are stored with `b = 0` and `d = 1`, so equality is
/// structural. Binary operations require both operands to live in the same
/// field, except that a rational operand is compatible with any field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: BigRational,
    b: BigRational,
    d: u64,
}

/// Splits `n` as `s² · r` with `r` square-free.
pub fn square_free_part(mut n: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut f = 2u64;
    while f * f <= n {
        while n.is_multiple_of(f * f) {
            n /= f * f;
            s *= f;
        }
        f += 1;
    }
    (s, n)
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl QuadExt {
    pub fn from_int(v: i64) -> Self {
        Self::rational(rat(v))
    }

    pub fn rational(a: BigRational) -> Self {
        QuadExt { a, b: BigRational::zero(), d: 1 }
    }

    /// `a + b√d`, normalized.
    pub fn new(a: BigRational, b: BigRational, d: u64) -> Self {
        if d == 0 || b.is_zero() {
            return Self::rational(a);
        }
        let (s, r) = square_free_part(d);
        let b = b * rat(s as i64);
        if r == 1 {
            Self::rational(a + b)
        } else {
            QuadExt { a, b, d: r }
        }
    }

    /// The nonnegative square root of a nonnegative integer.
    pub fn sqrt_int(n: u64) -> Self {
        Self::new(BigRational::zero(), BigRational::one(), n)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The value as an integer, when it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.a.is_integer()).then(|| self.a.to_integer())
    }

    fn common_d(&self, other: &Self) -> u64 {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => other.d,
            (_, true) => self.d,
            _ => {
                assert_eq!(self.d, other.d, "mixing Q(√{}) and Q(√{})", self.d, other.d);
                self.d
            }
        }
    }

    /// Exact sign: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        if sa == 0 {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * rat(self.d as i64);
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    /// Galois conjugate `a - b√d`.
    pub fn conjugate(&self) -> Self {
        QuadExt { a: self.a.clone(), b: -self.b.clone(), d: self.d }
    }

    /// Field norm `a² - d b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * rat(self.d as i64)
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conjugate();
        Some(QuadExt::new(c.a / &n, c.b / &n, c.d))
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * (self.d as f64).sqrt()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = QuadExt::from_int(1);
        for _ in 0..e {
            r = &r * self;
        }
        r
    }
}

fn sign_of(x: &BigRational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadExt {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        let babs = self.b.abs();
        if babs.is_one() {
            write!(f, "{} {} √{}", self.a, sign, self.d)
        } else {
            write!(f, "{} {} {}√{}", self.a, sign, babs, self.d)
        }
    }
}

impl<'a> Add<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn add(self, o: &QuadExt) -> QuadExt {
        let d = self.common_d(o);
        QuadExt::new(&self.a + &o.a, &self.b + &o.b, d)
    }
}

impl<'a> Sub<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn sub(self, o: &QuadExt) -> QuadExt {
        let d = self.common_d(o);
        QuadExt::new(&self.a - &o.a, &self.b - &o.b, d)
    }
}

impl<'a> Mul<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn mul(self, o: &QuadExt) -> QuadExt {
        let d = self.common_d(o);
        let a = &self.a * &o.a + &self.b * &o.b * rat(d as i64);
        let b = &self.a * &o.b + &self.b * &o.a;
        QuadExt::new(a, b, d)
    }
}

impl<'a> Div<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn div(self, o: &QuadExt) -> QuadExt {
        self * &o.recip().expect("division by zero in Q(√d)")
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { a: -self.a.clone(), b: -self.b.clone(), d: self.d }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QuadExt {
            type Output = QuadExt;
            fn $m(self, o: QuadExt) -> QuadExt {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $m(self, o: &QuadExt) -> QuadExt {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

impl From<i64> for QuadExt {
    fn from(v: i64) -> Self {
        QuadExt::from_int(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i64, b: i64, d: u64) -> QuadExt {
        QuadExt::new(rat(a), rat(b), d)
    }

    #[test]
    fn normalization_folds_squares() {
        assert_eq!(QuadExt::sqrt_int(12), q(0, 2, 3));
        assert_eq!(QuadExt::sqrt_int(9), QuadExt::from_int(3));
        assert_eq!(QuadExt::sqrt_int(0), QuadExt::from_int(0));
        assert_eq!(square_free_part(72), (6, 2));
    }

    #[test]
    fn field_arithmetic() {
        let x = q(1, 1, 5);
        let y = q(1, -1, 5);
        assert_eq!(&x * &y, QuadExt::from_int(-4));
        assert_eq!(&x + &y, QuadExt::from_int(2));
        let r = x.recip().unwrap();
        assert_eq!(&r * &x, QuadExt::from_int(1));
        assert_eq!(q(3, -1, 2).signum(), 1);
        assert_eq!(q(1, -1, 2).signum(), -1);
        assert!(q(0, 1, 2) > QuadExt::from_int(1));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn sign_is_multiplicative_and_matches_floats(
            a1 in -200i64..200, b1 in -200i64..200, a2 in -200i64..200, b2 in -200i64..200,
            d in prop::sample::select(vec![2u64, 3, 5, 6, 7, 10, 13, 17]),
        ) {
            let x = q(a1, b1, d);
            let y = q(a2, b2, d);
            prop_assert_eq!((&x * &y).signum(), x.signum() * y.signum());
            let fx = x.to_f64();
            if fx.abs() > 1e-9 {
                prop_assert_eq!(x.signum(), if fx > 0.0 { 1 } else { -1 });
            }
        }
    }
}
