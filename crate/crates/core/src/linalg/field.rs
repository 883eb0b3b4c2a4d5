use std::fmt::Debug;
use std::marker::PhantomData;
use std::ops::Neg;

use num_traits::{Float, FromPrimitive, Num};

use crate::exactmath::PrimeField;

/// Scalar arithmetic used by the span and closure routines. The field is a
/// value so that a prime modulus can be chosen at run time.
pub trait Field: Clone + Send + Sync + Debug {
    type Elem: Clone + PartialEq + Send + Sync + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn describe(&self) -> String;
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        self.reduce_i64(v)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::add(self, *a, *b)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::sub(self, *a, *b)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::mul(self, *a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        PrimeField::neg(self, *a)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| PrimeField::inv(self, *a))
    }
    fn describe(&self) -> String {
        format!("GF({})", self.modulus())
    }
}

/// Exact arithmetic in any `num-traits` field type, e.g. `BigRational`.
pub struct Exact<T>(PhantomData<fn() -> T>);

impl<T> Exact<T> {
    pub fn new() -> Self {
        Exact(PhantomData)
    }
}

impl<T> Default for Exact<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T> Clone for Exact<T> {
    fn clone(&self) -> Self {
        Self::new()
    }
}

impl<T> Debug for Exact<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Exact<{}>", std::any::type_name::<T>())
    }
}

impl<T> Field for Exact<T>
where
    T: Num + Neg<Output = T> + FromPrimitive + Clone + PartialEq + Send + Sync + Debug,
{
    type Elem = T;

    fn zero(&self) -> T {
        T::zero()
    }
    fn one(&self) -> T {
        T::one()
    }
    fn from_i64(&self, v: i64) -> T {
        T::from_i64(v).expect("integers embed in the field")
    }
    fn is_zero(&self, a: &T) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &T, b: &T) -> T {
        a.clone() + b.clone()
    }
    fn sub(&self, a: &T, b: &T) -> T {
        a.clone() - b.clone()
    }
    fn mul(&self, a: &T, b: &T) -> T {
        a.clone() * b.clone()
    }
    fn neg(&self, a: &T) -> T {
        -a.clone()
    }
    fn inv(&self, a: &T) -> Option<T> {
        (!a.is_zero()).then(|| T::one() / a.clone())
    }
    fn describe(&self) -> String {
        std::any::type_name::<T>().rsplit("::").next().unwrap_or("exact").to_string()
    }
}

/// Floating-point scalars with an absolute zero tolerance. Only suitable for
/// small, well-conditioned inputs; the exact fields are the authorities.
#[derive(Clone, Copy, Debug)]
pub struct Approx<T> {
    pub eps: T,
}

impl<T: Float + Send + Sync + Debug> Field for Approx<T> {
    type Elem = T;

    fn zero(&self) -> T {
        T::zero()
    }
    fn one(&self) -> T {
        T::one()
    }
    fn from_i64(&self, v: i64) -> T {
        T::from(v).expect("representable")
    }
    fn is_zero(&self, a: &T) -> bool {
        a.abs() <= self.eps
    }
    fn add(&self, a: &T, b: &T) -> T {
        *a + *b
    }
    fn sub(&self, a: &T, b: &T) -> T {
        *a - *b
    }
    fn mul(&self, a: &T, b: &T) -> T {
        *a * *b
    }
    fn neg(&self, a: &T) -> T {
        -*a
    }
    fn inv(&self, a: &T) -> Option<T> {
        (!self.is_zero(a)).then(|| T::one() / *a)
    }
    fn describe(&self) -> String {
        format!("{}(eps={:?})", std::any::type_name::<T>(), self.eps)
    }
}
