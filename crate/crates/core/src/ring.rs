//! Coefficient rings.
//!
//! Everything in this crate is computed over `ℚ` or over polynomial rings
//! `ℚ[x₁,…,xₙ]` built on top of it. The [`Ring`] trait is the small common
//! surface the polynomial, series and Gröbner code is generic over.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

/// A commutative ring containing `ℚ`.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn from_rational(r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    fn scale(&self, r: &Rational) -> Self {
        self.clone() * &Self::from_rational(r)
    }

    /// Exact quotient `self / d`, defined when `d` is a unit of the ring.
    fn div_unit(&self, d: &Self) -> Option<Self>;

    /// The value of `self` when it is a constant (an element of `ℚ`).
    fn constant_value(&self) -> Option<Rational>;

    fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| num_traits::One::is_one(&c))
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        <Rational as num_traits::Zero>::zero()
    }

    fn one() -> Self {
        <Rational as num_traits::One>::one()
    }

    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn scale(&self, r: &Rational) -> Self {
        self * r
    }

    fn div_unit(&self, d: &Self) -> Option<Self> {
        if Ring::is_zero(d) {
            None
        } else {
            Some(self / d)
        }
    }

    fn constant_value(&self) -> Option<Rational> {
        Some(self.clone())
    }
}
