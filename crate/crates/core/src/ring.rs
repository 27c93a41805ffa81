//! Coefficient rings shared by numeric and symbolic elements.

use num_traits::{One, Zero};
use std::fmt::Debug;

use crate::scalar::Scalar;

/// A commutative ring containing the rationals.
///
/// Implemented by [`Scalar`] (concrete elements) and
/// [`MultiPoly`](crate::mpoly::MultiPoly) (generic elements), so the
/// structure-constant product and everything built on it is written once.
/// Method names avoid the `num_traits` ones so both traits can be in scope.
pub trait Coeff: Clone + Debug + PartialEq + Send + Sync {
    /// Whether per-coordinate work is heavy enough to split across threads.
    const PARALLEL_WORTHY: bool = false;

    fn nil() -> Self;
    fn from_scalar(s: &Scalar) -> Self;
    fn is_nil(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scale(&self, s: &Scalar) -> Self;

    fn negate(&self) -> Self {
        self.scale(&-Scalar::one())
    }

    fn accumulate(&mut self, other: &Self) {
        *self = self.plus(other);
    }

    /// `self += a * b * s`, the inner step of every bilinear product.
    fn add_product(&mut self, a: &Self, b: &Self, s: &Scalar) {
        if a.is_nil() || b.is_nil() {
            return;
        }
        self.accumulate(&a.times(b).scale(s));
    }

    fn power(&self, k: u32) -> Self {
        let mut acc = Self::from_scalar(&Scalar::one());
        for _ in 0..k {
            acc = acc.times(self);
        }
        acc
    }
}

impl Coeff for Scalar {
    fn nil() -> Self {
        Zero::zero()
    }
    fn from_scalar(s: &Scalar) -> Self {
        s.clone()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, s: &Scalar) -> Self {
        self * s
    }
    fn negate(&self) -> Self {
        -self
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
    fn add_product(&mut self, a: &Self, b: &Self, s: &Scalar) {
        if Zero::is_zero(a) || Zero::is_zero(b) {
            return;
        }
        *self += a * b * s;
    }
}
