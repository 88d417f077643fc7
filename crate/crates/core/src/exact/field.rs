//! Scalar traits shared by every exact type in the crate.
//!
//! A [`Ring`] value carries a context (`Ctx`) describing the domain it lives
//! in: `()` for the rationals, the modulus for a prime field, the defining
//! polynomial for an extension field, the arity for a polynomial ring. Binary
//! operations on values from different contexts are programmer errors and
//! panic; the fallible entry points (`MPoly::try_mul` and friends) check the
//! contexts up front and report a mismatch as an error instead.

use std::fmt::{Debug, Display};

use rand::Rng;

use super::rat::Rat;

pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    type Ctx: Clone + PartialEq + Debug + Send + Sync + 'static;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_int(ctx: &Self::Ctx, v: i64) -> Self;
    /// Image of a rational number, or `None` when the denominator is not
    /// invertible in this ring.
    fn from_rat(ctx: &Self::Ctx, r: &Rat) -> Option<Self>;
    fn ctx(&self) -> Self::Ctx;
    fn is_zero(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

pub trait Field: Ring + Eq + Display {
    fn inv(&self) -> Option<Self>;

    /// 0 for the rationals, p for fields of characteristic p.
    fn characteristic(ctx: &Self::Ctx) -> u64;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }
}

/// Fields with finitely many elements; needed for random sampling and for
/// Cantor–Zassenhaus root finding.
pub trait FiniteField: Field {
    /// Number of elements, or `None` if it does not fit in a `u128`.
    fn order(ctx: &Self::Ctx) -> Option<u128>;
    fn random<R: Rng + ?Sized>(ctx: &Self::Ctx, rng: &mut R) -> Self;
}
