use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;

use super::error::ExactError;
use super::field::{FiniteField, Field, Ring};
use super::rat::Rat;

/// The prime field F_p. Construction checks primality.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ExactError> {
        if p >= 1 << 62 || !is_prime(p) {
            return Err(ExactError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: i64) -> Fp {
        Fp::from_int(self, v)
    }

    /// All field elements in the order 0, 1, ..., p−1.
    pub fn elements(&self) -> impl Iterator<Item = Fp> + '_ {
        (0..self.p).map(move |v| Fp { v, p: self.p })
    }
}

/// Element of F_p. The modulus travels with the value.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    #[inline]
    fn check(&self, rhs: &Fp) {
        assert_eq!(self.p, rhs.p, "mixed prime fields");
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.v, self.p)
    }
}

fn reduce_i128(v: i128, p: u64) -> u64 {
    v.rem_euclid(p as i128) as u64
}

impl Ring for Fp {
    type Ctx = PrimeField;

    fn zero(ctx: &PrimeField) -> Self {
        Fp { v: 0, p: ctx.p }
    }
    fn one(ctx: &PrimeField) -> Self {
        Fp { v: 1 % ctx.p, p: ctx.p }
    }
    fn from_int(ctx: &PrimeField, v: i64) -> Self {
        Fp {
            v: reduce_i128(v as i128, ctx.p),
            p: ctx.p,
        }
    }
    fn from_rat(ctx: &PrimeField, r: &Rat) -> Option<Self> {
        let p = BigInt::from(ctx.p);
        let n = r.numer().mod_floor(&p).to_u64()?;
        let d = r.denom().mod_floor(&p).to_u64()?;
        Fp { v: d, p: ctx.p }
            .inv()
            .map(|di| Fp { v: n, p: ctx.p }.mul(&di))
    }
    fn ctx(&self) -> PrimeField {
        PrimeField { p: self.p }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let s = self.v as u128 + rhs.v as u128;
        Fp {
            v: (s % self.p as u128) as u64,
            p: self.p,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let v = if self.v >= rhs.v {
            self.v - rhs.v
        } else {
            self.p - (rhs.v - self.v)
        };
        Fp { v, p: self.p }
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Fp {
            v: ((self.v as u128 * rhs.v as u128) % self.p as u128) as u64,
            p: self.p,
        }
    }
    fn neg(&self) -> Self {
        Fp {
            v: if self.v == 0 { 0 } else { self.p - self.v },
            p: self.p,
        }
    }
}

impl Field for Fp {
    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            return None;
        }
        // extended Euclid on (v, p)
        let (mut r0, mut r1) = (self.p as i128, self.v as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(Fp {
            v: reduce_i128(t0, self.p),
            p: self.p,
        })
    }

    fn characteristic(ctx: &PrimeField) -> u64 {
        ctx.p
    }
}

impl FiniteField for Fp {
    fn order(ctx: &PrimeField) -> Option<u128> {
        Some(ctx.p as u128)
    }

    fn random<R: Rng + ?Sized>(ctx: &PrimeField, rng: &mut R) -> Self {
        Fp {
            v: rng.random_range(0..ctx.p),
            p: ctx.p,
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
