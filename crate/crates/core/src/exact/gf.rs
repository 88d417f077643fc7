//! Extension fields F_{p^k} in a polynomial basis.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use super::error::ExactError;
use super::field::{FiniteField, Field, Ring};
use super::fp::{Fp, PrimeField};
use super::rat::Rat;

#[derive(Debug, PartialEq, Eq, Hash)]
struct Inner {
    p: u64,
    /// Monic modulus, low degree first, length k + 1.
    modulus: Vec<u64>,
}

/// The field F_p[x]/(m(x)) for an irreducible monic m of degree k.
#[derive(Clone, Debug)]
pub struct ExtField(Arc<Inner>);

impl PartialEq for ExtField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for ExtField {}

impl ExtField {
    /// F_{p^k} with the lexicographically first irreducible monic modulus.
    pub fn new(p: u64, k: usize) -> Result<Self, ExactError> {
        PrimeField::new(p)?;
        if k == 0 {
            return Err(ExactError::BadModulus(0));
        }
        let mut tail = vec![0u64; k];
        loop {
            let mut m = tail.clone();
            m.push(1);
            if is_irreducible(&m, p) {
                return Ok(ExtField(Arc::new(Inner { p, modulus: m })));
            }
            // odometer over the lower coefficients
            let mut i = 0;
            while i < k {
                tail[i] += 1;
                if tail[i] < p {
                    break;
                }
                tail[i] = 0;
                i += 1;
            }
            if i == k {
                return Err(ExactError::BadModulus(k));
            }
        }
    }

    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self, ExactError> {
        PrimeField::new(p)?;
        let m: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        if m.last() != Some(&1) || m.len() < 2 || !is_irreducible(&m, p) {
            return Err(ExactError::BadModulus(m.len().saturating_sub(1)));
        }
        Ok(ExtField(Arc::new(Inner { p, modulus: m })))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.modulus.len() - 1
    }

    pub fn order(&self) -> Option<u128> {
        (self.0.p as u128).checked_pow(self.degree() as u32)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn embed(&self, x: &Fp) -> Gf {
        assert_eq!(x.modulus(), self.0.p, "mixed characteristics");
        let mut c = vec![0; self.degree()];
        c[0] = x.value();
        Gf { ctx: self.clone(), c }
    }

    /// The class of x; it generates the field over F_p.
    pub fn generator(&self) -> Gf {
        let mut c = vec![0; self.degree()];
        if c.len() > 1 {
            c[1] = 1;
        } else {
            // degree one: x ≡ −m0
            c[0] = (self.0.p - self.0.modulus[0]) % self.0.p;
        }
        Gf { ctx: self.clone(), c }
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Gf {
        let k = self.degree();
        assert!(coeffs.len() <= k, "too many coefficients");
        let mut c = vec![0; k];
        for (dst, src) in c.iter_mut().zip(coeffs) {
            *dst = src % self.0.p;
        }
        Gf { ctx: self.clone(), c }
    }
}

#[derive(Clone)]
pub struct Gf {
    ctx: ExtField,
    c: Vec<u64>,
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c && self.ctx == other.ctx
    }
}

impl Eq for Gf {}

impl Gf {
    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    /// `Some` when the element lies in the prime subfield.
    pub fn to_prime(&self) -> Option<Fp> {
        if self.c[1..].iter().all(|&v| v == 0) {
            Some(PrimeField::new(self.ctx.0.p).ok()?.elem(self.c[0] as i64))
        } else {
            None
        }
    }

    pub fn frobenius(&self) -> Gf {
        self.pow(self.ctx.0.p)
    }

    fn pow_u128(&self, mut e: u128) -> Gf {
        let mut acc = Gf::one(&self.ctx);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &v) in self.c.iter().enumerate().rev() {
            if v == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, v) {
                (0, _) => write!(f, "{v}")?,
                (1, 1) => write!(f, "z")?,
                (1, _) => write!(f, "{v}z")?,
                (_, 1) => write!(f, "z^{i}")?,
                _ => write!(f, "{v}z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in F_{}^{}", self, self.ctx.0.p, self.ctx.degree())
    }
}

impl Ring for Gf {
    type Ctx = ExtField;

    fn zero(ctx: &ExtField) -> Self {
        Gf {
            ctx: ctx.clone(),
            c: vec![0; ctx.degree()],
        }
    }
    fn one(ctx: &ExtField) -> Self {
        let mut z = Gf::zero(ctx);
        z.c[0] = 1;
        z
    }
    fn from_int(ctx: &ExtField, v: i64) -> Self {
        let mut z = Gf::zero(ctx);
        z.c[0] = (v as i128).rem_euclid(ctx.0.p as i128) as u64;
        z
    }
    fn from_rat(ctx: &ExtField, r: &Rat) -> Option<Self> {
        let f = PrimeField::new(ctx.0.p).ok()?;
        Fp::from_rat(&f, r).map(|x| ctx.embed(&x))
    }
    fn ctx(&self) -> ExtField {
        self.ctx.clone()
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|&v| v == 0)
    }
    fn add(&self, rhs: &Self) -> Self {
        assert!(self.ctx == rhs.ctx, "mixed extension fields");
        let p = self.ctx.0.p;
        let c = self
            .c
            .iter()
            .zip(&rhs.c)
            .map(|(a, b)| (a + b) % p)
            .collect();
        Gf {
            ctx: self.ctx.clone(),
            c,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        assert!(self.ctx == rhs.ctx, "mixed extension fields");
        let p = self.ctx.0.p;
        let prod = mul_raw(&self.c, &rhs.c, p);
        let r = rem_raw(&prod, &self.ctx.0.modulus, p);
        let mut c = vec![0; self.ctx.degree()];
        c[..r.len()].copy_from_slice(&r);
        Gf {
            ctx: self.ctx.clone(),
            c,
        }
    }
    fn neg(&self) -> Self {
        let p = self.ctx.0.p;
        Gf {
            ctx: self.ctx.clone(),
            c: self.c.iter().map(|&v| (p - v) % p).collect(),
        }
    }
}

impl Field for Gf {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let q = self.ctx.order().expect("field order fits in u128");
        Some(self.pow_u128(q - 2))
    }

    fn characteristic(ctx: &ExtField) -> u64 {
        ctx.0.p
    }
}

impl FiniteField for Gf {
    fn order(ctx: &ExtField) -> Option<u128> {
        ctx.order()
    }

    fn random<R: Rng + ?Sized>(ctx: &ExtField, rng: &mut R) -> Self {
        let p = ctx.0.p;
        Gf {
            ctx: ctx.clone(),
            c: (0..ctx.degree()).map(|_| rng.random_range(0..p)).collect(),
        }
    }
}

// Dense polynomial helpers over F_p on raw residues, low degree first.

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn mul_raw(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u128 * y as u128) % p as u128;
        }
    }
    let mut v: Vec<u64> = out.into_iter().map(|x| x as u64).collect();
    trim(&mut v);
    v
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut e, mut b, mut acc) = (p - 2, a % p, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn rem_raw(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let q = ((r[top] as u128 * lead_inv as u128) % p as u128) as u64;
        let shift = top - dm;
        for (i, &c) in m.iter().enumerate() {
            let sub = ((q as u128 * c as u128) % p as u128) as u64;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        trim(&mut r);
    }
    r
}

fn sub_raw(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut v: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut v);
    v
}

fn gcd_raw(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem_raw(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// x^(p^e) mod m by repeated p-th powering.
fn x_pow_p_iter(m: &[u64], p: u64, e: usize) -> Vec<u64> {
    let mut cur = rem_raw(&[0, 1], m, p);
    for _ in 0..e {
        let mut acc = vec![1u64];
        let mut base = cur.clone();
        let mut k = p;
        while k > 0 {
            if k & 1 == 1 {
                acc = rem_raw(&mul_raw(&acc, &base, p), m, p);
            }
            base = rem_raw(&mul_raw(&base, &base, p), m, p);
            k >>= 1;
        }
        cur = acc;
    }
    cur
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test for a monic polynomial over F_p.
pub fn is_irreducible(m: &[u64], p: u64) -> bool {
    let k = m.len() - 1;
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let x = vec![0, 1];
    if sub_raw(&x_pow_p_iter(m, p, k), &x, p).iter().any(|&c| c != 0) {
        return false;
    }
    prime_divisors(k).into_iter().all(|r| {
        let h = sub_raw(&x_pow_p_iter(m, p, k / r), &x, p);
        gcd_raw(m, &h, p).len() == 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibility_small_cases() {
        // x^2 + 1 is irreducible mod 3, reducible mod 5
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[1, 0, 1], 5));
        // x^4 + x + 1 over F_2 style check in F_3: x^4 + 1 = (x^2+x+2)(x^2+2x+2)
        assert!(!is_irreducible(&[1, 0, 0, 0, 1], 3));
    }

    #[test]
    fn counts_irreducible_quadratics() {
        // (p^2 - p) / 2 monic irreducible quadratics
        let p = 7;
        let n = (0..p)
            .flat_map(|a| (0..p).map(move |b| vec![a, b, 1]))
            .filter(|m| is_irreducible(m, p))
            .count();
        assert_eq!(n as u64, (p * p - p) / 2);
    }

    #[test]
    fn multiplicative_group_order() {
        for k in 1..=4 {
            let f = ExtField::new(5, k).unwrap();
            let q = f.order().unwrap();
            let z = f.generator().add(&Gf::one(&f));
            assert!(z.pow_u128(q - 1).is_one(), "k = {k}");
            assert!(z.mul(&z.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn frobenius_fixes_prime_subfield() {
        let f = ExtField::new(101, 3).unwrap();
        let a = Gf::from_int(&f, 37);
        assert_eq!(a.frobenius(), a);
        let z = f.generator();
        assert_ne!(z.frobenius(), z);
        assert_eq!(z.frobenius().frobenius().frobenius(), z);
        assert_eq!(a.to_prime().unwrap().value(), 37);
        assert!(z.to_prime().is_none());
    }

    #[test]
    fn degree_one_extension_is_the_prime_field() {
        let f = ExtField::new(11, 1).unwrap();
        let x = Gf::from_int(&f, 4);
        assert_eq!(x.inv().unwrap().to_prime().unwrap().value(), 3);
    }
}
