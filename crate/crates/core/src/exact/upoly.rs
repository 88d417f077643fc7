//! Dense univariate polynomials over a field.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;

use super::field::{FiniteField, Field, Ring};
use super::rat::Rat;

/// Coefficients low degree first, never with a trailing zero.
#[derive(Clone, PartialEq)]
pub struct UPoly<F: Field> {
    ctx: F::Ctx,
    c: Vec<F>,
}

impl<F: Field> UPoly<F> {
    pub fn new(ctx: &F::Ctx, mut c: Vec<F>) -> Self {
        while c.last().is_some_and(Ring::is_zero) {
            c.pop();
        }
        UPoly {
            ctx: ctx.clone(),
            c,
        }
    }

    pub fn zero(ctx: &F::Ctx) -> Self {
        UPoly::new(ctx, Vec::new())
    }

    pub fn constant(ctx: &F::Ctx, a: F) -> Self {
        UPoly::new(ctx, vec![a])
    }

    pub fn x(ctx: &F::Ctx) -> Self {
        UPoly::new(ctx, vec![F::zero(ctx), F::one(ctx)])
    }

    /// Product of (x − r) over the given roots.
    pub fn from_roots(ctx: &F::Ctx, roots: &[F]) -> Self {
        roots.iter().fold(UPoly::constant(ctx, F::one(ctx)), |acc, r| {
            acc.mul(&UPoly::new(ctx, vec![r.neg(), F::one(ctx)]))
        })
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> F {
        self.c.get(i).cloned().unwrap_or_else(|| F::zero(&self.ctx))
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&F> {
        self.c.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        UPoly::new(&self.ctx, (0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        UPoly::new(&self.ctx, (0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero(&self.ctx);
        }
        let mut out = vec![F::zero(&self.ctx); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UPoly::new(&self.ctx, out)
    }

    pub fn scale(&self, k: &F) -> Self {
        UPoly::new(&self.ctx, self.c.iter().map(|a| a.mul(k)).collect())
    }

    pub fn eval(&self, x: &F) -> F {
        self.c
            .iter()
            .rev()
            .fold(F::zero(&self.ctx), |acc, a| acc.mul(x).add(a))
    }

    pub fn derivative(&self) -> Self {
        UPoly::new(
            &self.ctx,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a.mul(&F::from_int(&self.ctx, i as i64)))
                .collect(),
        )
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn divrem(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let lead_inv = d.lead()?.inv()?;
        let mut r = self.c.clone();
        let mut q = vec![F::zero(&self.ctx); self.c.len().saturating_sub(dd)];
        while r.len() > dd {
            let top = r.len() - 1;
            let k = r[top].mul(&lead_inv);
            let shift = top - dd;
            for (i, b) in d.c.iter().enumerate() {
                r[shift + i] = r[shift + i].sub(&k.mul(b));
            }
            q[shift] = k;
            r.pop();
            while r.last().is_some_and(Ring::is_zero) {
                r.pop();
            }
        }
        Some((UPoly::new(&self.ctx, q), UPoly::new(&self.ctx, r)))
    }

    pub fn rem(&self, d: &Self) -> Option<Self> {
        self.divrem(d).map(|(_, r)| r)
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero lead")),
        }
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// self^e mod m.
    pub fn powmod(&self, mut e: u128, m: &Self) -> Self {
        let mut acc = UPoly::constant(&self.ctx, F::one(&self.ctx))
            .rem(m)
            .expect("nonzero modulus");
        let mut b = self.rem(m).expect("nonzero modulus");
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b).rem(m).expect("nonzero modulus");
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b).rem(m).expect("nonzero modulus");
            }
        }
        acc
    }

    /// Lagrange interpolation through points with distinct abscissae.
    pub fn interpolate(ctx: &F::Ctx, pts: &[(F, F)]) -> Option<Self> {
        let mut acc = UPoly::zero(ctx);
        for (i, (xi, yi)) in pts.iter().enumerate() {
            let mut basis = UPoly::constant(ctx, F::one(ctx));
            let mut denom = F::one(ctx);
            for (j, (xj, _)) in pts.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis.mul(&UPoly::new(ctx, vec![xj.neg(), F::one(ctx)]));
                denom = denom.mul(&xi.sub(xj));
            }
            acc = acc.add(&basis.scale(&yi.div(&denom)?));
        }
        Some(acc)
    }
}

impl<F: FiniteField> UPoly<F> {
    /// Distinct roots in the field, by Cantor–Zassenhaus. Odd characteristic.
    pub fn roots<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<F> {
        let Some(d) = self.degree() else {
            panic!("roots of the zero polynomial");
        };
        if d == 0 {
            return Vec::new();
        }
        let q = F::order(&self.ctx).expect("field order fits in u128");
        assert!(q % 2 == 1, "characteristic 2 is not supported");
        let f = self.monic();
        let x = UPoly::x(&self.ctx);
        let xq = x.powmod(q, &f);
        let g = f.gcd(&xq.sub(&x));
        let mut out = Vec::new();
        split_linear(&g, q, rng, &mut out);
        out
    }
}

fn split_linear<F: FiniteField, R: Rng + ?Sized>(g: &UPoly<F>, q: u128, rng: &mut R, out: &mut Vec<F>) {
    match g.degree() {
        None | Some(0) => {}
        Some(1) => out.push(g.coeff(0).neg().div(&g.coeff(1)).expect("monic")),
        Some(d) => loop {
            let a = F::random(g.ctx(), rng);
            let shifted = UPoly::new(g.ctx(), vec![a, F::one(g.ctx())]);
            let h = shifted
                .powmod((q - 1) / 2, g)
                .sub(&UPoly::constant(g.ctx(), F::one(g.ctx())));
            let h = g.gcd(&h);
            let dh = h.degree().unwrap_or(0);
            if dh > 0 && dh < d {
                let (co, _) = g.divrem(&h).expect("h is nonzero");
                split_linear(&h, q, rng, out);
                split_linear(&co.monic(), q, rng, out);
                return;
            }
        },
    }
}

impl UPoly<Rat> {
    /// Rational roots via the rational root theorem. `None` when the
    /// coefficients are too large for divisor enumeration.
    pub fn rational_roots(&self) -> Option<Vec<Rat>> {
        let d = self.degree()?;
        if d == 0 {
            return Some(Vec::new());
        }
        let lcm = self.c.iter().fold(BigInt::from(1), |acc, a| acc.lcm(a.denom()));
        let ints: Vec<BigInt> = self
            .c
            .iter()
            .map(|a| (a * &Rat::from(lcm.clone())).numer().clone())
            .collect();
        let low = ints.iter().position(|a| !a.is_zero())?;
        let mut roots = Vec::new();
        if low > 0 {
            roots.push(Rat::zero());
        }
        let a0 = ints[low].abs().to_u64()?;
        let an = ints[d].abs().to_u64()?;
        if a0 > 1 << 40 || an > 1 << 40 {
            return None;
        }
        let mut cands: Vec<Rat> = Vec::new();
        for num in divisors(a0) {
            for den in divisors(an) {
                let r = Rat::new(num as i64, den as i64);
                cands.push(r.clone());
                cands.push(-r);
            }
        }
        cands.sort();
        cands.dedup();
        roots.extend(cands.into_iter().filter(|r| self.eval(r).is_zero()));
        roots.sort();
        Some(roots)
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n.is_multiple_of(k) {
            out.push(k);
            if k * k != n {
                out.push(n / k);
            }
        }
        k += 1;
    }
    out
}

impl<F: Field> fmt::Debug for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "({a})x")?,
                _ => write!(f, "({a})x^{i}")?,
            }
        }
        Ok(())
    }
}
