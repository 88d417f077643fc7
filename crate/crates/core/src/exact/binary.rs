//! Binary forms f(s, t) = Σ c_i s^(d−i) t^i.

use rand::Rng;

use super::error::ExactError;
use super::field::{FiniteField, Field, Ring};
use super::mat::Mat;
use super::rat::Rat;
use super::upoly::UPoly;

/// Homogeneous polynomial in (s, t) of a fixed formal degree. Leading
/// coefficients may vanish; the formal degree still counts.
#[derive(Clone, PartialEq, Debug)]
pub struct BinaryForm<F: Field> {
    ctx: F::Ctx,
    c: Vec<F>,
}

impl<F: Field> BinaryForm<F> {
    /// `coeffs[i]` is the coefficient of s^(d−i) t^i.
    pub fn new(ctx: &F::Ctx, coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        BinaryForm {
            ctx: ctx.clone(),
            c: coeffs,
        }
    }

    pub fn from_ints(ctx: &F::Ctx, coeffs: &[i64]) -> Self {
        BinaryForm::new(ctx, coeffs.iter().map(|&v| F::from_int(ctx, v)).collect())
    }

    /// The linear form a·s + b·t.
    pub fn linear(ctx: &F::Ctx, a: F, b: F) -> Self {
        BinaryForm::new(ctx, vec![a, b])
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn degree(&self) -> usize {
        self.c.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Ring::is_zero)
    }

    pub fn eval(&self, s: &F, t: &F) -> F {
        let d = self.degree();
        let spow = powers(s, d);
        let tpow = powers(t, d);
        self.c
            .iter()
            .enumerate()
            .fold(F::zero(&self.ctx), |acc, (i, a)| {
                acc.add(&a.mul(&spow[d - i]).mul(&tpow[i]))
            })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.degree(), rhs.degree(), "forms of different degree");
        BinaryForm::new(
            &self.ctx,
            self.c.iter().zip(&rhs.c).map(|(a, b)| a.add(b)).collect(),
        )
    }

    pub fn scale(&self, k: &F) -> Self {
        BinaryForm::new(&self.ctx, self.c.iter().map(|a| a.mul(k)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = vec![F::zero(&self.ctx); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in rhs.c.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        BinaryForm::new(&self.ctx, out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = BinaryForm::new(&self.ctx, vec![F::one(&self.ctx)]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// ∂f/∂s, of formal degree d − 1.
    pub fn ds(&self) -> Self {
        let d = self.degree();
        assert!(d > 0, "derivative of a constant form");
        BinaryForm::new(
            &self.ctx,
            (0..d)
                .map(|i| self.c[i].mul(&F::from_int(&self.ctx, (d - i) as i64)))
                .collect(),
        )
    }

    /// ∂f/∂t, of formal degree d − 1.
    pub fn dt(&self) -> Self {
        let d = self.degree();
        assert!(d > 0, "derivative of a constant form");
        BinaryForm::new(
            &self.ctx,
            (1..=d)
                .map(|i| self.c[i].mul(&F::from_int(&self.ctx, i as i64)))
                .collect(),
        )
    }

    /// f(a s + b t, c s + d t) for m = [[a, b], [c, d]].
    pub fn compose(&self, m: &[[F; 2]; 2]) -> Self {
        let d = self.degree();
        let ls = BinaryForm::linear(&self.ctx, m[0][0].clone(), m[0][1].clone());
        let lt = BinaryForm::linear(&self.ctx, m[1][0].clone(), m[1][1].clone());
        let mut out = BinaryForm::new(&self.ctx, vec![F::zero(&self.ctx); d + 1]);
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let term = ls.pow(d - i).mul(&lt.pow(i)).scale(a);
            out = out.add(&term);
        }
        out
    }

    /// Homogeneous resultant via the Sylvester determinant.
    pub fn resultant(&self, rhs: &Self) -> F {
        let (m, n) = (self.degree(), rhs.degree());
        let size = m + n;
        if size == 0 {
            return F::one(&self.ctx);
        }
        let mut s = Mat::zeros(&self.ctx, size, size);
        for r in 0..n {
            for (k, a) in self.c.iter().enumerate() {
                s.set(r, r + k, a.clone());
            }
        }
        for r in 0..m {
            for (k, b) in rhs.c.iter().enumerate() {
                s.set(n + r, r + k, b.clone());
            }
        }
        s.det().expect("Sylvester matrix is square")
    }

    /// Zero exactly when the form has a repeated projective root.
    pub fn discriminant(&self) -> Result<F, ExactError> {
        let d = self.degree();
        if !(2..=3).contains(&d) {
            return Err(ExactError::UnsupportedDegree(d));
        }
        if self.is_zero() {
            return Err(ExactError::ZeroForm);
        }
        let sign = |v: F| if (d * (d - 1) / 2) % 2 == 1 { v.neg() } else { v };
        if !self.c[0].is_zero() {
            let r = self.resultant(&self.ds());
            return Ok(sign(r).div(&self.c[0]).expect("nonzero lead"));
        }
        if !self.c[d].is_zero() {
            let r = self.resultant(&self.dt());
            return Ok(sign(r).div(&self.c[d]).expect("nonzero tail"));
        }
        // both end coefficients vanish: shear t ↦ t + λs to move a root off ∞
        for lam in 1..=8i64 {
            let l = F::from_int(&self.ctx, lam);
            if l.is_zero() {
                break;
            }
            let one = F::one(&self.ctx);
            let zero = F::zero(&self.ctx);
            let g = self.compose(&[[one.clone(), zero], [l, one]]);
            if !g.c[0].is_zero() {
                return g.discriminant();
            }
        }
        Ok(self.discriminant_closed())
    }

    /// The classical closed formulas, used as a fallback in tiny fields.
    pub fn discriminant_closed(&self) -> F {
        let k = |v: i64| F::from_int(&self.ctx, v);
        match self.degree() {
            2 => {
                let (a, b, c) = (&self.c[0], &self.c[1], &self.c[2]);
                b.mul(b).sub(&k(4).mul(a).mul(c))
            }
            3 => {
                let (a, b, c, d) = (&self.c[0], &self.c[1], &self.c[2], &self.c[3]);
                let t1 = b.mul(b).mul(c).mul(c);
                let t2 = k(4).mul(a).mul(&c.pow(3));
                let t3 = k(4).mul(&b.pow(3)).mul(d);
                let t4 = k(27).mul(&a.mul(a)).mul(&d.mul(d));
                let t5 = k(18).mul(a).mul(b).mul(c).mul(d);
                t1.sub(&t2).sub(&t3).sub(&t4).add(&t5)
            }
            d => panic!("no closed discriminant for degree {d}"),
        }
    }

    /// f(s, 1) as a polynomial in s.
    pub fn dehomogenize(&self) -> UPoly<F> {
        let d = self.degree();
        UPoly::new(&self.ctx, (0..=d).map(|k| self.c[d - k].clone()).collect())
    }

    /// Multiplicity of the root (1 : 0), i.e. the power of t dividing f.
    pub fn order_at_infinity(&self) -> usize {
        self.c.iter().take_while(|a| a.is_zero()).count()
    }

    /// Greatest common divisor as a form, normalized to be monic in s
    /// after removing powers of t.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let u = self.dehomogenize().gcd(&rhs.dehomogenize());
        let inf = self.order_at_infinity().min(rhs.order_at_infinity());
        let du = u.degree().unwrap_or(0);
        // gcd(0, g) = g and gcd(0, 0) = 0
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let total = du + inf;
        let mut c = vec![F::zero(&self.ctx); total + 1];
        // t^inf contributes leading zeros
        for k in 0..=du {
            c[inf + du - k] = u.coeff(k);
        }
        BinaryForm::new(&self.ctx, c)
    }
}

impl<F: FiniteField> BinaryForm<F> {
    /// Distinct projective roots, normalized as (s : 1) or (1 : 0).
    pub fn roots<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<[F; 2]> {
        assert!(!self.is_zero(), "roots of the zero form");
        let mut out: Vec<[F; 2]> = self
            .dehomogenize()
            .roots(rng)
            .into_iter()
            .map(|s| [s, F::one(&self.ctx)])
            .collect();
        if self.order_at_infinity() > 0 {
            out.push([F::one(&self.ctx), F::zero(&self.ctx)]);
        }
        out
    }
}

impl BinaryForm<Rat> {
    /// Projective rational roots, or `None` if coefficients are too large.
    pub fn rational_roots(&self) -> Option<Vec<[Rat; 2]>> {
        let u = self.dehomogenize();
        let mut out: Vec<[Rat; 2]> = if u.is_zero() {
            Vec::new()
        } else {
            u.rational_roots()?
                .into_iter()
                .map(|s| [s, Rat::one()])
                .collect()
        };
        if self.order_at_infinity() > 0 {
            out.push([Rat::one(), Rat::zero()]);
        }
        Some(out)
    }
}

fn powers<F: Field>(x: &F, d: usize) -> Vec<F> {
    let mut v = vec![F::one(&x.ctx())];
    for k in 1..=d {
        let next = v[k - 1].mul(x);
        v.push(next);
    }
    v
}
