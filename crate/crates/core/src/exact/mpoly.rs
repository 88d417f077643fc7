//! Sparse multivariate polynomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::error::ExactError;
use super::field::{Field, Ring};

/// Exponent vector ordered graded-lexicographically: total degree first,
/// then the first differing exponent (higher exponent on x0 is larger).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(Box<[u32]>);

impl Mono {
    pub fn new(exps: Vec<u32>) -> Self {
        Mono(exps.into_boxed_slice())
    }

    pub fn one(arity: usize) -> Self {
        Mono(vec![0; arity].into_boxed_slice())
    }

    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Mono(e.into_boxed_slice())
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, rhs: &Mono) -> Mono {
        Mono(self.0.iter().zip(rhs.0.iter()).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct MPolyCtx<C> {
    pub scalar: C,
    pub arity: usize,
}

/// Sparse polynomial with nonzero coefficients keyed by exponent vector.
#[derive(Clone, PartialEq, Debug)]
pub struct MPoly<R: Ring> {
    scalar: R::Ctx,
    arity: usize,
    terms: BTreeMap<Mono, R>,
}

impl<R: Ring> MPoly<R> {
    pub fn zero(scalar: &R::Ctx, arity: usize) -> Self {
        MPoly {
            scalar: scalar.clone(),
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: R, arity: usize) -> Self {
        let mut p = MPoly::zero(&c.ctx(), arity);
        if !c.is_zero() {
            p.terms.insert(Mono::one(arity), c);
        }
        p
    }

    pub fn one(scalar: &R::Ctx, arity: usize) -> Self {
        MPoly::constant(R::one(scalar), arity)
    }

    pub fn var(scalar: &R::Ctx, arity: usize, i: usize) -> Self {
        assert!(i < arity, "variable index {i} out of range for arity {arity}");
        let mut p = MPoly::zero(scalar, arity);
        p.terms.insert(Mono::var(arity, i), R::one(scalar));
        p
    }

    /// All variables x0..x_{n-1}.
    pub fn vars(scalar: &R::Ctx, arity: usize) -> Vec<Self> {
        (0..arity).map(|i| MPoly::var(scalar, arity, i)).collect()
    }

    /// Builds from (coefficient, exponents) pairs; like terms are combined.
    pub fn from_terms(
        scalar: &R::Ctx,
        arity: usize,
        terms: impl IntoIterator<Item = (R, Vec<u32>)>,
    ) -> Result<Self, ExactError> {
        let mut p = MPoly::zero(scalar, arity);
        for (c, e) in terms {
            if e.len() != arity {
                return Err(ExactError::ArityMismatch {
                    left: arity,
                    right: e.len(),
                });
            }
            if c.ctx() != *scalar {
                return Err(ExactError::DomainMismatch);
            }
            p.add_term(Mono::new(e), c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Mono, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn scalar_ctx(&self) -> &R::Ctx {
        &self.scalar
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &R)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exps: &[u32]) -> R {
        self.terms
            .get(&Mono::new(exps.to_vec()))
            .cloned()
            .unwrap_or_else(|| R::zero(&self.scalar))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Mono::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Mono::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn check(&self, rhs: &Self) -> Result<(), ExactError> {
        if self.arity != rhs.arity {
            return Err(ExactError::ArityMismatch {
                left: self.arity,
                right: rhs.arity,
            });
        }
        if self.scalar != rhs.scalar {
            return Err(ExactError::DomainMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.check(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.check(rhs)?;
        let mut out = MPoly::zero(&self.scalar, self.arity);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = MPoly::zero(&self.scalar, self.arity);
        if c.is_zero() {
            return out;
        }
        for (m, a) in &self.terms {
            let v = a.mul(c);
            if !v.is_zero() {
                out.terms.insert(m.clone(), v);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            scalar: self.scalar.clone(),
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MPoly::one(&self.scalar, self.arity);
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same ring");
        }
        acc
    }

    /// Evaluates at a point of the scalar domain.
    pub fn eval(&self, point: &[R]) -> Result<R, ExactError> {
        if point.len() != self.arity {
            return Err(ExactError::ArityMismatch {
                left: self.arity,
                right: point.len(),
            });
        }
        if point.iter().any(|x| x.ctx() != self.scalar) {
            return Err(ExactError::DomainMismatch);
        }
        let maxe = self.max_exponents();
        let powers = power_table(point, &maxe, &self.scalar);
        let mut acc = R::zero(&self.scalar);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[i][e as usize]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    fn max_exponents(&self) -> Vec<u32> {
        let mut maxe = vec![0u32; self.arity];
        for m in self.terms.keys() {
            for (a, &e) in maxe.iter_mut().zip(m.exps()) {
                *a = (*a).max(e);
            }
        }
        maxe
    }

    /// Replaces variable i by `images[i]` and expands.
    pub fn substitute(&self, images: &[MPoly<R>]) -> Result<MPoly<R>, ExactError> {
        if images.len() != self.arity {
            return Err(ExactError::ImageCount {
                expected: self.arity,
                got: images.len(),
            });
        }
        let Some(first) = images.first() else {
            // nullary polynomial: a constant with no variables to replace
            return Ok(self.clone());
        };
        let n = first.arity;
        for img in images {
            if img.arity != n {
                return Err(ExactError::ArityMismatch {
                    left: n,
                    right: img.arity,
                });
            }
            if img.scalar != self.scalar {
                return Err(ExactError::DomainMismatch);
            }
        }
        let maxe = self.max_exponents();
        let powers = power_table(images, &maxe, &MPolyCtx {
            scalar: self.scalar.clone(),
            arity: n,
        });
        let mut out = MPoly::zero(&self.scalar, n);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(c.clone(), n);
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = t.try_mul(&powers[i][e as usize])?;
                }
            }
            for (mm, cc) in t.terms {
                out.add_term(mm, cc);
            }
        }
        Ok(out)
    }

    /// Coefficient-wise image in another scalar domain, e.g. rationals to F_p.
    /// `None` if some coefficient has no image.
    pub fn map_coeffs<S: Ring>(
        &self,
        target: &S::Ctx,
        f: impl Fn(&R) -> Option<S>,
    ) -> Option<MPoly<S>> {
        let mut out = MPoly::zero(target, self.arity);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Some(out)
    }
}

fn power_table<T: Ring>(base: &[T], maxe: &[u32], ctx: &T::Ctx) -> Vec<Vec<T>> {
    base.iter()
        .zip(maxe)
        .map(|(b, &e)| {
            let mut row = vec![T::one(ctx)];
            for k in 1..=e as usize {
                let next = row[k - 1].mul(b);
                row.push(next);
            }
            row
        })
        .collect()
}

impl<F: Field> MPoly<F> {
    /// The scalar c with self = c·q, if one exists.
    pub fn proportionality(&self, q: &Self) -> Result<Option<F>, ExactError> {
        self.check(q)?;
        if self.is_zero() && q.is_zero() {
            return Err(ExactError::BothZero);
        }
        if self.is_zero() || q.is_zero() || self.terms.len() != q.terms.len() {
            return Ok(None);
        }
        let mut ratio: Option<F> = None;
        for ((ma, ca), (mb, cb)) in self.terms.iter().zip(q.terms.iter()) {
            if ma != mb {
                return Ok(None);
            }
            let r = ca.div(cb).expect("stored coefficients are nonzero");
            match &ratio {
                None => ratio = Some(r),
                Some(prev) if *prev != r => return Ok(None),
                _ => {}
            }
        }
        Ok(ratio)
    }

    /// The first term (descending order) where self and c·q differ.
    pub fn first_difference(&self, q: &Self, c: &F) -> Option<(Mono, F, F)> {
        let scaled = q.scale(c);
        let mut keys: Vec<&Mono> = self.terms.keys().chain(scaled.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().rev().find_map(|m| {
            let a = self.coeff(m.exps());
            let b = scaled.coeff(m.exps());
            (a != b).then(|| (m.clone(), a, b))
        })
    }

    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> Named<'a, F> {
        Named { p: self, names }
    }
}

/// Polynomials over R form a ring; the context is (scalar context, arity).
impl<R: Ring> Ring for MPoly<R> {
    type Ctx = MPolyCtx<R::Ctx>;

    fn zero(ctx: &Self::Ctx) -> Self {
        MPoly::zero(&ctx.scalar, ctx.arity)
    }
    fn one(ctx: &Self::Ctx) -> Self {
        MPoly::one(&ctx.scalar, ctx.arity)
    }
    fn from_int(ctx: &Self::Ctx, v: i64) -> Self {
        MPoly::constant(R::from_int(&ctx.scalar, v), ctx.arity)
    }
    fn from_rat(ctx: &Self::Ctx, r: &super::rat::Rat) -> Option<Self> {
        R::from_rat(&ctx.scalar, r).map(|c| MPoly::constant(c, ctx.arity))
    }
    fn ctx(&self) -> Self::Ctx {
        MPolyCtx {
            scalar: self.scalar.clone(),
            arity: self.arity,
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("polynomials from different rings")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.try_add(&rhs.neg()).expect("polynomials from different rings")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
    fn neg(&self) -> Self {
        MPoly::neg(self)
    }
}

pub struct Named<'a, F: Field> {
    p: &'a MPoly<F>,
    names: &'a [&'a str],
}

fn write_poly<F: Field>(
    f: &mut fmt::Formatter<'_>,
    p: &MPoly<F>,
    name: &dyn Fn(usize) -> String,
) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (k, (m, c)) in p.terms().enumerate() {
        let s = c.to_string();
        let (neg, mag) = match s.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, s),
        };
        match (k, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        let is_const = m.degree() == 0;
        let unit = mag == "1";
        if is_const || !unit {
            if mag.contains(' ') {
                write!(f, "({mag})")?;
            } else {
                write!(f, "{mag}")?;
            }
        }
        let mut first_var = true;
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first_var || !unit {
                write!(f, "*")?;
            }
            first_var = false;
            write!(f, "{}", name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
    }
    Ok(())
}

impl<F: Field> fmt::Display for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self, &|i| format!("x{i}"))
    }
}

impl<F: Field> fmt::Display for Named<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.p, &|i| {
            self.names
                .get(i)
                .map(|s| s.to_string())
                .unwrap_or_else(|| format!("x{i}"))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fp::PrimeField;
    use crate::exact::rat::Rat;

    fn x(i: usize, n: usize) -> MPoly<Rat> {
        MPoly::var(&(), n, i)
    }

    #[test]
    fn monomial_product() {
        let p = x(0, 2).mul(&x(1, 2));
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(&[1, 1]), Rat::one());
    }

    #[test]
    fn difference_of_squares() {
        let (a, b) = (x(0, 2), x(1, 2));
        let p = a.add(&b).mul(&a.sub(&b));
        let q = a.mul(&a).sub(&b.mul(&b));
        assert_eq!(p, q);
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn mul_rejects_arity_and_domain_mismatch() {
        let a = x(0, 2);
        let b = x(0, 3);
        assert_eq!(
            a.try_mul(&b),
            Err(ExactError::ArityMismatch { left: 2, right: 3 })
        );
        let f5 = PrimeField::new(5).unwrap();
        let g7 = PrimeField::new(7).unwrap();
        let u: MPoly<crate::exact::fp::Fp> = MPoly::var(&f5, 1, 0);
        let v: MPoly<crate::exact::fp::Fp> = MPoly::var(&g7, 1, 0);
        assert_eq!(u.try_mul(&v), Err(ExactError::DomainMismatch));
    }

    #[test]
    fn substitution_expands_binomial() {
        let p = x(0, 1).pow(2);
        let img = x(0, 2).add(&x(1, 2));
        let s = p.substitute(&[img]).unwrap();
        assert_eq!(s.coeff(&[2, 0]), Rat::one());
        assert_eq!(s.coeff(&[1, 1]), Rat::int(2));
        assert_eq!(s.coeff(&[0, 2]), Rat::one());
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn identity_substitution_is_noop() {
        let p = x(0, 3).mul(&x(2, 3)).add(&MPoly::constant(Rat::new(-2, 3), 3));
        assert_eq!(p.substitute(&MPoly::vars(&(), 3)).unwrap(), p);
        assert_eq!(
            p.substitute(&MPoly::vars(&(), 2)),
            Err(ExactError::ImageCount {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn proportionality_cases() {
        let q = x(0, 2).mul(&x(1, 2));
        let p = q.scale(&Rat::int(2));
        assert_eq!(p.proportionality(&q).unwrap(), Some(Rat::int(2)));
        assert_eq!(x(0, 2).proportionality(&x(1, 2)).unwrap(), None);
        let z = MPoly::<Rat>::zero(&(), 2);
        assert_eq!(z.proportionality(&q).unwrap(), None);
        assert_eq!(z.proportionality(&z), Err(ExactError::BothZero));
    }

    #[test]
    fn canonical_printing() {
        let p = x(0, 2)
            .pow(2)
            .scale(&Rat::new(1, 2))
            .sub(&x(1, 2))
            .add(&MPoly::constant(Rat::int(3), 2));
        assert_eq!(p.to_string(), "1/2*x0^2 - x1 + 3");
        assert_eq!(p.display_with(&["a", "b"]).to_string(), "1/2*a^2 - b + 3");
        assert_eq!(MPoly::<Rat>::zero(&(), 2).to_string(), "0");
    }

    #[test]
    fn reduction_to_prime_field() {
        let f = PrimeField::new(7).unwrap();
        let p = x(0, 1).scale(&Rat::new(1, 2));
        let q = p
            .map_coeffs(&f, |c| crate::exact::fp::Fp::from_rat(&f, c))
            .unwrap();
        assert_eq!(q.coeff(&[1]).value(), 4);
        let bad = x(0, 1).scale(&Rat::new(1, 7));
        assert!(bad
            .map_coeffs(&f, |c| crate::exact::fp::Fp::from_rat(&f, c))
            .is_none());
    }
}
