//! Rational polyhedral cones given by generators.

pub mod decompose;
pub mod simplex;

use thiserror::Error;

use crate::exact::Rat;

use simplex::{feasible, Feasibility};

pub use decompose::{eff_decompose, is_nef, mori_decompose, verify_cone_claims, EffDecomposition, NefReport};

pub const MAX_GENERATORS: usize = 20;
pub const MAX_DIM: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("vector has {got} coordinates, cone lives in dimension {expected}")]
    Dimension { expected: usize, got: usize },
    #[error("generator {0} is zero")]
    ZeroGenerator(usize),
    #[error("cone too large: {generators} generators in dimension {dim}")]
    TooLarge { generators: usize, dim: usize },
    #[error("{0}")]
    OutsideCases(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    dim: usize,
    generators: Vec<Vec<Rat>>,
}

/// Nonnegative coefficients, one per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub coefficients: Vec<Rat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Inside(Witness),
    /// z with z·g ≥ 0 on every generator and z·v < 0.
    Outside(Vec<Rat>),
}

impl Membership {
    pub fn is_inside(&self) -> bool {
        matches!(self, Membership::Inside(_))
    }
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl Cone {
    pub fn new(dim: usize, generators: Vec<Vec<Rat>>) -> Result<Self, ConeError> {
        if generators.len() > MAX_GENERATORS || dim > MAX_DIM {
            return Err(ConeError::TooLarge {
                generators: generators.len(),
                dim,
            });
        }
        for (i, g) in generators.iter().enumerate() {
            if g.len() != dim {
                return Err(ConeError::Dimension {
                    expected: dim,
                    got: g.len(),
                });
            }
            if g.iter().all(Rat::is_zero) {
                return Err(ConeError::ZeroGenerator(i));
            }
        }
        Ok(Cone { dim, generators })
    }

    pub fn from_ints(dim: usize, generators: &[&[i64]]) -> Result<Self, ConeError> {
        Cone::new(
            dim,
            generators
                .iter()
                .map(|g| g.iter().map(|&v| Rat::int(v)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<Rat>] {
        &self.generators
    }

    pub fn recombine(&self, w: &Witness) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        for (c, g) in w.coefficients.iter().zip(&self.generators) {
            for (vi, gi) in v.iter_mut().zip(g) {
                *vi = &*vi + &(c * gi);
            }
        }
        v
    }

    pub fn member(&self, v: &[Rat]) -> Result<Membership, ConeError> {
        if v.len() != self.dim {
            return Err(ConeError::Dimension {
                expected: self.dim,
                got: v.len(),
            });
        }
        let a: Vec<Vec<Rat>> = (0..self.dim)
            .map(|i| self.generators.iter().map(|g| g[i].clone()).collect())
            .collect();
        Ok(match feasible(&a, v) {
            Feasibility::Feasible(x) => {
                let w = Witness { coefficients: x };
                assert_eq!(self.recombine(&w), v, "witness must recombine exactly");
                Membership::Inside(w)
            }
            Feasibility::Infeasible(z) => {
                debug_assert!(self.generators.iter().all(|g| !dot(&z, g).is_negative()));
                debug_assert!(dot(&z, v).is_negative());
                Membership::Outside(z)
            }
        })
    }

    /// Generators not in the cone of the others. Among parallel copies of
    /// a ray the first is kept.
    pub fn extremal_rays(&self) -> Vec<Vec<Rat>> {
        let n = self.generators.len();
        let mut keep = Vec::new();
        for i in 0..n {
            let gi = &self.generators[i];
            let earlier_parallel = (0..i).any(|j| positively_parallel(&self.generators[j], gi));
            if earlier_parallel {
                continue;
            }
            let others: Vec<Vec<Rat>> = (0..n)
                .filter(|&j| j != i && !positively_parallel(&self.generators[j], gi))
                .map(|j| self.generators[j].clone())
                .collect();
            let inside = Cone {
                dim: self.dim,
                generators: others,
            }
            .member(gi)
            .expect("same dimension")
            .is_inside();
            if !inside {
                keep.push(gi.clone());
            }
        }
        keep
    }

    /// Inequalities a with a·x ≥ 0 on the cone, cutting it out exactly,
    /// by Fourier–Motzkin elimination of the generator coefficients.
    pub fn dual_inequalities(&self) -> Vec<Vec<Rat>> {
        let d = self.dim;
        let n = self.generators.len();
        // rows over (x, λ): x − Gλ ≥ 0, −x + Gλ ≥ 0, λ ≥ 0
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for i in 0..d {
            let mut r = vec![Rat::zero(); d + n];
            r[i] = Rat::one();
            for (j, g) in self.generators.iter().enumerate() {
                r[d + j] = -&g[i];
            }
            rows.push(r.iter().map(|v| -v).collect());
            rows.push(r);
        }
        for j in 0..n {
            let mut r = vec![Rat::zero(); d + n];
            r[d + j] = Rat::one();
            rows.push(r);
        }
        for col in (d..d + n).rev() {
            let (pos, rest): (Vec<_>, Vec<_>) = rows.into_iter().partition(|r| r[col].is_positive());
            let (neg, zero): (Vec<_>, Vec<_>) = rest.into_iter().partition(|r| r[col].is_negative());
            let mut next = zero;
            for p in &pos {
                for q in &neg {
                    let (a, b) = (-&q[col], p[col].clone());
                    let r: Vec<Rat> = p.iter().zip(q).map(|(x, y)| &(&a * x) + &(&b * y)).collect();
                    next.push(r);
                }
            }
            for r in next.iter_mut() {
                r.truncate(col);
            }
            rows = prune(next);
        }
        rows
    }
}

fn positively_parallel(a: &[Rat], b: &[Rat]) -> bool {
    let Some(k) = a.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if b[k].is_zero() {
        return false;
    }
    let ratio = &b[k] / &a[k];
    ratio.is_positive() && a.iter().zip(b).all(|(x, y)| &(x * &ratio) == y)
}

/// Scales to primitive integers, drops zero rows and duplicates, then
/// removes rows implied by the others.
fn prune(rows: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    let mut out: Vec<Vec<Rat>> = Vec::new();
    for r in rows {
        if r.iter().all(Rat::is_zero) {
            continue;
        }
        let r = primitive(&r);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    let mut i = 0;
    while i < out.len() {
        let others: Vec<Vec<Rat>> = out
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, r)| r.clone())
            .collect();
        let dim = out[i].len();
        let a: Vec<Vec<Rat>> = (0..dim).map(|k| others.iter().map(|r| r[k].clone()).collect()).collect();
        if !others.is_empty() && matches!(feasible(&a, &out[i]), Feasibility::Feasible(_)) {
            out.remove(i);
        } else {
            i += 1;
        }
    }
    out
}

fn primitive(r: &[Rat]) -> Vec<Rat> {
    use num_integer::Integer;
    let l = r.iter().fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<num_bigint::BigInt> = r.iter().map(|x| (x * &Rat::from(l.clone())).numer().clone()).collect();
    let g = scaled.iter().fold(num_bigint::BigInt::from(0), |acc, x| acc.gcd(x));
    scaled.into_iter().map(|x| Rat::from(x / &g)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<Rat> {
        x.iter().map(|&a| Rat::int(a)).collect()
    }

    #[test]
    fn membership() {
        let c = Cone::from_ints(2, &[&[1, 0], &[1, 1]]).unwrap();
        assert!(c.member(&v(&[2, 1])).unwrap().is_inside());
        let Membership::Outside(z) = c.member(&v(&[0, 1])).unwrap() else { panic!() };
        assert!(dot(&z, &v(&[0, 1])).is_negative());
        assert!(matches!(c.member(&v(&[1])), Err(ConeError::Dimension { .. })));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Cone::from_ints(2, &[&[0, 0]]), Err(ConeError::ZeroGenerator(0)));
        let many: Vec<&[i64]> = vec![&[1]; 21];
        assert!(matches!(Cone::from_ints(1, &many), Err(ConeError::TooLarge { .. })));
    }

    #[test]
    fn extremal_simple_cones() {
        let single = Cone::from_ints(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(single.extremal_rays(), vec![v(&[1, 2, 3])]);
        let basis = Cone::from_ints(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(basis.extremal_rays().len(), 3);
        let dup = Cone::from_ints(2, &[&[1, 0], &[2, 0], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(dup.extremal_rays(), vec![v(&[1, 0]), v(&[0, 1])]);
    }

    #[test]
    fn dual_of_quadrant_and_halfplane() {
        let q = Cone::from_ints(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let mut d = q.dual_inequalities();
        d.sort();
        assert_eq!(d, vec![v(&[0, 1]), v(&[1, 0])]);
        // a line: both directions plus one side
        let h = Cone::from_ints(2, &[&[1, 0], &[-1, 0], &[0, 1]]).unwrap();
        assert_eq!(h.dual_inequalities(), vec![v(&[0, 1])]);
        // lower-dimensional cone needs an equality pair
        let flat = Cone::from_ints(3, &[&[1, 0, 0], &[0, 1, 0]]).unwrap();
        let ineq = flat.dual_inequalities();
        for x in [v(&[1, 1, 0]), v(&[0, 0, 1]), v(&[0, 0, -1]), v(&[-1, 0, 0])] {
            let by_dual = ineq.iter().all(|a| !dot(a, &x).is_negative());
            assert_eq!(by_dual, flat.member(&x).unwrap().is_inside(), "{x:?}");
        }
    }
}
