//! Pairs of twisted cubics on the quadric x0x1 − x2x3 + x4² and the
//! genericity conditions the construction needs.

pub mod claims;
pub mod generality;
pub mod input;
pub mod search;

use thiserror::Error;

use crate::exact::{BinaryForm, ExactError, Field, Mat, Rat};
use crate::grassmann::QuadricForm;

pub use claims::{fixture_pair, verify_construction_claims, verify_dimension_claims, F101_FIXTURE, F101_SEED};
pub use generality::{check_generality, check_generality_prime, Condition, GeneralityReport, SplitField, Verdict};
pub use input::{format_pair, parse_pair, PairInput, PairScalars};
pub use search::{random_general_pair, SearchOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("a cubic needs 5 coordinate forms of degree 3")]
    Shape,
    #[error("coefficient matrix has rank {0}, a twisted cubic needs 4")]
    Degenerate(usize),
    #[error("curve {0} does not lie on the quadric")]
    NotOnQuadric(usize),
    #[error("the quadric is not defined in characteristic 2")]
    Characteristic,
    #[error("input: {0}")]
    Parse(String),
    #[error("no general pair within {0} trials")]
    BudgetExhausted(u64),
    #[error("the search needs a prime p >= 11, got {0}")]
    PrimeTooSmall(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// γ: P¹ → P⁴ by five binary cubics.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicParam<F: Field> {
    coords: Vec<BinaryForm<F>>,
}

impl<F: Field> CubicParam<F> {
    pub fn new(coords: Vec<BinaryForm<F>>) -> Result<Self, ConstructionError> {
        if coords.len() != 5 || coords.iter().any(|f| f.degree() != 3) {
            return Err(ConstructionError::Shape);
        }
        Ok(CubicParam { coords })
    }

    /// Rows are (s³, s²t, st², t³) coefficients of each coordinate.
    pub fn from_rows(ctx: &F::Ctx, rows: &[Vec<F>]) -> Result<Self, ConstructionError> {
        if rows.len() != 5 || rows.iter().any(|r| r.len() != 4) {
            return Err(ConstructionError::Shape);
        }
        CubicParam::new(rows.iter().map(|r| BinaryForm::new(ctx, r.clone())).collect())
    }

    pub fn from_ints(ctx: &F::Ctx, rows: &[[i64; 4]; 5]) -> Self {
        CubicParam {
            coords: rows.iter().map(|r| BinaryForm::from_ints(ctx, r)).collect(),
        }
    }

    pub fn ctx(&self) -> &F::Ctx {
        self.coords[0].ctx()
    }

    pub fn coords(&self) -> &[BinaryForm<F>] {
        &self.coords
    }

    /// 5×4 matrix of coefficients.
    pub fn coefficient_matrix(&self) -> Mat<F> {
        Mat::from_fn(self.ctx(), 5, 4, |i, j| self.coords[i].coeffs()[j].clone())
    }

    /// Σ S_ij γ_i γ_j as a binary sextic.
    pub fn quadric_sextic(&self, s: &Mat<F>) -> BinaryForm<F> {
        let ctx = self.ctx();
        let mut out = BinaryForm::new(ctx, vec![F::zero(ctx); 7]);
        for i in 0..5 {
            for j in 0..5 {
                let c = s.get(i, j);
                if !c.is_zero() {
                    out = out.add(&self.coords[i].mul(&self.coords[j]).scale(c));
                }
            }
        }
        out
    }

    /// ℓ∘γ for a linear form ℓ on the ambient space.
    pub fn compose_linear(&self, l: &[F]) -> BinaryForm<F> {
        let ctx = self.ctx();
        self.coords
            .iter()
            .zip(l)
            .fold(BinaryForm::new(ctx, vec![F::zero(ctx); 4]), |acc, (g, a)| acc.add(&g.scale(a)))
    }

    pub fn point(&self, st: &[F; 2]) -> Vec<F> {
        self.coords.iter().map(|g| g.eval(&st[0], &st[1])).collect()
    }

    /// γ(a s + b t, c s + d t).
    pub fn reparametrize(&self, m: &[[F; 2]; 2]) -> Self {
        CubicParam {
            coords: self.coords.iter().map(|g| g.compose(m)).collect(),
        }
    }

    pub fn map<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> G) -> CubicParam<G> {
        CubicParam {
            coords: self
                .coords
                .iter()
                .map(|g| BinaryForm::new(ctx, g.coeffs().iter().map(&f).collect()))
                .collect(),
        }
    }
}

pub fn quadric_matrix<F: Field>(ctx: &F::Ctx) -> Result<Mat<F>, ConstructionError> {
    QuadricForm::normal_form()
        .over(ctx)
        .ok_or(ConstructionError::Characteristic)
}

/// The hyperplane spanned by the curve, as a linear form whose first
/// nonzero coefficient is 1.
pub fn hyperplane_of<F: Field>(g: &CubicParam<F>) -> Result<Vec<F>, ConstructionError> {
    let m = g.coefficient_matrix();
    let rank = m.rank();
    if rank != 4 {
        return Err(ConstructionError::Degenerate(rank));
    }
    let k = m.left_kernel();
    let v = k.into_iter().next().expect("corank one");
    Ok(normalize(&v))
}

pub(crate) fn normalize<F: Field>(v: &[F]) -> Vec<F> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let inv = lead.inv().expect("nonzero");
            v.iter().map(|x| x.mul(&inv)).collect()
        }
        None => v.to_vec(),
    }
}

/// Two cubics on the quadric with their spanning hyperplanes.
#[derive(Clone, Debug, PartialEq)]
pub struct PairConfig<F: Field> {
    pub gamma1: CubicParam<F>,
    pub gamma2: CubicParam<F>,
    pub h1: Vec<F>,
    pub h2: Vec<F>,
}

impl<F: Field> PairConfig<F> {
    pub fn new(gamma1: CubicParam<F>, gamma2: CubicParam<F>) -> Result<Self, ConstructionError> {
        let s = quadric_matrix::<F>(gamma1.ctx())?;
        for (i, g) in [&gamma1, &gamma2].into_iter().enumerate() {
            if !g.quadric_sextic(&s).is_zero() {
                return Err(ConstructionError::NotOnQuadric(i + 1));
            }
        }
        let h1 = hyperplane_of(&gamma1)?;
        let h2 = hyperplane_of(&gamma2)?;
        Ok(PairConfig { gamma1, gamma2, h1, h2 })
    }

    pub fn map<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> G) -> PairConfig<G> {
        PairConfig {
            gamma1: self.gamma1.map(ctx, &f),
            gamma2: self.gamma2.map(ctx, &f),
            h1: self.h1.iter().map(&f).collect(),
            h2: self.h2.iter().map(&f).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuliDimension {
    /// Choice of the hyperplane spanned by a cubic.
    pub hyperplane: u32,
    /// The linear system of (1,2) curves on the hyperplane section.
    pub linear_system: u32,
    pub hilbert_scheme: u32,
    pub automorphisms: u32,
    pub total: i64,
    pub note: String,
}

pub const HILB_NOTE: &str = "a projectivized rank 6 bundle over Gr(3,5) would have dimension 11, \
which is incompatible with the total 8; the count 4 + 5 = 9 is used";

pub fn moduli_dimension() -> ModuliDimension {
    let hyperplane = 4;
    let linear_system = 5;
    let hilbert_scheme = hyperplane + linear_system;
    let automorphisms = 10;
    ModuliDimension {
        hyperplane,
        linear_system,
        hilbert_scheme,
        automorphisms,
        total: 2 * hilbert_scheme as i64 - automorphisms as i64,
        note: HILB_NOTE.into(),
    }
}

/// γ = (s³, t³, s²t, st², 0), lying in x4 = 0.
pub fn standard_cubic() -> CubicParam<Rat> {
    CubicParam::from_ints(&(), &[[1, 0, 0, 0], [0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{Fp, PrimeField};

    #[test]
    fn standard_cubic_on_quadric() {
        let g = standard_cubic();
        let s = quadric_matrix::<Rat>(&()).unwrap();
        assert!(g.quadric_sextic(&s).is_zero());
        let h = hyperplane_of(&g).unwrap();
        assert_eq!(h, vec![Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero(), Rat::one()]);
    }

    #[test]
    fn degenerate_cubic_rejected() {
        let g = CubicParam::<Rat>::from_ints(&(), &[[1, 0, 0, 0], [0, 0, 0, 1], [0, 1, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0]]);
        assert_eq!(hyperplane_of(&g), Err(ConstructionError::Degenerate(3)));
    }

    #[test]
    fn reparametrization_keeps_hyperplane() {
        let g = standard_cubic();
        let m = [[Rat::int(2), Rat::int(1)], [Rat::int(1), Rat::int(1)]];
        assert_eq!(hyperplane_of(&g.reparametrize(&m)).unwrap(), hyperplane_of(&g).unwrap());
    }

    #[test]
    fn characteristic_two_rejected() {
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(quadric_matrix::<Fp>(&f2), Err(ConstructionError::Characteristic));
    }

    #[test]
    fn dimension_count() {
        let d = moduli_dimension();
        assert_eq!((d.hilbert_scheme, d.automorphisms, d.total), (9, 10, 8));
    }
}
