use serde::Serialize;

use crate::exact::{Field, Mat, Rat, Ring};

use super::chart::PlaneChart;
use super::GrassmannError;

/// Symmetric 5×5 Gram matrix S of a quadric x ↦ xᵀ S x on P^4.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadricForm {
    m: Mat<Rat>,
}

impl QuadricForm {
    pub fn new(m: Mat<Rat>) -> Result<Self, GrassmannError> {
        if m.rows() != 5 || m.cols() != 5 || !m.is_symmetric() {
            return Err(GrassmannError::NonSymmetric);
        }
        Ok(QuadricForm { m })
    }

    /// x0x1 − x2x3 + x4².
    pub fn normal_form() -> Self {
        let mut m = Mat::zeros(&(), 5, 5);
        let h = Rat::new(1, 2);
        m.set(0, 1, h.clone());
        m.set(1, 0, h.clone());
        m.set(2, 3, -&h);
        m.set(3, 2, -h);
        m.set(4, 4, Rat::one());
        QuadricForm { m }
    }

    pub fn matrix(&self) -> &Mat<Rat> {
        &self.m
    }

    pub fn rank(&self) -> usize {
        self.m.rank()
    }

    /// The quadric xᵀ(TᵀST)x, i.e. this one after the substitution x ↦ Tx.
    pub fn pullback(&self, t: &Mat<Rat>) -> Result<Self, GrassmannError> {
        let s = t.transpose().mul(&self.m)?.mul(t)?;
        QuadricForm::new(s)
    }

    /// The Gram matrix with entries mapped into `F`.
    pub fn over<F: Field>(&self, ctx: &F::Ctx) -> Option<Mat<F>> {
        let mut out = Mat::zeros(ctx, 5, 5);
        for i in 0..5 {
            for j in 0..5 {
                out.set(i, j, F::from_rat(ctx, self.m.get(i, j))?);
            }
        }
        Some(out)
    }

    pub fn eval<F: Field>(&self, ctx: &F::Ctx, x: &[F]) -> Option<F> {
        let s = self.over(ctx)?;
        let sx = s.mul_vec(x).ok()?;
        Some(
            x.iter()
                .zip(&sx)
                .fold(F::zero(ctx), |acc, (a, b)| acc.add(&a.mul(b))),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConicClass {
    Smooth,
    LinePair,
    DoubleLine,
}

/// The 3×3 matrix of Q restricted to the plane of the chart: Bᵀ S B with B
/// the transposed plane matrix.
pub fn conic_restriction<R: Ring>(
    c: &PlaneChart<R>,
    q: &QuadricForm,
) -> Result<Mat<R>, GrassmannError> {
    let ctx = c.ctx();
    let mut s = Mat::zeros(&ctx, 5, 5);
    for i in 0..5 {
        for j in 0..5 {
            let v = R::from_rat(&ctx, q.m.get(i, j)).ok_or(GrassmannError::Characteristic)?;
            s.set(i, j, v);
        }
    }
    let b = c.plane_matrix().transpose();
    Ok(b.transpose().mul(&s)?.mul(&b)?)
}

pub fn conic_classify<F: Field>(m: &Mat<F>) -> Result<ConicClass, GrassmannError> {
    if m.rows() != 3 || m.cols() != 3 || !m.is_symmetric() {
        return Err(GrassmannError::NonSymmetric);
    }
    match m.rank() {
        3 => Ok(ConicClass::Smooth),
        2 => Ok(ConicClass::LinePair),
        1 => Ok(ConicClass::DoubleLine),
        _ => Err(GrassmannError::PlaneInQuadric),
    }
}
