//! The affine chart of Gr(3,5) and its Plücker coordinates.

use crate::exact::{Field, MPoly, Mat, Rat, Ring};

use super::GrassmannError;

/// Names of the six chart variables, in the order used by [`symbolic_chart`].
pub const CHART_VARS: [&str; 6] = ["a0", "a1", "a2", "b0", "b1", "b2"];

/// The plane spanned by the rows (e_i, b_i, a_i): points (y, b·y, a·y).
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneChart<R> {
    pub a: [R; 3],
    pub b: [R; 3],
}

/// Ten homogeneous coordinates on P^9.
#[derive(Clone, Debug, PartialEq)]
pub struct PlueckerVec<R>(pub [R; 10]);

/// Column triples of the 3×5 plane matrix, one per Plücker coordinate,
/// with the sign that reproduces the displayed tuple.
pub const MINOR_COLUMNS: [([usize; 3], i64); 10] = [
    ([0, 1, 2], 1),
    ([0, 1, 3], 1),
    ([0, 1, 4], 1),
    ([0, 2, 3], 1),
    ([0, 2, 4], 1),
    ([1, 2, 3], 1),
    ([1, 2, 4], 1),
    ([0, 3, 4], 1),
    ([1, 3, 4], 1),
    ([2, 3, 4], 1),
];

impl<R: Ring> PlaneChart<R> {
    /// Entries in the order a0, a1, a2, b0, b1, b2.
    pub fn from_array(v: [R; 6]) -> Self {
        let [a0, a1, a2, b0, b1, b2] = v;
        PlaneChart {
            a: [a0, a1, a2],
            b: [b0, b1, b2],
        }
    }

    pub fn to_array(&self) -> [R; 6] {
        let [a0, a1, a2] = self.a.clone();
        let [b0, b1, b2] = self.b.clone();
        [a0, a1, a2, b0, b1, b2]
    }

    pub fn zero(ctx: &R::Ctx) -> Self {
        PlaneChart::from_array(std::array::from_fn(|_| R::zero(ctx)))
    }

    pub fn ctx(&self) -> R::Ctx {
        self.a[0].ctx()
    }

    /// Rows (1,0,0,b0,a0), (0,1,0,b1,a1), (0,0,1,b2,a2).
    pub fn plane_matrix(&self) -> Mat<R> {
        let ctx = self.ctx();
        Mat::from_fn(&ctx, 3, 5, |i, j| match j {
            0..=2 if i == j => R::one(&ctx),
            0..=2 => R::zero(&ctx),
            3 => self.b[i].clone(),
            _ => self.a[i].clone(),
        })
    }

    /// The closed-form image (1, b2, a2, −b1, −a1, b0, a0,
    /// b1a2 − a1b2, a0b2 − a2b0, b0a1 − a0b1).
    pub fn pluecker(&self) -> PlueckerVec<R> {
        let [a0, a1, a2] = &self.a;
        let [b0, b1, b2] = &self.b;
        PlueckerVec([
            R::one(&self.ctx()),
            b2.clone(),
            a2.clone(),
            b1.neg(),
            a1.neg(),
            b0.clone(),
            a0.clone(),
            b1.mul(a2).sub(&a1.mul(b2)),
            a0.mul(b2).sub(&a2.mul(b0)),
            b0.mul(a1).sub(&a0.mul(b1)),
        ])
    }

    /// Signed 3×3 minors of the plane matrix in the [`MINOR_COLUMNS`] order.
    pub fn pluecker_by_minors(&self) -> PlueckerVec<R> {
        let m = self.plane_matrix();
        let ctx = self.ctx();
        PlueckerVec(std::array::from_fn(|k| {
            let (cols, sign) = MINOR_COLUMNS[k];
            let sub = Mat::from_fn(&ctx, 3, 3, |i, j| m.get(i, cols[j]).clone());
            let d = sub.det_cofactor().expect("square");
            if sign < 0 {
                d.neg()
            } else {
                d
            }
        }))
    }
}

impl<F: Field> PlaneChart<F> {
    /// Maps rational chart coordinates into another field.
    pub fn from_rats(ctx: &F::Ctx, v: &[Rat; 6]) -> Option<Self> {
        let mut out = Vec::with_capacity(6);
        for r in v {
            out.push(F::from_rat(ctx, r)?);
        }
        Some(PlaneChart::from_array(out.try_into().ok()?))
    }
}

/// The chart with polynomial entries a0..b2 in six variables.
pub fn symbolic_chart() -> PlaneChart<MPoly<Rat>> {
    let v = MPoly::<Rat>::vars(&(), 6);
    PlaneChart::from_array(v.try_into().expect("six variables"))
}

/// Confirms the minor table reproduces the closed-form tuple symbolically.
pub fn check_minor_table() -> Result<(), GrassmannError> {
    let c = symbolic_chart();
    let closed = c.pluecker();
    let minors = c.pluecker_by_minors();
    for k in 0..10 {
        if closed.0[k] != minors.0[k] {
            return Err(GrassmannError::MinorTable(k));
        }
    }
    Ok(())
}
