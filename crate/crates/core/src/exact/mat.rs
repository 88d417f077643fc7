use std::fmt;

use super::error::ExactError;
use super::field::{Field, Ring};

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Mat<R: Ring> {
    rows: usize,
    cols: usize,
    ctx: R::Ctx,
    data: Vec<R>,
}

impl<R: Ring> Mat<R> {
    pub fn zeros(ctx: &R::Ctx, rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            ctx: ctx.clone(),
            data: vec![R::zero(ctx); rows * cols],
        }
    }

    pub fn identity(ctx: &R::Ctx, n: usize) -> Self {
        let mut m = Mat::zeros(ctx, n, n);
        for i in 0..n {
            m.data[i * n + i] = R::one(ctx);
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(ctx: &R::Ctx, rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            ctx: ctx.clone(),
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(ctx: &R::Ctx, rows: usize, cols: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Mat {
            rows,
            cols,
            ctx: ctx.clone(),
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(&self.ctx, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, ExactError> {
        if self.cols != rhs.rows {
            return Err(ExactError::ShapeMismatch(
                self.rows, self.cols, rhs.rows, rhs.cols,
            ));
        }
        Ok(Mat::from_fn(&self.ctx, self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(R::zero(&self.ctx), |acc, k| {
                acc.add(&self.get(i, k).mul(rhs.get(k, j)))
            })
        }))
    }

    pub fn mul_vec(&self, v: &[R]) -> Result<Vec<R>, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::ShapeMismatch(self.rows, self.cols, v.len(), 1));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(R::zero(&self.ctx), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect())
    }

    pub fn map<S: Ring>(&self, ctx: &S::Ctx, f: impl Fn(&R) -> S) -> Mat<S> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            ctx: ctx.clone(),
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Laplace expansion along the first row. Works over any commutative
    /// ring, so it also handles matrices of polynomials.
    pub fn det_cofactor(&self) -> Result<R, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.cofactor_rec(0, &idx))
    }

    fn cofactor_rec(&self, row: usize, cols: &[usize]) -> R {
        match cols.len() {
            0 => R::one(&self.ctx),
            1 => self.get(row, cols[0]).clone(),
            2 => self
                .get(row, cols[0])
                .mul(self.get(row + 1, cols[1]))
                .sub(&self.get(row, cols[1]).mul(self.get(row + 1, cols[0]))),
            _ => {
                let mut acc = R::zero(&self.ctx);
                for (k, &c) in cols.iter().enumerate() {
                    let a = self.get(row, c);
                    if a.is_zero() {
                        continue;
                    }
                    let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let t = a.mul(&self.cofactor_rec(row + 1, &rest));
                    acc = if k % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
                }
                acc
            }
        }
    }
}

impl<F: Field> Mat<F> {
    /// Cofactor expansion up to 4×4, fraction-free Bareiss elimination above.
    pub fn det(&self) -> Result<F, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows <= 4 {
            self.det_cofactor()
        } else {
            Ok(self.det_bareiss())
        }
    }

    pub fn det_bareiss(&self) -> F {
        let n = self.rows;
        let mut a = self.data.clone();
        let mut sign = false;
        let mut prev = F::one(&self.ctx);
        for k in 0..n.saturating_sub(1) {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                    return F::zero(&self.ctx);
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i * n + j]
                        .mul(&a[k * n + k])
                        .sub(&a[i * n + k].mul(&a[k * n + j]));
                    a[i * n + j] = num.div(&prev).expect("Bareiss pivot is nonzero");
                }
            }
            prev = a[k * n + k].clone();
        }
        let d = if n == 0 {
            F::one(&self.ctx)
        } else {
            a[n * n - 1].clone()
        };
        if sign {
            d.neg()
        } else {
            d
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                m.data.swap(r * m.cols + j, p * m.cols + j);
            }
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j).sub(&f.mul(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of {v : M v = 0}.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(&self.ctx); self.cols];
                v[f] = F::one(&self.ctx);
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = r.get(row, f).neg();
                }
                v
            })
            .collect()
    }

    /// Basis of {w : wᵀ M = 0}.
    pub fn left_kernel(&self) -> Vec<Vec<F>> {
        self.transpose().kernel()
    }

    /// Unique solution of M x = b for square invertible M.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        if self.rows != self.cols || b.len() != self.rows {
            return None;
        }
        let n = self.rows;
        let aug = Mat::from_fn(&self.ctx, n, n + 1, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().any(|&c| c >= n) {
            return None;
        }
        Some((0..n).map(|i| r.get(i, n).clone()).collect())
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Mat<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<R: Ring> fmt::Debug for Mat<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Mat")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &self.data)
            .finish()
    }
}
