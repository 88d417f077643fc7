//! Picard lattices of rational surfaces: blow-ups, (−1)-curves and the
//! polarization of a contraction to P².

use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::claim::{list, Claim};
use crate::exact::{Mat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("class has {got} coordinates, lattice rank is {rank}")]
    Dimension { rank: usize, got: usize },
    #[error("the zero class is not a curve")]
    ZeroClass,
    #[error("gram matrix must be square and symmetric, with one row per basis label")]
    BadGram,
    #[error("contracted class {0} is not a (-1)-curve")]
    NotMinusOne(usize),
    #[error("contracted classes {0} and {1} meet negatively")]
    NegativeMeeting(usize, usize),
    #[error("rank {rank} minus {contracted} contracted classes is not 1")]
    RankMismatch { rank: usize, contracted: usize },
    #[error("the orthogonal complement is not spanned by an integral class of square 1")]
    NonIntegral,
    #[error("the orthogonal generator has square {0}; the target is not P^2")]
    NotPlane(i64),
    #[error("K·h = {0}, expected ±3")]
    WrongCanonical(i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatClass(pub Vec<i64>);

impl LatClass {
    pub fn add(&self, o: &LatClass) -> LatClass {
        LatClass(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> LatClass {
        LatClass(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for LatClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&list(&self.0))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub basis: Vec<String>,
    pub gram: Vec<Vec<i64>>,
    pub canonical: LatClass,
}

impl Lattice {
    pub fn new(basis: Vec<String>, gram: Vec<Vec<i64>>, canonical: LatClass) -> Result<Self, LatticeError> {
        let n = basis.len();
        let square = gram.len() == n && gram.iter().all(|r| r.len() == n);
        if !square || (0..n).any(|i| (0..n).any(|j| gram[i][j] != gram[j][i])) {
            return Err(LatticeError::BadGram);
        }
        if canonical.0.len() != n {
            return Err(LatticeError::Dimension {
                rank: n,
                got: canonical.0.len(),
            });
        }
        Ok(Lattice {
            basis,
            gram,
            canonical,
        })
    }

    pub fn projective_plane() -> Self {
        Lattice::new(vec!["h".into()], vec![vec![1]], LatClass(vec![-3])).expect("valid")
    }

    pub fn p1_times_p1() -> Self {
        Lattice::new(
            vec!["l1".into(), "l2".into()],
            vec![vec![0, 1], vec![1, 0]],
            LatClass(vec![-2, -2]),
        )
        .expect("valid")
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Class with coordinates given by label, e.g. `[("l1", 1), ("e2", -1)]`.
    pub fn class(&self, parts: &[(&str, i64)]) -> LatClass {
        let mut v = vec![0; self.rank()];
        for (label, k) in parts {
            let i = self
                .basis
                .iter()
                .position(|b| b == label)
                .unwrap_or_else(|| panic!("unknown basis label {label}"));
            v[i] += k;
        }
        LatClass(v)
    }

    fn check(&self, c: &LatClass) -> Result<(), LatticeError> {
        if c.0.len() != self.rank() {
            return Err(LatticeError::Dimension {
                rank: self.rank(),
                got: c.0.len(),
            });
        }
        Ok(())
    }

    pub fn dot(&self, a: &LatClass, b: &LatClass) -> Result<i64, LatticeError> {
        self.check(a)?;
        self.check(b)?;
        Ok((0..self.rank())
            .map(|i| (0..self.rank()).map(|j| a.0[i] * self.gram[i][j] * b.0[j]).sum::<i64>())
            .sum())
    }

    /// Adds r exceptional classes with e² = −1, orthogonal to everything
    /// else; K gains +Σe.
    pub fn blow_up(&self, r: usize) -> Lattice {
        let n = self.rank();
        let existing = self.basis.iter().filter(|b| b.starts_with('e')).count();
        let mut basis = self.basis.clone();
        basis.extend((1..=r).map(|i| format!("e{}", existing + i)));
        let mut gram: Vec<Vec<i64>> = self
            .gram
            .iter()
            .map(|row| row.iter().copied().chain(std::iter::repeat_n(0, r)).collect())
            .collect();
        for i in 0..r {
            let mut row = vec![0; n + r];
            row[n + i] = -1;
            gram.push(row);
        }
        let mut k = self.canonical.0.clone();
        k.extend(std::iter::repeat_n(1, r));
        Lattice {
            basis,
            gram,
            canonical: LatClass(k),
        }
    }

    /// (positive, negative, zero) counts of the Gram form, by symmetric
    /// elimination over the rationals.
    pub fn signature(&self) -> (usize, usize, usize) {
        let n = self.rank();
        let mut a: Vec<Vec<Rat>> = self
            .gram
            .iter()
            .map(|r| r.iter().map(|&v| Rat::int(v)).collect())
            .collect();
        let (mut pos, mut neg) = (0, 0);
        let mut alive: Vec<usize> = (0..n).collect();
        while !alive.is_empty() {
            // a nonzero diagonal entry, or make one from an off-diagonal pair
            let pivot = alive.iter().copied().find(|&i| !a[i][i].is_zero());
            let p = match pivot {
                Some(p) => p,
                None => {
                    let pair = alive.iter().copied().find_map(|i| {
                        alive.iter().copied().find(|&j| j != i && !a[i][j].is_zero()).map(|j| (i, j))
                    });
                    let Some((i, j)) = pair else { break };
                    // e_i ← e_i + e_j gives a_ii = 2 a_ij ≠ 0
                    for k in 0..n {
                        let v = &a[i][k] + &a[j][k];
                        a[i][k] = v;
                    }
                    for k in 0..n {
                        let v = &a[k][i] + &a[k][j];
                        a[k][i] = v;
                    }
                    i
                }
            };
            let d = a[p][p].clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for &i in alive.iter().filter(|&&i| i != p) {
                let f = &a[i][p] / &d;
                for k in 0..n {
                    let v = &a[i][k] - &(&f * &a[p][k]);
                    a[i][k] = v;
                }
                for k in 0..n {
                    let v = &a[k][i] - &(&f * &a[k][p]);
                    a[k][i] = v;
                }
            }
            alive.retain(|&i| i != p);
        }
        (pos, neg, n - pos - neg)
    }

    pub fn is_minus_one_curve(&self, c: &LatClass) -> Result<bool, LatticeError> {
        self.check(c)?;
        if c.is_zero() {
            return Err(LatticeError::ZeroClass);
        }
        Ok(self.dot(c, c)? == -1 && self.dot(&self.canonical, c)? == -1)
    }

    /// The class h pulled back from P² after contracting the given curves:
    /// h·c = 0 for each, h² = 1, K·h = −3.
    pub fn contraction_polarization(&self, contracted: &[LatClass]) -> Result<LatClass, LatticeError> {
        for (i, c) in contracted.iter().enumerate() {
            if !self.is_minus_one_curve(c)? {
                return Err(LatticeError::NotMinusOne(i));
            }
        }
        for i in 0..contracted.len() {
            for j in i + 1..contracted.len() {
                if self.dot(&contracted[i], &contracted[j])? < 0 {
                    return Err(LatticeError::NegativeMeeting(i, j));
                }
            }
        }
        if self.rank() != contracted.len() + 1 {
            return Err(LatticeError::RankMismatch {
                rank: self.rank(),
                contracted: contracted.len(),
            });
        }
        let n = self.rank();
        let rows: Vec<Vec<Rat>> = contracted
            .iter()
            .map(|c| {
                (0..n)
                    .map(|j| Rat::int((0..n).map(|i| c.0[i] * self.gram[i][j]).sum()))
                    .collect()
            })
            .collect();
        let kernel = Mat::from_rows(&(), rows).kernel();
        let [v] = kernel.as_slice() else {
            return Err(LatticeError::RankMismatch {
                rank: n,
                contracted: contracted.len(),
            });
        };
        let v = primitive(v).ok_or(LatticeError::NonIntegral)?;
        let sq = self.dot(&v, &v)?;
        if sq <= 0 {
            return Err(LatticeError::NotPlane(sq));
        }
        let m = (sq as f64).sqrt().round() as i64;
        if m * m != sq {
            return Err(LatticeError::NotPlane(sq));
        }
        if m != 1 {
            return Err(LatticeError::NonIntegral);
        }
        let kh = self.dot(&self.canonical, &v)?;
        let h = match kh {
            -3 => v,
            3 => v.scale(-1),
            other => return Err(LatticeError::WrongCanonical(other)),
        };
        debug_assert_eq!(self.dot(&h, &h)?, 1);
        debug_assert!(contracted.iter().all(|c| self.dot(&h, c) == Ok(0)));
        Ok(h)
    }

    pub fn pushforward(&self, c: &LatClass, h: &LatClass, contracted: &[LatClass]) -> Result<Pushforward, LatticeError> {
        Ok(Pushforward {
            degree: self.dot(c, h)?,
            multiplicities: contracted
                .iter()
                .map(|e| self.dot(c, e))
                .collect::<Result<_, _>>()?,
        })
    }

    /// Nonnegative-integer coefficients x with Σ x_i c_i = target, when the
    /// classes are independent and such x exists.
    pub fn coefficients_in(&self, target: &LatClass, classes: &[LatClass]) -> Result<Option<Vec<i64>>, LatticeError> {
        self.check(target)?;
        let n = self.rank();
        let k = classes.len();
        let m = Mat::from_fn(&(), n, k + 1, |i, j| {
            if j < k {
                Rat::int(classes[j].0[i])
            } else {
                Rat::int(target.0[i])
            }
        });
        let (r, pivots) = m.rref();
        if pivots.len() != k || pivots.contains(&k) {
            return Ok(None);
        }
        let x: Option<Vec<i64>> = (0..k).map(|i| r.get(i, k).to_i64()).collect();
        Ok(x.filter(|x| x.iter().all(|&v| v >= 0)))
    }
}

fn primitive(v: &[Rat]) -> Option<LatClass> {
    let lcm = v.iter().fold(num_bigint::BigInt::from(1), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<num_bigint::BigInt> = v.iter().map(|r| (r * &Rat::from(lcm.clone())).numer().clone()).collect();
    let g = ints.iter().fold(num_bigint::BigInt::from(0), |acc, x| acc.gcd(x));
    if g == num_bigint::BigInt::from(0) {
        return None;
    }
    ints.iter().map(|x| (x / &g).to_i64()).collect::<Option<Vec<_>>>().map(LatClass)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pushforward {
    pub degree: i64,
    pub multiplicities: Vec<i64>,
}

/// Bl₃(P¹×P¹) with the curve l1 + 2 l2, the four contracted classes
/// l1 − e_i and l1 + l2 − Σe, and the resulting P² polarization.
pub struct SurfaceModel {
    pub lattice: Lattice,
    pub curve: LatClass,
    pub contracted: Vec<LatClass>,
}

impl SurfaceModel {
    pub fn standard() -> Self {
        let lattice = Lattice::p1_times_p1().blow_up(3);
        let curve = lattice.class(&[("l1", 1), ("l2", 2)]);
        let mut contracted: Vec<LatClass> = (1..=3)
            .map(|i| {
                let e = format!("e{i}");
                lattice.class(&[("l1", 1), (e.as_str(), -1)])
            })
            .collect();
        contracted.push(lattice.class(&[("l1", 1), ("l2", 1), ("e1", -1), ("e2", -1), ("e3", -1)]));
        SurfaceModel {
            lattice,
            curve,
            contracted,
        }
    }
}

/// The plane claims for the strict transform of the first quadric surface.
pub fn verify_surface_claims() -> Vec<Claim> {
    let s = SurfaceModel::standard();
    let l = &s.lattice;
    let mut out = Vec::new();
    let h = match l.contraction_polarization(&s.contracted) {
        Ok(h) => h,
        Err(e) => {
            out.push(Claim::new("surface.polarization", "polarization of the contraction to P^2", "[2, 1, -1, -1, -1]", format!("error: {e}")));
            return out;
        }
    };
    out.push(Claim::new(
        "surface.polarization",
        "class of a line after contracting the three rulings and the conic",
        "[2, 1, -1, -1, -1]",
        &h,
    ));
    let push = |c: &LatClass| l.pushforward(c, &h, &s.contracted).expect("dimensions agree");
    let gamma = push(&s.curve);
    out.push(Claim::new("surface.curve_degree", "degree of the image of the curve l1+2l2", 5, gamma.degree));
    out.push(Claim::new(
        "surface.curve_singularities",
        "multiplicities of the image curve at the four contracted points",
        "[2, 2, 2, 3]",
        list(&gamma.multiplicities),
    ));
    let hyper = push(&l.class(&[("l1", 1), ("l2", 1)])).degree;
    out.push(Claim::new("surface.hyperplane_degree", "degree of the hyperplane class l1+l2 on P^2", 3, hyper));
    let exc = push(&l.class(&[("e1", 1), ("e2", 1), ("e3", 1)])).degree;
    out.push(Claim::new("surface.exceptional_degree", "degree of e1+e2+e3 on P^2", 3, exc));
    let k3h = l.canonical.add(&h.scale(3));
    let coeffs = l
        .coefficients_in(&k3h, &s.contracted)
        .expect("dimensions agree")
        .map(|c| list(&c))
        .unwrap_or_else(|| "not a nonnegative combination".into());
    out.push(Claim::new(
        "surface.canonical_discrepancy",
        "K + 3h as a combination of the contracted classes",
        "[1, 1, 1, 1]",
        coeffs,
    ));
    // (8H − 3E1 − 3E2) restricted, with E1 ↦ image curve and E2 ↦ e1+e2+e3
    let chain = 8 * hyper - 3 * gamma.degree - 3 * exc;
    out.push(Claim::new(
        "surface.anticanonical_restriction",
        "degree of (8H - 3E1 - 3E2) on the plane: 8*3 - 3*5 - 3*3",
        0,
        chain,
    ));
    // K_{P²} = (−2H + E1 − F2 + F1)|: −3 = −2·3 + 5 − 0 + F1|F1
    let k_plane = Lattice::projective_plane().canonical.0[0];
    let self_restriction = k_plane - (-2 * hyper + gamma.degree);
    out.push(Claim::new(
        "surface.normal_degree",
        "degree of the plane's normal class from adjunction",
        -2,
        self_restriction,
    ));
    out
}
