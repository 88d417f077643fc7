//! Exact feasibility of A x = b, x ≥ 0, by the two-phase simplex method's
//! first phase with least-index pivoting.

use crate::exact::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    /// x ≥ 0 with A x = b.
    Feasible(Vec<Rat>),
    /// z with zᵀA ≥ 0 componentwise and z·b < 0.
    Infeasible(Vec<Rat>),
}

/// `a` is given by rows (m rows, n columns).
pub fn feasible(a: &[Vec<Rat>], b: &[Rat]) -> Feasibility {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    assert_eq!(b.len(), m, "right-hand side length");
    // tableau columns: n originals, m artificials, then the rhs
    let width = n + m + 1;
    let mut sign = vec![Rat::one(); m];
    let mut t: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            let mut row = vec![Rat::zero(); width];
            let flip = b[i].is_negative();
            if flip {
                sign[i] = Rat::int(-1);
            }
            for j in 0..n {
                row[j] = if flip { -&a[i][j] } else { a[i][j].clone() };
            }
            row[n + i] = Rat::one();
            row[width - 1] = b[i].abs();
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();
    let cost = |j: usize| if j >= n && j < n + m { Rat::one() } else { Rat::zero() };

    loop {
        // reduced cost r_j = c_j − Σ c_B(i) t[i][j]
        let reduced = |j: usize, t: &Vec<Vec<Rat>>, basis: &[usize]| {
            let mut r = cost(j);
            for (i, &bi) in basis.iter().enumerate() {
                if bi >= n {
                    r = &r - &t[i][j];
                }
            }
            r
        };
        let entering = (0..n + m).find(|&j| !basis.contains(&j) && reduced(j, &t, &basis).is_negative());
        let Some(e) = entering else { break };
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..m {
            if t[i][e].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][e];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // phase one is bounded below by zero, so a ratio always exists
        let (r, _) = leave.expect("phase one is bounded");
        let piv = t[r][e].clone();
        for v in t[r].iter_mut() {
            *v = &*v / &piv;
        }
        let prow = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[e].is_zero() {
                let f = row[e].clone();
                for (v, p) in row.iter_mut().zip(&prow) {
                    *v = &*v - &(&f * p);
                }
            }
        }
        basis[r] = e;
    }

    let objective: Rat = basis
        .iter()
        .enumerate()
        .filter(|&(_, &bi)| bi >= n)
        .map(|(i, _)| t[i][width - 1].clone())
        .sum();
    if objective.is_zero() {
        let mut x = vec![Rat::zero(); n];
        for (i, &bi) in basis.iter().enumerate() {
            if bi < n {
                x[bi] = t[i][width - 1].clone();
            }
        }
        return Feasibility::Feasible(x);
    }
    // duals y' = c_Bᵀ B⁻¹ from the artificial columns; undo the row flips
    let z: Vec<Rat> = (0..m)
        .map(|k| {
            let mut y = Rat::zero();
            for (i, &bi) in basis.iter().enumerate() {
                if bi >= n {
                    y = &y + &t[i][n + k];
                }
            }
            -(&y * &sign[k])
        })
        .collect();
    Feasibility::Infeasible(z)
}
