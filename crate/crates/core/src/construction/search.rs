use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{fp::is_prime, BinaryForm, FiniteField, Field, Fp, Mat, PrimeField, Ring, UPoly};

use super::generality::{check_generality_prime, GeneralityReport, SplitField};
use super::{quadric_matrix, ConstructionError, CubicParam, PairConfig};

#[derive(Clone, Debug, PartialEq)]
pub struct SearchOutcome {
    pub pair: PairConfig<Fp>,
    /// 1-based index of the accepted trial.
    pub trials: u64,
    pub report: GeneralityReport,
}

fn bilinear(s: &Mat<Fp>, a: &[Fp], b: &[Fp]) -> Fp {
    let sb = s.mul_vec(b).expect("5-vectors");
    a.iter().zip(&sb).fold(Fp::zero(s.ctx()), |acc, (x, y)| acc.add(&x.mul(y)))
}

fn combo(coeffs: &[Fp], vecs: &[Vec<Fp>]) -> Vec<Fp> {
    let ctx = coeffs[0].ctx();
    let mut out = vec![Fp::zero(&ctx); vecs[0].len()];
    for (c, v) in coeffs.iter().zip(vecs) {
        for (o, x) in out.iter_mut().zip(v) {
            *o = o.add(&c.mul(x));
        }
    }
    out
}

/// A nonzero isotropic vector in the span of `basis`, found on random
/// secant lines.
fn isotropic<R: Rng>(s: &Mat<Fp>, basis: &[Vec<Fp>], rng: &mut R) -> Option<Vec<Fp>> {
    let f = s.ctx();
    let rand_vec = |rng: &mut R| {
        let c: Vec<Fp> = basis.iter().map(|_| Fp::random(f, rng)).collect();
        combo(&c, basis)
    };
    for _ in 0..32 {
        let v = rand_vec(rng);
        let w = rand_vec(rng);
        let two = Fp::from_int(f, 2);
        let q = UPoly::new(f, vec![bilinear(s, &v, &v), two.mul(&bilinear(s, &v, &w)), bilinear(s, &w, &w)]);
        if q.is_zero() {
            continue;
        }
        if let Some(x) = q.roots(rng).into_iter().next() {
            let e: Vec<Fp> = v.iter().zip(&w).map(|(a, b)| a.add(&x.mul(b))).collect();
            if e.iter().any(|c| !c.is_zero()) {
                return Some(e);
            }
        }
    }
    None
}

/// Given isotropic e, an isotropic f in `span` with B(e, f) = 1/2.
fn partner(s: &Mat<Fp>, e: &[Fp], span: &[Vec<Fp>]) -> Option<Vec<Fp>> {
    let f = s.ctx();
    let v = span.iter().find(|v| !bilinear(s, e, v).is_zero())?;
    let scale = Fp::from_int(f, 2).mul(&bilinear(s, e, v)).inv()?;
    let v: Vec<Fp> = v.iter().map(|x| x.mul(&scale)).collect();
    let q = bilinear(s, &v, &v);
    Some(v.iter().zip(e).map(|(a, b)| a.sub(&q.mul(b))).collect())
}

/// A twisted cubic of class (1,2) on the section of the quadric by a random
/// hyperplane, or `None` when that section is singular or not split.
pub fn random_cubic<R: Rng>(field: &PrimeField, s: &Mat<Fp>, rng: &mut R) -> Option<CubicParam<Fp>> {
    let h: Vec<Fp> = (0..5).map(|_| Fp::random(field, rng)).collect();
    if h.iter().all(Ring::is_zero) {
        return None;
    }
    let hyper = Mat::from_rows(field, vec![h.clone()]).kernel();
    let e1 = isotropic(s, &hyper, rng)?;
    let f1 = partner(s, &e1, &hyper)?;
    let se = s.mul_vec(&e1).ok()?;
    let sf = s.mul_vec(&f1).ok()?;
    let rest = Mat::from_rows(field, vec![h, se, sf]).kernel();
    if rest.len() != 2 {
        return None;
    }
    let two = Fp::from_int(field, 2);
    let q = BinaryForm::new(
        field,
        vec![
            bilinear(s, &rest[0], &rest[0]),
            two.mul(&bilinear(s, &rest[0], &rest[1])),
            bilinear(s, &rest[1], &rest[1]),
        ],
    );
    // the section is split exactly when the complement has isotropic lines
    let dirs = Fp::split_roots(&q)?;
    let e2 = combo(&dirs[0], &rest);
    let g = combo(&dirs[1], &rest);
    let f2 = partner(s, &e2, &[g])?;
    // x = y0 e1 + y1 f1 + y2 e2 − y3 f2 has Q = y0 y1 − y2 y3
    let neg_f2: Vec<Fp> = f2.iter().map(Ring::neg).collect();
    let frame = [e1, f1, e2, neg_f2];

    let quad = |rng: &mut R| BinaryForm::new(field, (0..3).map(|_| Fp::random(field, rng)).collect());
    let a = quad(rng);
    let b = quad(rng);
    if a.resultant(&b).is_zero() {
        return None;
    }
    let u = BinaryForm::from_ints(field, &[1, 0]);
    let v = BinaryForm::from_ints(field, &[0, 1]);
    let na = a.scale(&Fp::from_int(field, -1));
    let y = [b.mul(&u), na.mul(&v), b.mul(&v), na.mul(&u)];
    let coords: Vec<BinaryForm<Fp>> = (0..5)
        .map(|i| {
            y.iter()
                .zip(&frame)
                .fold(BinaryForm::new(field, vec![Fp::zero(field); 4]), |acc, (yk, fk)| {
                    acc.add(&yk.scale(&fk[i]))
                })
        })
        .collect();
    let g = CubicParam::new(coords).ok()?;
    debug_assert!(g.quadric_sextic(s).is_zero());
    (g.coefficient_matrix().rank() == 4).then_some(g)
}

/// Rejection sampling of pairs over F_p until every condition passes.
/// Trial i draws from the ChaCha stream (seed, i).
pub fn random_general_pair(p: u64, seed: u64, budget: u64) -> Result<SearchOutcome, ConstructionError> {
    if !is_prime(p) {
        return Err(ConstructionError::NotPrime(p));
    }
    if p < 11 {
        return Err(ConstructionError::PrimeTooSmall(p));
    }
    let field = PrimeField::new(p)?;
    let s = quadric_matrix::<Fp>(&field)?;
    for trial in 0..budget {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        let Some(g1) = random_cubic(&field, &s, &mut rng) else { continue };
        let Some(g2) = random_cubic(&field, &s, &mut rng) else { continue };
        let Ok(pair) = PairConfig::new(g1, g2) else { continue };
        let report = check_generality_prime(&pair)?;
        if report.passed() {
            return Ok(SearchOutcome {
                pair,
                trials: trial + 1,
                report,
            });
        }
    }
    Err(ConstructionError::BudgetExhausted(budget))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn search_is_reproducible() {
        let a = random_general_pair(101, 7, 200).unwrap();
        let b = random_general_pair(101, 7, 200).unwrap();
        assert_eq!(a, b);
        assert!(a.report.passed());
    }

    #[test]
    fn search_errors() {
        assert_eq!(random_general_pair(101, 1, 0), Err(ConstructionError::BudgetExhausted(0)));
        assert_eq!(random_general_pair(7, 1, 10), Err(ConstructionError::PrimeTooSmall(7)));
        assert_eq!(random_general_pair(100, 1, 10), Err(ConstructionError::NotPrime(100)));
    }

    #[test]
    fn sampled_cubics_lie_on_quadric() {
        let field = PrimeField::new(31).unwrap();
        let s = quadric_matrix::<Fp>(&field).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut found = 0;
        for _ in 0..50 {
            if let Some(g) = random_cubic(&field, &s, &mut rng) {
                assert!(g.quadric_sextic(&s).is_zero());
                assert_eq!(g.coefficient_matrix().rank(), 4);
                found += 1;
            }
        }
        assert!(found > 5);
    }
}
