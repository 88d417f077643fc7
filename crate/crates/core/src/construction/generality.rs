use std::fmt;

use num_integer::Integer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exact::{BinaryForm, ExtField, Field, Fp, Gf, Mat, Rat, UPoly};

use super::{quadric_matrix, ConstructionError, CubicParam, PairConfig};

/// Fields in which we can list the projective roots of a binary form.
pub trait SplitField: Field {
    /// The distinct roots when the form is a product of distinct linear
    /// factors over this field, `None` otherwise.
    fn split_roots(f: &BinaryForm<Self>) -> Option<Vec<[Self; 2]>>;
}

fn complete<F: Field>(f: &BinaryForm<F>, roots: Vec<[F; 2]>) -> Option<Vec<[F; 2]>> {
    (!f.is_zero() && roots.len() == f.degree()).then_some(roots)
}

impl SplitField for Gf {
    fn split_roots(f: &BinaryForm<Self>) -> Option<Vec<[Self; 2]>> {
        if f.is_zero() {
            return None;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        complete(f, f.roots(&mut rng))
    }
}

impl SplitField for Fp {
    fn split_roots(f: &BinaryForm<Self>) -> Option<Vec<[Self; 2]>> {
        if f.is_zero() {
            return None;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        complete(f, f.roots(&mut rng))
    }
}

impl SplitField for Rat {
    fn split_roots(f: &BinaryForm<Self>) -> Option<Vec<[Self; 2]>> {
        if f.is_zero() {
            return None;
        }
        complete(f, f.rational_roots()?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Undetermined,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub label: &'static str,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneralityReport {
    pub conditions: Vec<Condition>,
    /// Degree of the extension of F_p the checks ran in, for prime fields.
    pub extension_degree: Option<usize>,
}

impl GeneralityReport {
    pub fn passed(&self) -> bool {
        self.conditions.iter().all(|c| c.verdict == Verdict::Pass)
    }

    pub fn verdicts(&self) -> Vec<Verdict> {
        self.conditions.iter().map(|c| c.verdict).collect()
    }

    /// "pass pass fail undetermined" style summary.
    pub fn summary(&self) -> String {
        self.verdicts().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    }
}

fn cond(label: &'static str, verdict: Verdict, detail: impl Into<String>) -> Condition {
    Condition {
        label,
        verdict,
        detail: detail.into(),
    }
}

fn bilinear<F: Field>(s: &Mat<F>, a: &[F], b: &[F]) -> F {
    let sb = s.mul_vec(b).expect("5-vectors");
    a.iter().zip(&sb).fold(F::zero(s.ctx()), |acc, (x, y)| acc.add(&x.mul(y)))
}

/// Rank of Q on the common zero set of the given linear forms.
fn restricted_rank<F: Field>(s: &Mat<F>, forms: &[&Vec<F>]) -> usize {
    let rows: Vec<Vec<F>> = forms.iter().map(|f| (*f).clone()).collect();
    let basis = Mat::from_rows(s.ctx(), rows).kernel();
    let k = basis.len();
    let b = Mat::from_fn(s.ctx(), 5, k, |i, j| basis[j][i].clone());
    b.transpose().mul(s).and_then(|m| m.mul(&b)).expect("shapes agree").rank()
}

fn proportional<F: Field>(a: &[F], b: &[F]) -> bool {
    Mat::from_rows(&a[0].ctx(), vec![a.to_vec(), b.to_vec()]).rank() <= 1
}

const LAMBDA: [i64; 10] = [3, 7, 1, 12, 5, 9, 2, 11, 4, 8];

/// Res over (u, v) of c2 and Res over (s, t) of c1 and a fixed combination
/// of the 2×2 minors of [γ₁(s,t); γ₂(u,v)]. Nonzero means the curves are
/// disjoint. `None` when the field is too small to interpolate.
fn disjointness_resultant<F: Field>(pc: &PairConfig<F>, c1: &BinaryForm<F>, c2: &BinaryForm<F>) -> Option<F> {
    let ctx = c1.ctx();
    let ch = F::characteristic(ctx);
    if ch != 0 && ch <= 10 {
        return None;
    }
    let mut pts = Vec::with_capacity(10);
    for x in 0..10 {
        let xv = F::from_int(ctx, x);
        let a = pc.gamma2.point(&[xv.clone(), F::one(ctx)]);
        let mut l = vec![F::zero(ctx); 5];
        let mut idx = 0;
        for j in 0..5 {
            for k in j + 1..5 {
                let lam = F::from_int(ctx, LAMBDA[idx]);
                idx += 1;
                l[j] = l[j].add(&lam.mul(&a[k]));
                l[k] = l[k].sub(&lam.mul(&a[j]));
            }
        }
        let m = pc.gamma1.compose_linear(&l);
        pts.push((xv, c1.resultant(&m)));
    }
    let r = UPoly::interpolate(ctx, &pts)?;
    let form = BinaryForm::new(ctx, (0..=9).map(|i| r.coeff(9 - i)).collect());
    Some(c2.resultant(&form))
}

fn disjointness<F: SplitField>(pc: &PairConfig<F>, c1: &BinaryForm<F>, c2: &BinaryForm<F>) -> (Verdict, String) {
    if let Some(r) = disjointness_resultant(pc, c1, c2) {
        if !r.is_zero() {
            return (Verdict::Pass, "curves disjoint by resultant".into());
        }
    }
    let (Some(r1), Some(r2)) = (F::split_roots(c1), F::split_roots(c2)) else {
        return (Verdict::Undetermined, "disjointness: intersection points not defined over the field".into());
    };
    for p in &r1 {
        for q in &r2 {
            if proportional(&pc.gamma1.point(p), &pc.gamma2.point(q)) {
                return (Verdict::Fail, "the cubics meet".into());
            }
        }
    }
    (Verdict::Pass, "curves disjoint by direct search".into())
}

fn squarefree<F: Field>(c: &BinaryForm<F>) -> bool {
    !c.is_zero() && c.discriminant().map(|d| !d.is_zero()).unwrap_or(false)
}

/// Through a point P of Γ_a on the hyperplane section Q_b, take the line of
/// Q_b meeting Γ_b twice and check the two meeting points are distinct.
fn secant_line_check<F: SplitField>(s: &Mat<F>, hb: &[F], p: &[F], gb: &CubicParam<F>) -> (Verdict, String) {
    let ctx = s.ctx();
    let sp = s.mul_vec(p).expect("5-vector");
    let tangent = Mat::from_rows(ctx, vec![hb.to_vec(), sp]).kernel();
    if tangent.len() != 3 {
        return (Verdict::Fail, "the hyperplane section is singular at the point".into());
    }
    let mut basis = None;
    'outer: for i in 0..3 {
        for j in i + 1..3 {
            let m = Mat::from_rows(ctx, vec![p.to_vec(), tangent[i].clone(), tangent[j].clone()]);
            if m.rank() == 3 {
                basis = Some((tangent[i].clone(), tangent[j].clone()));
                break 'outer;
            }
        }
    }
    let Some((w1, w2)) = basis else {
        return (Verdict::Fail, "degenerate tangent plane".into());
    };
    let two = F::from_int(ctx, 2);
    let cone = BinaryForm::new(
        ctx,
        vec![bilinear(s, &w1, &w1), two.mul(&bilinear(s, &w1, &w2)), bilinear(s, &w2, &w2)],
    );
    if !squarefree(&cone) {
        return (Verdict::Fail, "the tangent plane section is not two distinct lines".into());
    }
    let Some(dirs) = F::split_roots(&cone) else {
        return (Verdict::Undetermined, "lines through the point not defined over the field".into());
    };
    let mut secant = None;
    for [b, c] in dirs {
        let w: Vec<F> = w1.iter().zip(&w2).map(|(x, y)| b.mul(x).add(&c.mul(y))).collect();
        let ann = Mat::from_rows(ctx, vec![p.to_vec(), w]).kernel();
        let g = ann
            .iter()
            .map(|l| gb.compose_linear(l))
            .filter(|f| !f.is_zero())
            .reduce(|a, b| a.gcd(&b));
        if let Some(g) = g {
            if g.degree() >= 2 {
                if secant.is_some() {
                    return (Verdict::Fail, "both lines through the point meet the cubic twice".into());
                }
                secant = Some(g);
            }
        }
    }
    match secant {
        None => (Verdict::Fail, "no line through the point meets the cubic twice".into()),
        Some(g) if g.degree() > 2 => (Verdict::Fail, "a line meets the cubic three times".into()),
        Some(g) if squarefree(&g) => (Verdict::Pass, String::new()),
        Some(_) => (Verdict::Fail, "the secant line is tangent to the cubic".into()),
    }
}

fn side_check<F: SplitField>(
    s: &Mat<F>,
    c: &BinaryForm<F>,
    ga: &CubicParam<F>,
    hb: &[F],
    gb: &CubicParam<F>,
) -> (Verdict, String) {
    let Some(roots) = F::split_roots(c) else {
        return (Verdict::Undetermined, "intersection points not defined over the field".into());
    };
    let mut worst = (Verdict::Pass, String::new());
    for r in roots {
        let v = secant_line_check(s, hb, &ga.point(&r), gb);
        match v.0 {
            Verdict::Fail => return v,
            Verdict::Undetermined => worst = v,
            Verdict::Pass => {}
        }
    }
    worst
}

/// Conditions (i)–(iv) over the field of the pair. Undetermined verdicts
/// arise only when the needed points are not defined over that field.
pub fn check_generality<F: SplitField>(pc: &PairConfig<F>) -> Result<GeneralityReport, ConstructionError> {
    let ctx = pc.gamma1.ctx().clone();
    let s = quadric_matrix::<F>(&ctx)?;
    let mut conditions = Vec::with_capacity(4);

    let r1 = restricted_rank(&s, &[&pc.h1]);
    let r2 = restricted_rank(&s, &[&pc.h2]);
    let v = if r1 == 4 && r2 == 4 { Verdict::Pass } else { Verdict::Fail };
    conditions.push(cond("i", v, format!("ranks on the hyperplanes: {r1}, {r2}")));

    if proportional(&pc.h1, &pc.h2) {
        conditions.push(cond("ii", Verdict::Fail, "the two hyperplanes coincide"));
    } else {
        let r = restricted_rank(&s, &[&pc.h1, &pc.h2]);
        let v = if r == 3 { Verdict::Pass } else { Verdict::Fail };
        conditions.push(cond("ii", v, format!("rank on the intersection: {r}")));
    }

    let c1 = pc.gamma1.compose_linear(&pc.h2);
    let c2 = pc.gamma2.compose_linear(&pc.h1);
    let transverse = squarefree(&c1) && squarefree(&c2);
    if !transverse {
        conditions.push(cond("iii", Verdict::Fail, "a cubic does not meet the other hyperplane in three distinct points"));
        conditions.push(cond("iv", Verdict::Fail, "needs three distinct points from (iii)"));
        return Ok(GeneralityReport {
            conditions,
            extension_degree: None,
        });
    }
    let (v, detail) = disjointness(pc, &c1, &c2);
    conditions.push(cond("iii", v, detail));

    let a = side_check(&s, &c1, &pc.gamma1, &pc.h2, &pc.gamma2);
    let b = side_check(&s, &c2, &pc.gamma2, &pc.h1, &pc.gamma1);
    let (v, detail) = match (a, b) {
        ((Verdict::Fail, d), _) => (Verdict::Fail, format!("lines L: {d}")),
        (_, (Verdict::Fail, d)) => (Verdict::Fail, format!("lines R: {d}")),
        ((Verdict::Undetermined, d), _) | (_, (Verdict::Undetermined, d)) => (Verdict::Undetermined, d),
        _ => (Verdict::Pass, "no secant line is tangent".into()),
    };
    conditions.push(cond("iv", v, detail));
    Ok(GeneralityReport {
        conditions,
        extension_degree: None,
    })
}

/// Degree of the splitting field over F_p of a squarefree cubic.
fn splitting_degree(c: &BinaryForm<Fp>) -> usize {
    if !squarefree(c) {
        return 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    match c.roots(&mut rng).len() {
        3 => 1,
        1 => 2,
        _ => 3,
    }
}

/// The checks for a pair over F_p, run in the extension where the
/// intersection points of (iii) are all defined.
pub fn check_generality_prime(pc: &PairConfig<Fp>) -> Result<GeneralityReport, ConstructionError> {
    let p = pc.gamma1.ctx().modulus();
    let k1 = splitting_degree(&pc.gamma1.compose_linear(&pc.h2));
    let k2 = splitting_degree(&pc.gamma2.compose_linear(&pc.h1));
    let k = k1.lcm(&k2);
    let ext = ExtField::new(p, k)?;
    let lifted = pc.map(&ext, |x| ext.embed(x));
    let mut report = check_generality(&lifted)?;
    report.extension_degree = Some(k);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::standard_cubic;

    #[test]
    fn identical_curves_fail_second_condition() {
        let g = standard_cubic();
        let pc = PairConfig::new(g.clone(), g).unwrap();
        let r = check_generality(&pc).unwrap();
        assert_eq!(r.conditions[1].verdict, Verdict::Fail);
        assert!(!r.passed());
    }

    #[test]
    fn rational_roots_split() {
        let f = BinaryForm::<Rat>::from_ints(&(), &[1, 0, -1]);
        assert_eq!(Rat::split_roots(&f).unwrap().len(), 2);
        let g = BinaryForm::<Rat>::from_ints(&(), &[1, 0, -2]);
        assert!(Rat::split_roots(&g).is_none());
        let h = BinaryForm::<Rat>::from_ints(&(), &[0, 1, 0]);
        assert_eq!(Rat::split_roots(&h).unwrap().len(), 2);
    }
}
