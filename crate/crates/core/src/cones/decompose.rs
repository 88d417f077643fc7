//! Effective and curve cones of the two-curve blow-up, with the explicit
//! nonnegative decompositions coming from the case analysis of curves and
//! divisors.

use crate::chow::classes::{c_tilde, e, fibre, flop_l, flop_r, h_div, q_tilde, section};
use crate::chow::{BlowupModel, ChowError, Cur, Div};
use crate::claim::{list, Claim};
use crate::exact::Rat;

use super::{Cone, ConeError, Membership, Witness};

/// Curve classes h₁, h₂, f₁, f₂, h−2f₁−f₂, h−f₁−2f₂.
pub fn ne_generators() -> Vec<Cur> {
    vec![section(1), section(2), fibre(1), fibre(2), flop_l(), flop_r()]
}

pub const NE_NAMES: [&str; 6] = ["h1", "h2", "f1", "f2", "h-2f1-f2", "h-f1-2f2"];

/// Divisor classes E₁, E₂, H−E₁, H−E₂.
pub fn eff_generators() -> Vec<Div> {
    vec![e(1), e(2), q_tilde(1), q_tilde(2)]
}

pub fn ne_cone() -> Cone {
    Cone::new(3, ne_generators().into_iter().map(|c| c.0).collect()).expect("valid generators")
}

pub fn eff_cone() -> Cone {
    Cone::new(3, eff_generators().into_iter().map(|d| d.0).collect()).expect("valid generators")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NefReport {
    pub nef: bool,
    pub pairings: Vec<Rat>,
}

/// D is nef on the cone when it pairs nonnegatively with every generator.
pub fn is_nef(m: &BlowupModel, d: &Div, curves: &Cone) -> Result<NefReport, ChowError> {
    let pairings = curves
        .generators()
        .iter()
        .map(|g| m.pair(d, &Cur(g.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(NefReport {
        nef: pairings.iter().all(|p| !p.is_negative()),
        pairings,
    })
}

fn integral(v: &[Rat]) -> Result<Vec<i64>, ConeError> {
    v.iter()
        .map(|x| x.to_i64())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| ConeError::OutsideCases("class must have integer coordinates".into()))
}

fn witness(c: [i64; 6]) -> Witness {
    Witness {
        coefficients: c.iter().map(|&x| Rat::int(x)).collect(),
    }
}

/// Nonnegative coefficients over [`ne_generators`] for the class
/// d·h − m₁f₁ − m₂f₂ of an irreducible curve.
pub fn mori_decompose(c: &Cur) -> Result<Witness, ConeError> {
    if c.0.len() != 3 {
        return Err(ConeError::Dimension {
            expected: 3,
            got: c.0.len(),
        });
    }
    let v = integral(&c.0)?;
    let (d, m1, m2) = (v[0], -v[1], -v[2]);
    if d < 0 {
        return Err(ConeError::OutsideCases(format!("negative degree {d}")));
    }
    let w = if m1 < 0 || m2 < 0 {
        // a curve inside E_i: a·h_i + b·f_i with the other fibre absent
        let (i, mi, mj) = if m1 < 0 { (0, m1, m2) } else { (1, m2, m1) };
        if mj != 0 || d % 3 != 0 || -mi - 4 * (d / 3) < 0 {
            return Err(ConeError::OutsideCases(format!("class [{d}, {}, {}] fits no case", -m1, -m2)));
        }
        let a = d / 3;
        let b = -mi - 4 * a;
        let mut w = [0; 6];
        w[i] = a;
        w[2 + i] = b;
        witness(w)
    } else if m1 > d || m2 > d {
        // in a quadric: α L + β R plus fibres, α ≥ m₁ − d, β ≥ m₂ − d
        let alpha = (m1 - d).max(0);
        let beta = d - alpha;
        if beta < (m2 - d).max(0) {
            return Err(ConeError::OutsideCases(format!(
                "class [{d}, {}, {}] is not a ruling combination",
                -m1, -m2
            )));
        }
        witness([0, 0, 2 * alpha + beta - m1, alpha + 2 * beta - m2, alpha, beta])
    } else if m1 >= m2 {
        // (d−m₁)h + (m₁−m₂)(h−f₁) + m₂(h−f₁−f₂), then
        // h = L + 2f₁ + f₂, h−f₁ = L + f₁ + f₂, h−f₁−f₂ = L + f₁
        witness([0, 0, 2 * d - m1, d - m2, d, 0])
    } else {
        witness([0, 0, d - m1, 2 * d - m2, 0, d])
    };
    let cone = ne_cone();
    assert_eq!(cone.recombine(&w), c.0, "decomposition must recombine");
    assert!(w.coefficients.iter().all(|x| !x.is_negative()));
    Ok(w)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EffDecomposition {
    /// Coefficients over [`eff_generators`].
    pub witness: Witness,
    /// (i, k): k copies of H − E_i split off because D is negative on the
    /// lines of class h − 2f_i that cover that quadric.
    pub peeled: Vec<(usize, Rat)>,
}

/// Nonnegative coefficients over [`eff_generators`] for d·H − m₁E₁ − m₂E₂.
pub fn eff_decompose(dv: &Div) -> Result<EffDecomposition, ConeError> {
    if dv.0.len() != 3 {
        return Err(ConeError::Dimension {
            expected: 3,
            got: dv.0.len(),
        });
    }
    let mut d = dv.0[0].clone();
    let mut m = [-&dv.0[1], -&dv.0[2]];
    if d.is_negative() {
        return Err(ConeError::OutsideCases(format!("negative degree {d}")));
    }
    let mut peeled = Vec::new();
    let mut q = [Rat::zero(), Rat::zero()];
    while let Some(i) = (0..2).find(|&i| (&d - &(&m[i] * &Rat::int(2))).is_negative()) {
        let k = &(&m[i] * &Rat::int(2)) - &d;
        d = &d - &k;
        m[i] = &m[i] - &k;
        q[i] = &q[i] + &k;
        peeled.push((i + 1, k));
        if d.is_negative() {
            return Err(ConeError::OutsideCases("peeling quadrics leaves a negative degree".into()));
        }
    }
    if m.iter().any(Rat::is_negative) {
        return Err(ConeError::OutsideCases("negative multiplicity along a curve".into()));
    }
    // odd degrees go through 2D and are halved; the coefficients are the same
    let two = Rat::int(2);
    let (dd, m1, m2) = if d.is_integer() && (&d / &two).is_integer() {
        (d.clone(), m[0].clone(), m[1].clone())
    } else {
        (&d * &two, &m[0] * &two, &m[1] * &two)
    };
    let scale = if dd == d { Rat::one() } else { Rat::new(1, 2) };
    let c = [
        &(&(&dd - &m1) - &m2) * &scale,
        Rat::zero(),
        &(&(&dd - &m2) * &scale) + &q[0],
        &(&m2 * &scale) + &q[1],
    ];
    let witness = Witness {
        coefficients: c.to_vec(),
    };
    assert_eq!(eff_cone().recombine(&witness), dv.0, "decomposition must recombine");
    assert!(witness.coefficients.iter().all(|x| !x.is_negative()));
    Ok(EffDecomposition { witness, peeled })
}

fn name_rays(rays: &[Vec<Rat>]) -> String {
    let gens = ne_generators();
    let names: Vec<&str> = rays
        .iter()
        .map(|r| {
            gens.iter()
                .position(|g| &g.0 == r)
                .map_or("?", |i| NE_NAMES[i])
        })
        .collect();
    list(&names)
}

pub fn verify_cone_claims(m: &BlowupModel) -> Vec<Claim> {
    let mut out = Vec::new();
    let ne = ne_cone();
    out.push(
        Claim::new(
            "cones.ne_extremal",
            "extremal rays among the six curve-cone generators",
            "[f1, f2, h-2f1-f2, h-f1-2f2]",
            name_rays(&ne.extremal_rays()),
        )
        .with_note("h1 and h2 lie in the cone of the other four"),
    );
    let nef = |d: &Div| match is_nef(m, d, &ne) {
        Ok(r) => format!("{} {}", if r.nef { "nef" } else { "not nef" }, list(&r.pairings)),
        Err(e) => format!("error: {e}"),
    };
    out.push(Claim::new(
        "cones.anticanonical_nef",
        "-K_W against the six curve-cone generators",
        "nef [5, 5, 1, 1, 0, 0]",
        nef(&m.anticanonical()),
    ));
    out.push(Claim::new("cones.hyperplane_nef", "H against the curve-cone generators", "nef [3, 3, 0, 0, 1, 1]", nef(&h_div())));
    out.push(Claim::new(
        "cones.d_not_nef",
        "8H - 3E1 - 3E2 against the curve-cone generators",
        "not nef [12, 12, 3, 3, -1, -1]",
        nef(&crate::chow::classes::d_main()),
    ));
    let four = Cone::new(3, vec![fibre(1).0, fibre(2).0, flop_l().0, flop_r().0]).expect("valid");
    let sec = match four.member(&section(1).0) {
        Ok(Membership::Inside(w)) => format!("inside {}", list(&w.coefficients)),
        Ok(Membership::Outside(_)) => "outside".into(),
        Err(e) => format!("error: {e}"),
    };
    out.push(Claim::new(
        "cones.section_member",
        "3h - 4f1 in the cone of f1, f2, h-2f1-f2, h-f1-2f2",
        "inside [2, 3, 3, 0]",
        sec,
    ));
    let show = |w: Result<Witness, ConeError>| match w {
        Ok(w) => list(&w.coefficients),
        Err(e) => format!("error: {e}"),
    };
    out.push(Claim::new(
        "cones.c_tilde_mori",
        "decomposition of 2h - 3f1 - 3f2 over the curve-cone generators",
        "[0, 0, 0, 0, 1, 1]",
        show(mori_decompose(&c_tilde())),
    ));
    out.push(Claim::new(
        "cones.line_mori",
        "decomposition of h over the curve-cone generators",
        "[0, 0, 2, 1, 1, 0]",
        show(mori_decompose(&crate::chow::classes::line())),
    ));
    let eff = |d: &Div| show(eff_decompose(d).map(|r| r.witness));
    out.push(Claim::new("cones.eff_hyperplane", "H over E1, E2, H-E1, H-E2", "[1, 0, 1, 0]", eff(&h_div())));
    out.push(Claim::new(
        "cones.eff_anticanonical",
        "3H - E1 - E2 over E1, E2, H-E1, H-E2",
        "[1, 0, 2, 1]",
        eff(&m.anticanonical()),
    ));
    out.push(Claim::new(
        "cones.eff_extremal",
        "number of extremal rays of the effective cone",
        4,
        eff_cone().extremal_rays().len(),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_claims_pass() {
        for c in verify_cone_claims(&BlowupModel::default()) {
            assert!(c.passed(), "{c:?}");
        }
    }

    #[test]
    fn mori_cases() {
        let w = mori_decompose(&c_tilde()).unwrap();
        assert_eq!(w, witness([0, 0, 0, 0, 1, 1]));
        assert_eq!(mori_decompose(&Cur::from_ints(&[1, 0, 0])).unwrap(), witness([0, 0, 2, 1, 1, 0]));
        assert!(mori_decompose(&section(1)).is_ok());
        assert_eq!(mori_decompose(&fibre(2)).unwrap(), witness([0, 0, 0, 1, 0, 0]));
        assert!(mori_decompose(&Cur::from_ints(&[-1, 0, 0])).is_err());
        assert!(mori_decompose(&Cur::from_ints(&[1, -5, -5])).is_err());
        for d in 0..6 {
            for m1 in 0..=d {
                for m2 in 0..=d {
                    mori_decompose(&Cur::from_ints(&[d, -m1, -m2])).unwrap();
                }
            }
        }
    }

    #[test]
    fn eff_cases() {
        assert_eq!(eff_decompose(&h_div()).unwrap().witness.coefficients, Witness { coefficients: vec![Rat::one(), Rat::zero(), Rat::one(), Rat::zero()] }.coefficients);
        assert!(eff_decompose(&Div::from_ints(&[0, -1, 0])).is_err());
        let r = eff_decompose(&Div::from_ints(&[2, -2, 0])).unwrap();
        assert_eq!(r.peeled, vec![(1, Rat::int(2))]);
        assert_eq!(r.witness.coefficients[2], Rat::int(2));
        for d in 0..8 {
            for m1 in 0..=d / 2 {
                for m2 in 0..=d / 2 {
                    let r = eff_decompose(&Div::from_ints(&[d, -m1, -m2])).unwrap();
                    assert!(r.peeled.is_empty());
                    assert!(eff_cone().member(&Div::from_ints(&[d, -m1, -m2]).0).unwrap().is_inside());
                }
            }
        }
    }
}
