use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::exact::{MPoly, Mono, Rat};

use super::chart::{check_minor_table, symbolic_chart, PlaneChart};
use super::conic::{conic_restriction, QuadricForm};
use super::GrassmannError;

pub const QUINTIC_DATA: &str = include_str!("../../data/fq_quintic.txt");
pub const QUINTIC_SHA256: &str = include_str!("../../data/fq_quintic.txt.sha256");

/// The shipped degree-5 polynomial in x0..x9, checksum verified.
pub fn fq_quintic() -> Result<MPoly<Rat>, GrassmannError> {
    parse_quintic(QUINTIC_DATA, QUINTIC_SHA256.trim())
}

/// Parses `terms N degree D` followed by lines `coef e0 .. e9`.
pub fn parse_quintic(text: &str, sha256_hex: &str) -> Result<MPoly<Rat>, GrassmannError> {
    let digest = hex::encode(Sha256::digest(text.as_bytes()));
    if !digest.eq_ignore_ascii_case(sha256_hex) {
        return Err(GrassmannError::Checksum {
            expected: sha256_hex.to_string(),
            computed: digest,
        });
    }
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header: Vec<&str> = lines
        .next()
        .ok_or_else(|| GrassmannError::Parse("empty quintic file".into()))?
        .split_whitespace()
        .collect();
    let (n_terms, degree) = match header.as_slice() {
        ["terms", n, "degree", d] => (
            n.parse::<usize>()
                .map_err(|_| GrassmannError::Parse(format!("bad term count `{n}`")))?,
            d.parse::<u32>()
                .map_err(|_| GrassmannError::Parse(format!("bad degree `{d}`")))?,
        ),
        _ => return Err(GrassmannError::Parse("expected `terms N degree D` header".into())),
    };
    let mut terms = Vec::with_capacity(n_terms);
    for (k, line) in lines.enumerate() {
        let nums: Vec<i64> = line
            .split_whitespace()
            .map(|w| w.parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| GrassmannError::Parse(format!("term line {}: not integers", k + 1)))?;
        if nums.len() != 11 {
            return Err(GrassmannError::Parse(format!(
                "term line {}: expected 11 integers, got {}",
                k + 1,
                nums.len()
            )));
        }
        if nums[1..].iter().any(|&e| e < 0) {
            return Err(GrassmannError::Parse(format!("term line {}: negative exponent", k + 1)));
        }
        let exps: Vec<u32> = nums[1..].iter().map(|&e| e as u32).collect();
        if exps.iter().sum::<u32>() != degree {
            return Err(GrassmannError::Parse(format!(
                "term line {}: degree differs from header",
                k + 1
            )));
        }
        terms.push((Rat::int(nums[0]), exps));
    }
    if terms.len() != n_terms {
        return Err(GrassmannError::Parse(format!(
            "header promises {n_terms} terms, found {}",
            terms.len()
        )));
    }
    let p = MPoly::from_terms(&(), 10, terms)?;
    if p.len() != n_terms {
        return Err(GrassmannError::Parse("repeated or cancelling monomials".into()));
    }
    Ok(p)
}

/// A 7-term quintic in x0..x9 whose pullback along the chart is exactly
/// −4 times det of the restricted conic. Used as a control next to the
/// shipped polynomial.
pub fn derived_quintic() -> MPoly<Rat> {
    let t = |c: i64, e: [u32; 10]| (Rat::int(c), e.to_vec());
    MPoly::from_terms(
        &(),
        10,
        [
            t(-1, [4, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
            t(1, [3, 0, 2, 0, 0, 0, 0, 0, 0, 0]),
            t(1, [3, 0, 0, 1, 0, 1, 0, 0, 0, 0]),
            t(-2, [3, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
            t(1, [3, 0, 0, 0, 0, 0, 0, 0, 0, 2]),
            t(4, [2, 1, 0, 0, 1, 0, 1, 0, 0, 0]),
            t(-4, [2, 0, 1, 0, 1, 1, 0, 0, 0, 0]),
        ],
    )
    .expect("arity 10")
}

/// det of the restricted conic matrix as a polynomial in a0..b2.
pub fn chart_determinant() -> Result<MPoly<Rat>, GrassmannError> {
    let m = conic_restriction(&symbolic_chart(), &QuadricForm::normal_form())?;
    Ok(m.det_cofactor()?)
}

/// A polynomial in x0..x9 pulled back along the symbolic Plücker map.
pub fn pull_back(p: &MPoly<Rat>) -> Result<MPoly<Rat>, GrassmannError> {
    let pl = symbolic_chart().pluecker();
    Ok(p.substitute(&pl.0)?)
}

#[derive(Clone, Debug)]
pub struct QuinticIdentity {
    pub pulled_back: MPoly<Rat>,
    pub determinant: MPoly<Rat>,
    /// c with pulled_back = c·determinant, when it exists and is nonzero.
    pub constant: Option<Rat>,
    /// Without a constant: the first monomial where pulled_back and
    /// c₀·determinant differ, c₀ being the ratio at det's leading term.
    pub counterexample: Option<(Mono, Rat, Rat)>,
}

impl QuinticIdentity {
    pub fn holds(&self) -> bool {
        self.constant.as_ref().is_some_and(|c| !c.is_zero())
    }
}

/// Compares `p ∘ pl` with det(M) as polynomials in the six chart variables.
pub fn compare_with_determinant(p: &MPoly<Rat>) -> Result<QuinticIdentity, GrassmannError> {
    check_minor_table()?;
    let pulled_back = pull_back(p)?;
    let determinant = chart_determinant()?;
    let constant = match pulled_back.proportionality(&determinant) {
        Ok(c) => c.filter(|c| !c.is_zero()),
        Err(_) => None,
    };
    let counterexample = if constant.is_some() {
        None
    } else {
        let c0 = determinant
            .terms()
            .next()
            .map(|(m, d)| &pulled_back.coeff(m.exps()) / d)
            .unwrap_or_else(Rat::zero);
        pulled_back.first_difference(&determinant, &c0)
    };
    Ok(QuinticIdentity {
        pulled_back,
        determinant,
        constant,
        counterexample,
    })
}

pub fn verify_quintic_identity() -> Result<QuinticIdentity, GrassmannError> {
    compare_with_determinant(&fq_quintic()?)
}

/// Values (p∘pl, det) at seeded random rational charts.
pub fn pointwise_values(
    p: &MPoly<Rat>,
    count: usize,
    seed: u64,
) -> Result<Vec<([Rat; 6], Rat, Rat)>, GrassmannError> {
    let q = QuadricForm::normal_form();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let v: [Rat; 6] =
                std::array::from_fn(|_| Rat::new(rng.random_range(-9..=9), rng.random_range(1..=6)));
            let chart = PlaneChart::from_array(v.clone());
            let pv = p.eval(&chart.pluecker().0)?;
            let dv = conic_restriction(&chart, &q)?.det()?;
            Ok((v, pv, dv))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn data_file_matches_display() {
        let p = fq_quintic().unwrap();
        assert_eq!(p.len(), 13);
        assert!(p.is_homogeneous());
        assert_eq!(p.degree(), Some(5));
        assert_eq!(p.coeff(&[3, 0, 2, 0, 0, 0, 0, 0, 0, 0]), Rat::one());
        assert_eq!(p.coeff(&[3, 0, 0, 0, 0, 0, 0, 0, 0, 2]), Rat::one());
        assert_eq!(p.coeff(&[2, 1, 0, 0, 2, 0, 0, 0, 0, 0]), Rat::int(-4));
        let e0: Vec<Rat> = std::iter::once(Rat::one())
            .chain(std::iter::repeat_n(Rat::zero(), 9))
            .collect();
        assert_eq!(p.eval(&e0).unwrap(), Rat::zero());
    }

    #[test]
    fn checksum_mismatch_is_reported() {
        let tampered = QUINTIC_DATA.replacen("-4 2 1", "-3 2 1", 1);
        assert!(matches!(
            parse_quintic(&tampered, QUINTIC_SHA256.trim()),
            Err(GrassmannError::Checksum { .. })
        ));
    }

    #[test]
    fn malformed_files_are_rejected() {
        let sha = |s: &str| hex::encode(Sha256::digest(s.as_bytes()));
        for bad in [
            "",
            "terms x degree 5\n",
            "terms 1 degree 5\n1 2 3\n",
            "terms 2 degree 5\n1 5 0 0 0 0 0 0 0 0 0\n",
            "terms 1 degree 5\n1 4 0 0 0 0 0 0 0 0 0\n",
        ] {
            assert!(
                matches!(parse_quintic(bad, &sha(bad)), Err(GrassmannError::Parse(_))),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn determinant_expansion() {
        let d = chart_determinant().unwrap();
        // −4·det has integer coefficients and nine terms
        let m4 = d.scale(&Rat::int(-4));
        assert_eq!(m4.len(), 9);
        assert_eq!(m4.coeff(&[0, 0, 0, 0, 0, 1]), Rat::int(-1));
        assert_eq!(m4.coeff(&[0, 0, 2, 0, 0, 0]), Rat::one());
        assert_eq!(m4.coeff(&[2, 0, 0, 0, 2, 0]), Rat::one());
    }

    #[test]
    fn derived_quintic_pulls_back_to_det() {
        let id = compare_with_determinant(&derived_quintic()).unwrap();
        assert_eq!(id.constant, Some(Rat::int(-4)));
        assert!(id.holds());
    }
}
