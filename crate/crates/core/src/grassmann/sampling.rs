//! Chart sampling over F_p: conic classes against quintic vanishing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{Fp, MPoly, PrimeField, Rat, Ring};

use super::chart::PlaneChart;
use super::conic::{conic_classify, conic_restriction, ConicClass, QuadricForm};
use super::quintic::{derived_quintic, fq_quintic};
use super::GrassmannError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SampleStats {
    pub prime: u64,
    pub trials: u64,
    pub seed: Option<u64>,
    pub smooth: u64,
    pub line_pair: u64,
    pub double_line: u64,
    /// Charts with det M = 0.
    pub det_zero: u64,
    /// Charts where the shipped quintic vanishes at the Plücker image.
    pub quintic_zero: u64,
    /// Charts where det = 0 and quintic = 0 disagree.
    pub disagreements: u64,
    /// Same, for the derived control quintic.
    pub derived_disagreements: u64,
    /// Lowest-index disagreeing chart as (a0, a1, a2, b0, b1, b2).
    pub first_disagreement: Option<(u64, [u64; 6])>,
}

impl SampleStats {
    pub fn singular_fraction(&self) -> Option<f64> {
        (self.trials > 0).then(|| self.det_zero as f64 / self.trials as f64)
    }

    fn merge(mut self, o: SampleStats) -> SampleStats {
        self.trials += o.trials;
        self.smooth += o.smooth;
        self.line_pair += o.line_pair;
        self.double_line += o.double_line;
        self.det_zero += o.det_zero;
        self.quintic_zero += o.quintic_zero;
        self.disagreements += o.disagreements;
        self.derived_disagreements += o.derived_disagreements;
        self.first_disagreement = match (self.first_disagreement, o.first_disagreement) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }
}

struct Evaluator {
    field: PrimeField,
    quadric: QuadricForm,
    quintic: MPoly<Fp>,
    derived: MPoly<Fp>,
}

impl Evaluator {
    fn new(p: u64) -> Result<Self, GrassmannError> {
        let field = PrimeField::new(p).map_err(|_| GrassmannError::NotPrime(p))?;
        if p < 3 {
            return Err(GrassmannError::PrimeTooSmall(p));
        }
        let reduce = |q: &MPoly<Rat>| {
            q.map_coeffs(&field, |c| Fp::from_rat(&field, c))
                .ok_or(GrassmannError::Characteristic)
        };
        Ok(Evaluator {
            field,
            quadric: QuadricForm::normal_form(),
            quintic: reduce(&fq_quintic()?)?,
            derived: reduce(&derived_quintic())?,
        })
    }

    fn one(&self, index: u64, v: [u64; 6]) -> SampleStats {
        let chart = PlaneChart::from_array(v.map(|x| self.field.elem(x as i64)));
        let m = conic_restriction(&chart, &self.quadric).expect("p is odd");
        let det_zero = m.det().expect("square").is_zero();
        let pl = chart.pluecker();
        let q_zero = self.quintic.eval(&pl.0).expect("arity 10").is_zero();
        let g_zero = self.derived.eval(&pl.0).expect("arity 10").is_zero();
        let mut s = SampleStats {
            prime: self.field.modulus(),
            trials: 1,
            det_zero: det_zero as u64,
            quintic_zero: q_zero as u64,
            disagreements: (det_zero != q_zero) as u64,
            derived_disagreements: (det_zero != g_zero) as u64,
            first_disagreement: (det_zero != q_zero).then_some((index, v)),
            ..Default::default()
        };
        match conic_classify(&m).expect("a smooth quadric contains no plane") {
            ConicClass::Smooth => s.smooth = 1,
            ConicClass::LinePair => s.line_pair = 1,
            ConicClass::DoubleLine => s.double_line = 1,
        }
        s
    }
}

fn chart_from_stream(seed: u64, index: u64, p: u64) -> [u64; 6] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    std::array::from_fn(|_| rng.random_range(0..p))
}

/// `trials` uniform charts over F_p; trial i draws from the ChaCha stream
/// (seed, i), so results do not depend on scheduling.
pub fn sample_conic_statistics(p: u64, trials: u64, seed: u64) -> Result<SampleStats, GrassmannError> {
    let ev = Evaluator::new(p)?;
    let empty = SampleStats {
        prime: p,
        seed: Some(seed),
        ..Default::default()
    };
    let stats = (0..trials)
        .into_par_iter()
        .map(|i| ev.one(i, chart_from_stream(seed, i, p)))
        .reduce(SampleStats::default, SampleStats::merge);
    Ok(SampleStats {
        prime: p,
        seed: Some(seed),
        ..empty.merge(stats)
    })
}

/// Every one of the p^6 charts, indexed in base p with a0 most significant.
pub fn exhaustive_statistics(p: u64) -> Result<SampleStats, GrassmannError> {
    let ev = Evaluator::new(p)?;
    let total = p.checked_pow(6).ok_or(GrassmannError::PrimeTooLarge(p))?;
    let stats = (0..total)
        .into_par_iter()
        .map(|i| {
            let mut v = [0u64; 6];
            let mut r = i;
            for slot in v.iter_mut().rev() {
                *slot = r % p;
                r /= p;
            }
            ev.one(i, v)
        })
        .reduce(SampleStats::default, SampleStats::merge);
    Ok(SampleStats {
        prime: p,
        seed: None,
        ..stats
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_trials_is_empty() {
        let s = sample_conic_statistics(7, 0, 1).unwrap();
        assert_eq!(s.trials, 0);
        assert_eq!(s.det_zero + s.smooth + s.line_pair + s.double_line, 0);
        assert!(s.singular_fraction().is_none());
    }

    #[test]
    fn rejects_bad_primes() {
        assert_eq!(sample_conic_statistics(9, 1, 0), Err(GrassmannError::NotPrime(9)));
        assert_eq!(sample_conic_statistics(2, 1, 0), Err(GrassmannError::PrimeTooSmall(2)));
    }

    #[test]
    fn deterministic_and_classes_partition() {
        let a = sample_conic_statistics(31, 500, 42).unwrap();
        let b = sample_conic_statistics(31, 500, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.smooth + a.line_pair + a.double_line, 500);
        assert_eq!(a.line_pair + a.double_line, a.det_zero);
        assert_eq!(a.derived_disagreements, 0);
    }
}
