//! Text format for a cubic pair: a header `prime p` or `rationals`, then
//! ten lines of four integers, the (s³, s²t, st², t³) coefficients of the
//! five coordinates of the first curve followed by those of the second.
//! Blank lines and `#` comments are ignored.

use crate::exact::{Fp, PrimeField, Rat};

use super::{ConstructionError, CubicParam, PairConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairScalars {
    Prime(u64),
    Rationals,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairInput {
    pub scalars: PairScalars,
    pub rows: Vec<[i64; 4]>,
}

fn bad(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::Parse(msg.into())
}

pub fn parse_pair(text: &str) -> Result<PairInput, ConstructionError> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header: Vec<&str> = lines.next().ok_or_else(|| bad("empty input"))?.split_whitespace().collect();
    let scalars = match header.as_slice() {
        ["prime", p] => PairScalars::Prime(p.parse().map_err(|_| bad(format!("bad prime `{p}`")))?),
        ["rationals"] => PairScalars::Rationals,
        _ => return Err(bad("expected `prime p` or `rationals`")),
    };
    let mut rows = Vec::with_capacity(10);
    for (k, line) in lines.enumerate() {
        let nums: Vec<i64> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| bad(format!("row {}: not integers", k + 1)))?;
        let row: [i64; 4] = nums
            .try_into()
            .map_err(|_| bad(format!("row {}: expected 4 integers", k + 1)))?;
        rows.push(row);
    }
    if rows.len() != 10 {
        return Err(bad(format!("expected 10 coefficient rows, found {}", rows.len())));
    }
    Ok(PairInput { scalars, rows })
}

impl PairInput {
    fn cubics<F: crate::exact::Field>(&self, ctx: &F::Ctx) -> (CubicParam<F>, CubicParam<F>) {
        let half = |r: &[[i64; 4]]| -> [[i64; 4]; 5] { r.try_into().expect("five rows") };
        (
            CubicParam::from_ints(ctx, &half(&self.rows[..5])),
            CubicParam::from_ints(ctx, &half(&self.rows[5..])),
        )
    }

    pub fn over_prime(&self) -> Result<PairConfig<Fp>, ConstructionError> {
        let PairScalars::Prime(p) = self.scalars else {
            return Err(bad("input is over the rationals"));
        };
        let field = PrimeField::new(p).map_err(|_| ConstructionError::NotPrime(p))?;
        let (a, b) = self.cubics(&field);
        PairConfig::new(a, b)
    }

    pub fn over_rationals(&self) -> Result<PairConfig<Rat>, ConstructionError> {
        let (a, b) = self.cubics(&());
        PairConfig::new(a, b)
    }
}

/// Writes a prime-field pair in the input format, residues in [0, p).
pub fn format_pair(pc: &PairConfig<Fp>) -> String {
    let mut out = format!("prime {}\n", pc.gamma1.ctx().modulus());
    for g in [&pc.gamma1, &pc.gamma2] {
        for f in g.coords() {
            let row: Vec<String> = f.coeffs().iter().map(|c| c.value().to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}
