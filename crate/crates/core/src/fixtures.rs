//! The built-in verification momenta.

use crate::error::{Error, Result};
use crate::kernel::{parse_rational, ratio, Rational};
use crate::momentum::LightlikeMomentum;

const MOMENTA: &str = include_str!("../data/momenta.txt");

/// Parses whitespace-separated `k1 k2 k3 k0` lines; `#` starts a comment.
pub fn parse_momenta(text: &str) -> Result<Vec<LightlikeMomentum>> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|line| {
            let v = line
                .split_whitespace()
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()?;
            let [a, b, c, k0]: [Rational; 4] = v
                .try_into()
                .map_err(|_| Error::Parse(format!("expected four values in `{line}`")))?;
            LightlikeMomentum::new(a, b, c, k0)
        })
        .collect()
}

/// The 25 frozen lightlike momenta.
pub fn builtin_momenta() -> Vec<LightlikeMomentum> {
    parse_momenta(MOMENTA).expect("built-in momentum fixture is valid")
}

/// The κ values every momentum suite is swept over.
pub fn kappa_sweep() -> [Rational; 3] {
    [ratio(1, 1), ratio(2, 1), ratio(1, 3)]
}
