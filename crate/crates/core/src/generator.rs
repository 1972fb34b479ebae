//! Test-configuration sources: seeded random integer point sets
//! (rejection-sampled to general position) and moment-curve point sets
//! (general position by construction).
//!
//! Randomness comes from ChaCha20 keyed by the 64-bit seed, so a
//! `GenSpec` identifies one configuration on every platform. Rejection
//! resamples the whole point set, never single points.

use num_traits::One;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::configuration::Configuration;
use crate::error::{Error, Result};
use crate::linalg::Rational;

const RESAMPLE_LIMIT: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenKind {
    /// Integer coordinates uniform in `[-bound, bound]^n`.
    Random { bound: i64 },
    /// Point i is `(t_i, t_i^2, ..., t_i^n)` for strictly increasing
    /// parameters; there must be exactly n+3 of them.
    MomentCurve { params: Vec<Rational> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    pub seed: u64,
    pub kind: GenKind,
}

/// Produces the configuration a spec describes.
pub fn generate(spec: &GenSpec) -> Result<Configuration> {
    match &spec.kind {
        GenKind::Random { bound } => gen_random(spec.n, spec.seed, *bound),
        GenKind::MomentCurve { params } => gen_moment_curve(spec.n, params),
    }
}

/// Seeded random integer configuration, resampled until it passes the
/// general-position check. Identical `(n, seed, bound)` always yields
/// the identical configuration.
pub fn gen_random(n: usize, seed: u64, bound: i64) -> Result<Configuration> {
    if bound < 0 {
        return Err(Error::Generation(format!("coordinate bound {bound} is negative")));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    for _ in 0..RESAMPLE_LIMIT {
        let points: Vec<Vec<Rational>> = (0..n + 3)
            .map(|_| {
                (0..n)
                    .map(|_| Rational::from_integer(rng.random_range(-bound..=bound).into()))
                    .collect()
            })
            .collect();
        let c = Configuration::new(n, points)?;
        if c.check_general_position().ok {
            return Ok(c);
        }
    }
    Err(Error::Generation(format!(
        "no general-position set within {RESAMPLE_LIMIT} attempts; bound {bound} is too small for n={n}"
    )))
}

/// Moment-curve configuration on the given strictly increasing
/// parameters. All homogenized minors are Vandermonde determinants, so
/// the result is always in general position.
pub fn gen_moment_curve(n: usize, params: &[Rational]) -> Result<Configuration> {
    if params.len() != n + 3 {
        return Err(Error::Generation(format!(
            "moment curve in dimension {n} needs {} parameters, got {}",
            n + 3,
            params.len()
        )));
    }
    if params.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Generation(
            "moment-curve parameters must be strictly increasing".to_string(),
        ));
    }
    let points = params
        .iter()
        .map(|t| {
            let mut power = Rational::one();
            (0..n)
                .map(|_| {
                    power *= t;
                    power.clone()
                })
                .collect()
        })
        .collect();
    Configuration::new(n, points)
}

/// Integer-parameter moment curve, the portable fixture form.
pub fn gen_moment_curve_ints(n: usize, ts: std::ops::RangeInclusive<i64>) -> Result<Configuration> {
    let params: Vec<Rational> = ts.map(|t| Rational::from_integer(t.into())).collect();
    gen_moment_curve(n, &params)
}
