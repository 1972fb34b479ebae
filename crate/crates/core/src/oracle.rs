//! Brute-force enumeration of every qualifying subset pair.
//!
//! This is the ground truth the sweep is tested against: it decides
//! each candidate pair with the independent geometric verifier, reports
//! all qualifying pairs in canonical order, and records the parity of
//! the count. Candidates are independent, so they are checked in
//! parallel and merged deterministically.

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::configuration::Configuration;
use crate::error::{Error, Result};
use crate::sweep::Parity;
use crate::verify::{interior_intersection, linked};

/// Enumeration knobs. The dimension ceiling keeps accidental
/// exponential runs out of test suites; raise it explicitly for big
/// experiments.
#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    pub max_n: usize,
}

impl Default for EnumOptions {
    fn default() -> EnumOptions {
        EnumOptions { max_n: 8 }
    }
}

/// All qualifying pairs for one configuration. `pairs` is canonically
/// sorted (each subset ascending, smaller subset first, list ordered
/// lexicographically); `parity` is the parity of `count`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub case: Parity,
    pub pairs: Vec<(Vec<usize>, Vec<usize>)>,
    pub count: usize,
    pub parity: Parity,
}

impl EnumerationReport {
    fn from_pairs(case: Parity, mut pairs: Vec<(Vec<usize>, Vec<usize>)>) -> EnumerationReport {
        pairs.sort();
        let count = pairs.len();
        let parity = if count % 2 == 0 { Parity::Even } else { Parity::Odd };
        EnumerationReport { case, pairs, count, parity }
    }

    pub fn contains(&self, first: &[usize], second: &[usize]) -> bool {
        self.pairs
            .iter()
            .any(|(a, b)| (a == first && b == second) || (a == second && b == first))
    }
}

fn check_preconditions(c: &Configuration, required: Parity, opts: &EnumOptions) -> Result<()> {
    let n = c.dim();
    match required {
        Parity::Odd if n % 2 == 0 => return Err(Error::Parity { required: "odd", n }),
        Parity::Even if n % 2 == 1 => return Err(Error::Parity { required: "even", n }),
        _ => {}
    }
    if n > opts.max_n {
        return Err(Error::Ceiling { n, max: opts.max_n });
    }
    c.require_general_position()
}

/// Tests every unordered partition of the n+3 points into two
/// (n+3)/2-subsets for linkedness (n odd).
pub fn enumerate_odd(c: &Configuration, opts: &EnumOptions) -> Result<EnumerationReport> {
    check_preconditions(c, Parity::Odd, opts)?;
    let labels: Vec<usize> = c.labels().collect();
    let half = (c.dim() + 3) / 2;
    // Each unordered partition is seen once: the side containing label 1.
    let candidates: Vec<(Vec<usize>, Vec<usize>)> = labels
        .iter()
        .copied()
        .combinations(half)
        .filter(|side| side[0] == 1)
        .map(|side| {
            let rest: Vec<usize> = labels.iter().copied().filter(|l| !side.contains(l)).collect();
            (side, rest)
        })
        .collect();
    let qualifying: Vec<Option<(Vec<usize>, Vec<usize>)>> = candidates
        .into_par_iter()
        .map(|(a, b)| Ok(linked(c, &a, &b)?.then(|| canonical(a, b))))
        .collect::<Result<_>>()?;
    Ok(EnumerationReport::from_pairs(
        Parity::Odd,
        qualifying.into_iter().flatten().collect(),
    ))
}

/// Tests every unordered pair of disjoint (n+2)/2-subsets for an
/// interior intersection of their hulls (n even; one point is unused
/// by each pair).
pub fn enumerate_even(c: &Configuration, opts: &EnumOptions) -> Result<EnumerationReport> {
    check_preconditions(c, Parity::Even, opts)?;
    let labels: Vec<usize> = c.labels().collect();
    let half = (c.dim() + 2) / 2;
    let mut candidates: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for a in labels.iter().copied().combinations(half) {
        let rest: Vec<usize> = labels.iter().copied().filter(|l| !a.contains(l)).collect();
        for b in rest.into_iter().combinations(half) {
            if a < b {
                candidates.push((a.clone(), b));
            }
        }
    }
    let qualifying: Vec<Option<(Vec<usize>, Vec<usize>)>> = candidates
        .into_par_iter()
        .map(|(a, b)| Ok(interior_intersection(c, &a, &b)?.exists.then_some((a, b))))
        .collect::<Result<_>>()?;
    Ok(EnumerationReport::from_pairs(
        Parity::Even,
        qualifying.into_iter().flatten().collect(),
    ))
}

/// Dispatches on the parity of the dimension.
pub fn enumerate(c: &Configuration, opts: &EnumOptions) -> Result<EnumerationReport> {
    if c.dim() % 2 == 0 {
        enumerate_even(c, opts)
    } else {
        enumerate_odd(c, opts)
    }
}

fn canonical(a: Vec<usize>, b: Vec<usize>) -> (Vec<usize>, Vec<usize>) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}
