//! Geometric verification, independent of the sweep that produced a
//! partition: exact simplex/simplex intersection, facet piercing counts,
//! linkedness, and certificate re-checking.
//!
//! Everything here is decided by exact affine solves. For two disjoint
//! vertex sets the common point, if any, is the solution of
//!
//! ```text
//! sum lambda_i A_i = sum mu_j B_j,   sum lambda_i = 1,   sum mu_j = 1
//! ```
//!
//! With n+2 points involved the system is square; an inconsistent
//! system means the two affine hulls are parallel and disjoint (a
//! definite "no intersection"), while an underdetermined one cannot
//! happen in general position and is reported as a degeneracy signal.
//!
//! At n = 1 the convention is fixed explicitly: a segment's boundary is
//! its endpoint pair and its interior is the open interval.

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::configuration::Configuration;
use crate::error::{Error, Result};
use crate::linalg::{dot, Mat, Rational, SolveOutcome};
use crate::sweep::{Parity, PartitionResult};

/// An affine combination of configuration points: `indices` are
/// ascending 1-based labels, `coeffs` the matching weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexWitness {
    pub indices: Vec<usize>,
    #[serde(with = "crate::qserde::rat_vec")]
    pub coeffs: Vec<Rational>,
}

impl ConvexWitness {
    pub fn new(indices: Vec<usize>, coeffs: Vec<Rational>) -> ConvexWitness {
        ConvexWitness { indices, coeffs }
    }

    pub fn evaluate(&self, c: &Configuration) -> Vec<Rational> {
        let mut acc = vec![Rational::zero(); c.dim()];
        for (&label, coeff) in self.indices.iter().zip(&self.coeffs) {
            for (a, x) in acc.iter_mut().zip(c.point(label)) {
                *a += coeff * x;
            }
        }
        acc
    }

    pub fn sums_to_one(&self) -> bool {
        self.coeffs.iter().sum::<Rational>().is_one()
    }

    pub fn strictly_positive(&self) -> bool {
        self.coeffs.iter().all(|q| q.is_positive())
    }
}

/// One half of a linking certificate: a point on the boundary of one
/// simplex (in the relative interior of `facet`) and strictly inside
/// the other (`interior` ranges over all of the other vertex set).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PierceWitness {
    #[serde(with = "crate::qserde::rat_vec")]
    pub point: Vec<Rational>,
    pub facet: ConvexWitness,
    pub interior: ConvexWitness,
}

/// Machine-checkable evidence attached to a partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    /// Even case: both subsets' hulls share `point`, with strictly
    /// positive barycentric coefficients on each side.
    #[serde(rename = "interior-intersection")]
    InteriorIntersection {
        #[serde(with = "crate::qserde::rat_vec")]
        point: Vec<Rational>,
        first: ConvexWitness,
        second: ConvexWitness,
    },
    /// Odd case: the two piercing points of the linked pair. `p1` and
    /// `n2` record which subset played the positive role at the first
    /// crossing and the negative role at the second.
    #[serde(rename = "linking")]
    Linking {
        p1: Vec<usize>,
        n2: Vec<usize>,
        boundary_of_p1: PierceWitness,
        boundary_of_n2: PierceWitness,
    },
}

/// Outcome of an exact intersection query.
///
/// `point` is present iff `exists`. The boundary flags are only raised
/// when the hulls actually touch: they mark a common point sitting on
/// the relative boundary of the respective side, which a general-position
/// configuration can never produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PierceResult {
    pub exists: bool,
    pub point: Option<Vec<Rational>>,
    pub first_on_boundary: bool,
    pub second_on_boundary: bool,
}

enum Meeting {
    /// The affine hulls do not meet at all.
    Empty,
    /// Unique common affine combination.
    Point {
        lambda: Vec<Rational>,
        mu: Vec<Rational>,
        point: Vec<Rational>,
    },
}

/// Solves for the common point of the affine hulls of two label sets.
fn affine_meeting(c: &Configuration, a: &[usize], b: &[usize]) -> Result<Meeting> {
    let n = c.dim();
    let mut m = Mat::zero(n + 2, a.len() + b.len());
    for (col, &label) in a.iter().enumerate() {
        for (row, x) in c.point(label).iter().enumerate() {
            *m.at_mut(row, col) = x.clone();
        }
        *m.at_mut(n, col) = Rational::one();
    }
    for (col, &label) in b.iter().enumerate() {
        for (row, x) in c.point(label).iter().enumerate() {
            *m.at_mut(row, a.len() + col) = -x.clone();
        }
        *m.at_mut(n + 1, a.len() + col) = Rational::one();
    }
    let mut rhs = vec![Rational::zero(); n + 2];
    rhs[n] = Rational::one();
    rhs[n + 1] = Rational::one();
    match m.solve(&rhs)? {
        SolveOutcome::Inconsistent => Ok(Meeting::Empty),
        SolveOutcome::Underdetermined => Err(Error::Degenerate(
            "affine intersection system is underdetermined; points are not in general position"
                .to_string(),
        )),
        SolveOutcome::Unique(x) => {
            let lambda = x[..a.len()].to_vec();
            let mu = x[a.len()..].to_vec();
            let mut point = vec![Rational::zero(); n];
            for (&label, l) in a.iter().zip(&lambda) {
                for (p, coord) in point.iter_mut().zip(c.point(label)) {
                    *p += l * coord;
                }
            }
            Ok(Meeting::Point { lambda, mu, point })
        }
    }
}

fn check_label_sets(c: &Configuration, a: &[usize], b: &[usize]) -> Result<()> {
    for set in [a, b] {
        if set.is_empty() {
            return Err(Error::Dimension("empty index set".to_string()));
        }
        if set.iter().any(|&l| l < 1 || l > c.point_count()) {
            return Err(Error::Dimension(format!(
                "labels must lie in 1..={}",
                c.point_count()
            )));
        }
        if set.iter().duplicates().next().is_some() {
            return Err(Error::Dimension("repeated label in index set".to_string()));
        }
    }
    if a.iter().any(|l| b.contains(l)) {
        return Err(Error::Dimension("index sets must be disjoint".to_string()));
    }
    Ok(())
}

fn sorted(labels: &[usize]) -> Vec<usize> {
    let mut v = labels.to_vec();
    v.sort_unstable();
    v
}

/// Do the open convex hulls of `a` and `b` share a point?
///
/// Requires `|a| + |b| <= n + 2` so the solve is square or
/// overdetermined; existence means a common point with strictly
/// positive coefficients on both sides.
pub fn interior_intersection(c: &Configuration, a: &[usize], b: &[usize]) -> Result<PierceResult> {
    check_label_sets(c, a, b)?;
    if a.len() + b.len() > c.dim() + 2 {
        return Err(Error::Dimension(format!(
            "|a| + |b| = {} exceeds n + 2 = {}",
            a.len() + b.len(),
            c.dim() + 2
        )));
    }
    let (a, b) = (sorted(a), sorted(b));
    match affine_meeting(c, &a, &b)? {
        Meeting::Empty => Ok(PierceResult {
            exists: false,
            point: None,
            first_on_boundary: false,
            second_on_boundary: false,
        }),
        Meeting::Point { lambda, mu, point } => {
            let touching = lambda.iter().all(|q| !q.is_negative())
                && mu.iter().all(|q| !q.is_negative());
            let strict =
                lambda.iter().all(|q| q.is_positive()) && mu.iter().all(|q| q.is_positive());
            Ok(PierceResult {
                exists: strict,
                point: strict.then_some(point),
                first_on_boundary: touching && lambda.iter().any(|q| q.is_zero()),
                second_on_boundary: touching && mu.iter().any(|q| q.is_zero()),
            })
        }
    }
}

/// Does the closed facet meet the open interior of the simplex?
///
/// `facet` has (n+1)/2 labels, `simplex` (n+3)/2, n odd, so the solve is
/// square. Existence requires nonnegative facet coefficients and
/// strictly positive simplex coefficients; `first_on_boundary` reports a
/// contact through the facet's own boundary (some facet coefficient
/// zero), which signals non-general position to the caller.
pub fn pierce(c: &Configuration, facet: &[usize], simplex: &[usize]) -> Result<PierceResult> {
    let n = c.dim();
    if n % 2 == 0 {
        return Err(Error::Parity { required: "odd", n });
    }
    check_label_sets(c, facet, simplex)?;
    if facet.len() != (n + 1) / 2 || simplex.len() != (n + 3) / 2 {
        return Err(Error::Dimension(format!(
            "pierce expects a facet of {} labels and a simplex of {} labels",
            (n + 1) / 2,
            (n + 3) / 2
        )));
    }
    let (facet, simplex) = (sorted(facet), sorted(simplex));
    match affine_meeting(c, &facet, &simplex)? {
        Meeting::Empty => Ok(PierceResult {
            exists: false,
            point: None,
            first_on_boundary: false,
            second_on_boundary: false,
        }),
        Meeting::Point { lambda, mu, point } => {
            let facet_ok = lambda.iter().all(|q| !q.is_negative());
            let simplex_closed = mu.iter().all(|q| !q.is_negative());
            let touching = facet_ok && simplex_closed;
            let exists = facet_ok && mu.iter().all(|q| q.is_positive());
            Ok(PierceResult {
                exists,
                point: exists.then_some(point),
                first_on_boundary: touching && lambda.iter().any(|q| q.is_zero()),
                second_on_boundary: touching && mu.iter().any(|q| q.is_zero()),
            })
        }
    }
}

/// Piercing counts in both directions: facets of `a` through the
/// interior of `b`, and facets of `b` through the interior of `a`.
pub fn piercing_counts(c: &Configuration, a: &[usize], b: &[usize]) -> Result<(usize, usize)> {
    let n = c.dim();
    if n % 2 == 0 {
        return Err(Error::Parity { required: "odd", n });
    }
    check_label_sets(c, a, b)?;
    let size = (n + 3) / 2;
    if a.len() != size || b.len() != size {
        return Err(Error::Dimension(format!(
            "linked simplices need {size} labels on each side"
        )));
    }
    let count_through = |from: &[usize], into: &[usize]| -> Result<usize> {
        let mut count = 0usize;
        for facet in from.iter().copied().combinations(from.len() - 1) {
            let hit = pierce(c, &facet, into)?;
            if hit.first_on_boundary || hit.second_on_boundary {
                return Err(Error::Degenerate(format!(
                    "piercing point of facet {facet:?} grazes a face; points are not in general position"
                )));
            }
            count += hit.exists as usize;
        }
        Ok(count)
    };
    Ok((count_through(a, b)?, count_through(b, a)?))
}

/// Are the simplices on `a` and `b` linked?
///
/// True iff the boundary of simplex(`a`) meets the interior of
/// simplex(`b`) in exactly one point, evaluated as the total facet
/// piercing count. The symmetric count is computed as a cross-check and
/// a disagreement of the two verdicts is escalated as a hard error
/// rather than silently accepted.
pub fn linked(c: &Configuration, a: &[usize], b: &[usize]) -> Result<bool> {
    let (ab, ba) = piercing_counts(c, a, b)?;
    if (ab == 1) != (ba == 1) {
        return Err(Error::TheoremViolation(format!(
            "asymmetric linkedness: piercing counts {ab} vs {ba} for {a:?} / {b:?}"
        )));
    }
    Ok(ab == 1)
}

fn is_strictly_ascending(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

fn structural(cond: bool, clause: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Document(format!("malformed certificate: {clause}")))
    }
}

/// Re-derives every claim a partition result makes: subset shapes,
/// witness membership, coefficient positivity, sums to one, equality of
/// the recomputed points, and (for linking) the piercing counts.
/// Structural defects error out naming the first failed clause;
/// semantic failures return `false`.
pub fn verify_certificate(c: &Configuration, r: &PartitionResult) -> Result<bool> {
    let n = c.dim();
    let m = c.point_count();
    for set in [&r.first, &r.second] {
        structural(!set.is_empty(), "empty subset")?;
        structural(is_strictly_ascending(set), "subset not sorted ascending")?;
        structural(set.iter().all(|&l| (1..=m).contains(&l)), "label out of range")?;
    }
    structural(
        r.first.iter().all(|l| !r.second.contains(l)),
        "subsets overlap",
    )?;
    match (&r.parity, n % 2) {
        (Parity::Even, 0) | (Parity::Odd, 1) => {}
        _ => return Err(Error::Document("case does not match the dimension's parity".to_string())),
    }

    match (&r.parity, &r.certificate) {
        (Parity::Even, Certificate::InteriorIntersection { point, first, second }) => {
            let want = (n + 2) / 2;
            structural(r.first.len() == want && r.second.len() == want, "wrong subset size")?;
            structural(point.len() == n, "witness point has wrong dimension")?;
            for w in [first, second] {
                structural(w.indices.len() == w.coeffs.len(), "coefficient count mismatch")?;
                structural(is_strictly_ascending(&w.indices), "witness indices not sorted")?;
            }
            // The lemma is symmetric in the two subsets, so accept the
            // witnesses in either order.
            let pair_matches = (first.indices == r.first && second.indices == r.second)
                || (first.indices == r.second && second.indices == r.first);
            structural(pair_matches, "witness index sets do not match the subsets")?;
            for w in [first, second] {
                if !w.sums_to_one() || !w.strictly_positive() || &w.evaluate(c) != point {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        (Parity::Odd, Certificate::Linking { p1, n2, boundary_of_p1, boundary_of_n2 }) => {
            let want = (n + 3) / 2;
            structural(r.first.len() == want && r.second.len() == want, "wrong subset size")?;
            structural(r.first.len() + r.second.len() == m, "subsets do not cover all points")?;
            let roles_match = (p1 == &r.first && n2 == &r.second)
                || (p1 == &r.second && n2 == &r.first);
            structural(roles_match, "certificate roles do not match the subsets")?;
            for (witness, boundary_set, interior_set) in [
                (boundary_of_p1, p1, n2),
                (boundary_of_n2, n2, p1),
            ] {
                structural(witness.point.len() == n, "witness point has wrong dimension")?;
                for w in [&witness.facet, &witness.interior] {
                    structural(w.indices.len() == w.coeffs.len(), "coefficient count mismatch")?;
                    structural(is_strictly_ascending(&w.indices), "witness indices not sorted")?;
                }
                structural(
                    witness.facet.indices.len() == boundary_set.len() - 1
                        && witness.facet.indices.iter().all(|l| boundary_set.contains(l)),
                    "facet is not a facet of its simplex",
                )?;
                structural(
                    witness.interior.indices == *interior_set,
                    "interior witness does not range over the other subset",
                )?;
                for w in [&witness.facet, &witness.interior] {
                    if !w.sums_to_one() || !w.strictly_positive() || w.evaluate(c) != witness.point {
                        return Ok(false);
                    }
                }
            }
            // Finally the linkedness claim itself, via the facet count.
            linked(c, p1, n2)
        }
        _ => Err(Error::Document("certificate kind does not match the case".to_string())),
    }
}

/// Squared Euclidean distance, used by tests comparing piercing points.
pub fn distance_sq(a: &[Rational], b: &[Rational]) -> Rational {
    let diff: Vec<Rational> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    dot(&diff, &diff)
}
