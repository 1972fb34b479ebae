//! The circular sign sweep.
//!
//! For n+3 general-position points in R^n the homogeneous system
//! `sum x_i A_i = 0, sum x_i = 0` has an exactly 2-dimensional solution
//! plane. Each coordinate function vanishes on a line through the
//! origin of that plane; the 2(n+3) directions where some coordinate
//! vanishes cut the unit circle into sectors of constant sign pattern,
//! and crossing a line flips exactly one sign. Scanning those crossings
//! finds a direction whose sign pattern splits the points into the two
//! subsets of the main result: interiors of the spanned simplices
//! intersect for even n, the simplices are linked for odd n.
//!
//! The angular order is decided exactly (half-plane classification plus
//! a 2x2 cross determinant), so the whole pipeline is deterministic for
//! a given input.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::configuration::Configuration;
use crate::error::{Error, Result};
use crate::linalg::{Rational, Sign};
use crate::verify::{Certificate, ConvexWitness, PierceWitness};

/// Which branch of the theorem applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Deterministic basis (u, v) of the solution plane of the homogeneous
/// system, as produced by reduced row echelon elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneBasis {
    u: Vec<Rational>,
    v: Vec<Rational>,
}

impl PlaneBasis {
    pub fn new(u: Vec<Rational>, v: Vec<Rational>) -> Result<PlaneBasis> {
        if u.len() != v.len() || u.len() < 4 {
            return Err(Error::Dimension(
                "plane basis vectors must share a length of at least 4".to_string(),
            ));
        }
        let independent = u
            .iter()
            .zip(&v)
            .flat_map(|(a, b)| u.iter().zip(&v).map(move |(c, d)| a * d - b * c))
            .any(|det| !det.is_zero());
        if !independent {
            return Err(Error::Degenerate("plane basis vectors are proportional".to_string()));
        }
        Ok(PlaneBasis { u, v })
    }

    pub fn u(&self) -> &[Rational] {
        &self.u
    }

    pub fn v(&self) -> &[Rational] {
        &self.v
    }

    /// Coordinates of the plane point `s*u + t*v`.
    pub fn solution_at(&self, dir: &(Rational, Rational)) -> Vec<Rational> {
        self.u
            .iter()
            .zip(&self.v)
            .map(|(ui, vi)| &dir.0 * ui + &dir.1 * vi)
            .collect()
    }
}

/// The line where coordinate `line` vanishes in the plane, written as
/// the normal of `s*a + t*b = 0`; `a`, `b` are that coordinate of the
/// basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineNormal {
    pub line: usize,
    pub a: Rational,
    pub b: Rational,
}

/// A direction in the plane lying on exactly one coordinate line, with
/// the full sign pattern of the corresponding solution vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    /// 1-based label of the coordinate vanishing here.
    pub line: usize,
    pub direction: (Rational, Rational),
    /// Signs of all n+3 coordinates at `direction`; exactly one zero,
    /// at position `line - 1`.
    pub pattern: Vec<Sign>,
}

impl Crossing {
    pub fn plus_count(&self) -> usize {
        self.pattern.iter().filter(|s| **s == Sign::Plus).count()
    }

    pub fn minus_count(&self) -> usize {
        self.pattern.iter().filter(|s| **s == Sign::Minus).count()
    }

    /// Labels with the requested sign.
    pub fn labels_with(&self, sign: Sign) -> Vec<usize> {
        self.pattern
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == sign)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// All 2(n+3) crossings in counterclockwise order, starting from the
/// canonical representative of line 1, together with the sign pattern
/// of each sector between consecutive crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepOrder {
    crossings: Vec<Crossing>,
    sectors: Vec<Vec<Sign>>,
}

impl SweepOrder {
    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Sector `k` lies between crossings `k` and `k+1` (cyclically).
    pub fn sectors(&self) -> &[Vec<Sign>] {
        &self.sectors
    }
}

/// The two subsets produced by the main theorem, in canonical order
/// (each sorted ascending, lexicographically smaller subset first),
/// plus the machine-checkable certificate. For the odd case the
/// certificate keeps the original sweep roles of the two subsets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionResult {
    pub parity: Parity,
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub certificate: Certificate,
}

/// The common interior point guaranteed for any nonzero solution of the
/// homogeneous system, with its two barycentric coefficient lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonPoint {
    pub point: Vec<Rational>,
    pub plus: ConvexWitness,
    pub minus: ConvexWitness,
}

/// Basis of the solution plane of the homogeneous system.
///
/// Rejects configurations that are not in general position, naming the
/// violating point subset. In general position the null space is
/// exactly 2-dimensional; anything else is an internal defect.
pub fn compute_plane(c: &Configuration) -> Result<PlaneBasis> {
    c.require_general_position()?;
    let basis = c.build_system().null_space_basis();
    if basis.len() != 2 {
        return Err(Error::TheoremViolation(format!(
            "null space of the system has dimension {}, expected 2",
            basis.len()
        )));
    }
    let mut it = basis.into_iter();
    PlaneBasis::new(it.next().unwrap(), it.next().unwrap())
}

/// Reads the coordinate lines off the plane basis: line i has normal
/// (u_i, v_i). A zero normal or a proportional pair cannot happen over
/// a general-position configuration, so either one signals a defect
/// upstream.
pub fn line_normals(basis: &PlaneBasis) -> Result<Vec<LineNormal>> {
    let normals: Vec<LineNormal> = basis
        .u()
        .iter()
        .zip(basis.v())
        .enumerate()
        .map(|(i, (a, b))| LineNormal { line: i + 1, a: a.clone(), b: b.clone() })
        .collect();
    for n in &normals {
        if n.a.is_zero() && n.b.is_zero() {
            return Err(Error::TheoremViolation(format!(
                "coordinate {} vanishes on the whole plane",
                n.line
            )));
        }
    }
    for (i, ni) in normals.iter().enumerate() {
        for nj in &normals[i + 1..] {
            if (&ni.a * &nj.b - &ni.b * &nj.a).is_zero() {
                return Err(Error::TheoremViolation(format!(
                    "lines {} and {} coincide in the plane",
                    ni.line, nj.line
                )));
            }
        }
    }
    Ok(normals)
}

/// Counterclockwise comparison of nonzero plane directions: half-plane
/// first (angles [0, pi) before [pi, 2pi)), then the cross determinant
/// within a half.
fn ccw_cmp(p: &(Rational, Rational), q: &(Rational, Rational)) -> Ordering {
    fn upper(d: &(Rational, Rational)) -> bool {
        d.1.is_positive() || (d.1.is_zero() && d.0.is_positive())
    }
    match (upper(p), upper(q)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => {
            let cross = &p.0 * &q.1 - &p.1 * &q.0;
            if cross.is_positive() {
                Ordering::Less
            } else if cross.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        }
    }
}

/// Sign-normalizes a direction so its first nonzero component is
/// positive; the canonical representative of a line.
fn canonical_direction(d: (Rational, Rational)) -> (Rational, Rational) {
    let flip = if d.0.is_zero() { d.1.is_negative() } else { d.0.is_negative() };
    if flip {
        (-d.0, -d.1)
    } else {
        d
    }
}

/// Value of every coordinate function at the plane direction `(s, t)`:
/// coordinate i of `s*u + t*v` is `s*a_i + t*b_i`.
fn coordinates_at(normals: &[LineNormal], dir: &(Rational, Rational)) -> Vec<Rational> {
    normals
        .iter()
        .map(|n| &dir.0 * &n.a + &dir.1 * &n.b)
        .collect()
}

/// Orders all 2(n+3) crossing directions counterclockwise and evaluates
/// every crossing and sector sign pattern exactly.
pub fn sweep(normals: &[LineNormal]) -> Result<SweepOrder> {
    let m = normals.len();
    let mut directions: Vec<(usize, (Rational, Rational))> = Vec::with_capacity(2 * m);
    for n in normals {
        let d = (-n.b.clone(), n.a.clone());
        directions.push((n.line, (-d.0.clone(), -d.1.clone())));
        directions.push((n.line, d));
    }
    directions.sort_by(|(_, p), (_, q)| ccw_cmp(p, q));

    // Start the circle at the canonical representative of line 1.
    let start_dir = canonical_direction((-normals[0].b.clone(), normals[0].a.clone()));
    let start = directions
        .iter()
        .position(|(line, d)| *line == normals[0].line && *d == start_dir)
        .ok_or_else(|| Error::TheoremViolation("start crossing missing from the circle".to_string()))?;
    directions.rotate_left(start);

    let crossings: Vec<Crossing> = directions
        .into_iter()
        .map(|(line, direction)| {
            let pattern: Vec<Sign> = coordinates_at(normals, &direction)
                .iter()
                .map(Sign::of)
                .collect();
            let zeros: Vec<usize> = pattern
                .iter()
                .enumerate()
                .filter(|(_, s)| **s == Sign::Zero)
                .map(|(i, _)| i + 1)
                .collect();
            if zeros != [line] {
                return Err(Error::TheoremViolation(format!(
                    "crossing of line {line} vanishes at {zeros:?}"
                )));
            }
            Ok(Crossing { line, direction, pattern })
        })
        .collect::<Result<_>>()?;

    // Antipodal crossings sit exactly m apart and carry negated patterns.
    for k in 0..m {
        let (a, b) = (&crossings[k], &crossings[k + m]);
        let negated = a.pattern.iter().map(|s| s.negate()).collect::<Vec<_>>();
        if a.line != b.line || b.pattern != negated {
            return Err(Error::TheoremViolation(format!(
                "crossings {k} and {} are not antipodal",
                k + m
            )));
        }
    }

    let sectors: Vec<Vec<Sign>> = (0..2 * m)
        .map(|k| {
            let d1 = &crossings[k].direction;
            let d2 = &crossings[(k + 1) % (2 * m)].direction;
            // Adjacent crossings are less than a half-turn apart, so the
            // sum bisects the sector and cannot vanish.
            let mid = (&d1.0 + &d2.0, &d1.1 + &d2.1);
            let pattern: Vec<Sign> = coordinates_at(normals, &mid).iter().map(Sign::of).collect();
            if pattern.contains(&Sign::Zero) {
                return Err(Error::TheoremViolation(format!(
                    "sector {k} evaluation point lies on a line"
                )));
            }
            Ok(pattern)
        })
        .collect::<Result<_>>()?;

    for k in 0..2 * m {
        let diff = sectors[k]
            .iter()
            .zip(&sectors[(k + 1) % (2 * m)])
            .filter(|(a, b)| a != b)
            .count();
        if diff != 1 {
            return Err(Error::TheoremViolation(format!(
                "sectors {k} and {} differ in {diff} coordinates",
                (k + 1) % (2 * m)
            )));
        }
    }

    Ok(SweepOrder { crossings, sectors })
}

/// Convenience: plane, normals and sweep in one go.
pub fn sweep_configuration(c: &Configuration) -> Result<(PlaneBasis, SweepOrder)> {
    let basis = compute_plane(c)?;
    let normals = line_normals(&basis)?;
    let order = sweep(&normals)?;
    Ok((basis, order))
}

/// The interior common point of the hulls of `{A_i : w_i > 0}` and
/// `{A_i : w_i < 0}` for a nonzero solution `w` of the homogeneous
/// system, with strictly positive coefficient lists summing to one.
pub fn lemma_intersection_point(c: &Configuration, witness: &[Rational]) -> Result<CommonPoint> {
    let m = c.point_count();
    if witness.len() != m {
        return Err(Error::InvalidWitness(format!(
            "witness length {} does not match {m} points",
            witness.len()
        )));
    }
    if witness.iter().all(|w| w.is_zero()) {
        return Err(Error::InvalidWitness("witness is the zero vector".to_string()));
    }
    let image = c.build_system().mul_vec(witness)?;
    if image.iter().any(|x| !x.is_zero()) {
        return Err(Error::InvalidWitness(
            "witness does not solve the homogeneous system".to_string(),
        ));
    }

    let total: Rational = witness.iter().filter(|w| w.is_positive()).sum();
    let mut plus = ConvexWitness::new(Vec::new(), Vec::new());
    let mut minus = ConvexWitness::new(Vec::new(), Vec::new());
    for (i, w) in witness.iter().enumerate() {
        if w.is_positive() {
            plus.indices.push(i + 1);
            plus.coeffs.push(w / &total);
        } else if w.is_negative() {
            minus.indices.push(i + 1);
            minus.coeffs.push(-w / &total);
        }
    }
    let point = plus.evaluate(c);
    debug_assert_eq!(point, minus.evaluate(c));
    Ok(CommonPoint { point, plus, minus })
}

fn canonical_pair(a: Vec<usize>, b: Vec<usize>) -> (Vec<usize>, Vec<usize>) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Even n: finds a crossing whose pattern has exactly (n+2)/2 signs of
/// each kind (the first such in sweep order) and certifies the interior
/// intersection of the two hulls it names.
pub fn find_even_partition(c: &Configuration) -> Result<PartitionResult> {
    let n = c.dim();
    if n % 2 != 0 {
        return Err(Error::Parity { required: "even", n });
    }
    let (basis, order) = sweep_configuration(c)?;
    let half = (n + 2) / 2;
    let crossing = order
        .crossings()
        .iter()
        .find(|cr| cr.plus_count() == half && cr.minus_count() == half)
        .ok_or_else(|| {
            Error::TheoremViolation("no balanced crossing on the sweep circle".to_string())
        })?;

    let witness = basis.solution_at(&crossing.direction);
    let common = lemma_intersection_point(c, &witness)?;
    let (first, second) = canonical_pair(common.plus.indices.clone(), common.minus.indices.clone());
    let (first_witness, second_witness) = if first == common.plus.indices {
        (common.plus, common.minus)
    } else {
        (common.minus, common.plus)
    };
    Ok(PartitionResult {
        parity: Parity::Even,
        first,
        second,
        certificate: Certificate::InteriorIntersection {
            point: common.point,
            first: first_witness,
            second: second_witness,
        },
    })
}

/// Odd n: finds the first adjacent pair of crossings in sweep order
/// where the first has (n+3)/2 positive signs and the second (n+3)/2
/// negative signs. The positive labels of the first and the negative
/// labels of the second partition all n+3 points into the linked pair,
/// and the two lemma points become the linking certificate.
pub fn find_odd_partition(c: &Configuration) -> Result<PartitionResult> {
    let n = c.dim();
    if n % 2 != 1 {
        return Err(Error::Parity { required: "odd", n });
    }
    let (basis, order) = sweep_configuration(c)?;
    let big = (n + 3) / 2;
    let count = order.crossings().len();
    let (x1, x2) = (0..count)
        .map(|k| (&order.crossings()[k], &order.crossings()[(k + 1) % count]))
        .find(|(a, b)| a.plus_count() == big && b.minus_count() == big)
        .ok_or_else(|| {
            Error::TheoremViolation("no adjacent crossing pair realizes the split".to_string())
        })?;

    let p1 = x1.labels_with(Sign::Plus);
    let n2 = x2.labels_with(Sign::Minus);
    if p1.len() + n2.len() != c.point_count() || p1.iter().any(|l| n2.contains(l)) {
        return Err(Error::TheoremViolation(format!(
            "adjacent crossings produced a non-partition {p1:?} / {n2:?}"
        )));
    }

    // Lemma point of x1: interior to simplex(p1), on the facet of
    // simplex(n2) opposite x1's vanishing coordinate.
    let w1 = lemma_intersection_point(c, &basis.solution_at(&x1.direction))?;
    // Lemma point of x2: interior to simplex(n2), on the facet of
    // simplex(p1) opposite x2's vanishing coordinate.
    let w2 = lemma_intersection_point(c, &basis.solution_at(&x2.direction))?;

    let (first, second) = canonical_pair(p1.clone(), n2.clone());
    Ok(PartitionResult {
        parity: Parity::Odd,
        first,
        second,
        certificate: Certificate::Linking {
            p1,
            n2,
            boundary_of_p1: PierceWitness {
                point: w2.point.clone(),
                facet: w2.plus,
                interior: w2.minus,
            },
            boundary_of_n2: PierceWitness {
                point: w1.point.clone(),
                facet: w1.minus,
                interior: w1.plus,
            },
        },
    })
}

/// Dispatches on the parity of the dimension.
pub fn find_partition(c: &Configuration) -> Result<PartitionResult> {
    if c.dim() % 2 == 0 {
        find_even_partition(c)
    } else {
        find_odd_partition(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn config_i64(dim: usize, pts: &[&[i64]]) -> Configuration {
        Configuration::new(
            dim,
            pts.iter().map(|p| p.iter().map(|&x| rat(x)).collect()).collect(),
        )
        .unwrap()
    }

    fn segment_points() -> Configuration {
        config_i64(1, &[&[0], &[1], &[2], &[3]])
    }

    fn pentagon() -> Configuration {
        config_i64(2, &[&[0, 0], &[1, 1], &[2, 4], &[3, 9], &[4, 16]])
    }

    fn vec_i64(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn dir_i64(s: i64, t: i64) -> (Rational, Rational) {
        (rat(s), rat(t))
    }

    #[test]
    fn plane_basis_of_the_segment_fixture() {
        let basis = compute_plane(&segment_points()).unwrap();
        assert_eq!(basis.u(), vec_i64(&[1, -2, 1, 0]).as_slice());
        assert_eq!(basis.v(), vec_i64(&[2, -3, 0, 1]).as_slice());
    }

    #[test]
    fn compute_plane_rejects_degenerate_input() {
        let c = config_i64(2, &[&[0, 0], &[1, 1], &[2, 2], &[5, 0], &[0, 7]]);
        match compute_plane(&c) {
            Err(Error::NotGeneralPosition(v)) => assert_eq!(v, vec![1, 2, 3]),
            other => panic!("expected a general-position rejection, got {other:?}"),
        }
    }

    #[test]
    fn normals_of_the_segment_fixture() {
        let basis = compute_plane(&segment_points()).unwrap();
        let normals = line_normals(&basis).unwrap();
        let pairs: Vec<(i64, i64)> = vec![(1, 2), (-2, -3), (1, 0), (0, 1)];
        assert_eq!(normals.len(), 4);
        for (n, (a, b)) in normals.iter().zip(pairs) {
            assert_eq!((n.a.clone(), n.b.clone()), (rat(a), rat(b)));
        }
        // All six 2x2 cross determinants are nonzero.
        for (i, ni) in normals.iter().enumerate() {
            for nj in &normals[i + 1..] {
                assert!(!(&ni.a * &nj.b - &ni.b * &nj.a).is_zero());
            }
        }
    }

    #[test]
    fn sweep_order_of_the_segment_fixture() {
        let (_, order) = sweep_configuration(&segment_points()).unwrap();
        let got: Vec<(Rational, Rational)> = order
            .crossings()
            .iter()
            .map(|c| c.direction.clone())
            .collect();
        // Same circular order as listed from (1,0); our circle starts at
        // the canonical representative of line 1, which is (2,-1).
        let expected = [
            dir_i64(2, -1),
            dir_i64(1, 0),
            dir_i64(0, 1),
            dir_i64(-3, 2),
            dir_i64(-2, 1),
            dir_i64(-1, 0),
            dir_i64(0, -1),
            dir_i64(3, -2),
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn crossing_patterns_of_the_segment_fixture() {
        let (_, order) = sweep_configuration(&segment_points()).unwrap();
        let at = order
            .crossings()
            .iter()
            .find(|c| c.direction == dir_i64(-2, 1))
            .unwrap();
        assert_eq!(at.line, 1);
        assert_eq!(at.pattern, vec![Sign::Zero, Sign::Plus, Sign::Minus, Sign::Plus]);
    }

    #[test]
    fn sweep_structure_invariants_hold() {
        for c in [segment_points(), pentagon()] {
            let (_, order) = sweep_configuration(&c).unwrap();
            let m = c.point_count();
            assert_eq!(order.crossings().len(), 2 * m);
            assert_eq!(order.sectors().len(), 2 * m);
            for cr in order.crossings() {
                let zeros = cr.pattern.iter().filter(|s| **s == Sign::Zero).count();
                assert_eq!(zeros, 1);
            }
            // Each coordinate flips exactly twice around the full circle.
            for coord in 0..m {
                let flips = (0..2 * m)
                    .filter(|&k| {
                        order.sectors()[k][coord] != order.sectors()[(k + 1) % (2 * m)][coord]
                    })
                    .count();
                assert_eq!(flips, 2);
            }
        }
    }

    #[test]
    fn odd_fixture_partition_and_roles() {
        let r = find_odd_partition(&segment_points()).unwrap();
        assert_eq!(r.parity, Parity::Odd);
        assert_eq!(r.first, vec![1, 3]);
        assert_eq!(r.second, vec![2, 4]);
        match &r.certificate {
            Certificate::Linking { p1, n2, .. } => {
                assert_eq!(p1, &vec![2, 4]);
                assert_eq!(n2, &vec![1, 3]);
            }
            other => panic!("expected a linking certificate, got {other:?}"),
        }
        assert!(crate::verify::verify_certificate(&segment_points(), &r).unwrap());
    }

    #[test]
    fn even_fixture_partition_is_a_crossing_diagonal_pair() {
        let r = find_even_partition(&pentagon()).unwrap();
        assert_eq!(r.parity, Parity::Even);
        assert_eq!((r.first.clone(), r.second.clone()), (vec![2, 4], vec![3, 5]));
        assert!(crate::verify::verify_certificate(&pentagon(), &r).unwrap());
    }

    #[test]
    fn parity_mismatches_are_rejected() {
        assert!(matches!(
            find_even_partition(&segment_points()),
            Err(Error::Parity { required: "even", .. })
        ));
        assert!(matches!(
            find_odd_partition(&pentagon()),
            Err(Error::Parity { required: "odd", .. })
        ));
    }

    #[test]
    fn lemma_point_of_the_segment_fixture() {
        let c = segment_points();
        let w = lemma_intersection_point(&c, &vec_i64(&[1, -2, 1, 0])).unwrap();
        assert_eq!(w.point, vec_i64(&[1]));
        assert_eq!(w.plus.indices, vec![1, 3]);
        assert_eq!(w.plus.coeffs, vec![Rational::new(1.into(), 2.into()); 2]);
        assert_eq!(w.minus.indices, vec![2]);
        assert_eq!(w.minus.coeffs, vec![rat(1)]);
    }

    #[test]
    fn lemma_point_ignores_positive_scaling_and_swaps_under_negation() {
        let c = segment_points();
        let base = lemma_intersection_point(&c, &vec_i64(&[1, -2, 1, 0])).unwrap();
        let scaled_witness: Vec<Rational> = vec_i64(&[1, -2, 1, 0])
            .iter()
            .map(|x| x * Rational::new(7.into(), 3.into()))
            .collect();
        let scaled = lemma_intersection_point(&c, &scaled_witness).unwrap();
        assert_eq!(base, scaled);

        let negated = lemma_intersection_point(&c, &vec_i64(&[-1, 2, -1, 0])).unwrap();
        assert_eq!(negated.point, base.point);
        assert_eq!(negated.plus, base.minus);
        assert_eq!(negated.minus, base.plus);
    }

    #[test]
    fn lemma_point_rejects_bad_witnesses() {
        let c = segment_points();
        assert!(matches!(
            lemma_intersection_point(&c, &vec_i64(&[0, 0, 0, 0])),
            Err(Error::InvalidWitness(_))
        ));
        assert!(matches!(
            lemma_intersection_point(&c, &vec_i64(&[1, 0, 0, -1])),
            Err(Error::InvalidWitness(_))
        ));
        assert!(matches!(
            lemma_intersection_point(&c, &vec_i64(&[1, -2, 1])),
            Err(Error::InvalidWitness(_))
        ));
    }
}
