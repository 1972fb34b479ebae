//! Input point sets and the general-position certificate.
//!
//! A configuration holds exactly n+3 points with exact rational
//! coordinates in R^n. Points carry 1-based labels `1..=n+3` everywhere
//! in the public surface (reports, partitions, certificates).
//!
//! General position means no n+1 of the points lie in a common
//! hyperplane; equivalently, every (n+1)-column minor of the homogenized
//! system matrix is nonzero. Degenerate configurations are representable
//! on purpose — only the sweep refuses them — so the checker itself can
//! be exercised on bad inputs.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Mat, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    dim: usize,
    points: Vec<Vec<Rational>>,
}

/// Outcome of the general-position check. `violation`, present iff the
/// check failed, names the lexicographically first set of n+1 point
/// labels that lie in a common hyperplane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralPositionReport {
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Vec<usize>>,
}

impl Configuration {
    /// Builds a configuration of `points.len() - 3` dimensions. Only the
    /// shape is validated here; general position is a separate check.
    pub fn new(dim: usize, points: Vec<Vec<Rational>>) -> Result<Configuration> {
        if dim == 0 {
            return Err(Error::Shape("dimension must be at least 1".to_string()));
        }
        if points.len() != dim + 3 {
            return Err(Error::Shape(format!(
                "dimension {dim} requires exactly {} points, got {}",
                dim + 3,
                points.len()
            )));
        }
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::Shape(format!(
                "point of length {} in a dimension-{dim} configuration",
                p.len()
            )));
        }
        Ok(Configuration { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    /// All labels, `1..=n+3`.
    pub fn labels(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.points.len()
    }

    /// Coordinates of the point with the given 1-based label.
    pub fn point(&self, label: usize) -> &[Rational] {
        &self.points[label - 1]
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    /// The (n+1) x (n+3) matrix of the homogeneous system: column i is
    /// the coordinates of point i with a 1 appended, so its null space
    /// is exactly the solutions of
    /// `sum x_i A_i = 0, sum x_i = 0`.
    pub fn build_system(&self) -> Mat {
        let n = self.dim;
        let m = self.points.len();
        let mut sys = Mat::zero(n + 1, m);
        for (col, p) in self.points.iter().enumerate() {
            for (row, coord) in p.iter().enumerate() {
                *sys.at_mut(row, col) = coord.clone();
            }
            *sys.at_mut(n, col) = Rational::from_integer(1.into());
        }
        sys
    }

    /// Checks every (n+1)-subset of points for affine independence and
    /// reports the lexicographically first violating subset.
    ///
    /// Evaluated through the null space rather than by expanding all
    /// C(n+3, 2) minors of order n+1: a subset of n+1 columns is
    /// dependent iff some nonzero solution vanishes on the two excluded
    /// coordinates, i.e. iff the 2x2 minor of the null-space basis at
    /// the excluded pair is zero. The observable result is identical
    /// and the test suite holds it against a direct minor expansion.
    pub fn check_general_position(&self) -> GeneralPositionReport {
        let m = self.points.len();
        let basis = self.build_system().null_space_basis();
        if basis.len() != 2 {
            // Rank-deficient system: every subset of n+1 columns is
            // dependent, so the first one lexicographically violates.
            return GeneralPositionReport {
                ok: false,
                violation: Some((1..=self.dim + 1).collect()),
            };
        }
        let (u, v) = (&basis[0], &basis[1]);
        let mut violation: Option<Vec<usize>> = None;
        for i in 0..m {
            for j in i + 1..m {
                if (&u[i] * &v[j] - &u[j] * &v[i]).is_zero() {
                    let subset: Vec<usize> =
                        (1..=m).filter(|&l| l != i + 1 && l != j + 1).collect();
                    if violation.as_ref().is_none_or(|best| subset < *best) {
                        violation = Some(subset);
                    }
                }
            }
        }
        GeneralPositionReport { ok: violation.is_none(), violation }
    }

    /// Errors with the violating subset unless in general position.
    pub fn require_general_position(&self) -> Result<()> {
        let report = self.check_general_position();
        match report.violation {
            Some(v) => Err(Error::NotGeneralPosition(v)),
            None => Ok(()),
        }
    }

    /// Applies the affine map `p -> map * p + shift` to every point.
    /// The map must be square n x n with nonzero determinant.
    pub fn apply_affine(&self, map: &Mat, shift: &[Rational]) -> Result<Configuration> {
        if map.rows() != self.dim || map.cols() != self.dim || shift.len() != self.dim {
            return Err(Error::Dimension(format!(
                "affine map must be {0}x{0} with a length-{0} shift",
                self.dim
            )));
        }
        if map.determinant()?.is_zero() {
            return Err(Error::Degenerate("affine map is not invertible".to_string()));
        }
        let points = self
            .points
            .iter()
            .map(|p| {
                let mut q = map.mul_vec(p).expect("dimension checked");
                for (qi, si) in q.iter_mut().zip(shift) {
                    *qi += si;
                }
                q
            })
            .collect();
        Configuration::new(self.dim, points)
    }

    /// Relabels points: new point `i` is old point `perm[i-1]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Configuration> {
        let m = self.points.len();
        let mut seen = vec![false; m];
        if perm.len() != m || !perm.iter().all(|&l| (1..=m).contains(&l) && !std::mem::replace(&mut seen[l - 1], true)) {
            return Err(Error::Shape(format!("not a permutation of 1..={m}")));
        }
        let points = perm.iter().map(|&l| self.points[l - 1].clone()).collect();
        Configuration::new(self.dim, points)
    }
}
