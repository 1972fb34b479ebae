//! Exact rational scalars and the dense linear algebra everything else
//! rests on: determinants, reduced row echelon form, null spaces and
//! linear solves.
//!
//! All arithmetic is exact. No floating point enters any predicate; a
//! value is zero iff it is exactly zero. Elimination pivots are chosen
//! deterministically (leftmost column, then topmost remaining row) so
//! that results are reproducible across runs and platforms.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always stored reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for small integer constants.
pub fn rat(i: i64) -> Rational {
    Rational::from_integer(BigInt::from(i))
}

/// Exact sign of a rational quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }
}

/// Parses a rational from text.
///
/// Accepted forms: an integer `p`, a fraction `p/q`, or a plain decimal
/// `d.ddd` (read exactly, with a power-of-ten denominator). Scientific
/// notation is rejected so no input can silently lose precision.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty number".to_string());
    }
    if s.contains(['e', 'E']) {
        return Err(format!("scientific notation is not accepted: {s:?}"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator in {s:?}"))?;
        let den: BigInt = den
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator in {s:?}"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || frac_part.contains(['+', '-']) {
            return Err(format!("bad decimal {s:?}"));
        }
        let (sign, digits) = match int_part.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        let digits = if digits.is_empty() { "0" } else { digits };
        let mantissa: BigInt = format!("{digits}{frac_part}")
            .parse()
            .map_err(|_| format!("bad decimal {s:?}"))?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        return Ok(Rational::new(BigInt::from(sign) * mantissa, scale));
    }
    let int: BigInt = s.parse().map_err(|_| format!("bad integer {s:?}"))?;
    Ok(Rational::from_integer(int))
}

/// Formats a rational as `p` or `p/q`; parses back to the same value.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Outcome of a general linear solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Unique(Vec<Rational>),
    Inconsistent,
    Underdetermined,
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Mat {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Mat> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Mat { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Mat> {
        let height = rows.len();
        let width = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::Dimension("ragged rows".to_string()));
        }
        Ok(Mat {
            rows: height,
            cols: width,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Keeps the named columns, in the order given.
    pub fn select_columns(&self, cols: &[usize]) -> Mat {
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                entries.push(self.at(r, c).clone());
            }
        }
        Mat {
            rows: self.rows,
            cols: cols.len(),
            entries,
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "matrix has {} columns, vector has length {}",
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows).map(|r| dot(self.row(r), v)).collect())
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    ///
    /// Pivots are the first nonzero entry scanning each column top-down
    /// among the remaining rows, so the result is canonical for a given
    /// matrix.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(src) = (pivot_row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(pivot_row, src);
            let inv = self.at(pivot_row, col).recip();
            self.scale_row(pivot_row, &inv);
            for r in 0..self.rows {
                if r != pivot_row && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).clone();
                    self.row_axpy(r, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.rref_in_place().len()
    }

    /// Exact determinant by pivoted elimination.
    pub fn determinant(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(src) = (col..n).find(|&r| !work.at(r, col).is_zero()) else {
                return Ok(Rational::zero());
            };
            if src != col {
                work.swap_rows(col, src);
                det = -det;
            }
            let pivot = work.at(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                if !work.at(r, col).is_zero() {
                    let factor = work.at(r, col) / &pivot;
                    work.row_axpy(r, col, &factor);
                }
            }
        }
        Ok(det)
    }

    /// Basis of `{x : self * x = 0}`.
    ///
    /// One vector per free (non-pivot) column, in ascending column
    /// order: the free coordinate is set to 1 and the pivot coordinates
    /// are read off the reduced form. Deterministic for a given matrix;
    /// a full-rank square matrix yields an empty basis.
    pub fn null_space_basis(&self) -> Vec<Vec<Rational>> {
        let mut work = self.clone();
        let pivots = work.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut w = vec![Rational::zero(); self.cols];
                w[f] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    w[p] = -work.at(r, f).clone();
                }
                w
            })
            .collect()
    }

    /// Solves `self * x = b` for square `self`; `None` when singular.
    pub fn solve_square(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "solve_square on non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        match self.solve(b)? {
            SolveOutcome::Unique(x) => Ok(Some(x)),
            _ => Ok(None),
        }
    }

    /// General exact solve of `self * x = b` via the augmented RREF.
    pub fn solve(&self, b: &[Rational]) -> Result<SolveOutcome> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!(
                "matrix has {} rows, right-hand side has length {}",
                self.rows,
                b.len()
            )));
        }
        let mut aug = Mat::zero(self.rows, self.cols + 1);
        for (r, rhs) in b.iter().enumerate() {
            for c in 0..self.cols {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, self.cols) = rhs.clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return Ok(SolveOutcome::Inconsistent);
        }
        if pivots.len() < self.cols {
            return Ok(SolveOutcome::Underdetermined);
        }
        // Full column rank: pivot r sits in column r.
        let x = (0..self.cols).map(|r| aug.at(r, self.cols).clone()).collect();
        Ok(SolveOutcome::Unique(x))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Rational) {
        for c in 0..self.cols {
            let v = self.at(r, c) * factor;
            *self.at_mut(r, c) = v;
        }
    }

    /// row[r] -= factor * row[src]
    fn row_axpy(&mut self, r: usize, src: usize, factor: &Rational) {
        for c in 0..self.cols {
            let delta = self.at(src, c) * factor;
            let v = self.at(r, c) - delta;
            *self.at_mut(r, c) = v;
        }
    }
}

#[cfg(test)]
pub(crate) fn mat_i64(rows: &[&[i64]]) -> Mat {
    Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vec_i64(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn determinant_identity_and_small() {
        assert_eq!(Mat::identity(2).determinant().unwrap(), rat(1));
        let m = mat_i64(&[&[0, 1], &[1, 1]]);
        assert_eq!(m.determinant().unwrap(), rat(-1));
    }

    #[test]
    fn determinant_vandermonde_matches_product_formula() {
        // Independent oracle: det of the Vandermonde matrix on t_1..t_k
        // is the product of (t_j - t_i) over i < j.
        let ts = [1i64, 2, 3, 4];
        let rows: Vec<Vec<Rational>> = (0..4)
            .map(|p| ts.iter().map(|&t| rat(t.pow(p as u32))).collect())
            .collect();
        let m = Mat::from_rows(rows).unwrap();
        let mut expected = rat(1);
        for i in 0..4 {
            for j in i + 1..4 {
                expected *= rat(ts[j] - ts[i]);
            }
        }
        assert_eq!(expected, rat(12));
        assert_eq!(m.determinant().unwrap(), expected);
    }

    #[test]
    fn determinant_rejects_non_square() {
        let m = mat_i64(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(matches!(m.determinant(), Err(Error::Dimension(_))));
    }

    #[test]
    fn null_space_of_homogenized_line() {
        let m = mat_i64(&[&[0, 1, 2, 3], &[1, 1, 1, 1]]);
        let basis = m.null_space_basis();
        assert_eq!(basis, vec![vec_i64(&[1, -2, 1, 0]), vec_i64(&[2, -3, 0, 1])]);
        for w in &basis {
            assert!(m.mul_vec(w).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn null_space_trivial_cases() {
        assert!(Mat::identity(2).null_space_basis().is_empty());
        let m = mat_i64(&[&[1, 1]]);
        assert_eq!(m.null_space_basis(), vec![vec_i64(&[-1, 1])]);
    }

    #[test]
    fn solve_square_examples() {
        let id = Mat::identity(2);
        assert_eq!(id.solve_square(&vec_i64(&[3, 5])).unwrap(), Some(vec_i64(&[3, 5])));

        let m = mat_i64(&[&[2, 0], &[0, 4]]);
        let x = m.solve_square(&vec_i64(&[1, 1])).unwrap().unwrap();
        assert_eq!(x, vec![Rational::new(1.into(), 2.into()), Rational::new(1.into(), 4.into())]);

        let singular = mat_i64(&[&[1, 1], &[2, 2]]);
        assert_eq!(singular.solve_square(&vec_i64(&[1, 0])).unwrap(), None);
        assert_eq!(singular.solve_square(&vec_i64(&[1, 2])).unwrap(), None);
    }

    #[test]
    fn parse_and_format_rationals() {
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert_eq!(parse_rational("-3/6").unwrap(), Rational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational("12.5").unwrap(), Rational::new(25.into(), 2.into()));
        assert_eq!(parse_rational("-0.75").unwrap(), Rational::new((-3).into(), 4.into()));
        assert_eq!(parse_rational("-.5").unwrap(), Rational::new((-1).into(), 2.into()));
        assert!(parse_rational("1e5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert_eq!(format_rational(&rat(-4)), "-4");
        assert_eq!(format_rational(&Rational::new(25.into(), 10.into())), "5/2");
    }

    // Test-side rank oracle: largest k with a nonzero k x k minor.
    fn rank_by_minors(m: &Mat) -> usize {
        use itertools::Itertools;
        for k in (1..=m.rows().min(m.cols())).rev() {
            for rs in (0..m.rows()).combinations(k) {
                for cs in (0..m.cols()).combinations(k) {
                    let entries: Vec<Rational> = rs
                        .iter()
                        .flat_map(|&r| cs.iter().map(move |&c| m.at(r, c).clone()))
                        .collect();
                    let sub = Mat::new(k, k, entries).unwrap();
                    if !sub.determinant().unwrap().is_zero() {
                        return k;
                    }
                }
            }
        }
        0
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
    }

    fn small_matrix() -> impl Strategy<Value = Mat> {
        (1usize..=4, 1usize..=5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(small_rational(), r * c)
                .prop_map(move |entries| Mat::new(r, c, entries).unwrap())
        })
    }

    proptest! {
        #[test]
        fn null_space_vectors_are_exact_solutions(m in small_matrix()) {
            for w in m.null_space_basis() {
                prop_assert!(m.mul_vec(&w).unwrap().iter().all(|x| x.is_zero()));
            }
        }

        #[test]
        fn rank_nullity_holds_against_minor_rank(m in small_matrix()) {
            let nullity = m.null_space_basis().len();
            prop_assert_eq!(rank_by_minors(&m) + nullity, m.cols());
        }

        #[test]
        fn determinant_alternates_under_row_swap(
            entries in proptest::collection::vec(small_rational(), 16),
            a in 0usize..4, b in 0usize..4
        ) {
            prop_assume!(a != b);
            let m = Mat::new(4, 4, entries).unwrap();
            let mut swapped = m.clone();
            swapped.swap_rows(a, b);
            prop_assert_eq!(swapped.determinant().unwrap(), -m.determinant().unwrap());
        }

        #[test]
        fn solve_square_result_satisfies_system(
            entries in proptest::collection::vec(small_rational(), 9),
            rhs in proptest::collection::vec(small_rational(), 3)
        ) {
            let m = Mat::new(3, 3, entries).unwrap();
            if let Some(x) = m.solve_square(&rhs).unwrap() {
                prop_assert_eq!(m.mul_vec(&x).unwrap(), rhs);
            } else {
                prop_assert!(m.determinant().unwrap().is_zero());
            }
        }
    }
}
