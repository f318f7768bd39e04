//! Affine step weights and the two-term triangular recurrence they define.
//!
//! A coefficient pair (a, b) determines the array
//!
//! ```text
//! T(n,k) = a(n,k) T(n-1,k) + b(n,k) T(n-1,k-1),    T(0,0) = 1,
//! ```
//!
//! with T(n,k) = 0 outside 0 <= k <= n. Binomial coefficients, Stirling
//! numbers of both kinds and Eulerian numbers are all instances. The
//! recurrence run here is the ground truth that every explicit formula in
//! the other modules is checked against.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, rat, Rational};

/// Exact affine function (n, k) -> c0 + c1*k + c2*n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineWeight {
    pub c0: Rational,
    pub c1: Rational,
    pub c2: Rational,
}

impl AffineWeight {
    pub fn new(c0: Rational, c1: Rational, c2: Rational) -> Self {
        AffineWeight { c0, c1, c2 }
    }

    pub fn from_integers(c0: i64, c1: i64, c2: i64) -> Self {
        AffineWeight::new(rat(c0), rat(c1), rat(c2))
    }

    /// Evaluates the weight at any integer point; total and exact.
    pub fn eval(&self, n: i64, k: i64) -> Rational {
        &self.c0 + &self.c1 * rat(k) + &self.c2 * rat(n)
    }

    /// The constant weight 1.
    pub fn unit() -> Self {
        AffineWeight::from_integers(1, 0, 0)
    }
}

impl fmt::Display for AffineWeight {
    /// Comma triple `c0,c1,c2`, matching the CLI flag syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{}",
            format_rational(&self.c0),
            format_rational(&self.c1),
            format_rational(&self.c2)
        )
    }
}

/// East / North-East step weights defining one triangular array.
///
/// Zero weights are allowed: the recurrence and all sum-over-paths
/// formulas stay valid, and classical instances (Stirling, Eulerian) do
/// hit zero on the boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GkpSpec {
    /// Weight of the East step entering (n, k).
    pub a: AffineWeight,
    /// Weight of the North-East step entering (n, k).
    pub b: AffineWeight,
}

impl GkpSpec {
    pub fn new(a: AffineWeight, b: AffineWeight) -> Self {
        GkpSpec { a, b }
    }

    pub fn from_integers(a: [i64; 3], b: [i64; 3]) -> Self {
        GkpSpec::new(
            AffineWeight::from_integers(a[0], a[1], a[2]),
            AffineWeight::from_integers(b[0], b[1], b[2]),
        )
    }

    /// a = 1, b = 1: Pascal's triangle.
    pub fn binomial() -> Self {
        GkpSpec::from_integers([1, 0, 0], [1, 0, 0])
    }

    /// a = k, b = 1: Stirling numbers of the second kind.
    pub fn stirling2() -> Self {
        GkpSpec::from_integers([0, 1, 0], [1, 0, 0])
    }

    /// a = k + 1, b = n - k: Eulerian numbers.
    pub fn eulerian() -> Self {
        GkpSpec::from_integers([1, 1, 0], [0, -1, 1])
    }
}

impl fmt::Display for GkpSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a=({});b=({})", self.a, self.b)
    }
}

/// Lower-triangular array of exact values, rows 0..=n_max; row n holds
/// the n+1 entries T(n,0), ..., T(n,n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    rows: Vec<Vec<Rational>>,
}

impl Triangle {
    /// Runs the defining recurrence from T(0,0) = 1 up to row n_max.
    /// Out-of-range references T(n-1,-1) and T(n-1,n) contribute zero, so
    /// the recurrence is total for every coefficient choice.
    pub fn from_recurrence(spec: &GkpSpec, n_max: usize) -> Triangle {
        let mut rows = Vec::with_capacity(n_max + 1);
        rows.push(vec![Rational::one()]);
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            for k in 0..=n {
                let mut v = Rational::zero();
                if k < n {
                    v += spec.a.eval(n as i64, k as i64) * &prev[k];
                }
                if k > 0 {
                    v += spec.b.eval(n as i64, k as i64) * &prev[k - 1];
                }
                row.push(v);
            }
            rows.push(row);
        }
        Triangle { rows }
    }

    /// Index of the last materialized row.
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> Result<&[Rational]> {
        self.rows.get(n).map(Vec::as_slice).ok_or(Error::RowOutOfRange {
            n,
            n_max: self.n_max(),
        })
    }

    /// T(n,k), extended by zero outside the triangle.
    pub fn get(&self, n: usize, k: usize) -> Rational {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Sum of row n.
    pub fn row_sum(&self, n: usize) -> Result<Rational> {
        Ok(self.row(n)?.iter().fold(Rational::zero(), |acc, v| acc + v))
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.rows.iter().map(Vec::as_slice)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_eval_points() {
        assert_eq!(AffineWeight::from_integers(1, 1, 0).eval(3, 2), rat(3));
        assert_eq!(AffineWeight::from_integers(0, -1, 1).eval(5, 2), rat(3));
        let half = rat(1) / rat(2);
        let w = AffineWeight::new(half.clone(), rat(0), half);
        assert_eq!(w.eval(3, 0), rat(2));
        // negative arguments are fine
        assert_eq!(AffineWeight::from_integers(0, 1, 1).eval(-2, -3), rat(-5));
    }

    #[test]
    fn binomial_row() {
        let t = Triangle::from_recurrence(&GkpSpec::binomial(), 4);
        let row: Vec<_> = t.row(4).unwrap().to_vec();
        assert_eq!(row, vec![rat(1), rat(4), rat(6), rat(4), rat(1)]);
    }

    #[test]
    fn stirling_cell() {
        let t = Triangle::from_recurrence(&GkpSpec::stirling2(), 4);
        assert_eq!(t.get(4, 2), rat(7));
    }

    #[test]
    fn zero_rows_is_just_the_seed() {
        let t = Triangle::from_recurrence(&GkpSpec::from_integers([2, -1, 3], [0, 5, -2]), 0);
        assert_eq!(t.n_max(), 0);
        assert_eq!(t.row(0).unwrap(), &[rat(1)]);
    }

    #[test]
    fn row_sums() {
        let t = Triangle::from_recurrence(&GkpSpec::binomial(), 5);
        assert_eq!(t.row_sum(5).unwrap(), rat(32));
        assert_eq!(t.row_sum(0).unwrap(), rat(1));
        let e = Triangle::from_recurrence(&GkpSpec::eulerian(), 4);
        assert_eq!(e.row_sum(4).unwrap(), rat(24));
    }

    #[test]
    fn row_out_of_range() {
        let t = Triangle::from_recurrence(&GkpSpec::binomial(), 2);
        assert_eq!(
            t.row_sum(3),
            Err(Error::RowOutOfRange { n: 3, n_max: 2 })
        );
    }

    #[test]
    fn edge_products() {
        // T(n,0) multiplies the a-weights down the bottom edge, T(n,n) the
        // b-weights up the diagonal.
        let spec = GkpSpec::from_integers([2, 0, 1], [1, 1, 0]);
        let t = Triangle::from_recurrence(&spec, 5);
        let mut expect_bottom = rat(1);
        let mut expect_diag = rat(1);
        for i in 1..=5 {
            expect_bottom *= spec.a.eval(i, 0);
            expect_diag *= spec.b.eval(i, i);
            assert_eq!(t.get(i as usize, 0), expect_bottom);
            assert_eq!(t.get(i as usize, i as usize), expect_diag);
        }
    }

    #[test]
    fn outside_entries_are_zero() {
        let t = Triangle::from_recurrence(&GkpSpec::binomial(), 3);
        assert_eq!(t.get(2, 3), rat(0));
        assert_eq!(t.get(9, 0), rat(0));
    }

    #[test]
    fn spec_display_roundtrips_the_flag_syntax() {
        let spec = GkpSpec::from_integers([1, 1, 0], [0, -1, 1]);
        assert_eq!(spec.to_string(), "a=(1,1,0);b=(0,-1,1)");
    }
}
