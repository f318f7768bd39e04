//! Dense exact polynomials and the factorial-basis transition identity.
//!
//! The b = 1 triangle F built from an East weight a = a0 + a1 k + a2 n is
//! a transition matrix between two graded bases of the polynomial ring:
//!
//! ```text
//! prod_{i=0}^{n-1} (x + i a2)  =  sum_{k=0}^{n} F(n,k) prod_{i=0}^{k-1} (x - a0 - a2 - i a1)
//! ```
//!
//! [`verify_transition`] checks this identity by full coefficient
//! expansion (not sampling), which is exact and cheap at the degrees this
//! crate works at.

use num_traits::{One, Zero};

use crate::rational::Rational;
use crate::triangle::{AffineWeight, GkpSpec, Triangle};

/// Univariate polynomial over the rationals. `coeffs[i]` multiplies x^i;
/// no trailing zeros are stored and the zero polynomial is the empty
/// list, so equality of values is equality of representations.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// Builds from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Poly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of x^i, zero past the end.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn scaled(&self, c: &Rational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|v| v * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    /// Multiplies by the monic linear factor (x + c).
    pub fn times_linear(&self, c: &Rational) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i + 1] += a;
            out[i] += a * c;
        }
        Poly::from_coeffs(out)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

/// Monic degree-n expansion of prod_{i=0}^{n-1} (x + i*step).
pub fn rising_basis_poly(step: &Rational, n: usize) -> Poly {
    let mut p = Poly::one();
    for i in 0..n {
        p = p.times_linear(&(step * crate::rational::rat(i as i64)));
    }
    p
}

/// Expansion of prod_{i=0}^{k-1} (x - shift - i*step).
pub fn shifted_falling_basis_poly(shift: &Rational, step: &Rational, k: usize) -> Poly {
    let mut p = Poly::one();
    for i in 0..k {
        p = p.times_linear(&(-(shift + step * crate::rational::rat(i as i64))));
    }
    p
}

/// Outcome of the expansion check at one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionCheck {
    pub n: usize,
    pub pass: bool,
    /// (coefficient index, lhs, rhs) at the first mismatch.
    pub first_diff: Option<(usize, Rational, Rational)>,
}

/// Per-degree results of [`verify_transition`].
#[derive(Debug, Clone)]
pub struct TransitionReport {
    pub a: AffineWeight,
    pub checks: Vec<TransitionCheck>,
}

impl TransitionReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Checks, for every n <= n_max, that the degree-n rising basis element
/// expands through row n of the b = 1 triangle in the shifted falling
/// basis, comparing all coefficients exactly. Failures are data, not
/// errors.
pub fn verify_transition(a: &AffineWeight, n_max: usize) -> TransitionReport {
    let spec = GkpSpec::new(a.clone(), AffineWeight::unit());
    let triangle = Triangle::from_recurrence(&spec, n_max);
    let shift = &a.c0 + &a.c2;
    let checks = (0..=n_max)
        .map(|n| {
            let lhs = rising_basis_poly(&a.c2, n);
            let mut rhs = Poly::zero();
            for k in 0..=n {
                let basis = shifted_falling_basis_poly(&shift, &a.c1, k);
                rhs = rhs.add(&basis.scaled(&triangle.get(n, k)));
            }
            let first_diff = (0..=n).find_map(|i| {
                let (l, r) = (lhs.coeff(i), rhs.coeff(i));
                (l != r).then_some((i, l, r))
            });
            TransitionCheck {
                n,
                pass: first_diff.is_none(),
                first_diff,
            }
        })
        .collect();
    TransitionReport { a: a.clone(), checks }
}

/// Applies the b = 1 triangle as a linear map taking coordinates in the
/// rising basis (index n) to coordinates in the shifted falling basis
/// (index k): out_k = sum_n v_n F(n,k). The unit vector e_n maps to row
/// n of the triangle.
pub fn change_basis(coeffs_in_rising: &[Rational], a: &AffineWeight) -> Vec<Rational> {
    if coeffs_in_rising.is_empty() {
        return Vec::new();
    }
    let n_max = coeffs_in_rising.len() - 1;
    let spec = GkpSpec::new(a.clone(), AffineWeight::unit());
    let triangle = Triangle::from_recurrence(&spec, n_max);
    (0..=n_max)
        .map(|k| {
            coeffs_in_rising
                .iter()
                .enumerate()
                .skip(k)
                .fold(Rational::zero(), |acc, (n, v)| acc + v * triangle.get(n, k))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn ints(vs: &[i64]) -> Vec<Rational> {
        vs.iter().map(|&v| rat(v)).collect()
    }

    #[test]
    fn representation_is_canonical() {
        assert!(Poly::from_coeffs(ints(&[0, 0])).is_zero());
        assert_eq!(Poly::from_coeffs(ints(&[1, 2, 0])).degree(), Some(1));
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::zero().mul(&Poly::one()), Poly::zero());
    }

    #[test]
    fn rising_basis_expansions() {
        assert_eq!(rising_basis_poly(&rat(0), 3).coeffs(), ints(&[0, 0, 0, 1]));
        assert_eq!(rising_basis_poly(&rat(1), 2).coeffs(), ints(&[0, 1, 1]));
        assert_eq!(
            rising_basis_poly(&rat(1), 3).coeffs(),
            ints(&[0, 2, 3, 1])
        );
        assert_eq!(rising_basis_poly(&rat(5), 0), Poly::one());
    }

    #[test]
    fn falling_basis_expansions() {
        assert_eq!(
            shifted_falling_basis_poly(&rat(0), &rat(1), 2).coeffs(),
            ints(&[0, -1, 1])
        );
        assert_eq!(
            shifted_falling_basis_poly(&rat(1), &rat(0), 1).coeffs(),
            ints(&[-1, 1])
        );
        assert_eq!(shifted_falling_basis_poly(&rat(1), &rat(1), 0), Poly::one());
    }

    #[test]
    fn bases_are_graded_and_monic() {
        // each family is triangular with unit diagonal, hence a basis of
        // polynomials of any bounded degree
        for k in 0..=8usize {
            let r = rising_basis_poly(&rat(3), k);
            let f = shifted_falling_basis_poly(&rat(-2), &rat(5), k);
            assert_eq!(r.degree(), Some(k));
            assert_eq!(f.degree(), Some(k));
            assert_eq!(r.coeff(k), rat(1));
            assert_eq!(f.coeff(k), rat(1));
        }
    }

    #[test]
    fn transition_on_classical_instances() {
        // x^n through falling factorials: Stirling numbers of the 2nd kind
        let report = verify_transition(&AffineWeight::from_integers(0, 1, 0), 6);
        assert!(report.all_pass());

        // n = 1 by hand: x = 1 + (x - 1)
        let report = verify_transition(&AffineWeight::from_integers(0, 0, 1), 1);
        assert!(report.all_pass());

        let report = verify_transition(&AffineWeight::from_integers(1, 1, 1), 6);
        assert!(report.all_pass());
    }

    #[test]
    fn transition_reports_first_mismatch() {
        // compare against a deliberately wrong expansion by shifting the
        // basis: recompute with a0 replaced by a0+1 on the rhs only
        let a = AffineWeight::from_integers(0, 1, 0);
        let spec = GkpSpec::new(a.clone(), AffineWeight::unit());
        let t = Triangle::from_recurrence(&spec, 3);
        let lhs = rising_basis_poly(&a.c2, 3);
        let mut rhs = Poly::zero();
        for k in 0..=3 {
            rhs = rhs.add(
                &shifted_falling_basis_poly(&rat(1), &a.c1, k).scaled(&t.get(3, k)),
            );
        }
        assert_ne!(lhs, rhs);
        // and the real check does pass
        assert!(verify_transition(&a, 3).all_pass());
    }

    #[test]
    fn change_basis_unit_vectors() {
        let a = AffineWeight::from_integers(0, 1, 0);
        let e3 = ints(&[0, 0, 0, 1]);
        assert_eq!(change_basis(&e3, &a), ints(&[0, 1, 3, 1]));

        let zero = ints(&[0, 0, 0]);
        assert_eq!(change_basis(&zero, &a), ints(&[0, 0, 0]));
        assert_eq!(change_basis(&[], &a), Vec::<Rational>::new());
    }

    #[test]
    fn change_basis_is_linear() {
        let a = AffineWeight::from_integers(2, -1, 1);
        let u = ints(&[1, 0, 2, -3, 5]);
        let v = ints(&[0, 4, -1, 7, 2]);
        let sum: Vec<Rational> = u.iter().zip(&v).map(|(x, y)| x + y).collect();
        let lhs = change_basis(&sum, &a);
        let rhs: Vec<Rational> = change_basis(&u, &a)
            .iter()
            .zip(change_basis(&v, &a))
            .map(|(x, y)| x + y)
            .collect();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn transition_identity_implies_evaluation_identity() {
        // spot-check by evaluating both sides at sample points
        let a = AffineWeight::from_integers(-1, 2, 2);
        let spec = GkpSpec::new(a.clone(), AffineWeight::unit());
        let t = Triangle::from_recurrence(&spec, 5);
        let shift = &a.c0 + &a.c2;
        for x in -3..=3i64 {
            let x = rat(x);
            let lhs = rising_basis_poly(&a.c2, 5).eval(&x);
            let rhs = (0..=5)
                .map(|k| {
                    shifted_falling_basis_poly(&shift, &a.c1, k).eval(&x) * t.get(5, k)
                })
                .fold(Rational::zero(), |acc, v| acc + v);
            assert_eq!(lhs, rhs);
        }
    }
}
