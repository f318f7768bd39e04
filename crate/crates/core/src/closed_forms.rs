//! Alternating-sum explicit formulas and factorial-product helpers.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{binomial, factorial, rat, Rational};
use crate::triangle::{AffineWeight, GkpSpec};

/// Generalized rising factorial prod_{i=0}^{m-1} (x + i*step); the empty
/// product (m = 0) is 1.
pub fn rising_factorial(x: &Rational, step: &Rational, m: usize) -> Rational {
    (0..m)
        .map(|i| x + step * rat(i as i64))
        .product()
}

/// Alternating binomial sum for the b = 1 triangle:
///
/// ```text
/// F(n,k) = (1 / (a1^k k!)) sum_{j=0}^{k} (-1)^{k-j} C(k,j)
///                                        prod_{r=1}^{n} (a0 + a1 j + r a2)
/// ```
///
/// Requires a1 != 0 (the leading division). The division is exact: for
/// integer coefficients the result reduces to an integer.
pub fn alt_sum_b1(n: usize, k: usize, a: &AffineWeight) -> Result<Rational> {
    if a.c1.is_zero() {
        return Err(Error::Domain("alt_sum_b1 requires a1 != 0".to_string()));
    }
    if k > n {
        return Err(Error::KOutOfRange { n, k });
    }
    let mut sum = Rational::zero();
    for j in 0..=k {
        let mut term = Rational::from(binomial(k, j));
        for r in 1..=n {
            term *= &a.c0 + &a.c1 * rat(j as i64) + &a.c2 * rat(r as i64);
        }
        if (k - j) % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
    }
    let scale = num_traits::pow(a.c1.clone(), k) * Rational::from(factorial(k));
    Ok(sum / scale)
}

/// The b = b0 + b1*k case: each rise at height j contributes an extra
/// b0 + b1*j factor over the b = 1 count, so the whole cell scales by
/// the rising factorial (b0 + b1)(b0 + 2 b1)...(b0 + k b1):
///
/// ```text
/// T(n,k) = rising_factorial(b0 + b1, b1, k) * F(n,k).
/// ```
///
/// Requires a1 != 0 and b2 = 0.
pub fn alt_sum_bk(n: usize, k: usize, spec: &GkpSpec) -> Result<Rational> {
    if !spec.b.c2.is_zero() {
        return Err(Error::Domain("alt_sum_bk requires b2 = 0".to_string()));
    }
    let start = &spec.b.c0 + &spec.b.c1;
    Ok(rising_factorial(&start, &spec.b.c1, k) * alt_sum_b1(n, k, &spec.a)?)
}
