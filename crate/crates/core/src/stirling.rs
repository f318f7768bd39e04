//! Descent statistics of Stirling permutations and r-Eulerian triangles.
//!
//! Q_{m,n} is the set of words over {1,...,n} with every letter repeated
//! m times in which any letter between two equal letters exceeds them.
//! The r-Eulerian numbers B(n,k) count the words of Q_{r,n} with exactly
//! k internal descents; they satisfy
//!
//! ```text
//! B(n,k) = (rn - k + 1 - r) B(n-1,k-1) + (k+1) B(n-1,k),   B(n,0) = 1,
//! ```
//!
//! and their marked variant scales each cell by r^{n-k}. The brute-force
//! enumeration here is the oracle the recurrences and explicit sums are
//! checked against.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::compositions::raw_compositions;
use crate::error::{Error, Result};
use crate::rational::{rat, Rational};
use crate::triangle::{GkpSpec, Triangle};

/// Word over [1..=n] with every letter repeated `multiplicity` times and
/// nothing smaller between two copies of the same letter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StirlingPerm {
    word: Vec<usize>,
    multiplicity: usize,
}

impl StirlingPerm {
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    /// Number of distinct letters.
    pub fn letters(&self) -> usize {
        self.word.len().checked_div(self.multiplicity).unwrap_or(0)
    }
}

/// Checks the defining property directly: right length, m copies of each
/// letter in [1..=n], and everything between two copies of x is >= x.
/// Quadratic, meant as an independent validator at small sizes.
pub fn is_stirling_word(word: &[usize], m: usize, n: usize) -> bool {
    if word.len() != m * n {
        return false;
    }
    let mut counts = vec![0usize; n + 1];
    for &x in word {
        if x == 0 || x > n {
            return false;
        }
        counts[x] += 1;
    }
    if counts[1..].iter().any(|&c| c != m) {
        return false;
    }
    for x in 1..=n {
        let first = word.iter().position(|&w| w == x).unwrap();
        let last = word.iter().rposition(|&w| w == x).unwrap();
        if word[first..=last].iter().any(|&w| w < x) {
            return false;
        }
    }
    true
}

/// Iterator over Q_{m,n} by gap insertion: the m adjacent copies of each
/// new largest letter j go into one of m(j-1)+1 gaps of a valid word on
/// [1..=j-1], so |Q_{m,n}| = prod_{i=0}^{n-1} (m i + 1).
pub struct StirlingPerms {
    m: usize,
    gaps: Option<Vec<usize>>,
}

impl Iterator for StirlingPerms {
    type Item = StirlingPerm;

    fn next(&mut self) -> Option<StirlingPerm> {
        let gaps = self.gaps.as_mut()?;
        let mut word = Vec::with_capacity(self.m * gaps.len());
        for (j, &gap) in gaps.iter().enumerate() {
            word.splice(gap..gap, std::iter::repeat_n(j + 1, self.m));
        }
        let perm = StirlingPerm {
            word,
            multiplicity: self.m,
        };
        // odometer: gap j ranges over 0..=m*j
        let n = gaps.len();
        let mut advanced = false;
        for j in (0..n).rev() {
            if gaps[j] < self.m * j {
                gaps[j] += 1;
                for later in gaps[j + 1..].iter_mut() {
                    *later = 0;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.gaps = None;
        }
        Some(perm)
    }
}

/// Enumerates every element of Q_{m,n} exactly once.
pub fn enumerate_stirling_perms(m: usize, n: usize) -> StirlingPerms {
    assert!(m >= 1, "multiplicity must be at least 1");
    StirlingPerms {
        m,
        gaps: Some(vec![0; n]),
    }
}

/// Number of positions j with word[j] > word[j+1]; `include_final`
/// additionally counts the last position of a nonempty word, matching
/// the convention in which a word always ends with a descent.
pub fn descent_count(p: &StirlingPerm, include_final: bool) -> usize {
    let internal = p
        .word
        .windows(2)
        .filter(|w| w[0] > w[1])
        .count();
    internal + usize::from(include_final && !p.word.is_empty())
}

/// Exact distribution of descent counts over Q_{m,n}.
pub fn descent_histogram(m: usize, n: usize, include_final: bool) -> BTreeMap<usize, u64> {
    let mut hist = BTreeMap::new();
    for p in enumerate_stirling_perms(m, n) {
        *hist.entry(descent_count(&p, include_final)).or_insert(0) += 1;
    }
    hist
}

/// r-Eulerian values for rows 1..=n_max; row n stores k = 0..n-1 (the
/// k = n entry is identically zero and is not kept). Also used for the
/// marked variant, which has the same shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianTriangle {
    r: usize,
    rows: Vec<Vec<Rational>>,
}

impl EulerianTriangle {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    /// Row n (1-based), k = 0..n-1.
    pub fn row(&self, n: usize) -> Result<&[Rational]> {
        if n == 0 || n > self.rows.len() {
            return Err(Error::RowOutOfRange {
                n,
                n_max: self.rows.len(),
            });
        }
        Ok(&self.rows[n - 1])
    }

    /// B(n,k), extended by zero outside the stored rows (in particular
    /// for k >= n and for n = 0).
    pub fn get(&self, n: usize, k: usize) -> Rational {
        if n == 0 || n > self.rows.len() {
            return Rational::zero();
        }
        self.rows[n - 1]
            .get(k)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn row_sum(&self, n: usize) -> Result<Rational> {
        Ok(self.row(n)?.iter().fold(Rational::zero(), |acc, v| acc + v))
    }
}

/// Builds B by its own recurrence with the seeded boundary B(n,0) = 1.
pub fn eulerian_triangle(r: usize, n_max: usize) -> EulerianTriangle {
    assert!(r >= 1 && n_max >= 1);
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for n in 2..=n_max {
        let prev = &rows[n - 2];
        let zero = Rational::zero();
        let at = |k: usize| prev.get(k).unwrap_or(&zero);
        let mut row = Vec::with_capacity(n);
        row.push(Rational::one());
        for k in 1..n {
            let up = rat((r * n) as i64 - k as i64 + 1 - r as i64);
            row.push(up * at(k - 1) + rat(k as i64 + 1) * at(k));
        }
        rows.push(row);
    }
    EulerianTriangle { r, rows }
}

/// Same array through the generic recurrence engine: B(n+1,k) satisfies
/// the standard initial conditions with East weight k+1 and North-East
/// weight rn - k + 1, so running that array and shifting the row index
/// down by one must reproduce [`eulerian_triangle`] exactly.
pub fn eulerian_triangle_from_gkp(r: usize, n_max: usize) -> EulerianTriangle {
    assert!(r >= 1 && n_max >= 1);
    let spec = GkpSpec::from_integers([1, 1, 0], [1, -1, r as i64]);
    let shifted = Triangle::from_recurrence(&spec, n_max - 1);
    let rows = (1..=n_max)
        .map(|n| shifted.row(n - 1).expect("built above").to_vec())
        .collect();
    EulerianTriangle { r, rows }
}

/// Composition sum for B(n,k): over (t_1, ..., t_{k+1}) summing to
/// n-k-1,
///
/// ```text
/// prod_{i=1}^{k+1} i^{t_i} * prod_{i=1}^{k} (r (t_1+...+t_i) + i (r-1) + 1).
/// ```
///
/// The second product is empty at k = 0, which makes the sum collapse to
/// 1 there, in line with the seeded column B(n,0) = 1.
pub fn eulerian_explicit(r: usize, n: usize, k: usize) -> Result<Rational> {
    if n < 1 || k >= n {
        return Err(Error::Domain(format!(
            "explicit r-Eulerian sum needs 0 <= k < n, got ({n},{k})"
        )));
    }
    let mut total = Rational::zero();
    for parts in raw_compositions(n - k - 1, k + 1) {
        let mut term = Rational::one();
        for (idx, &t) in parts.iter().enumerate() {
            term *= num_traits::pow(rat(idx as i64 + 1), t);
        }
        let mut prefix = 0usize;
        for i in 1..=k {
            prefix += parts[i - 1];
            term *= rat((r * prefix) as i64 + i as i64 * (r as i64 - 1) + 1);
        }
        total += term;
    }
    Ok(total)
}

/// The marked triangle M(n,k) = r^{n-k} B(n,k): marking multiplies the
/// weight of every East step by r.
pub fn marked_eulerian_triangle(r: usize, n_max: usize) -> EulerianTriangle {
    let b = eulerian_triangle(r, n_max);
    let rows = b
        .rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let n = i + 1;
            row.iter()
                .enumerate()
                .map(|(k, v)| v * num_traits::pow(rat(r as i64), n - k))
                .collect()
        })
        .collect();
    EulerianTriangle { r, rows }
}

/// Residual of the marked recurrence at (n,k):
///
/// ```text
/// ((n-1) r - k + 1) M(n-1,k-1) + r (k+1) M(n-1,k) - M(n,k),
/// ```
///
/// identically zero on interior cells 1 <= k < n.
pub fn marked_recurrence_residual(m: &EulerianTriangle, n: usize, k: usize) -> Rational {
    assert!(k >= 1 && k < n, "interior cells only");
    let r = m.r() as i64;
    let up = rat((n as i64 - 1) * r - k as i64 + 1);
    let stay = rat(r * (k as i64 + 1));
    up * m.get(n - 1, k - 1) + stay * m.get(n - 1, k) - m.get(n, k)
}

/// Composition sum for the marked triangle: over (c_0, ..., c_k) summing
/// to n-k,
///
/// ```text
/// r^{n-k} prod_{i=1}^{k} (1+i)^{c_i} ((r-1)(i-1) + r (c_0+...+c_{i-1})).
/// ```
pub fn marked_eulerian_explicit(r: usize, n: usize, k: usize) -> Result<Rational> {
    if n < 1 || k > n {
        return Err(Error::Domain(format!(
            "explicit marked sum needs n >= 1 and k <= n, got ({n},{k})"
        )));
    }
    let scale = num_traits::pow(rat(r as i64), n - k);
    let mut total = Rational::zero();
    for parts in raw_compositions(n - k, k + 1) {
        let mut term = Rational::one();
        let mut prefix = parts[0];
        for i in 1..=k {
            term *= num_traits::pow(rat(i as i64 + 1), parts[i]);
            term *= rat((r as i64 - 1) * (i as i64 - 1) + r as i64 * prefix as i64);
            prefix += parts[i];
        }
        total += term;
    }
    Ok(scale * total)
}
