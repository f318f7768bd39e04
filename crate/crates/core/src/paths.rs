//! E/NE lattice paths, their weights, and the explicit path-sum formulas.
//!
//! A path from (0,0) to (n,k) takes n steps, k of them North-East. Its
//! weight multiplies one affine factor per step.
//!
//! Step weights are indexed by the DESTINATION node: the East step
//! (i-1,j) -> (i,j) weighs a(i,j) and the North-East step
//! (i-1,j-1) -> (i,j) weighs b(i,j). An off-by-one here silently breaks
//! every identity in the crate, so all weight evaluation funnels through
//! [`LatticePath::weight`] and the two explicit sums below, which are
//! cross-checked against each other.

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};
use crate::triangle::{AffineWeight, GkpSpec};

/// One step: East (i-1,j) -> (i,j) or North-East (i-1,j-1) -> (i,j).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Step {
    East,
    NorthEast,
}

impl Step {
    pub fn symbol(self) -> &'static str {
        match self {
            Step::East => "E",
            Step::NorthEast => "NE",
        }
    }
}

/// A path from (0,0); the endpoint is (n, k) with n = total steps and
/// k = North-East steps. Any E/NE sequence is a valid path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn endpoint(&self) -> (usize, usize) {
        let k = self
            .steps
            .iter()
            .filter(|s| **s == Step::NorthEast)
            .count();
        (self.steps.len(), k)
    }

    /// Product of the step weights under the destination-node indexing
    /// described at module level. The empty path has weight 1.
    pub fn weight(&self, spec: &GkpSpec) -> Rational {
        let mut height = 0i64;
        let mut w = Rational::one();
        for (i, step) in self.steps.iter().enumerate() {
            let x = (i + 1) as i64;
            match step {
                Step::East => w *= spec.a.eval(x, height),
                Step::NorthEast => {
                    height += 1;
                    w *= spec.b.eval(x, height);
                }
            }
        }
        w
    }

    /// 1-based abscissas of the North-East steps, strictly increasing.
    /// Together with [`LatticePath::from_rise_abscissas`] this is a
    /// bijection between paths to (n,k) and k-element increasing
    /// sequences over [1..=n].
    pub fn rise_abscissas(&self) -> IncreasingSeq {
        let values = self
            .steps
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Step::NorthEast)
            .map(|(i, _)| i + 1)
            .collect();
        IncreasingSeq {
            values,
            ambient: self.steps.len(),
        }
    }

    /// Rebuilds the path whose NE steps sit at the given abscissas.
    pub fn from_rise_abscissas(seq: &IncreasingSeq) -> LatticePath {
        let mut steps = vec![Step::East; seq.ambient()];
        for &v in seq.values() {
            steps[v - 1] = Step::NorthEast;
        }
        LatticePath { steps }
    }

    /// Space-separated step symbols, e.g. `E NE NE E NE E`.
    pub fn step_string(&self) -> String {
        self.steps.iter().map(|s| s.symbol()).join(" ")
    }
}

/// Strictly increasing sequence over [1..=ambient]: the image of a
/// strictly increasing function [len] -> [ambient].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncreasingSeq {
    values: Vec<usize>,
    ambient: usize,
}

impl IncreasingSeq {
    pub fn new(values: Vec<usize>, ambient: usize) -> Result<Self> {
        for (i, &v) in values.iter().enumerate() {
            let lower = if i == 0 { 0 } else { values[i - 1] };
            if v <= lower || v > ambient {
                return Err(Error::Domain(format!(
                    "not strictly increasing within 1..={ambient}: {values:?}"
                )));
            }
        }
        Ok(IncreasingSeq { values, ambient })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The increasing enumeration of [1..=ambient] minus this sequence.
    /// Applying it twice gives back the original sequence.
    pub fn complement(&self) -> IncreasingSeq {
        let mut values = Vec::with_capacity(self.ambient - self.values.len());
        let mut held = self.values.iter().peekable();
        for v in 1..=self.ambient {
            if held.peek() == Some(&&v) {
                held.next();
            } else {
                values.push(v);
            }
        }
        IncreasingSeq {
            values,
            ambient: self.ambient,
        }
    }

    /// Comma-joined values, e.g. `2,3,5`; empty string for the empty
    /// sequence.
    pub fn display(&self) -> String {
        self.values.iter().join(",")
    }
}

/// All k-element increasing sequences over [1..=n] in lexicographic
/// order; there are C(n,k) of them.
pub fn enumerate_increasing(
    k: usize,
    n: usize,
) -> Result<impl Iterator<Item = IncreasingSeq>> {
    if k > n {
        return Err(Error::KOutOfRange { n, k });
    }
    Ok((1..=n)
        .combinations(k)
        .map(move |values| IncreasingSeq { values, ambient: n }))
}

/// Iterator over all paths to (n,k) in lexicographic order of their step
/// strings with E < NE.
pub struct Paths {
    next: Option<Vec<Step>>,
}

impl Iterator for Paths {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if lex_successor(&mut succ) {
            self.next = Some(succ);
        }
        Some(LatticePath::new(current))
    }
}

/// Advances to the lexicographic successor among step strings with the
/// same E/NE multiplicities; returns false from the last one.
fn lex_successor(steps: &mut [Step]) -> bool {
    let len = steps.len();
    // rightmost E immediately followed by NE
    let Some(i) = (0..len.saturating_sub(1))
        .rev()
        .find(|&i| steps[i] == Step::East && steps[i + 1] == Step::NorthEast)
    else {
        return false;
    };
    let rises_after = steps[i + 1..]
        .iter()
        .filter(|s| **s == Step::NorthEast)
        .count();
    steps[i] = Step::NorthEast;
    // remaining rises pack to the far right of the tail
    let tail = len - i - 1;
    for (j, s) in steps[i + 1..].iter_mut().enumerate() {
        *s = if j < tail - (rises_after - 1) {
            Step::East
        } else {
            Step::NorthEast
        };
    }
    true
}

/// Enumerates the C(n,k) paths from (0,0) to (n,k) exactly once.
pub fn enumerate_paths(n: usize, k: usize) -> Result<Paths> {
    if k > n {
        return Err(Error::KOutOfRange { n, k });
    }
    let mut first = vec![Step::East; n];
    for s in first[n - k..].iter_mut() {
        *s = Step::NorthEast;
    }
    Ok(Paths { next: Some(first) })
}

/// Total weight of all paths to (n,k): the brute-force oracle every
/// formula in this crate is checked against.
pub fn total_path_weight(n: usize, k: usize, spec: &GkpSpec) -> Result<Rational> {
    Ok(enumerate_paths(n, k)?
        .map(|p| p.weight(spec))
        .fold(Rational::zero(), |acc, w| acc + w))
}

/// Total weight recomputed as a sum over NE-abscissa choices, with no
/// path objects: for each increasing sequence s of rise abscissas, the
/// summand is
///
/// ```text
/// prod_i a(e_i, e_i - i) * prod_i b(s_i, i)
/// ```
///
/// where e is the complement of s in [1..=n] (the East abscissas; an
/// East step at abscissa e_i is the i-th East step, so it sits at height
/// e_i - i). Must agree exactly with [`total_path_weight`].
pub fn explicit_sum_paths(n: usize, k: usize, spec: &GkpSpec) -> Result<Rational> {
    let mut total = Rational::zero();
    for rises in enumerate_increasing(k, n)? {
        let mut term = Rational::one();
        for (i, &e) in rises.complement().values().iter().enumerate() {
            term *= spec.a.eval(e as i64, (e - (i + 1)) as i64);
        }
        for (i, &s) in rises.values().iter().enumerate() {
            term *= spec.b.eval(s as i64, (i + 1) as i64);
        }
        total += term;
    }
    Ok(total)
}

/// The b = 1 case collapsed to a sum over East abscissas alone:
///
/// ```text
/// sum over 1 <= p_1 < ... < p_{n-k} <= n of
///     prod_i ((a2 + a1) p_i - a1 i + a0)
/// ```
pub fn explicit_sum_b1(n: usize, k: usize, a: &AffineWeight) -> Result<Rational> {
    if k > n {
        return Err(Error::KOutOfRange { n, k });
    }
    let slope = &a.c2 + &a.c1;
    let mut total = Rational::zero();
    for easts in enumerate_increasing(n - k, n)? {
        let mut term = Rational::one();
        for (i, &p) in easts.values().iter().enumerate() {
            term *= &slope * rat(p as i64) - &a.c1 * rat((i + 1) as i64) + &a.c0;
        }
        total += term;
    }
    Ok(total)
}
