//! Weak compositions and the composition-indexed closed forms.
//!
//! A path to (n,k) is determined by how many East steps it takes at each
//! height: a weak composition (c0, ..., ck) of n-k. This module carries
//! the two bijections between compositions and increasing sequences, the
//! weights they transport, and the closed forms obtained by summing over
//! compositions (a2 = 0) or East-abscissa sets (general case) instead of
//! paths.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::paths::{enumerate_increasing, IncreasingSeq};
use crate::rational::{rat, Rational};
use crate::triangle::GkpSpec;

/// Non-negative parts (c0, ..., ck) summing to n-k, carried with the
/// target cell (n, k): part ci counts the East steps taken at height i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakComposition {
    parts: Vec<usize>,
    n: usize,
    k: usize,
}

impl WeakComposition {
    pub fn new(parts: Vec<usize>, n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(Error::KOutOfRange { n, k });
        }
        if parts.len() != k + 1 || parts.iter().sum::<usize>() != n - k {
            return Err(Error::Domain(format!(
                "not a weak composition of {} into {} parts: {parts:?}",
                n - k,
                k + 1
            )));
        }
        Ok(WeakComposition { parts, n, k })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// Raw iterator over weak compositions of `total` into `num_parts`
/// parts, in decreasing lexicographic order from (total, 0, ..., 0).
pub(crate) struct RawCompositions {
    next: Option<Vec<usize>>,
}

pub(crate) fn raw_compositions(total: usize, num_parts: usize) -> RawCompositions {
    assert!(num_parts >= 1);
    let mut first = vec![0; num_parts];
    first[0] = total;
    RawCompositions { next: Some(first) }
}

impl Iterator for RawCompositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if lex_predecessor(&mut succ) {
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// Steps to the next composition in decreasing lexicographic order:
/// decrement the rightmost movable part and pull everything to its right
/// back into the slot after it.
fn lex_predecessor(parts: &mut [usize]) -> bool {
    let len = parts.len();
    let Some(i) = (0..len - 1).rev().find(|&i| parts[i] > 0) else {
        return false;
    };
    parts[i] -= 1;
    let moved = 1 + parts[i + 1..].iter().sum::<usize>();
    for p in parts[i + 1..].iter_mut() {
        *p = 0;
    }
    parts[i + 1] = moved;
    true
}

/// All weak compositions of n-k into k+1 parts (one per height), in
/// decreasing lexicographic order; there are C(n,k) of them.
pub fn enumerate_compositions(
    n: usize,
    k: usize,
) -> Result<impl Iterator<Item = WeakComposition>> {
    if k > n {
        return Err(Error::KOutOfRange { n, k });
    }
    Ok(raw_compositions(n - k, k + 1).map(move |parts| WeakComposition { parts, n, k }))
}

/// NE abscissas of the path that takes ci East steps at height i: the
/// i-th rise happens at abscissa i + c0 + ... + c_{i-1}. Bijective onto
/// the k-element increasing sequences over [1..=n].
pub fn composition_to_rises(c: &WeakComposition) -> IncreasingSeq {
    let mut values = Vec::with_capacity(c.k);
    let mut easts_below = 0;
    for i in 1..=c.k {
        easts_below += c.parts[i - 1];
        values.push(i + easts_below);
    }
    IncreasingSeq::new(values, c.n).expect("partial sums are strictly increasing")
}

/// Counts East abscissas by height: ci = #{ j : e_j - j = i } for an
/// increasing sequence e of East abscissas over [1..=n] (the j-th East
/// step sits at height e_j - j). Inverse to composing
/// [`composition_to_rises`] with the complement.
pub fn easts_to_composition(easts: &IncreasingSeq) -> WeakComposition {
    let n = easts.ambient();
    let k = n - easts.len();
    let mut parts = vec![0; k + 1];
    for (j, &e) in easts.values().iter().enumerate() {
        parts[e - (j + 1)] += 1;
    }
    WeakComposition { parts, n, k }
}

/// Product over the East abscissas e of (a0 + (e_j - j) a1): the total
/// a-weight of those East steps when the weight has no n-term.
pub fn east_weight(easts: &IncreasingSeq, a0: &Rational, a1: &Rational) -> Rational {
    let mut w = Rational::one();
    for (j, &e) in easts.values().iter().enumerate() {
        w *= a0 + a1 * rat((e - (j + 1)) as i64);
    }
    w
}

/// The same product grouped by height: prod_i (a0 + i*a1)^{ci}. Agrees
/// with [`east_weight`] across the bijection.
pub fn height_weight(c: &WeakComposition, a0: &Rational, a1: &Rational) -> Rational {
    let mut w = Rational::one();
    for (i, &count) in c.parts.iter().enumerate() {
        w *= num_traits::pow(a0 + a1 * rat(i as i64), count);
    }
    w
}

/// Closed form for a2 = 0 (East weight a0 + a1*k): sums over weak
/// compositions, one factor pair per height,
///
/// ```text
/// a0^{c0} * prod_{i=1}^{k} (a0 + a1 i)^{ci}
///                        * (b0 + (b1+b2) i + b2 (c0+...+c_{i-1})).
/// ```
pub fn closed_form_a2zero(n: usize, k: usize, spec: &GkpSpec) -> Result<Rational> {
    if !spec.a.c2.is_zero() {
        return Err(Error::Domain(
            "closed_form_a2zero requires a2 = 0".to_string(),
        ));
    }
    if k > n {
        return Err(Error::KOutOfRange { n, k });
    }
    let a0 = &spec.a.c0;
    let a1 = &spec.a.c1;
    let b_slope = &spec.b.c1 + &spec.b.c2;
    let mut total = Rational::zero();
    for parts in raw_compositions(n - k, k + 1) {
        let mut term = num_traits::pow(a0.clone(), parts[0]);
        let mut easts_below = parts[0];
        for i in 1..=k {
            term *= num_traits::pow(a0 + a1 * rat(i as i64), parts[i]);
            term *= &spec.b.c0 + &b_slope * rat(i as i64) + &spec.b.c2 * rat(easts_below as i64);
            easts_below += parts[i];
        }
        total += term;
    }
    Ok(total)
}

/// Fully general closed form: sums over East-abscissa sequences p,
///
/// ```text
/// prod_{i=1}^{n-k} ((a2+a1) p_i - a1 i + a0)
///   * prod_{i=1}^{k} (b0 + (b1+b2) i + b2 #{ l : p_l - l < i }),
/// ```
///
/// where #{ l : p_l - l < i } counts the East steps below height i.
/// Agrees exactly with the recurrence for every coefficient choice.
pub fn closed_form_general(n: usize, k: usize, spec: &GkpSpec) -> Result<Rational> {
    let a_slope = &spec.a.c2 + &spec.a.c1;
    let b_slope = &spec.b.c1 + &spec.b.c2;
    let mut total = Rational::zero();
    for easts in enumerate_increasing(n - k, n)? {
        let mut heights = vec![0usize; k + 1];
        let mut term = Rational::one();
        for (j, &p) in easts.values().iter().enumerate() {
            term *= &a_slope * rat(p as i64) - &spec.a.c1 * rat((j + 1) as i64) + &spec.a.c0;
            heights[p - (j + 1)] += 1;
        }
        let mut easts_below = heights[0];
        for i in 1..=k {
            term *= &spec.b.c0 + &b_slope * rat(i as i64) + &spec.b.c2 * rat(easts_below as i64);
            easts_below += heights[i];
        }
        total += term;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{enumerate_paths, LatticePath};
    use crate::triangle::Triangle;

    #[test]
    fn enumeration_order_and_counts() {
        let got: Vec<_> = enumerate_compositions(2, 1)
            .unwrap()
            .map(|c| c.parts().to_vec())
            .collect();
        assert_eq!(got, vec![vec![1, 0], vec![0, 1]]);

        assert_eq!(enumerate_compositions(4, 2).unwrap().count(), 6);

        let trivial: Vec<_> = enumerate_compositions(3, 3).unwrap().collect();
        assert_eq!(trivial.len(), 1);
        assert_eq!(trivial[0].parts(), &[0, 0, 0, 0]);
    }

    #[test]
    fn composition_validation() {
        assert!(WeakComposition::new(vec![1, 0], 2, 1).is_ok());
        assert!(WeakComposition::new(vec![1, 1], 2, 1).is_err()); // wrong sum
        assert!(WeakComposition::new(vec![1], 2, 1).is_err()); // wrong arity
        assert!(WeakComposition::new(vec![0], 2, 3).is_err()); // k > n
    }

    #[test]
    fn rises_from_composition() {
        let c = WeakComposition::new(vec![1, 0], 2, 1).unwrap();
        assert_eq!(composition_to_rises(&c).values(), &[2]);

        let zeros = WeakComposition::new(vec![0; 4], 3, 3).unwrap();
        assert_eq!(composition_to_rises(&zeros).values(), &[1, 2, 3]);

        let front = WeakComposition::new(vec![4, 0, 0, 0], 7, 3).unwrap();
        assert_eq!(composition_to_rises(&front).values(), &[5, 6, 7]);
    }

    #[test]
    fn composition_from_easts() {
        let e = IncreasingSeq::new(vec![1, 4, 6], 6).unwrap();
        assert_eq!(easts_to_composition(&e).parts(), &[1, 0, 1, 1]);

        let front = IncreasingSeq::new(vec![1, 2, 3], 7).unwrap();
        assert_eq!(easts_to_composition(&front).parts(), &[3, 0, 0, 0, 0]);

        let back = IncreasingSeq::new(vec![5, 6, 7], 7).unwrap();
        assert_eq!(easts_to_composition(&back).parts(), &[0, 0, 0, 0, 3]);
    }

    #[test]
    fn weights_transport_across_the_bijection() {
        let e = IncreasingSeq::new(vec![1, 4, 6], 6).unwrap();
        assert_eq!(east_weight(&e, &rat(0), &rat(1)), rat(0));

        let e2 = IncreasingSeq::new(vec![2, 4], 4).unwrap();
        assert_eq!(east_weight(&e2, &rat(1), &rat(1)), rat(6));

        let c = easts_to_composition(&e);
        assert_eq!(height_weight(&c, &rat(0), &rat(1)), rat(0));

        let c2 = WeakComposition::new(vec![0, 2], 3, 1).unwrap();
        assert_eq!(height_weight(&c2, &rat(1), &rat(2)), rat(9));

        let zeros = WeakComposition::new(vec![0, 0], 1, 1).unwrap();
        assert_eq!(height_weight(&zeros, &rat(5), &rat(7)), rat(1));

        // a1 = 0 degenerates to a power of a0
        let any = IncreasingSeq::new(vec![2, 3, 5], 6).unwrap();
        assert_eq!(east_weight(&any, &rat(3), &rat(0)), rat(27));
    }

    #[test]
    fn roundtrip_through_paths() {
        for n in 0..=7 {
            for k in 0..=n {
                for p in enumerate_paths(n, k).unwrap() {
                    let rises = p.rise_abscissas();
                    let c = easts_to_composition(&rises.complement());
                    assert_eq!(composition_to_rises(&c), rises);
                    assert_eq!(
                        LatticePath::from_rise_abscissas(&composition_to_rises(&c)),
                        p
                    );
                }
            }
        }
    }

    #[test]
    fn a2zero_form_on_eulerian_cells() {
        let spec = GkpSpec::eulerian();
        assert_eq!(closed_form_a2zero(3, 1, &spec).unwrap(), rat(4));
        assert_eq!(closed_form_a2zero(2, 1, &spec).unwrap(), rat(1));
        // k = 0 collapses to a0^n
        let s = GkpSpec::from_integers([3, 2, 0], [1, 1, 1]);
        assert_eq!(closed_form_a2zero(4, 0, &s).unwrap(), rat(81));
    }

    #[test]
    fn a2zero_requires_a2_zero() {
        let spec = GkpSpec::from_integers([0, 1, 1], [1, 0, 0]);
        assert!(matches!(
            closed_form_a2zero(3, 1, &spec),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn general_form_known_cells() {
        assert_eq!(
            closed_form_general(4, 2, &GkpSpec::stirling2()).unwrap(),
            rat(7)
        );
        assert_eq!(
            closed_form_general(4, 2, &GkpSpec::eulerian()).unwrap(),
            rat(11)
        );
        // (n,n): empty East sequence, pure b-product
        let spec = GkpSpec::from_integers([2, -1, 1], [1, 2, 1]);
        let expect: Rational = (1..=3).map(|i| spec.b.eval(i, i)).product();
        assert_eq!(closed_form_general(3, 3, &spec).unwrap(), expect);
    }

    #[test]
    fn both_forms_match_the_recurrence() {
        let specs = [
            GkpSpec::eulerian(),
            GkpSpec::from_integers([2, -1, 0], [-1, 3, 2]),
            GkpSpec::from_integers([1, 2, 0], [0, 0, 1]),
        ];
        for spec in &specs {
            let t = Triangle::from_recurrence(spec, 6);
            for n in 0..=6 {
                for k in 0..=n {
                    assert_eq!(
                        closed_form_a2zero(n, k, spec).unwrap(),
                        t.get(n, k),
                        "a2zero at ({n},{k}) for {spec}"
                    );
                    assert_eq!(
                        closed_form_general(n, k, spec).unwrap(),
                        t.get(n, k),
                        "general at ({n},{k}) for {spec}"
                    );
                }
            }
        }
    }
}
