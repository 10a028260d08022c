//! Permutations of `{1, …, p}` in one-line notation.
//!
//! Points are 1-based at every public boundary (construction, `apply`,
//! cycles, JSON). Storage is 0-based.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `{1, …, degree}`.
///
/// Composition applies the right factor first: `a.compose(&b)` is the map
/// `i ↦ a(b(i))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "PermutationRepr", try_from = "PermutationRepr")]
pub struct Permutation {
    images: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PermutationRepr {
    degree: usize,
    images: Vec<usize>,
}

impl From<Permutation> for PermutationRepr {
    fn from(x: Permutation) -> Self {
        PermutationRepr {
            degree: x.degree(),
            images: x.one_line(),
        }
    }
}

impl TryFrom<PermutationRepr> for Permutation {
    type Error = Error;

    fn try_from(repr: PermutationRepr) -> Result<Self> {
        if repr.degree != repr.images.len() {
            return Err(Error::NotAPermutation(format!(
                "degree {} but {} images",
                repr.degree,
                repr.images.len()
            )));
        }
        Permutation::new(repr.images)
    }
}

impl Permutation {
    /// Builds a permutation from 1-based one-line notation.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let p = images.len();
        if p == 0 {
            return Err(Error::InvalidDegree {
                degree: 0,
                reason: "degree must be at least 1",
            });
        }
        let mut seen = vec![false; p];
        let mut zero_based = Vec::with_capacity(p);
        for &v in &images {
            if v == 0 || v > p {
                return Err(Error::NotAPermutation(format!("image {v} outside 1..={p}")));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::NotAPermutation(format!("image {v} repeated")));
            }
            zero_based.push(v - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    pub fn identity(degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidDegree {
                degree,
                reason: "degree must be at least 1",
            });
        }
        Ok(Permutation {
            images: (0..degree).collect(),
        })
    }

    /// The cyclic permutation `(1 2 … p)`, which sends each edge of a
    /// p-gon to the next edge around the polygon.
    pub fn rho(p: usize) -> Result<Self> {
        if p < 3 {
            return Err(Error::InvalidDegree {
                degree: p,
                reason: "rho needs p ≥ 3",
            });
        }
        Ok(Permutation {
            images: (0..p).map(|i| (i + 1) % p).collect(),
        })
    }

    /// Builds a permutation from disjoint cycles of 1-based points. Points
    /// not mentioned are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<Option<usize>> = vec![None; degree];
        let mut hit = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                for &x in &[a, b] {
                    if x == 0 || x > degree {
                        return Err(Error::NotAPermutation(format!(
                            "cycle point {x} outside 1..={degree}"
                        )));
                    }
                }
                if images[a - 1].is_some() || hit[b - 1] {
                    return Err(Error::NotAPermutation(format!(
                        "cycles are not disjoint at point {a}"
                    )));
                }
                images[a - 1] = Some(b);
                hit[b - 1] = true;
            }
        }
        let one_line = images
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.unwrap_or(i + 1))
            .collect();
        Permutation::new(one_line)
    }

    /// Product of transpositions given as 1-based pairs.
    pub fn from_transpositions(degree: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let cycles: Vec<Vec<usize>> = pairs.iter().map(|&(a, b)| vec![a, b]).collect();
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        assert!(
            (1..=self.degree()).contains(&i),
            "point {i} outside 1..={}",
            self.degree()
        );
        self.images[i - 1] + 1
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    pub fn pow(&self, n: usize) -> Permutation {
        let mut images: Vec<usize> = (0..self.degree()).collect();
        for _ in 0..n {
            images = images.iter().map(|&j| self.images[j]).collect();
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| self.images[v] == i)
    }

    /// Disjoint cycles, each starting at its least point, sorted by that
    /// point. Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Least `n ≥ 1` with `selfⁿ = id`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, lcm)
    }

    /// Cycle lengths in the order returned by [`Permutation::cycles`].
    pub fn cycle_type(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).collect()
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Disjoint-cycle notation without fixed points; the identity is `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let points: Vec<String> = cycle.iter().map(usize::to_string).collect();
            write!(f, "({})", points.join(" "))?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::new(images.to_vec()).unwrap()
    }

    #[test]
    fn rho_is_the_long_cycle() {
        assert_eq!(Permutation::rho(5).unwrap().one_line(), vec![2, 3, 4, 5, 1]);
        assert_eq!(Permutation::rho(3).unwrap().one_line(), vec![2, 3, 1]);
        for p in 3..=12 {
            assert_eq!(Permutation::rho(p).unwrap().order(), p as u64);
        }
        assert_eq!(Permutation::rho(7).unwrap().order(), 7);
    }

    #[test]
    fn rho_rejects_small_degree() {
        assert!(matches!(
            Permutation::rho(2),
            Err(Error::InvalidDegree { degree: 2, .. })
        ));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![]).is_err());
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![1, 4, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Permutation::from_transpositions(5, &[(2, 5), (3, 4)]).unwrap();
        let b = Permutation::rho(5).unwrap();
        let c = a.compose(&b).unwrap();
        // a(b(1)) = a(2) = 5, a(b(2)) = a(3) = 4, a(b(3)) = 3, a(b(4)) = 2, a(b(5)) = 1
        assert_eq!(c.one_line(), vec![5, 4, 3, 2, 1]);
        assert_eq!(c.to_string(), "(1 5)(2 4)");
        assert_eq!(c.order(), 2);
        assert_eq!(c.pow(2), Permutation::identity(5).unwrap());
    }

    #[test]
    fn compose_identity_and_inverse() {
        let x = perm(&[3, 1, 4, 5, 2]);
        let id = Permutation::identity(5).unwrap();
        assert_eq!(id.compose(&x).unwrap(), x);
        assert!(x.compose(&x.inverse()).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = Permutation::identity(3)
            .unwrap()
            .compose(&Permutation::identity(4).unwrap());
        assert_eq!(err, Err(Error::DegreeMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn order_examples() {
        assert_eq!(Permutation::identity(5).unwrap().order(), 1);
        assert_eq!(perm(&[5, 4, 3, 2, 1]).order(), 2);
    }

    #[test]
    fn cycle_decomposition_examples() {
        assert_eq!(
            Permutation::identity(3).unwrap().cycles(),
            vec![vec![1], vec![2], vec![3]]
        );
        let x = Permutation::from_transpositions(5, &[(2, 5), (3, 4)]).unwrap();
        assert_eq!(x.cycles(), vec![vec![1], vec![2, 5], vec![3, 4]]);

        let a = Permutation::from_transpositions(6, &[(2, 6), (3, 5)]).unwrap();
        let c = a.compose(&Permutation::rho(6).unwrap()).unwrap();
        assert_eq!(c.cycles(), vec![vec![1, 6], vec![2, 5], vec![3, 4]]);
    }

    #[test]
    fn involution_examples() {
        assert!(Permutation::identity(4).unwrap().is_involution());
        assert!(perm(&[2, 1, 3]).is_involution());
        assert!(!Permutation::rho(4).unwrap().is_involution());
    }

    #[test]
    fn display() {
        assert_eq!(Permutation::identity(4).unwrap().to_string(), "()");
        assert_eq!(perm(&[2, 3, 1, 4]).to_string(), "(1 2 3)");
    }

    #[test]
    fn json_shape() {
        let x = perm(&[2, 1, 3]);
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            r#"{"degree":3,"images":[2,1,3]}"#
        );
        let back: Permutation = serde_json::from_str(r#"{"degree":3,"images":[2,1,3]}"#).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<Permutation>(r#"{"degree":4,"images":[2,1,3]}"#).is_err());
        assert!(serde_json::from_str::<Permutation>(r#"{"degree":3,"images":[2,2,3]}"#).is_err());
    }

    fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=degree).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    }

    fn arb_pair() -> impl Strategy<Value = (Permutation, Permutation)> {
        (1usize..=12).prop_flat_map(|n| (arb_perm(n), arb_perm(n)))
    }

    proptest! {
        #[test]
        fn right_cancellation((x, y) in arb_pair()) {
            let back = x.compose(&y).unwrap().compose(&y.inverse()).unwrap();
            prop_assert_eq!(back, x);
        }

        #[test]
        fn order_is_conjugation_invariant((a, b) in arb_pair()) {
            prop_assert_eq!(
                a.compose(&b).unwrap().order(),
                b.compose(&a).unwrap().order()
            );
        }

        #[test]
        fn cycles_round_trip(x in (1usize..=12).prop_flat_map(arb_perm)) {
            let rebuilt = Permutation::from_cycles(x.degree(), &x.cycles()).unwrap();
            prop_assert_eq!(rebuilt, x);
        }

        #[test]
        fn involution_iff_order_at_most_two(x in (1usize..=8).prop_flat_map(arb_perm)) {
            prop_assert_eq!(x.is_involution(), x.order() <= 2);
        }

        #[test]
        fn order_matches_repeated_powers(x in (1usize..=9).prop_flat_map(arb_perm)) {
            let n = x.order() as usize;
            prop_assert!(x.pow(n).is_identity());
            for k in 1..n {
                prop_assert!(!x.pow(k).is_identity());
            }
        }
    }
}
