//! Finite set systems: k-fold unions, VC-dimension, hulls and the
//! maximal-shattering count.
//!
//! Infinite systems are studied through finite restrictions; open intervals
//! of the line, for instance, become the contiguous runs of a finite chain.

use std::collections::BTreeSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::index_set::{IndexSet, MAX_ELEMENTS};
use crate::iso::{shatter_isomorphic, ShatterStructure};

/// Largest ground set accepted by the exhaustive scans.
pub const DEFAULT_GROUND_LIMIT: usize = 20;

/// A ground set `0..ground` with a deduplicated family of subsets, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteSetSystem {
    ground: usize,
    family: Vec<IndexSet>,
}

#[derive(Deserialize)]
struct SystemRepr {
    ground: usize,
    family: Vec<Vec<usize>>,
}

impl<'de> Deserialize<'de> for FiniteSetSystem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SystemRepr::deserialize(d)?;
        if raw.ground > MAX_ELEMENTS {
            return Err(D::Error::custom(Error::SizeLimit {
                found: raw.ground,
                limit: MAX_ELEMENTS,
            }));
        }
        let mut family = Vec::with_capacity(raw.family.len());
        for member in raw.family {
            if let Some(&bad) = member.iter().find(|&&i| i >= raw.ground) {
                return Err(D::Error::custom(Error::IndexOutOfRange {
                    index: bad,
                    len: raw.ground,
                }));
            }
            family.push(member.into_iter().collect());
        }
        FiniteSetSystem::new(raw.ground, family).map_err(D::Error::custom)
    }
}

impl FiniteSetSystem {
    pub fn new(ground: usize, family: impl IntoIterator<Item = IndexSet>) -> Result<Self> {
        if ground > MAX_ELEMENTS {
            return Err(Error::SizeLimit {
                found: ground,
                limit: MAX_ELEMENTS,
            });
        }
        let all = IndexSet::full(ground);
        let family: BTreeSet<IndexSet> = family.into_iter().collect();
        if let Some(bad) = family.iter().find(|s| !s.is_subset(all)) {
            let index = bad.to_vec().into_iter().find(|&i| i >= ground).unwrap_or(ground);
            return Err(Error::IndexOutOfRange { index, len: ground });
        }
        Ok(FiniteSetSystem {
            ground,
            family: family.into_iter().collect(),
        })
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn family(&self) -> &[IndexSet] {
        &self.family
    }

    /// Every subset of the ground set.
    pub fn powerset(ground: usize) -> Result<Self> {
        if ground > DEFAULT_GROUND_LIMIT {
            return Err(Error::SizeLimit {
                found: ground,
                limit: DEFAULT_GROUND_LIMIT,
            });
        }
        Self::new(ground, IndexSet::lex_subsets(ground))
    }

    /// All contiguous runs `{i, …, j}` of the chain `0 < 1 < … < n-1`,
    /// together with the empty set.
    pub fn intervals(n: usize) -> Result<Self> {
        let runs = (0..n).flat_map(|i| (i..n).map(move |j| (i..=j).collect::<IndexSet>()));
        Self::new(n, std::iter::once(IndexSet::EMPTY).chain(runs))
    }

    /// Distinct traces `S ∩ y`.
    pub fn traces_on(&self, y: IndexSet) -> BTreeSet<IndexSet> {
        self.family.iter().map(|&s| s.intersection(y)).collect()
    }

    pub fn shatters(&self, y: IndexSet) -> bool {
        self.traces_on(y).len() == 1usize << y.len()
    }

    fn guard(&self) -> Result<()> {
        if self.ground > DEFAULT_GROUND_LIMIT {
            return Err(Error::SizeLimit {
                found: self.ground,
                limit: DEFAULT_GROUND_LIMIT,
            });
        }
        Ok(())
    }

    /// Largest size of a shattered subset; `0` when nothing nonempty is
    /// shattered, the empty family included.
    pub fn vc_dim(&self) -> Result<usize> {
        self.guard()?;
        let mut d = 0;
        // shattered sets are closed under subsets, so sizes can be scanned upward
        while d < self.ground && IndexSet::combinations(IndexSet::full(self.ground), d + 1).any(|y| self.shatters(y)) {
            d += 1;
        }
        Ok(d)
    }

    /// The shattered subsets of size [`vc_dim`](Self::vc_dim), in lexicographic order.
    pub fn max_shattered_subsets(&self) -> Result<Vec<IndexSet>> {
        let d = self.vc_dim()?;
        if self.family.is_empty() {
            return Ok(Vec::new());
        }
        Ok(IndexSet::combinations(IndexSet::full(self.ground), d).filter(|&y| self.shatters(y)).collect())
    }

    /// Unions of at most `k` members, i.e. of exactly `k` with repetition.
    pub fn k_fold_union(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Precondition("k must be at least 1".into()));
        }
        let mut current: BTreeSet<IndexSet> = self.family.iter().copied().collect();
        for _ in 1..k {
            let next: BTreeSet<IndexSet> = current
                .iter()
                .flat_map(|&a| self.family.iter().map(move |&b| a.union(b)))
                .collect();
            if next == current {
                break;
            }
            current = next;
        }
        Self::new(self.ground, current)
    }

    pub fn is_intersection_closed(&self) -> bool {
        let members: BTreeSet<IndexSet> = self.family.iter().copied().collect();
        self.family
            .iter()
            .enumerate()
            .all(|(i, &a)| self.family[i + 1..].iter().all(|&b| members.contains(&a.intersection(b))))
    }

    /// Intersection of the members containing `y`.
    pub fn s_hull(&self, y: IndexSet) -> Result<IndexSet> {
        if !self.is_intersection_closed() {
            return Err(Error::NotIntersectionClosed);
        }
        self.family
            .iter()
            .filter(|s| y.is_subset(**s))
            .copied()
            .reduce(|a, b| a.intersection(b))
            .ok_or(Error::NoContainingSet)
    }

    /// The structure `(Y, S)`: `y` relabelled to `0..|y|` with every distinct
    /// trace of the family as a class.
    pub fn structure_on(&self, y: IndexSet) -> ShatterStructure {
        ShatterStructure::new(y.len(), self.traces_on(y).into_iter().map(|t| t.compress(y)))
    }

    /// `(d_k, s_k)`: the VC-dimension of the `k`-fold union and the number of
    /// shatter-isomorphism types among the maximum subsets it shatters.
    pub fn maximal_shattering(&self, k: usize) -> Result<(usize, usize)> {
        self.guard()?;
        let union = self.k_fold_union(k)?;
        let d = union.vc_dim()?;
        let mut types: Vec<ShatterStructure> = Vec::new();
        for y in union.max_shattered_subsets()? {
            let s = self.structure_on(y);
            if !types.iter().any(|t| shatter_isomorphic(t, &s).is_some()) {
                types.push(s);
            }
        }
        Ok((d, types.len()))
    }

    pub fn s_k_count(&self, k: usize) -> Result<usize> {
        Ok(self.maximal_shattering(k)?.1)
    }
}

/// A random family over `0..ground` closed under pairwise, hence all
/// nonempty, intersections.
pub fn random_intersection_closed<R: Rng>(rng: &mut R, ground: usize, generators: usize) -> FiniteSetSystem {
    let mut members: BTreeSet<IndexSet> = (0..generators)
        .map(|_| (0..ground).filter(|_| rng.gen_bool(0.5)).collect())
        .collect();
    loop {
        let extra: Vec<IndexSet> = members
            .iter()
            .flat_map(|&a| members.iter().map(move |&b| a.intersection(b)))
            .filter(|s| !members.contains(s))
            .collect();
        if extra.is_empty() {
            break;
        }
        members.extend(extra);
    }
    FiniteSetSystem::new(ground, members).expect("subsets of the ground set")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> IndexSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn singletons_double_to_small_sets() {
        let sys = FiniteSetSystem::new(4, (0..4).map(|i| set(&[i]))).unwrap();
        let two = sys.k_fold_union(2).unwrap();
        let expected: Vec<IndexSet> = IndexSet::lex_subsets(4).filter(|s| (1..=2).contains(&s.len())).collect();
        let mut got = two.family().to_vec();
        got.sort();
        let mut want = expected;
        want.sort();
        assert_eq!(got, want);
        assert_eq!(sys.k_fold_union(1).unwrap(), sys);
        assert!(sys.k_fold_union(0).is_err());
    }

    #[test]
    fn vc_of_small_cases() {
        assert_eq!(FiniteSetSystem::powerset(5).unwrap().vc_dim().unwrap(), 5);
        assert_eq!(FiniteSetSystem::new(4, []).unwrap().vc_dim().unwrap(), 0);
        assert_eq!(FiniteSetSystem::intervals(5).unwrap().vc_dim().unwrap(), 2);
    }

    #[test]
    fn hull_of_a_pair_of_chain_points() {
        let sys = FiniteSetSystem::intervals(7).unwrap();
        assert!(sys.is_intersection_closed());
        assert_eq!(sys.s_hull(set(&[2, 5])).unwrap(), set(&[2, 3, 4, 5]));
        assert_eq!(sys.s_hull(set(&[3, 4])).unwrap(), set(&[3, 4]));
        assert_eq!(sys.s_hull(IndexSet::EMPTY).unwrap(), IndexSet::EMPTY);
        let gap = FiniteSetSystem::new(3, [set(&[0, 1]), set(&[1, 2])]).unwrap();
        assert!(matches!(gap.s_hull(set(&[1])), Err(Error::NotIntersectionClosed)));
        let closed = FiniteSetSystem::new(3, [set(&[0]), set(&[0, 1])]).unwrap();
        assert!(matches!(closed.s_hull(set(&[2])), Err(Error::NoContainingSet)));
    }

    #[test]
    fn powerset_has_one_type() {
        let sys = FiniteSetSystem::powerset(4).unwrap();
        assert_eq!(sys.maximal_shattering(1).unwrap(), (4, 1));
    }

    #[test]
    fn json_shape() {
        let sys: FiniteSetSystem = serde_json::from_str(r#"{"ground": 3, "family": [[0, 1], [2], [0, 1]]}"#).unwrap();
        assert_eq!(sys.family().len(), 2);
        assert!(serde_json::from_str::<FiniteSetSystem>(r#"{"ground": 2, "family": [[3]]}"#).is_err());
        let back: FiniteSetSystem = serde_json::from_str(&serde_json::to_string(&sys).unwrap()).unwrap();
        assert_eq!(back, sys);
    }
}
