//! Shatter structures and shatter-isomorphism.
//!
//! For a planar configuration the `~_P` classes of lines are the traces of
//! `S²_P`, one singleton class per point and the empty class. Only the first
//! kind can tell two configurations of the same size apart, so a planar
//! [`ShatterStructure`] lists just those. Structures built from abstract set
//! systems list every distinct trace.

mod corpus;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::incidence::Configuration;
use crate::index_set::IndexSet;
use crate::scalar::Scalar;
use crate::shatter::shatters;

pub use corpus::representatives;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShatterStructure {
    pub n: usize,
    /// Distinct classes in lexicographic order.
    pub classes: Vec<IndexSet>,
}

impl ShatterStructure {
    /// Deduplicates and sorts `classes`. Panics if a class leaves `0..n`.
    pub fn new(n: usize, classes: impl IntoIterator<Item = IndexSet>) -> Self {
        let classes: BTreeSet<IndexSet> = classes.into_iter().collect();
        for c in &classes {
            assert!(c.is_subset(IndexSet::full(n)), "class {c} outside 0..{n}");
        }
        ShatterStructure {
            n,
            classes: classes.into_iter().collect(),
        }
    }

    /// The planar structure generated by a family of collinear groups: the
    /// given groups plus a two-point class for every pair they leave uncovered.
    pub fn from_collinear_groups(n: usize, groups: &[IndexSet]) -> Self {
        let mut classes: Vec<IndexSet> = groups.to_vec();
        for i in 0..n {
            for j in i + 1..n {
                if !groups.iter().any(|g| g.contains(i) && g.contains(j)) {
                    classes.push([i, j].into_iter().collect());
                }
            }
        }
        Self::new(n, classes)
    }

    /// Every pair of points lies in exactly one listed class, and each class has
    /// at least two points.
    pub fn is_linear_space(&self) -> bool {
        if self.classes.iter().any(|c| c.len() < 2) {
            return false;
        }
        (0..self.n).all(|i| {
            (i + 1..self.n).all(|j| {
                self.classes
                    .iter()
                    .filter(|c| c.contains(i) && c.contains(j))
                    .count()
                    == 1
            })
        })
    }

    /// Sorted sizes of the classes through each point.
    pub fn point_invariants(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|p| {
                let mut v: Vec<usize> = self
                    .classes
                    .iter()
                    .filter(|c| c.contains(p))
                    .map(|c| c.len())
                    .collect();
                v.sort_unstable();
                v
            })
            .collect()
    }

    fn pair_profiles(&self) -> Vec<Vec<Vec<usize>>> {
        let mut out = vec![vec![Vec::new(); self.n]; self.n];
        for c in &self.classes {
            let members = c.to_vec();
            for &i in &members {
                for &j in &members {
                    if i != j {
                        out[i][j].push(c.len());
                    }
                }
            }
        }
        for row in &mut out {
            for v in row {
                v.sort_unstable();
            }
        }
        out
    }

    /// The image of this structure under a point bijection.
    pub fn relabel(&self, bijection: &[usize]) -> ShatterStructure {
        ShatterStructure::new(
            self.n,
            self.classes
                .iter()
                .map(|c| c.iter().map(|p| bijection[p]).collect::<IndexSet>()),
        )
    }

    /// Class-size histogram, largest size first.
    pub fn size_profile(&self) -> Vec<(usize, usize)> {
        let mut h: BTreeMap<usize, usize> = BTreeMap::new();
        for c in &self.classes {
            *h.entry(c.len()).or_default() += 1;
        }
        h.into_iter().rev().collect()
    }
}

/// The `~_P` structure of a planar configuration.
pub fn shatter_structure<T: Scalar>(cfg: &Configuration<T>) -> ShatterStructure {
    ShatterStructure::new(cfg.len(), cfg.traces())
}

/// A point bijection carrying one structure onto another, with the induced
/// correspondence of classes (indices into each structure's `classes`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoCertificate {
    pub bijection: Vec<usize>,
    pub class_relabeling: Vec<(usize, usize)>,
}

impl IsoCertificate {
    fn from_bijection(s: &ShatterStructure, t: &ShatterStructure, bijection: Vec<usize>) -> Option<Self> {
        if s.n != t.n || s.classes.len() != t.classes.len() {
            return None;
        }
        let index: BTreeMap<IndexSet, usize> = t.classes.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mut class_relabeling = Vec::with_capacity(s.classes.len());
        for (i, c) in s.classes.iter().enumerate() {
            let image: IndexSet = c.iter().map(|p| bijection[p]).collect();
            class_relabeling.push((i, *index.get(&image)?));
        }
        Some(IsoCertificate {
            bijection,
            class_relabeling,
        })
    }

    /// Re-derives the class correspondence and checks it is a bijection.
    pub fn verify(&self, s: &ShatterStructure, t: &ShatterStructure) -> bool {
        let mut seen = vec![false; self.bijection.len()];
        for &b in &self.bijection {
            if b >= seen.len() || std::mem::replace(&mut seen[b], true) {
                return false;
            }
        }
        match Self::from_bijection(s, t, self.bijection.clone()) {
            Some(c) => {
                let targets: BTreeSet<usize> = c.class_relabeling.iter().map(|p| p.1).collect();
                targets.len() == t.classes.len() && c.class_relabeling == self.class_relabeling
            }
            None => false,
        }
    }

    /// The certificate for the reverse direction.
    pub fn inverse(&self, s: &ShatterStructure, t: &ShatterStructure) -> IsoCertificate {
        let mut inv = vec![0; self.bijection.len()];
        for (i, &b) in self.bijection.iter().enumerate() {
            inv[b] = i;
        }
        Self::from_bijection(t, s, inv).expect("inverse of a valid certificate")
    }

    /// `other ∘ self`, carrying `s` onto `u` via `t`.
    pub fn compose(
        &self,
        other: &IsoCertificate,
        s: &ShatterStructure,
        u: &ShatterStructure,
    ) -> Option<IsoCertificate> {
        let bijection = self.bijection.iter().map(|&b| other.bijection[b]).collect();
        Self::from_bijection(s, u, bijection)
    }
}

/// A bijection between the points of `s` and `t` mapping classes onto classes, if any.
///
/// Candidates are pruned by the per-point class-size invariant and by the
/// sizes of the classes shared by every assigned pair; the final map is
/// checked against the full class lists.
pub fn shatter_isomorphic(s: &ShatterStructure, t: &ShatterStructure) -> Option<IsoCertificate> {
    if s.n != t.n || s.classes.len() != t.classes.len() || s.size_profile() != t.size_profile() {
        return None;
    }
    let (si, ti) = (s.point_invariants(), t.point_invariants());
    let mut sorted_s = si.clone();
    let mut sorted_t = ti.clone();
    sorted_s.sort();
    sorted_t.sort();
    if sorted_s != sorted_t {
        return None;
    }
    let (sp, tp) = (s.pair_profiles(), t.pair_profiles());
    // most constrained source points first
    let mut order: Vec<usize> = (0..s.n).collect();
    order.sort_by_key(|&p| (si.iter().filter(|v| **v == si[p]).count(), p));

    let target_classes: BTreeSet<IndexSet> = t.classes.iter().copied().collect();
    let mut map = vec![usize::MAX; s.n];
    let mut used = vec![false; t.n];
    let mut found = None;
    backtrack(
        0,
        &order,
        &si,
        &ti,
        &sp,
        &tp,
        &mut map,
        &mut used,
        &mut |m| {
            let image = s.relabel(m);
            if image.classes.iter().all(|c| target_classes.contains(c)) {
                found = Some(m.to_vec());
                true
            } else {
                false
            }
        },
    );
    found.and_then(|b| IsoCertificate::from_bijection(s, t, b))
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    depth: usize,
    order: &[usize],
    si: &[Vec<usize>],
    ti: &[Vec<usize>],
    sp: &[Vec<Vec<usize>>],
    tp: &[Vec<Vec<usize>>],
    map: &mut [usize],
    used: &mut [bool],
    accept: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if depth == order.len() {
        return accept(map);
    }
    let p = order[depth];
    for q in 0..ti.len() {
        if used[q] || si[p] != ti[q] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&r| sp[p][r] == tp[q][map[r]]);
        if !consistent {
            continue;
        }
        map[p] = q;
        used[q] = true;
        if backtrack(depth + 1, order, si, ti, sp, tp, map, used, accept) {
            return true;
        }
        used[q] = false;
        map[p] = usize::MAX;
    }
    false
}

/// Shatter-isomorphism types of maximum shattered sets for two and three lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseLabel {
    #[serde(rename = "F2-I")]
    F2I,
    #[serde(rename = "F2-II")]
    F2II,
    #[serde(rename = "F3-Ia")]
    F3Ia,
    #[serde(rename = "F3-Ib")]
    F3Ib,
    #[serde(rename = "F3-IIa")]
    F3IIa,
    #[serde(rename = "F3-IIb")]
    F3IIb,
    #[serde(rename = "F3-III")]
    F3III,
}

impl CaseLabel {
    pub fn k(self) -> usize {
        match self {
            CaseLabel::F2I | CaseLabel::F2II => 2,
            _ => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseLabel::F2I => "F2-I",
            CaseLabel::F2II => "F2-II",
            CaseLabel::F3Ia => "F3-Ia",
            CaseLabel::F3Ib => "F3-Ib",
            CaseLabel::F3IIa => "F3-IIa",
            CaseLabel::F3IIb => "F3-IIb",
            CaseLabel::F3III => "F3-III",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The isomorphism type of a maximum shattered set.
///
/// For two lines the type is fixed by the number of collinear triples. For
/// three lines it is fixed by the number of 4-lines; with exactly one 4-line
/// `l_A`, by how many other lines with three or more points pass through each
/// point of the 3-line `l_B` disjoint from `l_A`.
pub fn classify_case<T: Scalar>(cfg: &Configuration<T>, k: usize) -> Result<CaseLabel> {
    let expected = match k {
        2 => 5,
        3 => 9,
        _ => return Err(Error::Precondition(format!("classification needs k in {{2, 3}}, got {k}"))),
    };
    if cfg.len() != expected {
        return Err(Error::WrongSize {
            expected,
            found: cfg.len(),
        });
    }
    if !shatters(cfg, k, false)?.shattered {
        return Err(Error::NotShattered { k });
    }
    classify_structure(&shatter_structure(cfg), k)
}

/// [`classify_case`] on a structure already known to be shattered.
pub fn classify_structure(s: &ShatterStructure, k: usize) -> Result<CaseLabel> {
    let count = |n: usize| s.classes.iter().filter(|c| c.len() == n).count();
    let big: Vec<IndexSet> = s.classes.iter().copied().filter(|c| c.len() >= 3).collect();
    match k {
        2 => match count(3) {
            1 => Ok(CaseLabel::F2I),
            n if n >= 2 => Ok(CaseLabel::F2II),
            _ => Err(Error::Unclassified("no collinear triple".into())),
        },
        3 => match count(4) {
            0 => Ok(CaseLabel::F3III),
            1 => {
                let l_a = *big.iter().find(|c| c.len() == 4).unwrap();
                let l_b: Vec<IndexSet> = big
                    .iter()
                    .copied()
                    .filter(|c| c.is_disjoint(l_a))
                    .collect();
                let [l_b] = l_b[..] else {
                    return Err(Error::Unclassified(format!(
                        "{} lines of three or more points avoid the 4-line",
                        l_b.len()
                    )));
                };
                let mut degrees: Vec<usize> = l_b
                    .iter()
                    .map(|p| big.iter().filter(|c| **c != l_b && c.contains(p)).count())
                    .collect();
                degrees.sort_unstable();
                match degrees[..] {
                    [0, 2, 2] => Ok(CaseLabel::F3Ia),
                    [1, 1, 2] => Ok(CaseLabel::F3Ib),
                    _ => Err(Error::Unclassified(format!(
                        "ordinary-line pattern {degrees:?} on the 3-line"
                    ))),
                }
            }
            2 => Ok(CaseLabel::F3IIa),
            3 => Ok(CaseLabel::F3IIb),
            n => Err(Error::Unclassified(format!("{n} four-point lines"))),
        },
        _ => Err(Error::Precondition(format!("classification needs k in {{2, 3}}, got {k}"))),
    }
}
