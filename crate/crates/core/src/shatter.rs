//! Isolation and shattering by unions of `k` lines.
//!
//! A subset `A ⊆ P` is cut out by a union of `k` lines iff `A` is covered by
//! at most `k` "usable" classes: traces of `S²_P` lying inside `A`, or
//! singleton classes. Any line whose trace is a single point of `A` can be
//! swapped for a singleton class, and a line meeting `P ∖ A` is never usable,
//! so this finite search is exact.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::incidence::{Configuration, LineClass};
use crate::index_set::IndexSet;
use crate::scalar::Scalar;
use crate::setcover;

/// Largest configuration [`shatters`] accepts unless told otherwise.
pub const DEFAULT_SIZE_LIMIT: usize = 16;

/// At most `k` line classes whose union meets `P` exactly in `target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolationWitness {
    pub target: IndexSet,
    pub lines: Vec<LineClass>,
}

impl IsolationWitness {
    /// Checks the witness against `cfg` by recomputing every trace from coordinates.
    pub fn is_valid_for<T: Scalar>(&self, cfg: &Configuration<T>, k: usize) -> bool {
        if self.lines.len() > k || !self.target.is_subset(cfg.all()) {
            return false;
        }
        let mut union = IndexSet::EMPTY;
        for class in &self.lines {
            let trace = match class {
                LineClass::Spanned { line, .. } => cfg.trace_of(line),
                LineClass::Singleton(p) if *p < cfg.len() => IndexSet::singleton(*p),
                LineClass::Singleton(_) => return false,
            };
            union = union.union(trace);
        }
        union == self.target
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShatterReport {
    pub k: usize,
    pub shattered: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_subset: Option<IndexSet>,
    /// One witness per subset, in lexicographic subset order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<IsolationWitness>>,
}

/// A witness that `a` is isolated by a union of `k` lines, if one exists.
///
/// The witness uses as few lines as possible.
pub fn isolate<T: Scalar>(cfg: &Configuration<T>, a: IndexSet, k: usize) -> Option<IsolationWitness> {
    if !a.is_subset(cfg.all()) {
        return None;
    }
    let lines: Vec<(usize, IndexSet)> = cfg
        .traces()
        .into_iter()
        .enumerate()
        .filter(|(_, t)| t.is_subset(a))
        .collect();
    let traces: Vec<IndexSet> = lines.iter().map(|(_, t)| *t).collect();
    let cover = setcover::min_cover(a, &traces, true, k)?;
    let classes = cover
        .into_iter()
        .map(|c| match c {
            setcover::Choice::Set(i) => cfg.class_of(setcover::Choice::Set(lines[i].0)),
            other => cfg.class_of(other),
        })
        .collect();
    Some(IsolationWitness {
        target: a,
        lines: classes,
    })
}

/// Whether unions of `k` lines shatter `cfg`, using [`DEFAULT_SIZE_LIMIT`].
pub fn shatters<T: Scalar>(
    cfg: &Configuration<T>,
    k: usize,
    want_witnesses: bool,
) -> Result<ShatterReport> {
    shatters_with_limit(cfg, k, want_witnesses, DEFAULT_SIZE_LIMIT)
}

/// Like [`shatters`] with an explicit size limit.
///
/// The failing subset, if any, is the lexicographically least one.
pub fn shatters_with_limit<T: Scalar>(
    cfg: &Configuration<T>,
    k: usize,
    want_witnesses: bool,
    limit: usize,
) -> Result<ShatterReport> {
    if cfg.len() > limit {
        return Err(Error::SizeLimit {
            found: cfg.len(),
            limit,
        });
    }
    let subsets: Vec<IndexSet> = IndexSet::lex_subsets(cfg.len()).collect();
    let check = |&a: &IndexSet| (a, isolate(cfg, a, k));
    if want_witnesses {
        let results: Vec<_> = if cfg.len() > 10 {
            subsets.par_iter().map(check).collect()
        } else {
            subsets.iter().map(check).collect()
        };
        let failing = results.iter().find(|(_, w)| w.is_none()).map(|(a, _)| *a);
        return Ok(ShatterReport {
            k,
            shattered: failing.is_none(),
            failing_subset: failing,
            witnesses: failing
                .is_none()
                .then(|| results.into_iter().filter_map(|(_, w)| w).collect()),
        });
    }
    // subsets of size ≤ k are always isolated by singletons
    let fails = |a: &IndexSet| a.len() > k && isolate(cfg, *a, k).is_none();
    let failing = if cfg.len() > 10 {
        subsets.par_iter().find_first(|a| fails(a)).copied()
    } else {
        subsets.iter().find(|a| fails(a)).copied()
    };
    Ok(ShatterReport {
        k,
        shattered: failing.is_none(),
        failing_subset: failing,
        witnesses: None,
    })
}

/// The lexicographically least subset of `0..n` that is not a union of at
/// most `k` members of `traces`, when every single element and the empty
/// set are also available as traces.
///
/// This is the shattering test for any family whose quotient looks like
/// the planar one; hyperplane unions in higher dimension use it directly.
pub fn first_unisolated(n: usize, traces: &[IndexSet], k: usize) -> Option<IndexSet> {
    IndexSet::lex_subsets(n).find(|&a| {
        if a.len() <= k {
            return false;
        }
        let usable: Vec<IndexSet> = traces.iter().copied().filter(|t| t.is_subset(a)).collect();
        setcover::min_cover(a, &usable, true, k).is_none()
    })
}

/// Convenience predicate over [`shatters`] without witnesses.
pub fn is_shattered<T: Scalar>(cfg: &Configuration<T>, k: usize) -> Result<bool> {
    Ok(shatters(cfg, k, false)?.shattered)
}

/// Size of the largest sub-configuration shattered by unions of `k` lines,
/// with the lexicographically least such subset.
///
/// Sizes are tried in decreasing order; a subset is skipped without a full
/// check when it holds `k + 2` collinear points or cannot itself be covered
/// by `k` lines.
pub fn max_shattered_subset<T: Scalar>(cfg: &Configuration<T>, k: usize) -> Result<(usize, IndexSet)> {
    if cfg.len() > DEFAULT_SIZE_LIMIT {
        return Err(Error::SizeLimit {
            found: cfg.len(),
            limit: DEFAULT_SIZE_LIMIT,
        });
    }
    for m in (0..=cfg.len()).rev() {
        for sub in IndexSet::combinations(cfg.all(), m) {
            if cfg.collin_of(sub) >= k + 2 {
                continue;
            }
            let restricted = cfg.restrict(sub);
            if isolate(&restricted, restricted.all(), k).is_none() {
                continue;
            }
            if shatters(&restricted, k, false)?.shattered {
                return Ok((m, sub));
            }
        }
    }
    Ok((0, IndexSet::EMPTY))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::figures;
    use crate::geom::Line;
    use crate::PointConfig;

    #[test]
    fn four_line_is_its_own_witness() {
        let cfg = figures::case_a();
        let row = cfg.trace_of(&Line::from_coeffs(0.into(), 1.into(), 2.into()));
        let w = isolate(&cfg, row, 3).unwrap();
        assert_eq!(w.lines.len(), 1);
        assert_eq!(w.lines[0].trace(), row);
        assert!(w.is_valid_for(&cfg, 3));
    }

    #[test]
    fn four_of_five_collinear_cannot_be_isolated() {
        let cfg = PointConfig::from_ints(&[(0, 0), (1, 0), (2, 0), (3, 0), (4, 0)]).unwrap();
        for a in IndexSet::combinations(cfg.all(), 4) {
            assert!(isolate(&cfg, a, 3).is_none());
        }
    }

    #[test]
    fn empty_target_has_empty_witness() {
        let cfg = figures::case_b();
        let w = isolate(&cfg, IndexSet::EMPTY, 1).unwrap();
        assert!(w.lines.is_empty());
        assert!(w.is_valid_for(&cfg, 1));
    }

    #[test]
    fn whole_case_b_uses_its_cover() {
        let cfg = figures::case_b();
        let w = isolate(&cfg, cfg.all(), 3).unwrap();
        let mut got: Vec<_> = w.lines.clone();
        got.sort();
        assert_eq!(got, cfg.all_covers(3).pop().unwrap());
    }

    #[test]
    fn two_collinear_triples_defeat_two_lines() {
        let cfg = PointConfig::from_ints(&[(0, 0), (1, 0), (2, 0), (0, 1), (1, 2), (2, 3)]).unwrap();
        let report = shatters(&cfg, 2, false).unwrap();
        assert!(!report.shattered);
        let failing = report.failing_subset.unwrap();
        assert!(isolate(&cfg, failing, 2).is_none());
        // lex-least: every earlier subset is isolated
        for a in IndexSet::lex_subsets(6).take_while(|a| *a < failing) {
            assert!(isolate(&cfg, a, 2).is_some());
        }
    }

    #[test]
    fn witnesses_cover_every_subset() {
        let cfg = figures::two_lines_i();
        let report = shatters(&cfg, 2, true).unwrap();
        assert!(report.shattered);
        let ws = report.witnesses.unwrap();
        assert_eq!(ws.len(), 32);
        assert!(ws.iter().all(|w| w.is_valid_for(&cfg, 2)));
    }

    #[test]
    fn size_limit_is_enforced() {
        let pts: Vec<_> = (0..17).map(|i| (i, i * i)).collect();
        let cfg = PointConfig::from_ints(&pts).unwrap();
        assert_eq!(
            shatters(&cfg, 3, false).unwrap_err(),
            Error::SizeLimit { found: 17, limit: 16 }
        );
        assert!(shatters_with_limit(&cfg, 1, false, 17).is_ok());
    }

    #[test]
    fn generic_points_max_out_at_four_for_two_lines() {
        let pts: Vec<_> = (0..7).map(|i| (i, i * i)).collect();
        let cfg = PointConfig::from_ints(&pts).unwrap();
        assert_eq!(cfg.collin(), 2);
        let (m, sub) = max_shattered_subset(&cfg, 2).unwrap();
        assert_eq!(m, 4);
        assert_eq!(sub.to_vec(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn witness_with_wrong_trace_is_rejected() {
        let cfg = figures::case_a();
        let w = IsolationWitness {
            target: [0, 1].into_iter().collect(),
            lines: vec![cfg.candidate_classes()[0].clone()],
        };
        let actual = w.lines[0].trace();
        assert_eq!(w.is_valid_for(&cfg, 3), actual == w.target);
    }
}
