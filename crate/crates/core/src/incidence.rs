//! Incidence structure of a finite point configuration.
//!
//! All combinatorics downstream of [`Configuration::new`] work on traces:
//! the index sets `l ∩ P` of the lines through at least two configuration
//! points. Lines meeting `P` in a single point are represented by an abstract
//! [`LineClass::Singleton`]; such a line always exists because only finitely
//! many directions through a point hit another point of `P`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{are_collinear, Line, Point2};
use crate::index_set::{IndexSet, MAX_ELEMENTS};
use crate::scalar::Scalar;
use crate::setcover;

/// One `~_P` class of lines: a concrete line through two or more points, or
/// the class of lines meeting `P` in exactly one point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineClass {
    Spanned { line: Line, trace: IndexSet },
    Singleton(usize),
}

impl LineClass {
    pub fn trace(&self) -> IndexSet {
        match self {
            LineClass::Spanned { trace, .. } => *trace,
            LineClass::Singleton(p) => IndexSet::singleton(*p),
        }
    }

    pub fn line(&self) -> Option<&Line> {
        match self {
            LineClass::Spanned { line, .. } => Some(line),
            LineClass::Singleton(_) => None,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum LineClassRepr {
    Spanned { coeffs: Line, trace: IndexSet },
    Singleton { singleton: usize },
}

impl Serialize for LineClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            LineClass::Spanned { line, trace } => LineClassRepr::Spanned {
                coeffs: line.clone(),
                trace: *trace,
            },
            LineClass::Singleton(p) => LineClassRepr::Singleton { singleton: *p },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LineClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(match LineClassRepr::deserialize(d)? {
            LineClassRepr::Spanned { coeffs, trace } => LineClass::Spanned { line: coeffs, trace },
            LineClassRepr::Singleton { singleton } => LineClass::Singleton(singleton),
        })
    }
}

#[derive(Deserialize)]
#[serde(bound = "")]
struct ConfigRepr<T: Scalar> {
    points: Vec<Point2<T>>,
}

impl<T: Scalar> Serialize for Configuration<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Configuration", 1)?;
        st.serialize_field("points", &self.points)?;
        st.end()
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Configuration<T> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ConfigRepr::<T>::deserialize(d)?;
        Configuration::new(raw.points).map_err(serde::de::Error::custom)
    }
}

/// A finite labelled point set together with every line through two of its points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration<T> {
    points: Vec<Point2<T>>,
    /// Sorted by trace.
    classes: Vec<(Line, IndexSet)>,
}

impl<T: Scalar> Configuration<T> {
    pub fn new(points: Vec<Point2<T>>) -> Result<Self> {
        if points.len() > MAX_ELEMENTS {
            return Err(Error::SizeLimit {
                found: points.len(),
                limit: MAX_ELEMENTS,
            });
        }
        for j in 0..points.len() {
            for i in 0..j {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoint { first: i, second: j });
                }
            }
        }
        let n = points.len();
        let mut seen = vec![IndexSet::EMPTY; n];
        let mut classes = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if seen[i].contains(j) {
                    continue;
                }
                let trace: IndexSet = (0..n)
                    .filter(|&k| k == i || k == j || are_collinear(&points[i], &points[j], &points[k]))
                    .collect();
                for k in trace {
                    seen[k] = seen[k].union(trace);
                }
                classes.push((Line::through(&points[i], &points[j])?, trace));
            }
        }
        classes.sort_by(|a, b| a.1.cmp(&b.1));
        Ok(Configuration { points, classes })
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(coords.iter().map(|&(x, y)| Point2::int(x, y)).collect())
    }

    pub fn points(&self) -> &[Point2<T>] {
        &self.points
    }

    /// Traces on `P` of an arbitrary line.
    pub fn trace_of(&self, line: &Line) -> IndexSet {
        (0..self.len()).filter(|&i| line.contains(&self.points[i])).collect()
    }

    /// The configuration restricted to `subset`, relabelled `0..subset.len()`.
    pub fn restrict(&self, subset: IndexSet) -> Self {
        let points: Vec<_> = subset.iter().map(|i| self.points[i].clone()).collect();
        let classes = self
            .classes
            .iter()
            .filter(|(_, t)| t.intersection(subset).len() >= 2)
            .map(|(l, t)| (l.clone(), t.intersection(subset).compress(subset)))
            .collect::<Vec<_>>();
        let mut classes = classes;
        classes.sort_by(|a, b| a.1.cmp(&b.1));
        Configuration { points, classes }
    }

    /// Applies a map to every point; incidences are recomputed from scratch.
    pub fn map_points(&self, f: impl Fn(&Point2<T>) -> Point2<T>) -> Result<Self> {
        Self::new(self.points.iter().map(f).collect())
    }
}

impl<T: Scalar> Configuration<T> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn all(&self) -> IndexSet {
        IndexSet::full(self.points.len())
    }

    /// Every line through at least two points with its trace (`S²_P`), sorted by trace.
    pub fn lines(&self) -> impl Iterator<Item = (&Line, IndexSet)> + '_ {
        self.classes.iter().map(|(l, t)| (l, *t))
    }

    /// The traces of `S²_P` in trace order.
    pub fn traces(&self) -> Vec<IndexSet> {
        self.classes.iter().map(|(_, t)| *t).collect()
    }

    /// Map form of the cached incidences.
    pub fn incidence_map(&self) -> BTreeMap<Line, IndexSet> {
        self.classes.iter().cloned().collect()
    }

    pub fn spanned_classes(&self) -> impl Iterator<Item = LineClass> + '_ {
        self.classes.iter().map(|(line, trace)| LineClass::Spanned {
            line: line.clone(),
            trace: *trace,
        })
    }

    /// `S²_P` followed by one singleton class per point.
    pub fn candidate_classes(&self) -> Vec<LineClass> {
        self.spanned_classes()
            .chain((0..self.len()).map(LineClass::Singleton))
            .collect()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            })
        }
    }

    fn check_subset(&self, s: IndexSet) -> Result<()> {
        match s.max() {
            Some(m) => self.check_index(m),
            None => Ok(()),
        }
    }

    /// The trace of `l_{i,j}`.
    pub fn line_trace(&self, i: usize, j: usize) -> IndexSet {
        debug_assert!(i != j);
        self.classes
            .iter()
            .find(|(_, t)| t.contains(i) && t.contains(j))
            .map(|(_, t)| *t)
            .expect("every pair lies on a cached line")
    }

    pub fn line_between(&self, i: usize, j: usize) -> &Line {
        &self
            .classes
            .iter()
            .find(|(_, t)| t.contains(i) && t.contains(j))
            .expect("every pair lies on a cached line")
            .0
    }

    /// Lines with exactly `n` points of `P`.
    pub fn n_lines(&self, n: usize) -> Vec<&Line> {
        self.lines()
            .filter(|(_, t)| t.len() == n)
            .map(|(l, _)| l)
            .collect()
    }

    /// Largest number of collinear points; `|P|` when `|P| ≤ 1`.
    pub fn collin(&self) -> usize {
        self.classes
            .iter()
            .map(|(_, t)| t.len())
            .max()
            .unwrap_or(self.len())
    }

    /// Same as [`collin`](Self::collin) for the subset `a`.
    pub fn collin_of(&self, a: IndexSet) -> usize {
        self.classes
            .iter()
            .map(|(_, t)| t.intersection(a).len())
            .max()
            .unwrap_or(0)
            .max(a.len().min(1))
    }

    /// Minimum number of lines covering `P`, with one witnessing cover.
    ///
    /// Among minimum covers the first one met by a depth-first search is
    /// returned: the lowest uncovered point is branched on, trying larger
    /// traces before smaller ones and equal sizes in trace order.
    pub fn min_line_cover(&self) -> (usize, Vec<LineClass>) {
        if self.is_empty() {
            return (0, Vec::new());
        }
        let traces = self.traces();
        let cover = setcover::min_cover(self.all(), &traces, true, self.len())
            .expect("singletons always cover");
        let classes = cover
            .into_iter()
            .map(|c| self.class_of(c))
            .collect::<Vec<_>>();
        (classes.len(), classes)
    }

    pub(crate) fn class_of(&self, choice: setcover::Choice) -> LineClass {
        match choice {
            setcover::Choice::Set(i) => LineClass::Spanned {
                line: self.classes[i].0.clone(),
                trace: self.classes[i].1,
            },
            setcover::Choice::Singleton(p) => LineClass::Singleton(p),
        }
    }

    /// Every set of exactly `k` distinct line classes whose union contains `P`.
    ///
    /// Empty when `k < m_P`. Output is sorted and free of duplicates.
    pub fn all_covers(&self, k: usize) -> Vec<Vec<LineClass>> {
        let candidates = self.candidate_classes();
        let traces: Vec<IndexSet> = candidates.iter().map(LineClass::trace).collect();
        let max_len = traces.iter().map(|t| t.len()).max().unwrap_or(0);
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(k);
        fn rec(
            start: usize,
            k: usize,
            covered: IndexSet,
            all: IndexSet,
            traces: &[IndexSet],
            max_len: usize,
            chosen: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            let left = k - chosen.len();
            let missing = all.difference(covered).len();
            if left == 0 {
                if missing == 0 {
                    out.push(chosen.clone());
                }
                return;
            }
            if missing > left * max_len || traces.len() - start < left {
                return;
            }
            for i in start..traces.len() {
                chosen.push(i);
                rec(i + 1, k, covered.union(traces[i]), all, traces, max_len, chosen, out);
                chosen.pop();
            }
        }
        let mut raw = Vec::new();
        rec(0, k, IndexSet::EMPTY, self.all(), &traces, max_len, &mut chosen, &mut raw);
        for combo in raw {
            let mut cover: Vec<LineClass> = combo.into_iter().map(|i| candidates[i].clone()).collect();
            cover.sort();
            out.push(cover);
        }
        out.sort();
        out.dedup();
        out
    }

    /// `l_{i,j} ∩ P ⊆ A`.
    pub fn pairs_inside(&self, a: IndexSet, i: usize, j: usize) -> Result<bool> {
        self.check_index(i)?;
        self.check_index(j)?;
        self.check_subset(a)?;
        if i == j || !a.contains(i) || !a.contains(j) {
            return Err(Error::Precondition(format!(
                "{i} and {j} must be distinct members of {a}"
            )));
        }
        Ok(self.line_trace(i, j).is_subset(a))
    }

    /// `O_n(l, P)`: lines with `n` points of `P`, exactly one of them on `l`.
    pub fn ordinary_lines(&self, l: &Line, n: usize) -> Vec<&Line> {
        let on_l = self.trace_of(l);
        self.lines()
            .filter(|(_, t)| t.len() == n && t.intersection(on_l).len() == 1)
            .map(|(line, _)| line)
            .collect()
    }

    /// `O_{≥n}(l, P)`.
    pub fn ordinary_lines_at_least(&self, l: &Line, n: usize) -> Vec<&Line> {
        let on_l = self.trace_of(l);
        self.lines()
            .filter(|(_, t)| t.len() >= n && t.intersection(on_l).len() == 1)
            .map(|(line, _)| line)
            .collect()
    }

    /// Lines of `S²_P` meeting every cover member in exactly one point of `P`.
    ///
    /// Lines through a single point of `P` satisfy the defining condition
    /// vacuously and are not reported.
    pub fn cross_lines(&self, cover: &[LineClass]) -> Result<Vec<(Line, IndexSet)>> {
        self.check_cover(cover)?;
        Ok(self
            .lines()
            .filter(|(_, t)| cover.iter().all(|c| c.trace().intersection(*t).len() == 1))
            .map(|(l, t)| (l.clone(), t))
            .collect())
    }

    fn check_cover(&self, cover: &[LineClass]) -> Result<()> {
        let mut covered = IndexSet::EMPTY;
        for c in cover {
            self.check_subset(c.trace())?;
            covered = covered.union(c.trace());
        }
        if covered != self.all() {
            return Err(Error::Precondition(format!(
                "cover misses points {}",
                self.all().difference(covered)
            )));
        }
        Ok(())
    }

    /// Number of cross-lines through `p`.
    pub fn node_degree(&self, cover: &[LineClass], p: usize) -> Result<usize> {
        self.check_index(p)?;
        Ok(self
            .cross_lines(cover)?
            .iter()
            .filter(|(_, t)| t.contains(p))
            .count())
    }

    fn check_disjoint(&self, a: IndexSet, b: IndexSet) -> Result<()> {
        self.check_subset(a)?;
        self.check_subset(b)?;
        if !a.is_disjoint(b) {
            return Err(Error::Precondition(format!("{a} and {b} overlap")));
        }
        Ok(())
    }

    /// `(a, b)` with `l_{a,b}` reaching `P ∖ (A ∪ B)`.
    pub fn is_bad_pair(&self, a_set: IndexSet, b_set: IndexSet, a: usize, b: usize) -> bool {
        let outside = self.all().difference(a_set.union(b_set));
        !self.line_trace(a, b).is_disjoint(outside)
    }

    pub fn bad_pairs(&self, a_set: IndexSet, b_set: IndexSet) -> Result<Vec<(usize, usize)>> {
        self.check_disjoint(a_set, b_set)?;
        let mut out = Vec::new();
        for a in a_set {
            for b in b_set {
                if self.is_bad_pair(a_set, b_set, a, b) {
                    out.push((a, b));
                }
            }
        }
        Ok(out)
    }

    /// `(a, a', b, b')` with `a < a'`, `b < b'` and all four cross pairs bad.
    pub fn bad_quadruples(
        &self,
        a_set: IndexSet,
        b_set: IndexSet,
    ) -> Result<Vec<(usize, usize, usize, usize)>> {
        self.check_disjoint(a_set, b_set)?;
        let a: Vec<_> = a_set.to_vec();
        let b: Vec<_> = b_set.to_vec();
        let bad = |x: usize, y: usize| self.is_bad_pair(a_set, b_set, x, y);
        let mut out = Vec::new();
        for (i, &a1) in a.iter().enumerate() {
            for &a2 in &a[i + 1..] {
                for (j, &b1) in b.iter().enumerate() {
                    for &b2 in &b[j + 1..] {
                        if bad(a1, b1) && bad(a1, b2) && bad(a2, b1) && bad(a2, b2) {
                            out.push((a1, a2, b1, b2));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// A matching of `A` and `B`: `max(|A|, |B|)` lines covering `A ∪ B`, each
    /// holding at most one point of `A`, at most one of `B` and none of the
    /// rest of `P`.
    ///
    /// With that many lines every line of a matching of the smaller side is a
    /// two-point line `{a, b}`; the surplus points of the larger side get
    /// singleton classes. Without the line budget the definition would be met
    /// trivially by singletons alone.
    pub fn find_matching(&self, a_set: IndexSet, b_set: IndexSet) -> Result<Option<Matching>> {
        self.check_disjoint(a_set, b_set)?;
        let (small, large) = if a_set.len() <= b_set.len() {
            (a_set, b_set)
        } else {
            (b_set, a_set)
        };
        let small_v = small.to_vec();
        // usable pair lines: trace exactly {s, t}
        let usable = |s: usize, t: usize| self.line_trace(s, t).len() == 2;
        // greedy pass first, exhaustive backtracking on failure
        let mut partner = vec![usize::MAX; small_v.len()];
        fn search(
            idx: usize,
            small: &[usize],
            large: IndexSet,
            used: IndexSet,
            partner: &mut [usize],
            usable: &dyn Fn(usize, usize) -> bool,
        ) -> bool {
            if idx == small.len() {
                return true;
            }
            for t in large.difference(used) {
                if usable(small[idx], t) {
                    partner[idx] = t;
                    if search(idx + 1, small, large, used.with(t), partner, usable) {
                        return true;
                    }
                }
            }
            false
        }
        if !search(0, &small_v, large, IndexSet::EMPTY, &mut partner, &usable) {
            return Ok(None);
        }
        let mut lines = Vec::new();
        let mut assignment = BTreeMap::new();
        let mut matched = IndexSet::EMPTY;
        for (s, &t) in small_v.iter().zip(&partner) {
            let idx = lines.len();
            lines.push(LineClass::Spanned {
                line: self.line_between(*s, t).clone(),
                trace: self.line_trace(*s, t),
            });
            assignment.insert(*s, idx);
            assignment.insert(t, idx);
            matched.insert(t);
        }
        for t in large.difference(matched) {
            assignment.insert(t, lines.len());
            lines.push(LineClass::Singleton(t));
        }
        Ok(Some(Matching {
            a: a_set,
            b: b_set,
            lines,
            assignment,
        }))
    }
}

/// Lines pairing the points of two disjoint sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub a: IndexSet,
    pub b: IndexSet,
    pub lines: Vec<LineClass>,
    /// Point index to position in `lines`.
    pub assignment: BTreeMap<usize, usize>,
}

impl Matching {
    /// Re-checks every defining condition against `cfg` from the traces alone.
    pub fn is_valid_for<T: Scalar>(&self, cfg: &Configuration<T>) -> bool {
        let rest = cfg.all().difference(self.a.union(self.b));
        let mut covered = IndexSet::EMPTY;
        for class in &self.lines {
            let t = match class {
                LineClass::Spanned { trace, .. } => {
                    let known = cfg.lines().any(|(_, tr)| tr == *trace);
                    if !known {
                        return false;
                    }
                    *trace
                }
                LineClass::Singleton(p) => IndexSet::singleton(*p),
            };
            if t.intersection(self.a).len() > 1
                || t.intersection(self.b).len() > 1
                || !t.is_disjoint(rest)
            {
                return false;
            }
            covered = covered.union(t);
        }
        let assignment_ok = self
            .assignment
            .iter()
            .all(|(&p, &i)| i < self.lines.len() && self.lines[i].trace().contains(p));
        self.a.union(self.b).is_subset(covered)
            && self.lines.len() == self.a.len().max(self.b.len())
            && assignment_ok
    }
}
