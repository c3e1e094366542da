//! Codimension-two flats in `ℝⁿ` against unions of hyperplanes.
//!
//! A configuration of `(n-2)`-flats is cut by a suitable translate `U'` of a
//! hyperplane through the origin; the pieces are `(n-3)`-flats of
//! `U' ≅ ℝⁿ⁻¹`, and repeating down to the plane turns them into points.
//! Bad translates are the finitely many `ν·x = t` that contain an
//! `(n-3)`-flat `E ∩ E'` or `E ∩ V` lying in a translate of `U`; every other
//! translate satisfies the three conditions checked by
//! [`check_translate`].

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geom::{Point2, RationalRepr};
use crate::incidence::Configuration;
use crate::index_set::{IndexSet, MAX_ELEMENTS};
use crate::iso::{shatter_structure, ShatterStructure};
use crate::linalg::{self, dot, in_span, nullspace, rref, sub, Vector};
use crate::scalar::{format_scalar, Scalar};
use crate::shatter::{first_unisolated, shatters_with_limit, DEFAULT_SIZE_LIMIT};

/// An affine subspace `offset + span(basis)` in canonical form: the basis is
/// in reduced row-echelon form and the offset vanishes on its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat<T> {
    offset: Vector<T>,
    basis: Vec<Vector<T>>,
}

impl<T: Scalar> Flat<T> {
    /// Rejects dependent or wrongly sized basis vectors.
    pub fn new(offset: Vector<T>, basis: Vec<Vector<T>>) -> Result<Self> {
        let n = offset.len();
        if let Some(bad) = basis.iter().find(|b| b.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        if linalg::rank(&basis) != basis.len() {
            return Err(Error::Precondition("basis vectors are linearly dependent".into()));
        }
        Ok(Self::spanned(offset, &basis))
    }

    /// The flat through `offset` spanned by `vectors`, dependent or not.
    pub fn spanned(offset: Vector<T>, vectors: &[Vector<T>]) -> Self {
        let (basis, pivots) = rref(vectors);
        let mut offset = offset;
        for (row, &p) in basis.iter().zip(&pivots) {
            let f = offset[p].clone();
            if !f.is_zero() {
                offset = sub(&offset, &linalg::scale(row, &f));
            }
        }
        Flat { offset, basis }
    }

    pub fn point(p: Vector<T>) -> Self {
        Flat {
            offset: p,
            basis: Vec::new(),
        }
    }

    /// `{x : normal · x = c}`.
    pub fn hyperplane(normal: &[T], c: T) -> Result<Self> {
        Self::from_equations(&[normal.to_vec()], &[c])
            .filter(|f| f.dim() + 1 == normal.len())
            .ok_or_else(|| Error::Precondition("zero normal vector".into()))
    }

    /// The solution set of `rows · x = rhs`, if nonempty.
    pub fn from_equations(rows: &[Vector<T>], rhs: &[T]) -> Option<Self> {
        let n = rows.first()?.len();
        let aug: Vec<Vector<T>> = rows
            .iter()
            .zip(rhs)
            .map(|(r, c)| {
                let mut v = r.clone();
                v.push(c.clone());
                v
            })
            .collect();
        let (r, pivots) = rref(&aug);
        if pivots.contains(&n) {
            return None;
        }
        let mut offset = vec![T::zero(); n];
        for (row, &p) in r.iter().zip(&pivots) {
            offset[p] = row[n].clone();
        }
        let coeffs: Vec<Vector<T>> = r.iter().map(|row| row[..n].to_vec()).collect();
        Some(Self::spanned(offset, &nullspace(&coeffs, n)))
    }

    pub fn ambient_dim(&self) -> usize {
        self.offset.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn offset(&self) -> &[T] {
        &self.offset
    }

    pub fn basis(&self) -> &[Vector<T>] {
        &self.basis
    }

    /// Linear equations `rows · x = rhs` cutting out the flat.
    pub fn equations(&self) -> (Vec<Vector<T>>, Vec<T>) {
        let normals = nullspace(&self.basis, self.ambient_dim());
        let rhs = normals.iter().map(|v| dot(v, &self.offset)).collect();
        (normals, rhs)
    }

    pub fn contains_direction(&self, v: &[T]) -> bool {
        in_span(&self.basis, v)
    }

    pub fn contains_point(&self, x: &[T]) -> bool {
        self.contains_direction(&sub(x, &self.offset))
    }

    pub fn is_subset_of(&self, other: &Flat<T>) -> bool {
        other.contains_point(&self.offset) && self.basis.iter().all(|b| other.contains_direction(b))
    }

    /// Smallest flat containing both.
    pub fn join(&self, other: &Flat<T>) -> Flat<T> {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        vs.push(sub(&other.offset, &self.offset));
        Self::spanned(self.offset.clone(), &vs)
    }

    pub fn meet(&self, other: &Flat<T>) -> Option<Flat<T>> {
        let (mut rows, mut rhs) = self.equations();
        let (r2, c2) = other.equations();
        rows.extend(r2);
        rhs.extend(c2);
        if rows.is_empty() {
            return Some(self.clone());
        }
        Self::from_equations(&rows, &rhs)
    }

    /// Image under `x ↦ M·x + t`.
    pub fn map(&self, m: &[Vector<T>], t: &[T]) -> Flat<T> {
        let apply = |v: &[T]| -> Vector<T> { m.iter().map(|row| dot(row, v)).collect() };
        let offset = linalg::add(&apply(&self.offset), t);
        let basis: Vec<Vector<T>> = self.basis.iter().map(|b| apply(b)).collect();
        Self::spanned(offset, &basis)
    }

    /// Drops coordinate `coord` everywhere.
    fn drop_coordinate(&self, coord: usize) -> Flat<T> {
        let drop = |v: &[T]| -> Vector<T> {
            v.iter()
                .enumerate()
                .filter(|(i, _)| *i != coord)
                .map(|(_, x)| x.clone())
                .collect()
        };
        Self::spanned(drop(&self.offset), &self.basis.iter().map(|b| drop(b)).collect::<Vec<_>>())
    }
}

impl<T: Scalar> fmt::Display for Flat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = |x: &[T]| x.iter().map(format_scalar).collect::<Vec<_>>().join(", ");
        write!(f, "({})", v(&self.offset))?;
        for b in &self.basis {
            write!(f, " + ℝ({})", v(b))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct FlatRepr<R> {
    offset: Vec<R>,
    basis: Vec<Vec<R>>,
}

impl<T: Scalar> Serialize for Flat<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v = |x: &[T]| x.iter().map(format_scalar).collect::<Vec<_>>();
        FlatRepr {
            offset: v(&self.offset),
            basis: self.basis.iter().map(|b| v(b)).collect(),
        }
        .serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Flat<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = FlatRepr::<RationalRepr>::deserialize(d)?;
        let parse = |xs: &[RationalRepr]| -> std::result::Result<Vector<T>, D::Error> {
            xs.iter().map(|x| x.parse::<T>().map_err(D::Error::custom)).collect()
        };
        let offset = parse(&raw.offset)?;
        let basis = raw.basis.iter().map(|b| parse(b)).collect::<std::result::Result<Vec<_>, _>>()?;
        Flat::new(offset, basis).map_err(D::Error::custom)
    }
}

/// Distinct `(n-2)`-flats in `ℝⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Scalar")]
pub struct AffineConfiguration<T> {
    n: usize,
    elements: Vec<Flat<T>>,
}

#[derive(Deserialize)]
#[serde(bound = "")]
struct AffineRepr<T: Scalar> {
    n: usize,
    elements: Vec<Flat<T>>,
}

impl<'de, T: Scalar> Deserialize<'de> for AffineConfiguration<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = AffineRepr::<T>::deserialize(d)?;
        AffineConfiguration::new(raw.n, raw.elements).map_err(serde::de::Error::custom)
    }
}

impl<T: Scalar> AffineConfiguration<T> {
    pub fn new(n: usize, elements: Vec<Flat<T>>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!("ambient dimension {n} is below 2")));
        }
        if elements.len() > MAX_ELEMENTS {
            return Err(Error::SizeLimit {
                found: elements.len(),
                limit: MAX_ELEMENTS,
            });
        }
        for e in &elements {
            if e.ambient_dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: e.ambient_dim(),
                });
            }
            if e.dim() != n - 2 {
                return Err(Error::DimensionMismatch {
                    expected: n - 2,
                    found: e.dim(),
                });
            }
        }
        for j in 0..elements.len() {
            for i in 0..j {
                if elements[i] == elements[j] {
                    return Err(Error::DuplicatePoint { first: i, second: j });
                }
            }
        }
        Ok(AffineConfiguration { n, elements })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[Flat<T>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Image under an invertible affine map of `ℝⁿ`.
    pub fn map(&self, m: &[Vector<T>], t: &[T]) -> Result<Self> {
        if linalg::rank(m) != self.n {
            return Err(Error::Precondition("singular linear part".into()));
        }
        Self::new(self.n, self.elements.iter().map(|e| e.map(m, t)).collect())
    }

    /// The plane configuration of a two-dimensional instance.
    pub fn to_points(&self) -> Result<Configuration<T>> {
        if self.n != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: self.n,
            });
        }
        Configuration::new(
            self.elements
                .iter()
                .map(|e| Point2::new(e.offset[0].clone(), e.offset[1].clone()))
                .collect(),
        )
    }

    pub fn from_points(cfg: &Configuration<T>) -> Self {
        let elements = cfg
            .points()
            .iter()
            .map(|p| Flat::point(vec![p.x.clone(), p.y.clone()]))
            .collect();
        AffineConfiguration { n: 2, elements }
    }
}

/// Indices of the elements contained in the hyperplane `v`.
pub fn hyperplane_trace<T: Scalar>(cfg: &AffineConfiguration<T>, v: &Flat<T>) -> Result<IndexSet> {
    if v.ambient_dim() != cfg.n {
        return Err(Error::DimensionMismatch {
            expected: cfg.n,
            found: v.ambient_dim(),
        });
    }
    if v.dim() + 1 != cfg.n {
        return Err(Error::DimensionMismatch {
            expected: cfg.n - 1,
            found: v.dim(),
        });
    }
    Ok((0..cfg.len()).filter(|&i| cfg.elements[i].is_subset_of(v)).collect())
}

/// Every hyperplane containing two or more elements, with its trace, in trace order.
pub fn candidate_hyperplanes<T: Scalar>(cfg: &AffineConfiguration<T>) -> Vec<(Flat<T>, IndexSet)> {
    let mut found: BTreeMap<Flat<T>, IndexSet> = BTreeMap::new();
    let m = cfg.len();
    for i in 0..m {
        for j in i + 1..m {
            let hull = cfg.elements[i].join(&cfg.elements[j]);
            if hull.dim() + 1 != cfg.n || found.contains_key(&hull) {
                continue;
            }
            let trace = (0..m).filter(|&e| cfg.elements[e].is_subset_of(&hull)).collect();
            found.insert(hull, trace);
        }
    }
    let mut out: Vec<_> = found.into_iter().collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    out
}

/// The quotient of hyperplanes by their traces, in the planar layout:
/// classes with two or more elements.
pub fn direct_structure<T: Scalar>(cfg: &AffineConfiguration<T>) -> ShatterStructure {
    ShatterStructure::new(cfg.len(), candidate_hyperplanes(cfg).into_iter().map(|(_, t)| t))
}

fn transverse<T: Scalar>(e: &Flat<T>, normal: &[T]) -> bool {
    e.basis.iter().any(|b| !dot(b, normal).is_zero())
}

/// A normal `ν` such that no element's direction lies in `ν^⊥`.
///
/// Coordinate normals are tried first, then `(1, s, s², …)` for `s = 1, 2, …`;
/// each element rules out fewer than `n` values of `s`.
pub fn choose_direction<T: Scalar>(cfg: &AffineConfiguration<T>) -> Result<Vector<T>> {
    let n = cfg.n;
    if cfg.elements.iter().any(|e| e.dim() == 0) {
        return Err(Error::Precondition("points lie in some translate of every hyperplane".into()));
    }
    let ok = |v: &[T]| cfg.elements.iter().all(|e| transverse(e, v));
    for i in 0..n {
        let mut v = vec![T::zero(); n];
        v[i] = T::one();
        if ok(&v) {
            return Ok(v);
        }
    }
    for s in 1..=(n * cfg.len() + 1) as i64 {
        let mut v = Vec::with_capacity(n);
        let mut x = T::one();
        for _ in 0..n {
            v.push(x.clone());
            x = x * T::from_int(s);
        }
        if ok(&v) {
            return Ok(v);
        }
    }
    unreachable!("moment-curve normals exhaust the bad values")
}

/// A translate `{ν·x = t}` of `ν^⊥` and how it was found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct Translate<T: Scalar> {
    #[serde(serialize_with = "ser_scalars")]
    pub normal: Vector<T>,
    #[serde(serialize_with = "ser_scalar")]
    pub t: T,
    /// Excluded values of `t`, sorted.
    #[serde(serialize_with = "ser_scalars")]
    pub excluded: Vec<T>,
    pub bound: usize,
}

fn ser_scalar<T: Scalar, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    format_scalar(v).serialize(s)
}

fn ser_scalars<T: Scalar, S: Serializer>(v: &[T], s: S) -> std::result::Result<S::Ok, S::Error> {
    v.iter().map(format_scalar).collect::<Vec<_>>().serialize(s)
}

impl<T: Scalar> Translate<T> {
    pub fn hyperplane(&self) -> Flat<T> {
        Flat::hyperplane(&self.normal, self.t.clone()).expect("nonzero normal")
    }
}

/// The least `t ∈ {0, 1, 2, …}` such that `{ν·x = t}` satisfies the
/// translate conditions for `cfg`.
///
/// With `p` the first nonzero coordinate of `ν`, this is the translate of
/// `ν^⊥` by `t·e_p/ν_p`.
pub fn find_good_translate<T: Scalar>(cfg: &AffineConfiguration<T>, normal: &[T]) -> Result<Translate<T>> {
    if normal.len() != cfg.n {
        return Err(Error::DimensionMismatch {
            expected: cfg.n,
            found: normal.len(),
        });
    }
    if let Some(i) = cfg.elements.iter().position(|e| !transverse(e, normal)) {
        return Err(Error::Precondition(format!("element {i} is parallel to the chosen hyperplane")));
    }
    let in_direction = |f: &Flat<T>| f.basis.iter().all(|b| dot(b, normal).is_zero());
    let mut excluded = Vec::new();
    let mut bad_flat = |f: Option<Flat<T>>| {
        if let Some(f) = f {
            if f.dim() + 3 == cfg.n && in_direction(&f) {
                excluded.push(dot(normal, &f.offset));
            }
        }
    };
    let m = cfg.len();
    for i in 0..m {
        for j in i + 1..m {
            bad_flat(cfg.elements[i].meet(&cfg.elements[j]));
        }
    }
    let cands = candidate_hyperplanes(cfg);
    for (v, trace) in &cands {
        for (e, flat) in cfg.elements.iter().enumerate() {
            if !trace.contains(e) {
                bad_flat(flat.meet(v));
            }
        }
    }
    excluded.sort();
    excluded.dedup();
    let bound = 1 + m * m.saturating_sub(1) / 2 + cands.len() * m;
    for j in 0..bound {
        let t = T::from_int(j as i64);
        if excluded.binary_search(&t).is_err() {
            return Ok(Translate {
                normal: normal.to_vec(),
                t,
                excluded,
                bound,
            });
        }
    }
    Err(Error::BoundExceeded { bound })
}

/// Outcome of checking a translate `U'` directly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslateCheck {
    /// Every element meets `U'` in a nonempty proper subset.
    pub proper: bool,
    /// Distinct elements have distinct pieces.
    pub distinct: bool,
    /// Hyperplanes containing two or more elements keep their traces.
    pub traces_kept: bool,
}

impl TranslateCheck {
    pub fn all(&self) -> bool {
        self.proper && self.distinct && self.traces_kept
    }
}

/// Evaluates the three translate conditions for the hyperplane `u` from the
/// pieces `E ∩ u` alone.
pub fn check_translate<T: Scalar>(cfg: &AffineConfiguration<T>, u: &Flat<T>) -> TranslateCheck {
    let pieces: Vec<Option<Flat<T>>> = cfg.elements.iter().map(|e| e.meet(u)).collect();
    let proper = pieces
        .iter()
        .all(|p| matches!(p, Some(f) if f.dim() < u.dim()));
    let distinct = (0..pieces.len()).all(|i| (i + 1..pieces.len()).all(|j| pieces[i] != pieces[j]));
    let traces_kept = proper
        && candidate_hyperplanes(cfg).iter().all(|(v, trace)| {
            let kept: IndexSet = (0..pieces.len())
                .filter(|&i| pieces[i].as_ref().is_some_and(|p| p.is_subset_of(v)))
                .collect();
            kept == *trace
        });
    TranslateCheck {
        proper,
        distinct,
        traces_kept,
    }
}

/// One step of dimension reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct Reduction<T: Scalar> {
    pub reduced: AffineConfiguration<T>,
    pub translate: Translate<T>,
    /// Coordinate removed by the chart of `U'`.
    pub dropped_coordinate: usize,
    pub check: TranslateCheck,
    /// The reduced hyperplane-trace structure equals the source one under
    /// the identity labelling.
    pub structure_preserved: bool,
}

/// Intersects every element with a good translate of a hyperplane and
/// expresses the pieces in the chart of `U'` that drops the first nonzero
/// coordinate of its normal.
pub fn reduce_dimension<T: Scalar>(cfg: &AffineConfiguration<T>) -> Result<Reduction<T>> {
    if cfg.n < 3 {
        return Err(Error::Precondition("configuration is already planar".into()));
    }
    let normal = choose_direction(cfg)?;
    let translate = find_good_translate(cfg, &normal)?;
    let u = translate.hyperplane();
    let check = check_translate(cfg, &u);
    let coord = normal.iter().position(|x| !x.is_zero()).expect("nonzero normal");
    let elements = cfg
        .elements
        .iter()
        .map(|e| e.meet(&u).expect("transverse elements meet every translate").drop_coordinate(coord))
        .collect();
    let reduced = AffineConfiguration::new(cfg.n - 1, elements)?;
    let structure_preserved = direct_structure(cfg) == direct_structure(&reduced);
    Ok(Reduction {
        reduced,
        translate,
        dropped_coordinate: coord,
        check,
        structure_preserved,
    })
}

/// Reduces repeatedly down to `target` dimensions.
pub fn reduce_to<T: Scalar>(cfg: &AffineConfiguration<T>, target: usize) -> Result<(AffineConfiguration<T>, Vec<Reduction<T>>)> {
    if target < 2 || target > cfg.n {
        return Err(Error::Precondition(format!(
            "cannot reduce from dimension {} to {target}",
            cfg.n
        )));
    }
    let mut steps = Vec::new();
    let mut current = cfg.clone();
    while current.n > target {
        let step = reduce_dimension(&current)?;
        current = step.reduced.clone();
        steps.push(step);
    }
    Ok((current, steps))
}

/// Shattering verdicts for hyperplane unions, computed in `ℝⁿ` and after
/// reduction to the plane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VcReport {
    pub k: usize,
    pub elements: usize,
    pub direct_shattered: bool,
    pub reduced_shattered: bool,
    pub agree: bool,
    /// Every reduction step kept the trace structure unchanged.
    pub structure_preserved: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direct_failing_subset: Option<IndexSet>,
}

pub fn vc_equal_check<T: Scalar>(cfg: &AffineConfiguration<T>, k: usize) -> Result<VcReport> {
    if cfg.len() > DEFAULT_SIZE_LIMIT {
        return Err(Error::SizeLimit {
            found: cfg.len(),
            limit: DEFAULT_SIZE_LIMIT,
        });
    }
    let direct = direct_structure(cfg);
    let failing = first_unisolated(cfg.len(), &direct.classes, k);
    let (planar, steps) = reduce_to(cfg, 2)?;
    let points = planar.to_points()?;
    let reduced = shatters_with_limit(&points, k, false, DEFAULT_SIZE_LIMIT)?.shattered;
    Ok(VcReport {
        k,
        elements: cfg.len(),
        direct_shattered: failing.is_none(),
        reduced_shattered: reduced,
        agree: failing.is_none() == reduced,
        structure_preserved: steps.iter().all(|s| s.structure_preserved),
        direct_failing_subset: failing,
    })
}

/// The planar structure of the fully reduced configuration.
pub fn reduced_structure<T: Scalar>(cfg: &AffineConfiguration<T>) -> Result<ShatterStructure> {
    let (planar, _) = reduce_to(cfg, 2)?;
    Ok(shatter_structure(&planar.to_points()?))
}

/// Each point `p` becomes `p × ℝⁿ⁻²`.
pub fn lift_parallel<T: Scalar>(cfg: &Configuration<T>, n: usize) -> AffineConfiguration<T> {
    assert!(n >= 2);
    let basis: Vec<Vector<T>> = (2..n)
        .map(|i| {
            let mut v = vec![T::zero(); n];
            v[i] = T::one();
            v
        })
        .collect();
    let elements = cfg
        .points()
        .iter()
        .map(|p| {
            let mut o = vec![T::zero(); n];
            o[0] = p.x.clone();
            o[1] = p.y.clone();
            Flat::spanned(o, &basis)
        })
        .collect();
    AffineConfiguration::new(n, elements).expect("distinct points lift to distinct flats")
}

/// Each point `(x, y)` becomes the line in `ℝ³` through `(x, y, 0)` and `apex`,
/// which must lie off the plane `z = 0`.
pub fn lift_cone<T: Scalar>(cfg: &Configuration<T>, apex: [T; 3]) -> AffineConfiguration<T> {
    assert!(!apex[2].is_zero(), "apex must lie off z = 0");
    let elements = cfg
        .points()
        .iter()
        .map(|p| {
            let o = vec![p.x.clone(), p.y.clone(), T::zero()];
            let d = sub(&apex, &o);
            Flat::spanned(o, &[d])
        })
        .collect();
    AffineConfiguration::new(3, elements).expect("distinct points lift to distinct lines")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{figures, Rational};

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    fn line3(o: &[i64], d: &[i64]) -> Flat<Rational> {
        Flat::new(v(o), vec![v(d)]).unwrap()
    }

    #[test]
    fn canonical_form_identifies_equal_flats() {
        let a = line3(&[0, 0, 0], &[1, 1, 1]);
        let b = line3(&[2, 2, 2], &[-3, -3, -3]);
        assert_eq!(a, b);
        assert!(Flat::new(v(&[0, 0, 0]), vec![v(&[1, 0, 0]), v(&[2, 0, 0])]).is_err());
    }

    #[test]
    fn trace_uses_containment() {
        let cfg = AffineConfiguration::new(
            3,
            vec![line3(&[0, 0, 0], &[1, 0, 0]), line3(&[0, 1, 0], &[1, 0, 0]), line3(&[0, 0, 0], &[0, 0, 1])],
        )
        .unwrap();
        let z0 = Flat::hyperplane(&v(&[0, 0, 1]), q(0)).unwrap();
        // the third line meets z = 0 but is not inside it
        assert_eq!(hyperplane_trace(&cfg, &z0).unwrap().to_vec(), vec![0, 1]);
        assert!(hyperplane_trace(&cfg, &line3(&[0, 0, 0], &[1, 0, 0])).is_err());
    }

    #[test]
    fn skew_lines_have_no_common_plane() {
        let a = line3(&[0, 0, 0], &[1, 0, 0]);
        let b = line3(&[0, 0, 1], &[0, 1, 0]);
        assert_eq!(a.join(&b).dim(), 3);
        let cfg = AffineConfiguration::new(3, vec![a, b]).unwrap();
        assert!(candidate_hyperplanes(&cfg).is_empty());
    }

    #[test]
    fn general_position_translate() {
        let cfg = AffineConfiguration::new(
            3,
            vec![line3(&[0, 0, 0], &[1, 0, 1]), line3(&[1, 0, 0], &[0, 1, 1]), line3(&[0, 2, 0], &[1, 1, 1])],
        )
        .unwrap();
        let normal = v(&[0, 0, 1]);
        let tr = find_good_translate(&cfg, &normal).unwrap();
        assert!(check_translate(&cfg, &tr.hyperplane()).all());
        // brute force: the chosen t is the least nonnegative integer passing the checker
        let first_ok = (0..50)
            .find(|&j| check_translate(&cfg, &Flat::hyperplane(&normal, q(j)).unwrap()).all())
            .unwrap();
        assert_eq!(tr.t, q(first_ok));
    }

    #[test]
    fn single_element_takes_first_translate() {
        let cfg = AffineConfiguration::new(3, vec![line3(&[0, 0, 5], &[0, 0, 1])]).unwrap();
        let tr = find_good_translate(&cfg, &v(&[0, 0, 1])).unwrap();
        assert_eq!(tr.t, q(0));
        assert!(find_good_translate(&cfg, &v(&[1, 0, 0])).is_err());
    }

    #[test]
    fn common_plane_forces_exclusions() {
        // two lines in the plane x = 0 crossing at (0, 0, 0); z = 0 contains the crossing
        let cfg = AffineConfiguration::new(3, vec![line3(&[0, 0, 0], &[0, 1, 1]), line3(&[0, 0, 0], &[0, -1, 1])]).unwrap();
        let tr = find_good_translate(&cfg, &v(&[0, 0, 1])).unwrap();
        assert_eq!(tr.excluded, vec![q(0)]);
        assert_eq!(tr.t, q(1));
        assert!(!check_translate(&cfg, &Flat::hyperplane(&v(&[0, 0, 1]), q(0)).unwrap()).distinct);
        assert!(check_translate(&cfg, &tr.hyperplane()).all());
    }

    #[test]
    fn parallel_lift_reduces_to_the_original_structure() {
        let planar = figures::two_lines_ii();
        let lifted = lift_parallel(&planar, 3);
        let r = reduce_dimension(&lifted).unwrap();
        assert!(r.check.all());
        assert!(r.structure_preserved);
        assert_eq!(direct_structure(&lifted), shatter_structure(&planar));
        assert_eq!(reduced_structure(&lifted).unwrap(), shatter_structure(&planar));
        assert!(reduce_dimension(&AffineConfiguration::from_points(&planar)).is_err());
    }

    #[test]
    fn four_dimensions_to_two() {
        let planar = figures::case_b();
        let lifted = lift_parallel(&planar, 4);
        let (flat, steps) = reduce_to(&lifted, 2).unwrap();
        assert_eq!(steps.len(), 2);
        assert!(steps.iter().all(|s| s.structure_preserved && s.check.all()));
        assert_eq!(shatter_structure(&flat.to_points().unwrap()), shatter_structure(&planar));
    }

    #[test]
    fn cone_lift_keeps_verdicts() {
        let planar = figures::three_lines_ia();
        let lifted = lift_cone(&planar, [q(1), q(-2), q(3)]);
        let report = vc_equal_check(&lifted, 3).unwrap();
        assert!(report.direct_shattered && report.reduced_shattered && report.structure_preserved);
    }

    #[test]
    fn single_element_is_shattered_by_one_hyperplane() {
        let cfg = AffineConfiguration::new(3, vec![line3(&[1, 2, 3], &[1, 1, 1])]).unwrap();
        let r = vc_equal_check(&cfg, 1).unwrap();
        assert!(r.direct_shattered && r.reduced_shattered && r.agree);
    }

    #[test]
    fn json_round_trip() {
        let f = line3(&[1, 2, 3], &[2, 0, 1]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"offset":["0","2","5/2"],"basis":[["1","0","1/2"]]}"#);
        let back: Flat<Rational> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
