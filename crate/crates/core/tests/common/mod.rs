//! Brute-force reference computations shared by the integration tests.
//!
//! Nothing here calls into the library's incidence, cover or isomorphism
//! code: traces come from raw cross products and isolation from the full
//! closure of unions over bitmasks.

#![allow(dead_code)]

use std::collections::BTreeSet;

use lineshatter::{Point, PointConfig, Rational};
use num_traits::Zero;

pub type Mask = u64;

pub fn bit(i: usize) -> Mask {
    1 << i
}

pub fn members(m: Mask) -> Vec<usize> {
    (0..64).filter(|&i| m & bit(i) != 0).collect()
}

fn collinear(p: &Point, q: &Point, r: &Point) -> bool {
    let cross = (q.x.clone() - p.x.clone()) * (r.y.clone() - p.y.clone())
        - (q.y.clone() - p.y.clone()) * (r.x.clone() - p.x.clone());
    cross.is_zero()
}

/// Traces of all lines through two or more of `pts`.
pub fn line_traces(pts: &[Point]) -> BTreeSet<Mask> {
    let n = pts.len();
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            let t = (0..n)
                .filter(|&k| k == i || k == j || collinear(&pts[i], &pts[j], &pts[k]))
                .fold(0, |acc, k| acc | bit(k));
            out.insert(t);
        }
    }
    out
}

pub fn traces_of(cfg: &PointConfig) -> BTreeSet<Mask> {
    line_traces(cfg.points())
}

/// `reach[a]` says whether `a ⊆ 0..n` is a union of at most `k` sets from
/// `traces`, singletons or the empty set.
pub fn union_closure(n: usize, traces: &BTreeSet<Mask>, k: usize) -> Vec<bool> {
    let family: Vec<Mask> = traces.iter().copied().chain((0..n).map(bit)).collect();
    let mut reach = vec![false; 1 << n];
    reach[0] = true;
    let mut frontier = vec![0 as Mask];
    for _ in 0..k {
        let mut next = Vec::new();
        for &m in &frontier {
            for &t in &family {
                let u = m | t;
                if !reach[u as usize] {
                    reach[u as usize] = true;
                    next.push(u);
                }
            }
        }
        // unions of fewer sets stay reachable, so only new masks need extending
        frontier.extend(next);
        frontier.sort_unstable();
        frontier.dedup();
    }
    reach
}

pub fn shattered_by(n: usize, traces: &BTreeSet<Mask>, k: usize) -> bool {
    union_closure(n, traces, k).iter().all(|&r| r)
}

pub fn shattered(cfg: &PointConfig, k: usize) -> bool {
    shattered_by(cfg.len(), &traces_of(cfg), k)
}

/// The restriction of `cfg` to the points in `keep`, relabelled in order.
pub fn restrict(cfg: &PointConfig, keep: Mask) -> PointConfig {
    let pts: Vec<Point> = members(keep).into_iter().map(|i| cfg.points()[i].clone()).collect();
    PointConfig::new(pts).unwrap()
}

/// Largest `m` such that some `m`-subset of `cfg` is shattered.
pub fn max_shattered_size(cfg: &PointConfig, k: usize) -> usize {
    let n = cfg.len();
    (0..=n)
        .rev()
        .find(|&m| {
            (0..(1u64 << n))
                .filter(|s| s.count_ones() as usize == m)
                .any(|s| shattered(&restrict(cfg, s), k))
        })
        .unwrap()
}

/// Traces with two or more points, relabelled by `map[i]`.
pub fn relabel(traces: &BTreeSet<Mask>, map: &[usize]) -> BTreeSet<Mask> {
    traces
        .iter()
        .map(|&t| members(t).into_iter().fold(0, |acc, i| acc | bit(map[i])))
        .collect()
}

/// Exhaustive search for a bijection carrying one trace family onto the other.
pub fn isomorphic_by_search(n: usize, a: &BTreeSet<Mask>, b: &BTreeSet<Mask>) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search(0, n, a, b, &mut map, &mut used)
}

fn search(i: usize, n: usize, a: &BTreeSet<Mask>, b: &BTreeSet<Mask>, map: &mut [usize], used: &mut [bool]) -> bool {
    if i == n {
        return relabel(a, map) == *b;
    }
    for j in 0..n {
        if used[j] {
            continue;
        }
        map[i] = j;
        used[j] = true;
        // every trace already fully mapped must land on a trace of b
        let done: Mask = (0..=i).fold(0, |acc, x| acc | bit(x));
        let ok = a.iter().filter(|&&t| t & !done == 0).all(|&t| {
            let img = members(t).into_iter().fold(0, |acc, x| acc | bit(map[x]));
            b.contains(&img)
        });
        if ok && search(i + 1, n, a, b, map, used) {
            return true;
        }
        used[j] = false;
    }
    map[i] = usize::MAX;
    false
}

/// Lines in space given by a point and a direction.
pub type Line3 = ([Rational; 3], [Rational; 3]);

fn sub3(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [a[0].clone() - b[0].clone(), a[1].clone() - b[1].clone(), a[2].clone() - b[2].clone()]
}

fn cross3(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

fn dot3(a: &[Rational; 3], b: &[Rational; 3]) -> Rational {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

fn is_zero3(a: &[Rational; 3]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Traces of all planes containing two or more of `lines`.
pub fn plane_traces(lines: &[Line3]) -> BTreeSet<Mask> {
    let m = lines.len();
    let mut out = BTreeSet::new();
    for i in 0..m {
        for j in i + 1..m {
            let (p, d) = &lines[i];
            let (q, e) = &lines[j];
            let mut normal = cross3(d, e);
            if is_zero3(&normal) {
                normal = cross3(d, &sub3(q, p));
            } else if !dot3(&normal, &sub3(q, p)).is_zero() {
                continue; // skew
            }
            let inside = |(o, v): &Line3| dot3(&normal, v).is_zero() && dot3(&normal, &sub3(o, p)).is_zero();
            let t = (0..m).filter(|&k| inside(&lines[k])).fold(0, |acc, k| acc | bit(k));
            out.insert(t);
        }
    }
    out
}

/// Whether `A ∪ B` splits into `max(|A|, |B|)` lines each meeting `A` and
/// `B` at most once and missing the rest of the configuration, found by
/// trying every assignment. With `|A| = |B|` each line must carry exactly
/// one point of each.
pub fn matching_exists(cfg: &PointConfig, a: &[usize], b: &[usize]) -> bool {
    assert_eq!(a.len(), b.len());
    let traces = traces_of(cfg);
    let good = |x: usize, y: usize| traces.contains(&(bit(x) | bit(y)));
    permutations(b.len()).into_iter().any(|perm| (0..a.len()).all(|i| good(a[i], b[perm[i]])))
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}
