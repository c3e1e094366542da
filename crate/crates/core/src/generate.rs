//! Seeded random configurations.
//!
//! All generators draw from a [`ChaCha8Rng`] so a seed fixes the output on
//! every platform. Coordinates are small lattice points by default: low
//! heights make accidental collinearities common, which is where the
//! interesting verdicts live.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::affine_nd::{lift_cone, lift_parallel, AffineConfiguration, Flat};
use crate::geom::{are_collinear, AffineMap};
use crate::linalg;
use crate::index_set::IndexSet;
use crate::iso::representatives;
use crate::scalar::Scalar;
use crate::{figures, AffineConfig, Point, PointConfig, Rational};

/// Default bound on coordinate heights.
pub const DEFAULT_HEIGHT: i64 = 64;

const MAX_TRIES: usize = 10_000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derives an independent stream for sample `index` of a campaign.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(index);
    r
}

fn lattice_point<R: Rng>(rng: &mut R, height: i64) -> (i64, i64) {
    (rng.gen_range(-height..=height), rng.gen_range(-height..=height))
}

fn primitive_direction<R: Rng>(rng: &mut R, max: i64) -> (i64, i64) {
    loop {
        let d = (rng.gen_range(-max..=max), rng.gen_range(0..=max));
        if d == (0, 0) || (d.1 == 0 && d.0 < 0) {
            continue;
        }
        if num_integer::gcd(d.0, d.1) == 1 {
            return d;
        }
    }
}

/// `n` lattice points with no three collinear.
pub fn generic_config<R: Rng>(rng: &mut R, n: usize, height: i64) -> PointConfig {
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    let mut tries = 0;
    while pts.len() < n {
        tries += 1;
        assert!(tries < MAX_TRIES * n, "height {height} too small for {n} generic points");
        let (x, y) = lattice_point(rng, height);
        let p = Point::int(x, y);
        if pts.contains(&p) {
            continue;
        }
        let bad = (0..pts.len()).any(|i| (i + 1..pts.len()).any(|j| are_collinear(&pts[i], &pts[j], &p)));
        if !bad {
            pts.push(p);
        }
    }
    PointConfig::new(pts).unwrap()
}

/// Distinct lattice points placed on random lattice lines, `sizes[i]` on line `i`.
///
/// Lines pass through a lattice point with a short primitive direction and
/// points sit at integer steps along them, so `height` bounds the base
/// points and `spread` the number of steps.
pub fn on_lines<R: Rng>(rng: &mut R, sizes: &[usize], height: i64, spread: i64) -> PointConfig {
    for _ in 0..MAX_TRIES {
        let mut pts: Vec<Point> = Vec::new();
        let mut ok = true;
        for &size in sizes {
            let base = lattice_point(rng, height);
            let dir = primitive_direction(rng, 3);
            let span = spread.max(size as i64);
            let mut steps: Vec<i64> = (-span..=span).collect();
            steps.shuffle(rng);
            for t in steps.into_iter().take(size) {
                let p = Point::int(base.0 + t * dir.0, base.1 + t * dir.1);
                if pts.contains(&p) {
                    ok = false;
                    break;
                }
                pts.push(p);
            }
            if !ok {
                break;
            }
        }
        if ok {
            return PointConfig::new(pts).unwrap();
        }
    }
    panic!("could not place distinct points on {} lines", sizes.len())
}

/// A random invertible affine map with small rational entries.
pub fn affine_map<R: Rng>(rng: &mut R) -> AffineMap<Rational> {
    let q = |rng: &mut R| Rational::from_ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3));
    loop {
        let m = [[q(rng), q(rng)], [q(rng), q(rng)]];
        let t = [q(rng), q(rng)];
        if let Some(map) = AffineMap::new(m, t) {
            return map;
        }
    }
}

pub fn affine_image<R: Rng>(rng: &mut R, cfg: &PointConfig) -> PointConfig {
    let map = affine_map(rng);
    cfg.map_points(|p| map.apply(p)).expect("invertible maps keep points distinct")
}

/// Six points: generic, or split over two lines.
pub fn six_point_sample<R: Rng>(rng: &mut R, height: i64) -> PointConfig {
    match rng.gen_range(0..4) {
        0 => generic_config(rng, 6, height),
        1 => on_lines(rng, &[3, 3], height / 8 + 1, 4),
        2 => on_lines(rng, &[4, 2], height / 8 + 1, 4),
        _ => {
            let sizes = [[2, 2, 2], [3, 2, 1], [3, 3, 0]][rng.gen_range(0..3)];
            on_lines(rng, &sizes, height / 8 + 1, 3)
        }
    }
}

/// Ten points on at most three lines.
pub fn ten_point_sample<R: Rng>(rng: &mut R, height: i64) -> PointConfig {
    let sizes: &[usize] = [
        &[4, 3, 3][..],
        &[4, 4, 2],
        &[5, 3, 2],
        &[4, 4, 2],
        &[6, 2, 2],
        &[5, 5],
        &[4, 3, 3],
    ]
    .choose(rng)
    .unwrap();
    on_lines(rng, sizes, height / 8 + 1, 4)
}

/// Five points from a mix of generic, two-line, four-collinear and
/// clustered lattice samples.
pub fn five_point_sample<R: Rng>(rng: &mut R, height: i64) -> PointConfig {
    match rng.gen_range(0..6) {
        0 => generic_config(rng, 5, height),
        1 => on_lines(rng, &[3, 2], height / 8 + 1, 3),
        2 => on_lines(rng, &[4, 1], height / 8 + 1, 3),
        3 => on_lines(rng, &[2, 2, 1], 2, 2),
        4 => {
            let reps = representatives(2);
            let pick = rng.gen_range(0..reps.len());
            affine_image(rng, &reps[pick].1)
        }
        _ => small_grid(rng, 5, 2),
    }
}

/// `n` distinct points of the grid `[0, side]²`.
pub fn small_grid<R: Rng>(rng: &mut R, n: usize, side: i64) -> PointConfig {
    let mut all: Vec<(i64, i64)> = (0..=side).flat_map(|x| (0..=side).map(move |y| (x, y))).collect();
    assert!(all.len() >= n);
    all.shuffle(rng);
    PointConfig::from_ints(&all[..n]).unwrap()
}

/// A nine-point configuration covered by at most three lines.
///
/// Draws from lattice points on three random lines, from small grids, and
/// from affine images of known shattered and unshattered nine-point sets
/// with one point optionally moved along its covering line.
pub fn nine_point_sample<R: Rng>(rng: &mut R, height: i64) -> PointConfig {
    loop {
        let cfg = match rng.gen_range(0..8) {
            0 | 1 => {
                let sizes = [[3, 3, 3], [4, 3, 2], [4, 4, 1], [5, 2, 2], [3, 3, 3]][rng.gen_range(0..5)];
                on_lines(rng, &sizes, 2, 3)
            }
            2 => on_lines(rng, &[3, 3, 3], height / 8 + 1, 4),
            3 => small_grid(rng, 9, 3),
            _ => {
                let mut pool = representatives(3);
                pool.push((crate::iso::CaseLabel::F3III, figures::x_configuration()));
                let base = pool[rng.gen_range(0..pool.len())].1.clone();
                let base = if rng.gen_bool(0.5) { slide_one(rng, &base) } else { base };
                affine_image(rng, &base)
            }
        };
        if cfg.min_line_cover().0 <= 3 {
            return cfg;
        }
    }
}

/// Moves one point to another lattice-step position on a line of a minimum cover.
fn slide_one<R: Rng>(rng: &mut R, cfg: &PointConfig) -> PointConfig {
    let (_, cover) = cfg.min_line_cover();
    let spanned: Vec<_> = cover.iter().filter_map(|c| c.line().map(|l| (l.clone(), c.trace()))).collect();
    let (line, trace) = &spanned[rng.gen_range(0..spanned.len())];
    let members = trace.to_vec();
    let victim = members[rng.gen_range(0..members.len())];
    let (p, q) = (&cfg.points()[members[0]], &cfg.points()[members[1]]);
    debug_assert!(line.contains(p) && line.contains(q));
    for _ in 0..50 {
        let t = Rational::from_ratio(rng.gen_range(-8..=8), rng.gen_range(1..=2));
        let np = Point::new(
            p.x.clone() + t.clone() * (q.x.clone() - p.x.clone()),
            p.y.clone() + t * (q.y.clone() - p.y.clone()),
        );
        let mut pts = cfg.points().to_vec();
        pts[victim] = np;
        if let Ok(moved) = PointConfig::new(pts) {
            return moved;
        }
    }
    cfg.clone()
}

/// An 8-point instance of the matching lemma's hypotheses, as `(P, A, B)`:
/// `A` three collinear points, `B` three further points, two more points,
/// no four collinear and no bad quadruple.
pub fn matching_instance<R: Rng>(rng: &mut R, height: i64) -> (PointConfig, IndexSet, IndexSet) {
    let a: IndexSet = [0, 1, 2].into_iter().collect();
    let b: IndexSet = [3, 4, 5].into_iter().collect();
    loop {
        let cfg = if rng.gen_bool(0.5) {
            on_lines(rng, &[3, 1, 1, 1, 1, 1], 3, 3)
        } else {
            on_lines(rng, &[3, 3, 2], height / 16 + 1, 3)
        };
        if cfg.collin() >= 4 {
            continue;
        }
        if cfg.bad_quadruples(a, b).unwrap().is_empty() {
            return (cfg, a, b);
        }
    }
}

/// A nine-point set with four collinear points that satisfies (O), (A1), (A2).
///
/// Alternates between rejection sampling on small lattices and affine
/// images of the known examples with a 4-line.
pub fn case_a_instance<R: Rng>(rng: &mut R) -> PointConfig {
    use crate::axioms::{check_a1, check_a2, check_o};
    loop {
        let cfg = if rng.gen_bool(0.5) {
            let sizes = [[4, 3, 2], [4, 4, 1], [4, 3, 2]][rng.gen_range(0..3)];
            on_lines(rng, &sizes, 2, 3)
        } else {
            let reps: Vec<_> = representatives(3)
                .into_iter()
                .filter(|(_, c)| c.collin() == 4)
                .collect();
            let pick = rng.gen_range(0..reps.len());
            affine_image(rng, &reps[pick].1)
        };
        if cfg.collin() == 4 && check_o(&cfg).holds && check_a1(&cfg).holds && check_a2(&cfg).holds {
            return cfg;
        }
    }
}

/// A random invertible `n × n` matrix and translation with small rational entries.
pub fn affine_map_nd<R: Rng>(rng: &mut R, n: usize) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let q = |rng: &mut R| Rational::from_ratio(rng.gen_range(-4..=4), rng.gen_range(1..=2));
    loop {
        let m: Vec<Vec<Rational>> = (0..n).map(|_| (0..n).map(|_| q(rng)).collect()).collect();
        if linalg::rank(&m) == n {
            let t = (0..n).map(|_| q(rng)).collect();
            return (m, t);
        }
    }
}

/// Up to nine lines in `ℝ³`, any two of which span at most a plane.
///
/// A planar sample is lifted either to parallel lines or to lines through a
/// common apex, then moved by a random affine map of `ℝ³`.
pub fn coplanar_lines_sample<R: Rng>(rng: &mut R) -> (PointConfig, AffineConfig) {
    let planar = match rng.gen_range(0..4) {
        0 => nine_point_sample(rng, DEFAULT_HEIGHT),
        1 => six_point_sample(rng, DEFAULT_HEIGHT),
        2 => five_point_sample(rng, DEFAULT_HEIGHT),
        _ => {
            let n = rng.gen_range(1..=9);
            small_grid(rng, n, 2)
        }
    };
    let lifted = if rng.gen_bool(0.5) {
        lift_parallel(&planar, 3)
    } else {
        let z = loop {
            let z = rng.gen_range(-5..=5);
            if z != 0 {
                break z;
            }
        };
        let apex = [
            Rational::from_int(rng.gen_range(-5..=5)),
            Rational::from_int(rng.gen_range(-5..=5)),
            Rational::from_int(z),
        ];
        lift_cone(&planar, apex)
    };
    let (m, t) = affine_map_nd(rng, 3);
    let moved = lifted.map(&m, &t).expect("invertible map");
    (planar, moved)
}

/// `m` random lines in `ℝ³` through lattice points, skew pairs allowed.
pub fn random_lines_3d<R: Rng>(rng: &mut R, m: usize, height: i64) -> AffineConfig {
    let mut lines: Vec<Flat<Rational>> = Vec::with_capacity(m);
    while lines.len() < m {
        let o: Vec<Rational> = (0..3).map(|_| Rational::from_int(rng.gen_range(-height..=height))).collect();
        let d: Vec<Rational> = (0..3).map(|_| Rational::from_int(rng.gen_range(-2..=2))).collect();
        if linalg::is_zero(&d) {
            continue;
        }
        let l = Flat::spanned(o, &[d]);
        if !lines.contains(&l) {
            lines.push(l);
        }
    }
    AffineConfiguration::new(3, lines).unwrap()
}
