//! Named point configurations used as references throughout the crate.
//!
//! The two nine-point examples of the Case A and Case B axioms, the
//! X-configuration, and one representative per shatter-isomorphism type of
//! maximum shattered sets for two and three lines.

use std::collections::BTreeMap;

use crate::geom::Point2;
use crate::scalar::Scalar;
use crate::PointConfig;

fn ints(coords: &[(i64, i64)]) -> PointConfig {
    PointConfig::from_ints(coords).expect("figure points are distinct")
}

/// Four points on `y = 2`, three on `y = 3`, two on `y = 4`.
pub fn case_a() -> PointConfig {
    ints(&[
        (2, 2), (4, 2), (6, 2), (8, 2),
        (3, 3), (5, 3), (7, 3),
        (4, 4), (6, 4),
    ])
}

/// Three rows of three with the third line `4x + y = 18`; no four collinear.
pub fn case_b() -> PointConfig {
    let p = |x: i64, y: i64| Point2::int(x, y);
    PointConfig::new(vec![
        p(0, 0), p(3, 0), p(6, 0),
        Point2::new(Scalar::from_ratio(3, 2), Scalar::from_int(3)), p(3, 3), p(6, 3),
        p(3, 6), p(6, -6), p(4, 2),
    ])
    .expect("figure points are distinct")
}

/// Rows `a`, `b`, `c` on `y = 0, 1, 2` with nine collinear triples in total.
pub fn x_configuration() -> PointConfig {
    ints(&[
        (0, 0), (2, 0), (6, 0),
        (1, 1), (3, 1), (4, 1),
        (0, 2), (2, 2), (6, 2),
    ])
}

/// Labels `a1..c3` of [`x_configuration`] mapped to point indices.
pub fn x_labels() -> BTreeMap<&'static str, usize> {
    ["a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3"]
        .into_iter()
        .enumerate()
        .map(|(i, l)| (l, i))
        .collect()
}

/// The nine collinear triples of the X-configuration, by label.
pub const X_TRIPLES: [[&str; 3]; 9] = [
    ["a1", "a2", "a3"],
    ["b1", "b2", "b3"],
    ["c1", "c2", "c3"],
    ["a1", "b1", "c2"],
    ["a1", "b2", "c3"],
    ["a2", "b1", "c1"],
    ["a2", "b3", "c3"],
    ["a3", "b2", "c1"],
    ["a3", "b3", "c2"],
];

/// Five points, exactly one collinear triple.
pub fn two_lines_i() -> PointConfig {
    ints(&[(0, 0), (2, 0), (4, 0), (1, 2), (3, 2)])
}

/// Five points on two lines through a common point.
pub fn two_lines_ii() -> PointConfig {
    ints(&[(0, 0), (2, 0), (4, 0), (0, 2), (0, 4)])
}

pub fn three_lines_ia() -> PointConfig {
    ints(&[
        (2, 2), (4, 2), (6, 2), (8, 2),
        (4, 3), (6, 3), (8, 3),
        (4, 4), (6, 4),
    ])
}

pub fn three_lines_ib() -> PointConfig {
    case_a()
}

pub fn three_lines_iia() -> PointConfig {
    ints(&[
        (2, 4), (6, 4), (5, 5), (8, 6), (11, 7),
        (5, 3), (8, 2), (11, 1), (11, 5),
    ])
}

pub fn three_lines_iib() -> PointConfig {
    ints(&[
        (2, 1), (2, 3), (2, 5), (2, 7),
        (4, 1), (6, 1), (8, 1),
        (3, 4), (5, 2),
    ])
}

pub fn three_lines_iii() -> PointConfig {
    case_b()
}
