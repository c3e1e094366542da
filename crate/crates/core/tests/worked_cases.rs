mod common;

use lineshatter::affine_nd::{
    check_translate, direct_structure, lift_parallel, reduce_dimension, reduced_structure, vc_equal_check,
};
use lineshatter::generate::{random_lines_3d, sample_rng};
use lineshatter::{representatives, IndexSet, PointConfig};

fn set(xs: &[usize]) -> IndexSet {
    xs.iter().copied().collect()
}

/// Three collinear points, three more, and two extra points with no four
/// collinear and no bad quadruple, yet no matching: `a = 1` forms a bad pair
/// with `b = 3` through `q = 7`, and its two good partners lie on one line
/// with it.
#[test]
fn matching_hypotheses_without_matching() {
    let cfg = PointConfig::from_ints(&[(6, 4), (-4, -1), (-6, -2), (5, -1), (-4, 10), (-4, 2), (-2, 2), (1, -1)]).unwrap();
    let (a, b) = (set(&[0, 1, 2]), set(&[3, 4, 5]));
    assert_eq!(cfg.collin_of(a), 3);
    assert_eq!(cfg.collin(), 3);
    assert!(cfg.bad_quadruples(a, b).unwrap().is_empty());
    assert!(cfg.is_bad_pair(a, b, 1, 3));
    assert_eq!(cfg.line_trace(1, 4), set(&[1, 4, 5]));
    assert!(cfg.find_matching(a, b).unwrap().is_none());
    assert!(!common::matching_exists(&cfg, &[0, 1, 2], &[3, 4, 5]));
}

#[test]
fn shattered_five_plus_two_is_not_shattered_in_space() {
    let mut pts = representatives(2)[0].1.points().to_vec();
    pts.push(lineshatter::Point::int(40, -17));
    pts.push(lineshatter::Point::int(-23, 31));
    let planar = PointConfig::new(pts).unwrap();
    let lifted = lift_parallel(&planar, 3);
    assert_eq!(lifted.len(), 7);
    let r = vc_equal_check(&lifted, 2).unwrap();
    assert!(!r.direct_shattered && !r.reduced_shattered && r.agree);
}

#[test]
fn skew_lines_gain_classes_under_reduction() {
    let mut extra_classes = 0;
    let mut disagreements = 0;
    for i in 0..40 {
        let cfg = random_lines_3d(&mut sample_rng(21, i), 3 + (i as usize % 4), 2);
        let step = reduce_dimension(&cfg).unwrap();
        assert!(check_translate(&cfg, &step.translate.hyperplane()).all());
        let direct = direct_structure(&cfg);
        let reduced = reduced_structure(&cfg).unwrap();
        // hyperplane traces survive the cut
        assert!(direct.classes.iter().all(|c| reduced.classes.contains(c)));
        if reduced != direct {
            extra_classes += 1;
            assert!(!step.structure_preserved);
        }
        for k in 1..=3 {
            let r = vc_equal_check(&cfg, k).unwrap();
            // fewer classes can only make shattering harder
            assert!(!r.direct_shattered || r.reduced_shattered);
            disagreements += usize::from(!r.agree);
        }
    }
    assert!(extra_classes > 0);
    assert!(disagreements > 0);
}
