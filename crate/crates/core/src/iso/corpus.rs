use crate::figures;
use crate::iso::CaseLabel;
use crate::PointConfig;

/// One configuration per isomorphism type of maximum shattered set for `k`
/// lines; empty for `k ∉ {2, 3}`.
pub fn representatives(k: usize) -> Vec<(CaseLabel, PointConfig)> {
    match k {
        2 => vec![
            (CaseLabel::F2I, figures::two_lines_i()),
            (CaseLabel::F2II, figures::two_lines_ii()),
        ],
        3 => vec![
            (CaseLabel::F3Ia, figures::three_lines_ia()),
            (CaseLabel::F3Ib, figures::three_lines_ib()),
            (CaseLabel::F3IIa, figures::three_lines_iia()),
            (CaseLabel::F3IIb, figures::three_lines_iib()),
            (CaseLabel::F3III, figures::three_lines_iii()),
        ],
        _ => Vec::new(),
    }
}
