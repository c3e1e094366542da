//! Seeded campaigns comparing the axiomatic characterizations with the
//! shattering oracle.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::axioms::{characterize_f3, check_f2, B2Reading};
use crate::error::{Error, Result};
use crate::generate::{five_point_sample, nine_point_sample, on_lines, sample_rng};
use crate::shatter::is_shattered;
use crate::PointConfig;

/// Generator settings for a campaign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignParams {
    pub k: usize,
    pub samples: u64,
    pub seed: u64,
    /// Bound on coordinate heights.
    pub height: i64,
    /// Points per line; when absent each sample draws its own layout.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line_sizes: Option<Vec<usize>>,
    pub b2_reading: B2Reading,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub index: u64,
    pub config: PointConfig,
    pub predicted: bool,
    pub shattered: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub params: CampaignParams,
    pub shattered: u64,
    pub not_shattered: u64,
    pub mismatches: Vec<Mismatch>,
}

/// Points per sample for the characterization of `k`-line unions.
pub fn sample_size(k: usize) -> Result<usize> {
    match k {
        2 => Ok(5),
        3 => Ok(9),
        _ => Err(Error::Precondition(format!("characterizations exist for k = 2 and 3, not {k}"))),
    }
}

/// Sample `index` of the campaign.
pub fn sample(params: &CampaignParams, index: u64) -> Result<PointConfig> {
    let n = sample_size(params.k)?;
    let mut rng = sample_rng(params.seed, index);
    if let Some(sizes) = &params.line_sizes {
        if sizes.iter().sum::<usize>() != n {
            return Err(Error::WrongSize {
                expected: n,
                found: sizes.iter().sum(),
            });
        }
        let spread = rng.gen_range(3..=5);
        return Ok(on_lines(&mut rng, sizes, params.height / 8 + 1, spread));
    }
    Ok(if params.k == 2 {
        five_point_sample(&mut rng, params.height)
    } else {
        nine_point_sample(&mut rng, params.height)
    })
}

/// The characterization's prediction for `cfg`.
pub fn predict(cfg: &PointConfig, k: usize, reading: B2Reading) -> Result<bool> {
    match k {
        2 => {
            let (cover, collin) = check_f2(cfg)?;
            Ok(cover.holds && collin.holds)
        }
        3 => Ok(characterize_f3(cfg, reading)?.predicted_shattered),
        _ => Err(Error::Precondition(format!("no characterization for k = {k}"))),
    }
}

/// Runs every sample in parallel; results are merged in index order.
pub fn run_campaign(params: &CampaignParams) -> Result<CampaignSummary> {
    sample_size(params.k)?;
    if params.height < 1 {
        return Err(Error::Precondition("height must be positive".into()));
    }
    let outcomes: Vec<(u64, PointConfig, bool, bool)> = (0..params.samples)
        .into_par_iter()
        .map(|i| {
            let cfg = sample(params, i)?;
            let predicted = predict(&cfg, params.k, params.b2_reading)?;
            let shattered = is_shattered(&cfg, params.k)?;
            Ok((i, cfg, predicted, shattered))
        })
        .collect::<Result<_>>()?;
    let shattered = outcomes.iter().filter(|o| o.3).count() as u64;
    let mismatches = outcomes
        .into_iter()
        .filter(|o| o.2 != o.3)
        .map(|(index, config, predicted, shattered)| Mismatch {
            index,
            config,
            predicted,
            shattered,
        })
        .collect();
    Ok(CampaignSummary {
        params: params.clone(),
        shattered,
        not_shattered: params.samples - shattered,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(k: usize, samples: u64) -> CampaignParams {
        CampaignParams {
            k,
            samples,
            seed: 5,
            height: 64,
            line_sizes: None,
            b2_reading: B2Reading::WithinP,
        }
    }

    #[test]
    fn small_campaigns_agree() {
        for k in [2, 3] {
            let s = run_campaign(&params(k, 40)).unwrap();
            assert!(s.mismatches.is_empty(), "{:?}", s.mismatches);
            assert_eq!(s.shattered + s.not_shattered, 40);
        }
    }

    #[test]
    fn fixed_layout_is_respected() {
        let mut p = params(3, 3);
        p.line_sizes = Some(vec![3, 3, 3]);
        let cfg = sample(&p, 1).unwrap();
        assert!(cfg.min_line_cover().0 <= 3);
        p.line_sizes = Some(vec![3, 3]);
        assert!(matches!(sample(&p, 0), Err(Error::WrongSize { .. })));
        assert!(sample_size(4).is_err());
    }

    #[test]
    fn deterministic() {
        assert_eq!(run_campaign(&params(2, 20)).unwrap(), run_campaign(&params(2, 20)).unwrap());
    }
}
