//! Pure risk computation: probability sums, binning, matrix lookup,
//! document-wide assessment, and ranking.

use std::cmp::Reverse;
use std::collections::BTreeMap;

use itertools::Itertools;
use thiserror::Error;

use crate::catalog::{self, Catalog};
use crate::model::{
    Assessment, CharacteristicId, ImpactLevel, ProbabilityBins, RiskLevel, RiskMatrix, ScaleSet,
    ScoreVector, Threat, ThreatModelDocument,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScoringError {
    #[error("score {value} for {characteristic} is not a tier value of its scale")]
    ScoreOutOfScale {
        characteristic: CharacteristicId,
        value: u32,
    },
    #[error("probability total {total} lies outside the configured bins")]
    TotalOutOfRange { total: u32 },
    #[error("unknown probability bin label {0:?}")]
    UnknownBin(String),
    #[error("unknown impact label {0:?}")]
    UnknownImpact(String),
    #[error("device {device_id:?} is not a target of threat {threat_id:?}")]
    NotATarget { threat_id: String, device_id: String },
    #[error("threat {threat_id:?} has no scores for device {device_id:?}")]
    MissingScores { threat_id: String, device_id: String },
    #[error("threat {threat_id:?} has no impact for device {device_id:?}")]
    MissingImpact { threat_id: String, device_id: String },
    #[error("document customization is invalid: {0}")]
    InvalidCustomization(String),
    #[error("assessing threat {threat_id:?} on device {device_id:?}: {source}")]
    Pair {
        threat_id: String,
        device_id: String,
        source: Box<ScoringError>,
    },
}

/// Sum of the five probability characteristic scores.
pub fn compute_probability(scores: &ScoreVector, scales: &ScaleSet) -> Result<u32, ScoringError> {
    let mut total = 0;
    for (characteristic, value) in scores.components() {
        if scales.tier_by_value(characteristic, value).is_none() {
            return Err(ScoringError::ScoreOutOfScale {
                characteristic,
                value,
            });
        }
        total += value;
    }
    Ok(total)
}

/// The unique bin whose inclusive range contains the total.
pub fn bin_probability(total: u32, bins: &ProbabilityBins) -> Result<String, ScoringError> {
    bins.bin_for(total)
        .map(|b| b.label.to_ascii_lowercase())
        .ok_or(ScoringError::TotalOutOfRange { total })
}

/// The matrix cell for a (bin, impact) pair.
pub fn lookup_risk(
    bin: &str,
    impact: &str,
    matrix: &RiskMatrix,
) -> Result<RiskLevel, ScoringError> {
    if !matrix
        .bin_labels()
        .iter()
        .any(|l| l.eq_ignore_ascii_case(bin))
    {
        return Err(ScoringError::UnknownBin(bin.to_string()));
    }
    matrix
        .lookup(bin, impact)
        .ok_or_else(|| ScoringError::UnknownImpact(impact.to_string()))
}

/// Computes the full risk record for one (threat, target device) pair.
pub fn assess_pair(
    threat: &Threat,
    device_id: &str,
    scales: &ScaleSet,
    bins: &ProbabilityBins,
    matrix: &RiskMatrix,
) -> Result<Assessment, ScoringError> {
    let target = threat
        .target(device_id)
        .ok_or_else(|| ScoringError::NotATarget {
            threat_id: threat.id.clone(),
            device_id: device_id.to_string(),
        })?;
    let scores = threat
        .effective_scores(device_id)
        .ok_or_else(|| ScoringError::MissingScores {
            threat_id: threat.id.clone(),
            device_id: device_id.to_string(),
        })?;
    let impact_label = target
        .impact
        .as_deref()
        .ok_or_else(|| ScoringError::MissingImpact {
            threat_id: threat.id.clone(),
            device_id: device_id.to_string(),
        })?;
    let impact = ImpactLevel::resolve(impact_label, scales)
        .ok_or_else(|| ScoringError::UnknownImpact(impact_label.to_string()))?;
    let probability_total = compute_probability(&scores, scales)?;
    let probability_bin = bin_probability(probability_total, bins)?;
    let risk_level = lookup_risk(&probability_bin, impact.label(), matrix)?;
    Ok(Assessment {
        threat_id: threat.id.clone(),
        device_id: device_id.to_string(),
        scores,
        probability_total,
        probability_bin,
        impact: impact.label().to_string(),
        impact_value: impact.value(),
        risk_level,
    })
}

/// The scales/bins/matrix a document assesses under: its customization
/// triple when present, the built-ins otherwise.
pub fn effective_catalog(doc: &ThreatModelDocument) -> Result<Catalog, ScoringError> {
    if !doc.has_customization() {
        return Ok(Catalog::builtin());
    }
    let (scales, bins, cells) = match (&doc.scales, &doc.probability_bins, &doc.risk_matrix) {
        (Some(s), Some(b), Some(m)) => (s, b, m),
        _ => {
            return Err(ScoringError::InvalidCustomization(
                "scales, probability_bins, and risk_matrix must be customized together".into(),
            ))
        }
    };
    let matrix = RiskMatrix::from_cells(cells, bins.labels(), scales.impact_labels())
        .map_err(|problems| ScoringError::InvalidCustomization(problems.join("; ")))?;
    let violations = catalog::validate_scale_customization(scales, bins, &matrix);
    if !violations.is_empty() {
        return Err(ScoringError::InvalidCustomization(
            violations.iter().map(|v| v.to_string()).join("; "),
        ));
    }
    Ok(Catalog {
        scales: scales.clone(),
        bins: bins.clone(),
        matrix,
    })
}

/// Assesses every (threat, target device) pair of a document and
/// returns the records in ranked order.
pub fn assess_document(doc: &ThreatModelDocument) -> Result<Vec<Assessment>, ScoringError> {
    let catalog = effective_catalog(doc)?;
    let mut assessments = Vec::new();
    for threat in &doc.threats {
        for target in &threat.targets {
            let assessment =
                assess_pair(threat, &target.device, &catalog.scales, &catalog.bins, &catalog.matrix)
                    .map_err(|source| ScoringError::Pair {
                        threat_id: threat.id.clone(),
                        device_id: target.device.clone(),
                        source: Box::new(source),
                    })?;
            assessments.push(assessment);
        }
    }
    Ok(rank_assessments(assessments))
}

/// Stable total order: risk descending, probability descending, impact
/// descending, then (threat id, device id) ascending.
pub fn rank_assessments(mut assessments: Vec<Assessment>) -> Vec<Assessment> {
    assessments.sort_by(|a, b| {
        (
            Reverse(a.risk_level),
            Reverse(a.probability_total),
            Reverse(a.impact_value),
            &a.threat_id,
            &a.device_id,
        )
            .cmp(&(
                Reverse(b.risk_level),
                Reverse(b.probability_total),
                Reverse(b.impact_value),
                &b.threat_id,
                &b.device_id,
            ))
    });
    assessments
}

/// Counts every combination of probability tier values into its bin.
pub fn enumerate_score_space(
    scales: &ScaleSet,
    bins: &ProbabilityBins,
) -> BTreeMap<String, u64> {
    let mut histogram: BTreeMap<String, u64> = BTreeMap::new();
    let axes: Vec<Vec<u32>> = CharacteristicId::PROBABILITY
        .into_iter()
        .map(|c| scales.tiers(c).iter().map(|t| t.value).collect())
        .collect();
    for combo in axes.into_iter().multi_cartesian_product() {
        let total: u32 = combo.into_iter().sum();
        if let Some(bin) = bins.bin_for(total) {
            *histogram.entry(bin.label.to_ascii_lowercase()).or_default() += 1;
        }
    }
    histogram
}
