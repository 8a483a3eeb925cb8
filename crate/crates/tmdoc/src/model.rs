//! Domain types for threat-model documents and risk assessment.
//!
//! Everything here is an immutable value with structural equality. Types
//! whose invariants are self-contained (scales, bins, matrices, attack
//! points) validate at construction; cross-reference rules between
//! document entities are checked by [`crate::docio::validate_document`].

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Number of characteristics that contribute to the probability sum.
pub const PROBABILITY_CHARACTERISTIC_COUNT: usize = 5;

/// Valid attack-point numbers in the reference architecture.
pub const ATTACK_POINT_RANGE: std::ops::RangeInclusive<u8> = 1..=11;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("scale for {characteristic}: {reason}")]
    InvalidScale {
        characteristic: CharacteristicId,
        reason: String,
    },
    #[error("probability bins: {0}")]
    InvalidBins(String),
    #[error("risk matrix: {0}")]
    InvalidMatrix(String),
    #[error("attack point number {0} outside 1..=11")]
    AttackPointOutOfRange(u8),
    #[error("unknown risk level label {0:?}")]
    UnknownRiskLevel(String),
}

/// The six threat characteristics. The first five drive the probability
/// sum; severity is the impact axis of the risk matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharacteristicId {
    Expertise,
    Equipment,
    Proximity,
    AccessTime,
    DeviceInformation,
    Severity,
}

impl CharacteristicId {
    pub const ALL: [CharacteristicId; 6] = [
        CharacteristicId::Expertise,
        CharacteristicId::Equipment,
        CharacteristicId::Proximity,
        CharacteristicId::AccessTime,
        CharacteristicId::DeviceInformation,
        CharacteristicId::Severity,
    ];

    /// The five characteristics summed into the probability score.
    pub const PROBABILITY: [CharacteristicId; PROBABILITY_CHARACTERISTIC_COUNT] = [
        CharacteristicId::Expertise,
        CharacteristicId::Equipment,
        CharacteristicId::Proximity,
        CharacteristicId::AccessTime,
        CharacteristicId::DeviceInformation,
    ];

    /// Snake-case field name used in documents and reports.
    pub fn key(self) -> &'static str {
        match self {
            CharacteristicId::Expertise => "expertise",
            CharacteristicId::Equipment => "equipment",
            CharacteristicId::Proximity => "proximity",
            CharacteristicId::AccessTime => "access_time",
            CharacteristicId::DeviceInformation => "device_information",
            CharacteristicId::Severity => "severity",
        }
    }

    /// Short column heading (C1..C6).
    pub fn short(self) -> &'static str {
        match self {
            CharacteristicId::Expertise => "C1",
            CharacteristicId::Equipment => "C2",
            CharacteristicId::Proximity => "C3",
            CharacteristicId::AccessTime => "C4",
            CharacteristicId::DeviceInformation => "C5",
            CharacteristicId::Severity => "C6",
        }
    }

    /// Human-readable name.
    pub fn title(self) -> &'static str {
        match self {
            CharacteristicId::Expertise => "Expertise of the attacker",
            CharacteristicId::Equipment => "Equipment required to carry out the attack",
            CharacteristicId::Proximity => "Physical proximity to the attacked device",
            CharacteristicId::AccessTime => "Device access time",
            CharacteristicId::DeviceInformation => "Device information",
            CharacteristicId::Severity => "Severity of the attack",
        }
    }
}

impl fmt::Display for CharacteristicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// One step of a qualitative-quantitative scale.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScaleTier {
    pub label: String,
    pub value: u32,
    pub description: String,
}

impl ScaleTier {
    pub fn new(
        label: impl Into<String>,
        value: u32,
        description: impl Into<String>,
    ) -> ScaleTier {
        ScaleTier {
            label: label.into(),
            value,
            description: description.into(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ScaleSetRaw {
    expertise: Vec<ScaleTier>,
    equipment: Vec<ScaleTier>,
    proximity: Vec<ScaleTier>,
    access_time: Vec<ScaleTier>,
    device_information: Vec<ScaleTier>,
    severity: Vec<ScaleTier>,
}

/// The complete scale catalog: one tier list per characteristic.
///
/// Construction enforces that every characteristic has at least two
/// tiers, labels are unique, and tier values form a contiguous integer
/// range starting at 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ScaleSetRaw")]
pub struct ScaleSet {
    expertise: Vec<ScaleTier>,
    equipment: Vec<ScaleTier>,
    proximity: Vec<ScaleTier>,
    access_time: Vec<ScaleTier>,
    device_information: Vec<ScaleTier>,
    severity: Vec<ScaleTier>,
}

impl TryFrom<ScaleSetRaw> for ScaleSet {
    type Error = ModelError;

    fn try_from(raw: ScaleSetRaw) -> Result<ScaleSet, ModelError> {
        ScaleSet::new([
            raw.expertise,
            raw.equipment,
            raw.proximity,
            raw.access_time,
            raw.device_information,
            raw.severity,
        ])
    }
}

impl ScaleSet {
    /// Builds a scale set from tier lists in C1..C6 order.
    pub fn new(tiers: [Vec<ScaleTier>; 6]) -> Result<ScaleSet, ModelError> {
        for (characteristic, list) in CharacteristicId::ALL.into_iter().zip(tiers.iter()) {
            validate_tiers(characteristic, list)?;
        }
        let [expertise, equipment, proximity, access_time, device_information, severity] = tiers;
        Ok(ScaleSet {
            expertise,
            equipment,
            proximity,
            access_time,
            device_information,
            severity,
        })
    }

    pub fn tiers(&self, characteristic: CharacteristicId) -> &[ScaleTier] {
        match characteristic {
            CharacteristicId::Expertise => &self.expertise,
            CharacteristicId::Equipment => &self.equipment,
            CharacteristicId::Proximity => &self.proximity,
            CharacteristicId::AccessTime => &self.access_time,
            CharacteristicId::DeviceInformation => &self.device_information,
            CharacteristicId::Severity => &self.severity,
        }
    }

    /// Highest tier value of a characteristic.
    pub fn max_value(&self, characteristic: CharacteristicId) -> u32 {
        self.tiers(characteristic)
            .iter()
            .map(|t| t.value)
            .max()
            .expect("scale sets always have tiers")
    }

    pub fn tier_by_value(
        &self,
        characteristic: CharacteristicId,
        value: u32,
    ) -> Option<&ScaleTier> {
        self.tiers(characteristic).iter().find(|t| t.value == value)
    }

    /// Label match is case-insensitive so document enum strings
    /// ("high") match catalog tier labels ("High").
    pub fn tier_by_label(
        &self,
        characteristic: CharacteristicId,
        label: &str,
    ) -> Option<&ScaleTier> {
        self.tiers(characteristic)
            .iter()
            .find(|t| t.label.eq_ignore_ascii_case(label))
    }

    /// Inclusive range of attainable probability sums. The minimum is
    /// the number of probability characteristics since every scale
    /// starts at 1.
    pub fn attainable_sum_range(&self) -> (u32, u32) {
        let min = CharacteristicId::PROBABILITY.len() as u32;
        let max = CharacteristicId::PROBABILITY
            .into_iter()
            .map(|c| self.max_value(c))
            .sum();
        (min, max)
    }

    /// Severity tier labels in ascending value order, lowercased; these
    /// are the impact labels of the risk matrix.
    pub fn impact_labels(&self) -> Vec<String> {
        let mut tiers: Vec<&ScaleTier> = self.severity.iter().collect();
        tiers.sort_by_key(|t| t.value);
        tiers
            .into_iter()
            .map(|t| t.label.to_ascii_lowercase())
            .collect()
    }
}

fn validate_tiers(
    characteristic: CharacteristicId,
    tiers: &[ScaleTier],
) -> Result<(), ModelError> {
    let fail = |reason: String| ModelError::InvalidScale {
        characteristic,
        reason,
    };
    if tiers.len() < 2 {
        return Err(fail(format!(
            "needs at least 2 tiers, found {}",
            tiers.len()
        )));
    }
    for (i, tier) in tiers.iter().enumerate() {
        for other in &tiers[i + 1..] {
            if tier.label.eq_ignore_ascii_case(&other.label) {
                return Err(fail(format!("duplicate tier label {:?}", tier.label)));
            }
            if tier.value == other.value {
                return Err(fail(format!("duplicate tier value {}", tier.value)));
            }
        }
    }
    let mut values: Vec<u32> = tiers.iter().map(|t| t.value).collect();
    values.sort_unstable();
    let contiguous = values
        .iter()
        .enumerate()
        .all(|(i, &v)| v == i as u32 + 1);
    if !contiguous {
        return Err(fail(format!(
            "tier values must run contiguously from 1, found {values:?}"
        )));
    }
    Ok(())
}

/// One assessed value per probability characteristic C1..C5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScoreVector {
    pub expertise: u32,
    pub equipment: u32,
    pub proximity: u32,
    pub access_time: u32,
    pub device_information: u32,
}

impl ScoreVector {
    pub fn new(
        expertise: u32,
        equipment: u32,
        proximity: u32,
        access_time: u32,
        device_information: u32,
    ) -> ScoreVector {
        ScoreVector {
            expertise,
            equipment,
            proximity,
            access_time,
            device_information,
        }
    }

    pub fn component(&self, characteristic: CharacteristicId) -> Option<u32> {
        match characteristic {
            CharacteristicId::Expertise => Some(self.expertise),
            CharacteristicId::Equipment => Some(self.equipment),
            CharacteristicId::Proximity => Some(self.proximity),
            CharacteristicId::AccessTime => Some(self.access_time),
            CharacteristicId::DeviceInformation => Some(self.device_information),
            CharacteristicId::Severity => None,
        }
    }

    /// Components paired with their characteristic, in C1..C5 order.
    pub fn components(&self) -> [(CharacteristicId, u32); PROBABILITY_CHARACTERISTIC_COUNT] {
        [
            (CharacteristicId::Expertise, self.expertise),
            (CharacteristicId::Equipment, self.equipment),
            (CharacteristicId::Proximity, self.proximity),
            (CharacteristicId::AccessTime, self.access_time),
            (CharacteristicId::DeviceInformation, self.device_information),
        ]
    }
}

/// A resolved severity tier: a label bound to its C6 value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImpactLevel {
    label: String,
    value: u32,
}

impl ImpactLevel {
    /// Resolves an impact label against the severity scale, so the
    /// value always equals the matching C6 tier value.
    pub fn resolve(label: &str, scales: &ScaleSet) -> Option<ImpactLevel> {
        scales
            .tier_by_label(CharacteristicId::Severity, label)
            .map(|tier| ImpactLevel {
                label: tier.label.to_ascii_lowercase(),
                value: tier.value,
            })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn value(&self) -> u32 {
        self.value
    }
}

/// One probability band with its inclusive sum range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbabilityBin {
    pub label: String,
    pub min: u32,
    pub max: u32,
}

/// Ordered, disjoint probability bands. Whether the bands exactly cover
/// the attainable sum range of a scale set is checked by
/// [`crate::catalog::validate_scale_customization`], since it depends
/// on the scales in force.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(try_from = "Vec<ProbabilityBin>")]
pub struct ProbabilityBins(Vec<ProbabilityBin>);

impl Serialize for ProbabilityBins {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl TryFrom<Vec<ProbabilityBin>> for ProbabilityBins {
    type Error = ModelError;

    fn try_from(bins: Vec<ProbabilityBin>) -> Result<ProbabilityBins, ModelError> {
        ProbabilityBins::new(bins)
    }
}

impl ProbabilityBins {
    pub fn new(bins: Vec<ProbabilityBin>) -> Result<ProbabilityBins, ModelError> {
        if bins.is_empty() {
            return Err(ModelError::InvalidBins("no bins given".into()));
        }
        for bin in &bins {
            if bin.min > bin.max {
                return Err(ModelError::InvalidBins(format!(
                    "bin {:?} has min {} > max {}",
                    bin.label, bin.min, bin.max
                )));
            }
        }
        for pair in bins.windows(2) {
            if pair[1].min <= pair[0].max {
                return Err(ModelError::InvalidBins(format!(
                    "bins {:?} and {:?} are not ascending and disjoint",
                    pair[0].label, pair[1].label
                )));
            }
        }
        for (i, bin) in bins.iter().enumerate() {
            if bins[i + 1..]
                .iter()
                .any(|b| b.label.eq_ignore_ascii_case(&bin.label))
            {
                return Err(ModelError::InvalidBins(format!(
                    "duplicate bin label {:?}",
                    bin.label
                )));
            }
        }
        Ok(ProbabilityBins(bins))
    }

    pub fn bins(&self) -> &[ProbabilityBin] {
        &self.0
    }

    pub fn labels(&self) -> Vec<String> {
        self.0.iter().map(|b| b.label.to_ascii_lowercase()).collect()
    }

    /// The bin containing a probability total, if any.
    pub fn bin_for(&self, total: u32) -> Option<&ProbabilityBin> {
        self.0.iter().find(|b| b.min <= total && total <= b.max)
    }

    /// Overall (first min, last max) span.
    pub fn span(&self) -> (u32, u32) {
        (self.0.first().unwrap().min, self.0.last().unwrap().max)
    }

    /// Sums inside the span that fall between bins.
    pub fn gaps(&self) -> Vec<u32> {
        let (lo, hi) = self.span();
        (lo..=hi).filter(|&s| self.bin_for(s).is_none()).collect()
    }
}

/// The five-step risk ladder read out of the matrix.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(rename_all = "snake_case")]
pub enum RiskLevel {
    VeryLow,
    Low,
    Moderate,
    High,
    VeryHigh,
}

impl RiskLevel {
    pub const ALL: [RiskLevel; 5] = [
        RiskLevel::VeryLow,
        RiskLevel::Low,
        RiskLevel::Moderate,
        RiskLevel::High,
        RiskLevel::VeryHigh,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RiskLevel::VeryLow => "very_low",
            RiskLevel::Low => "low",
            RiskLevel::Moderate => "moderate",
            RiskLevel::High => "high",
            RiskLevel::VeryHigh => "very_high",
        }
    }
}

impl fmt::Display for RiskLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            RiskLevel::VeryLow => "Very Low",
            RiskLevel::Low => "Low",
            RiskLevel::Moderate => "Moderate",
            RiskLevel::High => "High",
            RiskLevel::VeryHigh => "Very High",
        };
        f.write_str(text)
    }
}

impl std::str::FromStr for RiskLevel {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<RiskLevel, ModelError> {
        RiskLevel::ALL
            .into_iter()
            .find(|level| level.as_str() == s)
            .ok_or_else(|| ModelError::UnknownRiskLevel(s.to_string()))
    }
}

/// Total order comparison of two risk levels.
pub fn compare_risk(a: RiskLevel, b: RiskLevel) -> std::cmp::Ordering {
    a.cmp(&b)
}

/// One cell of a risk matrix as written in documents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RiskMatrixCell {
    pub probability: String,
    pub impact: String,
    pub risk: RiskLevel,
}

/// A validated (probability bin, impact) -> risk level map.
///
/// Rows are probability bins ascending, columns impact ascending. The
/// constructor rejects partial or non-monotone matrices: raising either
/// axis must never lower the risk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiskMatrix {
    bin_labels: Vec<String>,
    impact_labels: Vec<String>,
    // cells[bin][impact]
    cells: Vec<Vec<RiskLevel>>,
}

impl RiskMatrix {
    pub fn new(
        bin_labels: Vec<String>,
        impact_labels: Vec<String>,
        cells: Vec<Vec<RiskLevel>>,
    ) -> Result<RiskMatrix, ModelError> {
        if cells.len() != bin_labels.len()
            || cells.iter().any(|row| row.len() != impact_labels.len())
        {
            return Err(ModelError::InvalidMatrix(format!(
                "expected {} x {} cells",
                bin_labels.len(),
                impact_labels.len()
            )));
        }
        for (row, bin) in cells.iter().zip(&bin_labels) {
            for (pair, labels) in row.windows(2).zip(impact_labels.windows(2)) {
                if pair[1] < pair[0] {
                    return Err(ModelError::InvalidMatrix(format!(
                        "not monotone: ({bin}, {}) -> {} is below ({bin}, {}) -> {}",
                        labels[1], pair[1], labels[0], pair[0]
                    )));
                }
            }
        }
        for (rows, bins) in cells.windows(2).zip(bin_labels.windows(2)) {
            for (col, impact) in impact_labels.iter().enumerate() {
                if rows[1][col] < rows[0][col] {
                    return Err(ModelError::InvalidMatrix(format!(
                        "not monotone: ({}, {impact}) -> {} is below ({}, {impact}) -> {}",
                        bins[1], rows[1][col], bins[0], rows[0][col]
                    )));
                }
            }
        }
        Ok(RiskMatrix {
            bin_labels,
            impact_labels,
            cells,
        })
    }

    /// Assembles a matrix from unordered document cells, given the axis
    /// orders mandated by the bins and severity scale.
    pub fn from_cells(
        cells: &[RiskMatrixCell],
        bin_labels: Vec<String>,
        impact_labels: Vec<String>,
    ) -> Result<RiskMatrix, Vec<String>> {
        let mut problems = Vec::new();
        let mut grid: BTreeMap<(usize, usize), RiskLevel> = BTreeMap::new();
        for cell in cells {
            let bin = bin_labels
                .iter()
                .position(|l| l.eq_ignore_ascii_case(&cell.probability));
            let impact = impact_labels
                .iter()
                .position(|l| l.eq_ignore_ascii_case(&cell.impact));
            match (bin, impact) {
                (Some(b), Some(i)) => {
                    if grid.insert((b, i), cell.risk).is_some() {
                        problems.push(format!(
                            "duplicate cell ({}, {})",
                            cell.probability, cell.impact
                        ));
                    }
                }
                (None, _) => {
                    problems.push(format!("unknown probability bin {:?}", cell.probability))
                }
                (_, None) => problems.push(format!("unknown impact label {:?}", cell.impact)),
            }
        }
        let mut rows = Vec::with_capacity(bin_labels.len());
        for (b, bin) in bin_labels.iter().enumerate() {
            let mut row = Vec::with_capacity(impact_labels.len());
            for (i, impact) in impact_labels.iter().enumerate() {
                match grid.get(&(b, i)) {
                    Some(&risk) => row.push(risk),
                    None => problems.push(format!("missing cell ({bin}, {impact})")),
                }
            }
            rows.push(row);
        }
        if !problems.is_empty() {
            return Err(problems);
        }
        RiskMatrix::new(bin_labels, impact_labels, rows).map_err(|e| vec![e.to_string()])
    }

    pub fn bin_labels(&self) -> &[String] {
        &self.bin_labels
    }

    pub fn impact_labels(&self) -> &[String] {
        &self.impact_labels
    }

    pub fn lookup(&self, bin: &str, impact: &str) -> Option<RiskLevel> {
        let b = self
            .bin_labels
            .iter()
            .position(|l| l.eq_ignore_ascii_case(bin))?;
        let i = self
            .impact_labels
            .iter()
            .position(|l| l.eq_ignore_ascii_case(impact))?;
        Some(self.cells[b][i])
    }

    /// Flattens back into document cells, row-major.
    pub fn to_cells(&self) -> Vec<RiskMatrixCell> {
        let mut out = Vec::new();
        for (row, bin) in self.cells.iter().zip(&self.bin_labels) {
            for (risk, impact) in row.iter().zip(&self.impact_labels) {
                out.push(RiskMatrixCell {
                    probability: bin.clone(),
                    impact: impact.clone(),
                    risk: *risk,
                });
            }
        }
        out
    }
}

/// Security property a threat violates.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(rename_all = "snake_case")]
pub enum SecurityProperty {
    Confidentiality,
    Integrity,
    Availability,
    Authenticity,
    Privacy,
}

impl fmt::Display for SecurityProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            SecurityProperty::Confidentiality => "Confidentiality",
            SecurityProperty::Integrity => "Integrity",
            SecurityProperty::Availability => "Availability",
            SecurityProperty::Authenticity => "Authenticity",
            SecurityProperty::Privacy => "Privacy",
        };
        f.write_str(text)
    }
}

/// User-privacy goals an asset may carry.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(rename_all = "snake_case")]
pub enum PrivacyGoal {
    DeviceExistence,
    DeviceType,
    UniqueDeviceId,
    MeasurementAndLog,
    Patient,
    PatientLocation,
}

/// One architectural interface where an adversary may interact with
/// the device.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttackPoint {
    pub number: u8,
    pub description: String,
    pub example_attacks: Vec<String>,
    pub in_scope: bool,
}

impl AttackPoint {
    pub fn new(
        number: u8,
        description: impl Into<String>,
        example_attacks: Vec<String>,
        in_scope: bool,
    ) -> Result<AttackPoint, ModelError> {
        if !ATTACK_POINT_RANGE.contains(&number) {
            return Err(ModelError::AttackPointOutOfRange(number));
        }
        Ok(AttackPoint {
            number,
            description: description.into(),
            example_attacks,
            in_scope,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeviceCategory {
    Injectable,
    Ingestible,
    Implantable,
    Wearable,
}

impl DeviceCategory {
    pub const ALL: [DeviceCategory; 4] = [
        DeviceCategory::Injectable,
        DeviceCategory::Ingestible,
        DeviceCategory::Implantable,
        DeviceCategory::Wearable,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DeviceCategory::Injectable => "injectable",
            DeviceCategory::Ingestible => "ingestible",
            DeviceCategory::Implantable => "implantable",
            DeviceCategory::Wearable => "wearable",
        }
    }
}

impl fmt::Display for DeviceCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AttackerPosition {
    External,
    Internal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AttackerActivity {
    Passive,
    Active,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AttackerCardinality {
    Individual,
    Group,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AttackerSophistication {
    Sophisticated,
    Unsophisticated,
}

/// A classified adversary the model defends against.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AttackerProfile {
    pub id: String,
    pub position: AttackerPosition,
    pub activity: AttackerActivity,
    pub cardinality: AttackerCardinality,
    pub sophistication: AttackerSophistication,
    pub description: String,
}

/// An item of value an adversary aims to steal, modify, or disrupt.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Asset {
    pub id: String,
    pub name: String,
    pub tangible: bool,
    pub description: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub privacy_goals: Option<Vec<PrivacyGoal>>,
}

/// One device under analysis together with its assets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Device {
    pub id: String,
    pub name: String,
    pub category: DeviceCategory,
    pub purpose: String,
    pub status: String,
    pub attack_points: Vec<u8>,
    pub assets: Vec<Asset>,
}

/// A (device, impact) pairing inside a threat. Impact may be left
/// unassessed and filled by the assume-worst substitution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThreatTarget {
    pub device: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub impact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub impact_rationale: Option<String>,
}

/// A scored threat record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Threat {
    pub id: String,
    pub description: String,
    pub violates: Vec<SecurityProperty>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stride_tags: Option<Vec<String>>,
    pub targets: Vec<ThreatTarget>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scores: Option<ScoreVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub score_overrides: Option<BTreeMap<String, ScoreVector>>,
}

impl Threat {
    /// The score vector in effect for one target device.
    pub fn effective_scores(&self, device_id: &str) -> Option<ScoreVector> {
        self.score_overrides
            .as_ref()
            .and_then(|m| m.get(device_id).copied())
            .or(self.scores)
    }

    pub fn target(&self, device_id: &str) -> Option<&ThreatTarget> {
        self.targets.iter().find(|t| t.device == device_id)
    }
}

/// Team member entry of the document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TeamMember {
    pub name: String,
    pub discipline: String,
}

/// The assumptions-and-constraints section of the document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Assumptions {
    pub operational_environment: String,
    pub security_boundaries: Vec<String>,
    pub use_scenarios: Vec<String>,
    pub exclusions: Vec<String>,
}

/// A complete threat-model document: the unit of parsing, validation,
/// assessment, and reporting.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThreatModelDocument {
    pub schema_version: String,
    pub title: String,
    pub team: Vec<TeamMember>,
    pub assumptions: Assumptions,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scales: Option<ScaleSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probability_bins: Option<ProbabilityBins>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub risk_matrix: Option<Vec<RiskMatrixCell>>,
    pub devices: Vec<Device>,
    pub attackers: Vec<AttackerProfile>,
    pub threats: Vec<Threat>,
}

impl ThreatModelDocument {
    /// True when any of the scale/bin/matrix blocks is customized.
    pub fn has_customization(&self) -> bool {
        self.scales.is_some() || self.probability_bins.is_some() || self.risk_matrix.is_some()
    }

    pub fn device(&self, id: &str) -> Option<&Device> {
        self.devices.iter().find(|d| d.id == id)
    }
}

/// The computed risk record for one (threat, device) pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assessment {
    pub threat_id: String,
    pub device_id: String,
    pub scores: ScoreVector,
    pub probability_total: u32,
    pub probability_bin: String,
    pub impact: String,
    #[serde(skip)]
    pub impact_value: u32,
    pub risk_level: RiskLevel,
}
