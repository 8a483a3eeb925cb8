//! Canonical on-disk document handling: strict parsing, canonical
//! serialization, validation, and scaffolding.
//!
//! The canonical form is JSON with schema-ordered keys, two-space
//! indentation, and a trailing newline; `.tmdoc.json` files are UTF-8
//! without BOM. Unknown fields are rejected so typos in a security
//! artifact cannot silently vanish.

use std::fmt;

use thiserror::Error;

use crate::catalog;
use crate::model::{
    Assumptions, AttackPoint, AttackerActivity, AttackerCardinality, AttackerPosition,
    AttackerProfile, AttackerSophistication, CharacteristicId, Device, DeviceCategory,
    ScoreVector, SecurityProperty, Threat, ThreatModelDocument, ThreatTarget,
    ATTACK_POINT_RANGE,
};
use crate::scoring;

pub const SCHEMA_VERSION: &str = "1.0";
pub const FILE_EXTENSION: &str = ".tmdoc.json";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
}

/// Parses canonical document text. Malformed JSON reports line/column;
/// schema violations report the offending path.
pub fn parse_document(text: &str) -> Result<ThreatModelDocument, ParseError> {
    let mut deserializer = serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(&mut deserializer).map_err(|err| {
        let path = err.path().to_string();
        let inner = err.into_inner();
        match inner.classify() {
            serde_json::error::Category::Syntax | serde_json::error::Category::Eof => {
                ParseError::Syntax {
                    line: inner.line(),
                    column: inner.column(),
                    message: strip_position(&inner.to_string()),
                }
            }
            _ => ParseError::Schema {
                path,
                message: strip_position(&inner.to_string()),
            },
        }
    })
}

// serde_json appends " at line L column C" to every message; the
// position is carried separately.
fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(idx) => message[..idx].to_string(),
        None => message.to_string(),
    }
}

/// Canonical serialization: schema-ordered keys, two-space indentation,
/// trailing newline. `parse(serialize(doc))` is structurally equal to
/// `doc`, and canonical files are fixpoints.
pub fn serialize_document(doc: &ThreatModelDocument) -> String {
    let mut text =
        serde_json::to_string_pretty(doc).expect("documents always serialize");
    text.push('\n');
    text
}

/// One validation finding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub code: &'static str,
    pub path: String,
    pub message: String,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.code, self.path, self.message)
    }
}

/// Findings split by severity. A document is valid iff `errors` is
/// empty; warnings never block assessment.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub errors: Vec<Finding>,
    pub warnings: Vec<Finding>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.errors.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for finding in &self.errors {
            writeln!(f, "error {finding}")?;
        }
        for finding in &self.warnings {
            writeln!(f, "warning {finding}")?;
        }
        write!(
            f,
            "{} error(s), {} warning(s)",
            self.errors.len(),
            self.warnings.len()
        )
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ValidateOptions {
    /// Substitute maximum probability scores / highest impact for
    /// unassessed threats, downgrading the missing-value errors to
    /// warnings.
    pub assume_worst: bool,
}

// Finding codes.
pub mod codes {
    pub const SCHEMA_VERSION: &str = "SCHEMA_VERSION";
    pub const DUP_ID: &str = "DUP_ID";
    pub const DUP_TARGET: &str = "DUP_TARGET";
    pub const REF_UNKNOWN_DEVICE: &str = "REF_UNKNOWN_DEVICE";
    pub const ATTACK_POINT_OUT_OF_RANGE: &str = "ATTACK_POINT_OUT_OF_RANGE";
    pub const SCORE_OUT_OF_SCALE: &str = "SCORE_OUT_OF_SCALE";
    pub const IMPACT_UNKNOWN: &str = "IMPACT_UNKNOWN";
    pub const EMPTY_VIOLATES: &str = "EMPTY_VIOLATES";
    pub const EMPTY_TARGETS: &str = "EMPTY_TARGETS";
    pub const MISSING_SCORES: &str = "MISSING_SCORES";
    pub const MISSING_IMPACT: &str = "MISSING_IMPACT";
    pub const CUSTOMIZATION_PARTIAL: &str = "CUSTOMIZATION_PARTIAL";
    pub const CUSTOMIZATION_INVALID: &str = "CUSTOMIZATION_INVALID";
    pub const STEP_TEAM_MISSING: &str = "STEP_TEAM_MISSING";
    pub const STEP_ASSUMPTIONS_MISSING: &str = "STEP_ASSUMPTIONS_MISSING";
    pub const STEP_SCENARIOS_MISSING: &str = "STEP_SCENARIOS_MISSING";
    pub const STEP_ATTACKERS_MISSING: &str = "STEP_ATTACKERS_MISSING";
    pub const DEVICE_NO_ASSETS: &str = "DEVICE_NO_ASSETS";
    pub const ATTACK_POINT_OUT_OF_SCOPE: &str = "ATTACK_POINT_OUT_OF_SCOPE";
    pub const ATTACKER_UNUSED: &str = "ATTACKER_UNUSED";
    pub const ASSUMED_WORST: &str = "ASSUMED_WORST";
}

/// Checks referential integrity and methodology completeness. Findings
/// are reported in document order and never raised as failures.
pub fn validate_document(
    doc: &ThreatModelDocument,
    options: ValidateOptions,
) -> ValidationReport {
    let mut report = ValidationReport::default();
    let error = |report: &mut ValidationReport, code, path: String, message: String| {
        report.errors.push(Finding {
            code,
            path,
            message,
        });
    };
    let warn = |report: &mut ValidationReport, code, path: String, message: String| {
        report.warnings.push(Finding {
            code,
            path,
            message,
        });
    };

    if doc.schema_version != SCHEMA_VERSION {
        error(
            &mut report,
            codes::SCHEMA_VERSION,
            "schema_version".into(),
            format!(
                "unsupported schema version {:?}, expected {SCHEMA_VERSION:?}",
                doc.schema_version
            ),
        );
    }

    if doc.team.is_empty() {
        warn(
            &mut report,
            codes::STEP_TEAM_MISSING,
            "team".into(),
            "no threat-modeling team members are listed".into(),
        );
    }
    if doc.assumptions.operational_environment.trim().is_empty() {
        warn(
            &mut report,
            codes::STEP_ASSUMPTIONS_MISSING,
            "assumptions.operational_environment".into(),
            "the operational environment is not described".into(),
        );
    }
    if doc.assumptions.security_boundaries.is_empty() {
        warn(
            &mut report,
            codes::STEP_ASSUMPTIONS_MISSING,
            "assumptions.security_boundaries".into(),
            "no security boundaries are listed".into(),
        );
    }
    if doc.assumptions.use_scenarios.is_empty() {
        warn(
            &mut report,
            codes::STEP_SCENARIOS_MISSING,
            "assumptions.use_scenarios".into(),
            "no use scenarios are listed".into(),
        );
    }
    if doc.assumptions.exclusions.is_empty() {
        warn(
            &mut report,
            codes::STEP_ASSUMPTIONS_MISSING,
            "assumptions.exclusions".into(),
            "no exclusions are listed".into(),
        );
    }

    // Customization: all-three rule, then the catalog rules.
    let mut effective = None;
    if doc.has_customization() {
        let missing: Vec<&str> = [
            ("scales", doc.scales.is_none()),
            ("probability_bins", doc.probability_bins.is_none()),
            ("risk_matrix", doc.risk_matrix.is_none()),
        ]
        .iter()
        .filter(|(_, absent)| *absent)
        .map(|(name, _)| *name)
        .collect();
        if missing.is_empty() {
            match scoring::effective_catalog(doc) {
                Ok(catalog) => effective = Some(catalog),
                Err(err) => error(
                    &mut report,
                    codes::CUSTOMIZATION_INVALID,
                    "scales".into(),
                    err.to_string(),
                ),
            }
        } else {
            error(
                &mut report,
                codes::CUSTOMIZATION_PARTIAL,
                "scales".into(),
                format!(
                    "scales, probability_bins, and risk_matrix must be customized together; \
                     missing: {}",
                    missing.join(", ")
                ),
            );
        }
    } else {
        effective = Some(catalog::Catalog::builtin());
    }
    let scales = effective.as_ref().map(|c| &c.scales);

    // Devices.
    let attack_points = catalog::builtin_attack_points();
    for (i, device) in doc.devices.iter().enumerate() {
        if doc.devices[..i].iter().any(|d| d.id == device.id) {
            error(
                &mut report,
                codes::DUP_ID,
                format!("devices[{i}].id"),
                format!("duplicate device id {:?}", device.id),
            );
        }
        for (j, point) in device.attack_points.iter().enumerate() {
            if !ATTACK_POINT_RANGE.contains(point) {
                error(
                    &mut report,
                    codes::ATTACK_POINT_OUT_OF_RANGE,
                    format!("devices[{i}].attack_points[{j}]"),
                    format!("attack point {point} is outside 1..=11"),
                );
            }
        }
        for (j, asset) in device.assets.iter().enumerate() {
            if device.assets[..j].iter().any(|a| a.id == asset.id) {
                error(
                    &mut report,
                    codes::DUP_ID,
                    format!("devices[{i}].assets[{j}].id"),
                    format!("duplicate asset id {:?} within device {:?}", asset.id, device.id),
                );
            }
        }
        if device.assets.is_empty() {
            warn(
                &mut report,
                codes::DEVICE_NO_ASSETS,
                format!("devices[{i}].assets"),
                format!("device {:?} lists no protected assets", device.id),
            );
        }
        let targeted = doc
            .threats
            .iter()
            .any(|t| t.targets.iter().any(|target| target.device == device.id));
        if targeted {
            for (j, point) in device.attack_points.iter().enumerate() {
                let out_of_scope = attack_points
                    .iter()
                    .any(|p: &AttackPoint| p.number == *point && !p.in_scope);
                if out_of_scope {
                    warn(
                        &mut report,
                        codes::ATTACK_POINT_OUT_OF_SCOPE,
                        format!("devices[{i}].attack_points[{j}]"),
                        format!(
                            "threatened device {:?} lists attack point {point}, which the \
                             model scopes out",
                            device.id
                        ),
                    );
                }
            }
        }
    }

    // Attackers.
    if doc.attackers.is_empty() {
        warn(
            &mut report,
            codes::STEP_ATTACKERS_MISSING,
            "attackers".into(),
            "no attacker profiles are defined".into(),
        );
    }
    for (i, attacker) in doc.attackers.iter().enumerate() {
        if doc.attackers[..i].iter().any(|a| a.id == attacker.id) {
            error(
                &mut report,
                codes::DUP_ID,
                format!("attackers[{i}].id"),
                format!("duplicate attacker id {:?}", attacker.id),
            );
        }
    }
    if doc.threats.is_empty() {
        for (i, attacker) in doc.attackers.iter().enumerate() {
            warn(
                &mut report,
                codes::ATTACKER_UNUSED,
                format!("attackers[{i}]"),
                format!(
                    "attacker profile {:?} is defined but no threats are recorded",
                    attacker.id
                ),
            );
        }
    }

    // Threats.
    for (i, threat) in doc.threats.iter().enumerate() {
        if doc.threats[..i].iter().any(|t| t.id == threat.id) {
            error(
                &mut report,
                codes::DUP_ID,
                format!("threats[{i}].id"),
                format!("duplicate threat id {:?}", threat.id),
            );
        }
        if threat.violates.is_empty() {
            error(
                &mut report,
                codes::EMPTY_VIOLATES,
                format!("threats[{i}].violates"),
                format!("threat {:?} must violate at least one property", threat.id),
            );
        }
        if threat.targets.is_empty() {
            error(
                &mut report,
                codes::EMPTY_TARGETS,
                format!("threats[{i}].targets"),
                format!("threat {:?} must target at least one device", threat.id),
            );
        }
        for (j, target) in threat.targets.iter().enumerate() {
            if threat.targets[..j].iter().any(|t| t.device == target.device) {
                error(
                    &mut report,
                    codes::DUP_TARGET,
                    format!("threats[{i}].targets[{j}]"),
                    format!(
                        "device {:?} appears more than once in the targets of {:?}",
                        target.device, threat.id
                    ),
                );
            }
            if doc.device(&target.device).is_none() {
                error(
                    &mut report,
                    codes::REF_UNKNOWN_DEVICE,
                    format!("threats[{i}].targets[{j}]"),
                    format!(
                        "threat {:?} targets unknown device {:?}",
                        threat.id, target.device
                    ),
                );
            }
            match (&target.impact, scales) {
                (Some(label), Some(scales)) => {
                    if scales
                        .tier_by_label(CharacteristicId::Severity, label)
                        .is_none()
                    {
                        error(
                            &mut report,
                            codes::IMPACT_UNKNOWN,
                            format!("threats[{i}].targets[{j}].impact"),
                            format!("impact {label:?} is not a severity tier"),
                        );
                    }
                }
                (None, _) if options.assume_worst => warn(
                    &mut report,
                    codes::ASSUMED_WORST,
                    format!("threats[{i}].targets[{j}].impact"),
                    format!(
                        "threat {:?} has no impact for device {:?}; assuming the highest \
                         severity",
                        threat.id, target.device
                    ),
                ),
                (None, _) => error(
                    &mut report,
                    codes::MISSING_IMPACT,
                    format!("threats[{i}].targets[{j}].impact"),
                    format!(
                        "threat {:?} has no impact for device {:?}",
                        threat.id, target.device
                    ),
                ),
                _ => {}
            }
        }
        match (&threat.scores, scales) {
            (Some(scores), Some(scales)) => {
                for (characteristic, value) in scores.components() {
                    if scales.tier_by_value(characteristic, value).is_none() {
                        error(
                            &mut report,
                            codes::SCORE_OUT_OF_SCALE,
                            format!("threats[{i}].scores.{characteristic}"),
                            format!("{value} is not a tier value of the {characteristic} scale"),
                        );
                    }
                }
            }
            (None, _) if options.assume_worst => warn(
                &mut report,
                codes::ASSUMED_WORST,
                format!("threats[{i}].scores"),
                format!(
                    "threat {:?} has no scores; assuming the maximum probability vector",
                    threat.id
                ),
            ),
            (None, _) => error(
                &mut report,
                codes::MISSING_SCORES,
                format!("threats[{i}].scores"),
                format!("threat {:?} has no scores", threat.id),
            ),
            _ => {}
        }
        if let Some(overrides) = &threat.score_overrides {
            for (device_id, scores) in overrides {
                if doc.device(device_id).is_none() {
                    error(
                        &mut report,
                        codes::REF_UNKNOWN_DEVICE,
                        format!("threats[{i}].score_overrides.{device_id}"),
                        format!(
                            "score override of threat {:?} names unknown device {device_id:?}",
                            threat.id
                        ),
                    );
                }
                if let Some(scales) = scales {
                    for (characteristic, value) in scores.components() {
                        if scales.tier_by_value(characteristic, value).is_none() {
                            error(
                                &mut report,
                                codes::SCORE_OUT_OF_SCALE,
                                format!(
                                    "threats[{i}].score_overrides.{device_id}.{characteristic}"
                                ),
                                format!(
                                    "{value} is not a tier value of the {characteristic} scale"
                                ),
                            );
                        }
                    }
                }
            }
        }
    }

    report
}

/// Returns a copy with the assume-worst substitutions applied: missing
/// score vectors become the maximum probability vector and missing
/// impacts the highest severity tier.
pub fn apply_assume_worst(doc: &ThreatModelDocument) -> ThreatModelDocument {
    let catalog = scoring::effective_catalog(doc).unwrap_or_else(|_| catalog::Catalog::builtin());
    let max = |c| catalog.scales.max_value(c);
    let worst_scores = ScoreVector::new(
        max(CharacteristicId::Expertise),
        max(CharacteristicId::Equipment),
        max(CharacteristicId::Proximity),
        max(CharacteristicId::AccessTime),
        max(CharacteristicId::DeviceInformation),
    );
    let worst_impact = catalog
        .scales
        .impact_labels()
        .last()
        .cloned()
        .expect("severity scale always has tiers");
    let mut resolved = doc.clone();
    for threat in &mut resolved.threats {
        if threat.scores.is_none() {
            threat.scores = Some(worst_scores);
        }
        for target in &mut threat.targets {
            if target.impact.is_none() {
                target.impact = Some(worst_impact.clone());
            }
        }
    }
    resolved
}

/// Produces a parseable skeleton document with every methodology
/// section present, one placeholder device, and one placeholder threat.
pub fn scaffold_document(title: &str, category: DeviceCategory) -> String {
    let doc = ThreatModelDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        title: title.to_string(),
        team: Vec::new(),
        assumptions: Assumptions {
            operational_environment: "Describe where the device operates and who interacts \
                                      with it."
                .into(),
            security_boundaries: vec![
                "Wireless link between the device and its external controller".into(),
            ],
            use_scenarios: Vec::new(),
            exclusions: vec!["Semi-invasive and invasive hardware attacks".into()],
        },
        scales: None,
        probability_bins: None,
        risk_matrix: None,
        devices: vec![Device {
            id: "DEV-1".into(),
            name: "Example device".into(),
            category,
            purpose: "Describe what the device senses or actuates.".into(),
            status: "Concept".into(),
            attack_points: vec![9, 10, 11],
            assets: Vec::new(),
        }],
        attackers: vec![AttackerProfile {
            id: "ATK-1".into(),
            position: AttackerPosition::External,
            activity: AttackerActivity::Active,
            cardinality: AttackerCardinality::Individual,
            sophistication: AttackerSophistication::Sophisticated,
            description: "Sophisticated remote adversary without physical access to the user."
                .into(),
        }],
        threats: vec![Threat {
            id: "THR-1".into(),
            description: "Describe how the attacker compromises an asset.".into(),
            violates: vec![SecurityProperty::Confidentiality],
            stride_tags: None,
            targets: vec![ThreatTarget {
                device: "DEV-1".into(),
                impact: Some("low".into()),
                impact_rationale: Some(
                    "Placeholder; revisit while responding to and monitoring risks.".into(),
                ),
            }],
            scores: Some(ScoreVector::new(1, 1, 1, 1, 1)),
            score_overrides: None,
        }],
    };
    serialize_document(&doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minimal_doc_text() -> String {
        scaffold_document("demo", DeviceCategory::Wearable)
    }

    #[test]
    fn scaffold_parses_and_round_trips() {
        let text = minimal_doc_text();
        let doc = parse_document(&text).unwrap();
        assert_eq!(doc.title, "demo");
        assert_eq!(doc.devices[0].category, DeviceCategory::Wearable);
        assert_eq!(serialize_document(&doc), text);
    }

    #[test]
    fn scaffold_validates_clean_with_warnings() {
        let doc = parse_document(&minimal_doc_text()).unwrap();
        let report = validate_document(&doc, ValidateOptions::default());
        assert!(report.is_valid(), "{report}");
        assert!(!report.warnings.is_empty());
    }

    #[test]
    fn unknown_field_is_a_schema_error() {
        let text = minimal_doc_text().replace("\"title\"", "\"titel\"");
        match parse_document(&text) {
            Err(ParseError::Schema { message, .. }) => {
                assert!(message.contains("titel"), "{message}");
            }
            other => panic!("expected schema error, got {other:?}"),
        }
    }

    #[test]
    fn missing_score_component_points_at_path() {
        let text = minimal_doc_text().replace("\"expertise\": 1,\n", "");
        match parse_document(&text) {
            Err(ParseError::Schema { path, message }) => {
                assert_eq!(path, "threats[0].scores");
                assert!(message.contains("expertise"), "{message}");
            }
            other => panic!("expected schema error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_json_reports_position() {
        match parse_document("{ not json") {
            Err(ParseError::Syntax { line, column, .. }) => {
                assert_eq!(line, 1);
                assert!(column > 0);
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_target_device_is_flagged() {
        let mut doc = parse_document(&minimal_doc_text()).unwrap();
        doc.threats[0].targets[0].device = "D9".into();
        let report = validate_document(&doc, ValidateOptions::default());
        let finding = report
            .errors
            .iter()
            .find(|f| f.code == codes::REF_UNKNOWN_DEVICE)
            .expect("missing REF_UNKNOWN_DEVICE");
        assert_eq!(finding.path, "threats[0].targets[0]");
    }

    #[test]
    fn duplicate_ids_are_flagged() {
        let mut doc = parse_document(&minimal_doc_text()).unwrap();
        doc.devices.push(doc.devices[0].clone());
        let mut second = doc.threats[0].clone();
        second.id = doc.threats[0].id.clone();
        doc.threats.push(second);
        let report = validate_document(&doc, ValidateOptions::default());
        let dup_paths: Vec<&str> = report
            .errors
            .iter()
            .filter(|f| f.code == codes::DUP_ID)
            .map(|f| f.path.as_str())
            .collect();
        assert_eq!(dup_paths, vec!["devices[1].id", "threats[1].id"]);
    }

    #[test]
    fn attack_point_bounds_and_scope() {
        let mut doc = parse_document(&minimal_doc_text()).unwrap();
        doc.devices[0].attack_points = vec![0, 3, 12];
        let report = validate_document(&doc, ValidateOptions::default());
        let range_errors = report
            .errors
            .iter()
            .filter(|f| f.code == codes::ATTACK_POINT_OUT_OF_RANGE)
            .count();
        assert_eq!(range_errors, 2);
        assert!(report
            .warnings
            .iter()
            .any(|f| f.code == codes::ATTACK_POINT_OUT_OF_SCOPE
                && f.path == "devices[0].attack_points[1]"));
    }

    #[test]
    fn missing_scores_error_or_assumed_worst() {
        let mut doc = parse_document(&minimal_doc_text()).unwrap();
        doc.threats[0].scores = None;
        doc.threats[0].targets[0].impact = None;
        let strict = validate_document(&doc, ValidateOptions::default());
        assert!(strict.errors.iter().any(|f| f.code == codes::MISSING_SCORES));
        assert!(strict.errors.iter().any(|f| f.code == codes::MISSING_IMPACT));

        let lenient = validate_document(&doc, ValidateOptions { assume_worst: true });
        assert!(lenient.is_valid(), "{lenient}");
        assert_eq!(
            lenient
                .warnings
                .iter()
                .filter(|f| f.code == codes::ASSUMED_WORST)
                .count(),
            2
        );

        let resolved = apply_assume_worst(&doc);
        assert_eq!(
            resolved.threats[0].scores,
            Some(ScoreVector::new(3, 3, 3, 3, 3))
        );
        assert_eq!(resolved.threats[0].targets[0].impact.as_deref(), Some("high"));
    }

    #[test]
    fn partial_customization_is_an_error() {
        let mut doc = parse_document(&minimal_doc_text()).unwrap();
        doc.scales = Some(catalog::builtin_scales());
        let report = validate_document(&doc, ValidateOptions::default());
        assert!(report
            .errors
            .iter()
            .any(|f| f.code == codes::CUSTOMIZATION_PARTIAL));
    }

    #[test]
    fn full_builtin_customization_is_accepted_and_serialized_together() {
        let mut doc = parse_document(&minimal_doc_text()).unwrap();
        doc.scales = Some(catalog::builtin_scales());
        doc.probability_bins = Some(catalog::builtin_bins());
        doc.risk_matrix = Some(catalog::builtin_matrix().to_cells());
        let report = validate_document(&doc, ValidateOptions::default());
        assert!(report.is_valid(), "{report}");
        let text = serialize_document(&doc);
        for block in ["\"scales\"", "\"probability_bins\"", "\"risk_matrix\""] {
            assert!(text.contains(block), "missing {block}");
        }
        assert_eq!(parse_document(&text).unwrap(), doc);
    }

    #[test]
    fn score_out_of_scale_names_characteristic() {
        let mut doc = parse_document(&minimal_doc_text()).unwrap();
        doc.threats[0].scores = Some(ScoreVector::new(1, 1, 9, 1, 1));
        let report = validate_document(&doc, ValidateOptions::default());
        let finding = report
            .errors
            .iter()
            .find(|f| f.code == codes::SCORE_OUT_OF_SCALE)
            .expect("missing SCORE_OUT_OF_SCALE");
        assert_eq!(finding.path, "threats[0].scores.proximity");
    }

    #[test]
    fn validation_is_deterministic() {
        let mut doc = parse_document(&minimal_doc_text()).unwrap();
        doc.threats[0].targets[0].device = "D9".into();
        let a = validate_document(&doc, ValidateOptions::default());
        let b = validate_document(&doc, ValidateOptions::default());
        assert_eq!(a, b);
    }
}
