//! Deterministic renderers: risk-matrix grids, ranked threat
//! registers, full markdown reports, and assessment diffs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::catalog::Catalog;
use crate::docio::{self, ValidateOptions};
use crate::model::{Assessment, CharacteristicId, ThreatModelDocument};
use crate::scoring;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReportError {
    #[error("no assessments for device {0:?}")]
    UnknownDevice(String),
    #[error("duplicate assessment for threat {threat_id:?} on device {device_id:?}")]
    DuplicateKey { threat_id: String, device_id: String },
}

/// Axis labels of the grid renderer, both in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridAxes {
    pub bin_labels: Vec<String>,
    pub impact_labels: Vec<String>,
}

impl GridAxes {
    pub fn from_catalog(catalog: &Catalog) -> GridAxes {
        GridAxes {
            bin_labels: catalog.bins.labels(),
            impact_labels: catalog.scales.impact_labels(),
        }
    }

    pub fn builtin() -> GridAxes {
        GridAxes::from_catalog(&Catalog::builtin())
    }
}

fn capitalize(label: &str) -> String {
    let mut chars = label.chars();
    match chars.next() {
        Some(first) => first.to_uppercase().collect::<String>() + chars.as_str(),
        None => String::new(),
    }
}

/// Renders the probability x impact grid. Rows ascend by probability
/// bin, columns by impact; empty cells show "--" and populated cells
/// list their threat ids ascending.
pub fn render_matrix_grid(
    assessments: &[Assessment],
    device_id: Option<&str>,
    axes: &GridAxes,
) -> Result<String, ReportError> {
    let filtered: Vec<&Assessment> = match device_id {
        Some(id) => {
            let matching: Vec<&Assessment> =
                assessments.iter().filter(|a| a.device_id == id).collect();
            if matching.is_empty() && !assessments.is_empty() {
                return Err(ReportError::UnknownDevice(id.to_string()));
            }
            matching
        }
        None => assessments.iter().collect(),
    };

    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["Probability".to_string()];
    header.extend(axes.impact_labels.iter().map(|l| capitalize(l)));
    rows.push(header);
    for bin in &axes.bin_labels {
        let mut row = vec![capitalize(bin)];
        for impact in &axes.impact_labels {
            let mut ids: Vec<&str> = filtered
                .iter()
                .filter(|a| a.probability_bin == *bin && a.impact == *impact)
                .map(|a| a.threat_id.as_str())
                .collect();
            ids.sort_unstable();
            row.push(if ids.is_empty() {
                "--".to_string()
            } else {
                ids.join(", ")
            });
        }
        rows.push(row);
    }

    let columns = rows[0].len();
    let widths: Vec<usize> = (0..columns)
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    let _ = writeln!(out, "{}Impact", " ".repeat(widths[0] + 2));
    for row in &rows {
        let mut line = String::new();
        for (cell, width) in row.iter().zip(&widths) {
            let _ = write!(line, "{cell:<width$}  ");
        }
        let _ = writeln!(out, "{}", line.trim_end());
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegisterFormat {
    Table,
    Json,
    Markdown,
}

impl std::str::FromStr for RegisterFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<RegisterFormat, String> {
        match s {
            "table" => Ok(RegisterFormat::Table),
            "json" => Ok(RegisterFormat::Json),
            "markdown" => Ok(RegisterFormat::Markdown),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

const REGISTER_COLUMNS: [&str; 11] = [
    "threat_id",
    "device_id",
    "C1",
    "C2",
    "C3",
    "C4",
    "C5",
    "P",
    "bin",
    "impact",
    "risk",
];

fn register_rows(assessments: &[Assessment]) -> Vec<Vec<String>> {
    let ranked = scoring::rank_assessments(assessments.to_vec());
    ranked
        .iter()
        .map(|a| {
            let mut row = vec![a.threat_id.clone(), a.device_id.clone()];
            for c in CharacteristicId::PROBABILITY {
                row.push(a.scores.component(c).unwrap().to_string());
            }
            row.push(a.probability_total.to_string());
            row.push(a.probability_bin.clone());
            row.push(a.impact.clone());
            row.push(a.risk_level.as_str().to_string());
            row
        })
        .collect()
}

/// Renders the ranked register. All three formats are byte-stable for
/// identical inputs.
pub fn render_threat_register(assessments: &[Assessment], format: RegisterFormat) -> String {
    match format {
        RegisterFormat::Json => {
            let ranked = scoring::rank_assessments(assessments.to_vec());
            let mut text = serde_json::to_string_pretty(&ranked)
                .expect("assessments always serialize");
            text.push('\n');
            text
        }
        RegisterFormat::Table => {
            let rows = register_rows(assessments);
            let header: Vec<String> = REGISTER_COLUMNS.iter().map(|c| c.to_string()).collect();
            let all: Vec<&Vec<String>> = std::iter::once(&header).chain(rows.iter()).collect();
            let widths: Vec<usize> = (0..REGISTER_COLUMNS.len())
                .map(|c| all.iter().map(|r| r[c].len()).max().unwrap_or(0))
                .collect();
            let mut out = String::new();
            for row in all {
                let mut line = String::new();
                for (cell, width) in row.iter().zip(&widths) {
                    let _ = write!(line, "{cell:<width$}  ");
                }
                let _ = writeln!(out, "{}", line.trim_end());
            }
            out
        }
        RegisterFormat::Markdown => {
            let mut out = String::new();
            let _ = writeln!(out, "| {} |", REGISTER_COLUMNS.join(" | "));
            let _ = writeln!(
                out,
                "|{}",
                " --- |".repeat(REGISTER_COLUMNS.len())
            );
            for row in register_rows(assessments) {
                let _ = writeln!(out, "| {} |", row.join(" | "));
            }
            out
        }
    }
}

fn bullet_list(out: &mut String, items: &[String]) {
    if items.is_empty() {
        out.push_str("(none)\n");
    } else {
        for item in items {
            let _ = writeln!(out, "- {item}");
        }
    }
}

/// Renders the whole document as markdown: title, team, assumptions,
/// devices and assets, attackers, ranked register, one matrix grid per
/// device, and the validation warnings.
pub fn render_full_report(doc: &ThreatModelDocument, assessments: &[Assessment]) -> String {
    let axes = scoring::effective_catalog(doc)
        .map(|c| GridAxes::from_catalog(&c))
        .unwrap_or_else(|_| GridAxes::builtin());
    let mut out = String::new();
    let _ = writeln!(out, "# {}\n", doc.title);

    out.push_str("## Team\n\n");
    let members: Vec<String> = doc
        .team
        .iter()
        .map(|m| format!("{} ({})", m.name, m.discipline))
        .collect();
    bullet_list(&mut out, &members);

    out.push_str("\n## Assumptions\n\n### Operational Environment\n\n");
    if doc.assumptions.operational_environment.trim().is_empty() {
        out.push_str("(none)\n");
    } else {
        let _ = writeln!(out, "{}", doc.assumptions.operational_environment);
    }
    out.push_str("\n### Security Boundaries\n\n");
    bullet_list(&mut out, &doc.assumptions.security_boundaries);
    out.push_str("\n### Use Scenarios\n\n");
    bullet_list(&mut out, &doc.assumptions.use_scenarios);
    out.push_str("\n### Exclusions\n\n");
    bullet_list(&mut out, &doc.assumptions.exclusions);

    out.push_str("\n## Devices and Assets\n\n");
    out.push_str("| id | name | category | purpose | status | attack points | assets |\n");
    out.push_str("| --- | --- | --- | --- | --- | --- | --- |\n");
    for device in &doc.devices {
        let points = device
            .attack_points
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        let assets = if device.assets.is_empty() {
            "(none)".to_string()
        } else {
            device
                .assets
                .iter()
                .map(|a| a.name.clone())
                .collect::<Vec<_>>()
                .join("; ")
        };
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} |",
            device.id, device.name, device.category, device.purpose, device.status, points,
            assets
        );
    }

    out.push_str("\n## Attackers\n\n");
    if doc.attackers.is_empty() {
        out.push_str("(none)\n");
    } else {
        out.push_str(
            "| id | position | activity | cardinality | sophistication | description |\n",
        );
        out.push_str("| --- | --- | --- | --- | --- | --- |\n");
        for attacker in &doc.attackers {
            let _ = writeln!(
                out,
                "| {} | {:?} | {:?} | {:?} | {:?} | {} |",
                attacker.id,
                attacker.position,
                attacker.activity,
                attacker.cardinality,
                attacker.sophistication,
                attacker.description
            );
        }
    }

    out.push_str("\n## Threat Register\n\n");
    out.push_str(&render_threat_register(assessments, RegisterFormat::Markdown));

    out.push_str("\n## Risk Matrices\n");
    let mut device_ids: Vec<&str> = doc.devices.iter().map(|d| d.id.as_str()).collect();
    device_ids.sort_unstable();
    for id in device_ids {
        let _ = writeln!(out, "\n### Device {id}\n");
        let filtered: Vec<Assessment> = assessments
            .iter()
            .filter(|a| a.device_id == id)
            .cloned()
            .collect();
        let grid = render_matrix_grid(&filtered, None, &axes)
            .expect("grid over pre-filtered assessments cannot fail");
        out.push_str("```\n");
        out.push_str(&grid);
        out.push_str("```\n");
    }

    out.push_str("\n## Validation Warnings\n\n");
    let report = docio::validate_document(doc, ValidateOptions::default());
    let warnings: Vec<String> = report.warnings.iter().map(|w| w.to_string()).collect();
    bullet_list(&mut out, &warnings);

    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaKind {
    Added,
    Removed,
    Changed,
}

/// One risk change between two assessment sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiskDelta {
    pub threat_id: String,
    pub device_id: String,
    pub kind: DeltaKind,
    pub old: Option<Assessment>,
    pub new: Option<Assessment>,
}

fn keyed(
    assessments: &[Assessment],
) -> Result<BTreeMap<(String, String), &Assessment>, ReportError> {
    let mut map = BTreeMap::new();
    for a in assessments {
        if map
            .insert((a.threat_id.clone(), a.device_id.clone()), a)
            .is_some()
        {
            return Err(ReportError::DuplicateKey {
                threat_id: a.threat_id.clone(),
                device_id: a.device_id.clone(),
            });
        }
    }
    Ok(map)
}

fn risk_changed(old: &Assessment, new: &Assessment) -> bool {
    old.risk_level != new.risk_level
        || old.probability_total != new.probability_total
        || old.impact != new.impact
}

/// Keyed outer join of two assessment sets; unchanged pairs are
/// omitted and deltas come out sorted by (threat id, device id).
pub fn diff_assessments(
    old: &[Assessment],
    new: &[Assessment],
) -> Result<Vec<RiskDelta>, ReportError> {
    let old_map = keyed(old)?;
    let new_map = keyed(new)?;
    let keys: BTreeSet<&(String, String)> = old_map.keys().chain(new_map.keys()).collect();
    let mut deltas = Vec::new();
    for key in keys {
        let (threat_id, device_id) = key.clone();
        match (old_map.get(key), new_map.get(key)) {
            (Some(&o), Some(&n)) => {
                if risk_changed(o, n) {
                    deltas.push(RiskDelta {
                        threat_id,
                        device_id,
                        kind: DeltaKind::Changed,
                        old: Some(o.clone()),
                        new: Some(n.clone()),
                    });
                }
            }
            (Some(&o), None) => deltas.push(RiskDelta {
                threat_id,
                device_id,
                kind: DeltaKind::Removed,
                old: Some(o.clone()),
                new: None,
            }),
            (None, Some(&n)) => deltas.push(RiskDelta {
                threat_id,
                device_id,
                kind: DeltaKind::Added,
                old: None,
                new: Some(n.clone()),
            }),
            (None, None) => unreachable!(),
        }
    }
    Ok(deltas)
}

/// Plain-text rendering of a delta list.
pub fn render_risk_deltas(deltas: &[RiskDelta]) -> String {
    if deltas.is_empty() {
        return "no risk changes\n".to_string();
    }
    let mut out = String::new();
    for delta in deltas {
        match (delta.kind, &delta.old, &delta.new) {
            (DeltaKind::Added, _, Some(n)) => {
                let _ = writeln!(
                    out,
                    "added   {}/{}: risk {} (P={}, bin={}, impact={})",
                    delta.threat_id,
                    delta.device_id,
                    n.risk_level.as_str(),
                    n.probability_total,
                    n.probability_bin,
                    n.impact
                );
            }
            (DeltaKind::Removed, Some(o), _) => {
                let _ = writeln!(
                    out,
                    "removed {}/{}: risk was {} (P={}, bin={}, impact={})",
                    delta.threat_id,
                    delta.device_id,
                    o.risk_level.as_str(),
                    o.probability_total,
                    o.probability_bin,
                    o.impact
                );
            }
            (DeltaKind::Changed, Some(o), Some(n)) => {
                let _ = writeln!(
                    out,
                    "changed {}/{}: risk {} -> {} (P {} -> {}, impact {} -> {})",
                    delta.threat_id,
                    delta.device_id,
                    o.risk_level.as_str(),
                    n.risk_level.as_str(),
                    o.probability_total,
                    n.probability_total,
                    o.impact,
                    n.impact
                );
            }
            _ => unreachable!("delta kind always matches populated sides"),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{RiskLevel, ScoreVector};

    fn assessment(
        threat_id: &str,
        device_id: &str,
        bin: &str,
        impact: &str,
        impact_value: u32,
        total: u32,
        risk: RiskLevel,
    ) -> Assessment {
        Assessment {
            threat_id: threat_id.into(),
            device_id: device_id.into(),
            scores: ScoreVector::new(1, 1, 1, 1, 1),
            probability_total: total,
            probability_bin: bin.into(),
            impact: impact.into(),
            impact_value,
            risk_level: risk,
        }
    }

    fn d1_assessments() -> Vec<Assessment> {
        vec![
            assessment("T1", "D1", "high", "low", 1, 14, RiskLevel::Moderate),
            assessment("T2", "D1", "moderate", "high", 3, 11, RiskLevel::High),
            assessment("T3", "D1", "moderate", "high", 3, 11, RiskLevel::High),
        ]
    }

    #[test]
    fn grid_places_threats_in_cells() {
        let grid = render_matrix_grid(&d1_assessments(), Some("D1"), &GridAxes::builtin())
            .unwrap();
        let lines: Vec<&str> = grid.lines().collect();
        assert!(lines[0].trim_start().starts_with("Impact"));
        assert!(lines[1].starts_with("Probability"));
        let moderate = lines.iter().find(|l| l.starts_with("Moderate")).unwrap();
        assert!(moderate.ends_with("T2, T3"), "{moderate:?}");
        let high = lines.iter().find(|l| l.starts_with("High")).unwrap();
        assert!(high.contains("T1"), "{high:?}");
        assert_eq!(grid.matches("--").count(), 7);
    }

    #[test]
    fn grid_empty_and_unknown_device() {
        let grid = render_matrix_grid(&[], None, &GridAxes::builtin()).unwrap();
        assert_eq!(grid.matches("--").count(), 9);
        let err = render_matrix_grid(&d1_assessments(), Some("D9"), &GridAxes::builtin());
        assert_eq!(err, Err(ReportError::UnknownDevice("D9".into())));
    }

    #[test]
    fn register_table_and_markdown_rank_rows() {
        let table = render_threat_register(&d1_assessments(), RegisterFormat::Table);
        let lines: Vec<&str> = table.lines().collect();
        assert!(lines[0].starts_with("threat_id"));
        assert!(lines[1].starts_with("T2"));
        assert!(lines[2].starts_with("T3"));
        assert!(lines[3].starts_with("T1"));
        let markdown = render_threat_register(&d1_assessments(), RegisterFormat::Markdown);
        assert!(markdown.lines().nth(2).unwrap().starts_with("| T2 |"));
        let empty = render_threat_register(&[], RegisterFormat::Table);
        assert_eq!(empty.lines().count(), 1);
    }

    #[test]
    fn register_json_contains_schema_fields() {
        let json = render_threat_register(&d1_assessments()[..1], RegisterFormat::Json);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value[0]["probability_total"], 14);
        assert_eq!(value[0]["risk_level"], "moderate");
        assert!(value[0].get("impact_value").is_none());
    }

    #[test]
    fn renderers_are_deterministic() {
        let a = render_threat_register(&d1_assessments(), RegisterFormat::Table);
        let b = render_threat_register(&d1_assessments(), RegisterFormat::Table);
        assert_eq!(a, b);
    }

    #[test]
    fn diff_identity_and_mirror() {
        let old = d1_assessments();
        assert_eq!(diff_assessments(&old, &old).unwrap(), vec![]);

        let mut new = old.clone();
        new[0].impact = "high".into();
        new[0].impact_value = 3;
        new[0].risk_level = RiskLevel::VeryHigh;
        new.push(assessment("T9", "D1", "low", "low", 1, 6, RiskLevel::VeryLow));

        let forward = diff_assessments(&old, &new).unwrap();
        assert_eq!(forward.len(), 2);
        assert_eq!(forward[0].kind, DeltaKind::Changed);
        assert_eq!(forward[0].threat_id, "T1");
        assert_eq!(forward[1].kind, DeltaKind::Added);
        assert_eq!(forward[1].threat_id, "T9");

        let backward = diff_assessments(&new, &old).unwrap();
        assert_eq!(backward[0].kind, DeltaKind::Changed);
        assert_eq!(backward[0].old, forward[0].new);
        assert_eq!(backward[0].new, forward[0].old);
        assert_eq!(backward[1].kind, DeltaKind::Removed);
    }

    #[test]
    fn diff_rejects_duplicate_keys() {
        let mut old = d1_assessments();
        old.push(old[0].clone());
        let err = diff_assessments(&old, &[]).unwrap_err();
        assert!(matches!(err, ReportError::DuplicateKey { .. }));
    }

    #[test]
    fn delta_rendering() {
        assert_eq!(render_risk_deltas(&[]), "no risk changes\n");
        let old = vec![assessment("T5", "D4", "moderate", "low", 1, 12, RiskLevel::Low)];
        let new = vec![assessment("T5", "D4", "moderate", "high", 3, 12, RiskLevel::High)];
        let deltas = diff_assessments(&old, &new).unwrap();
        let text = render_risk_deltas(&deltas);
        assert!(text.contains("changed T5/D4: risk low -> high"), "{text}");
    }
}
