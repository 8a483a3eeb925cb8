//! Built-in scale, bin, matrix, and attack-point catalog, plus the
//! rules custom replacements must satisfy.

use crate::model::{
    AttackPoint, ProbabilityBin, ProbabilityBins, RiskLevel, RiskMatrix, ScaleSet, ScaleTier,
};

/// The frozen default catalog.
#[derive(Debug, Clone, PartialEq)]
pub struct BuiltinCatalog {
    pub scales: ScaleSet,
    pub bins: ProbabilityBins,
    pub matrix: RiskMatrix,
    pub attack_points: Vec<AttackPoint>,
}

impl BuiltinCatalog {
    pub fn get() -> BuiltinCatalog {
        BuiltinCatalog {
            scales: builtin_scales(),
            bins: builtin_bins(),
            matrix: builtin_matrix(),
            attack_points: builtin_attack_points(),
        }
    }
}

/// The scales, bins, and matrix in force for one document: either the
/// built-ins or the document's own replacement triple.
#[derive(Debug, Clone, PartialEq)]
pub struct Catalog {
    pub scales: ScaleSet,
    pub bins: ProbabilityBins,
    pub matrix: RiskMatrix,
}

impl Catalog {
    pub fn builtin() -> Catalog {
        Catalog {
            scales: builtin_scales(),
            bins: builtin_bins(),
            matrix: builtin_matrix(),
        }
    }
}

/// The six three-tier scales. Probability characteristics score 3 for
/// the condition easiest on the attacker; severity scores 3 for the
/// harshest outcome.
pub fn builtin_scales() -> ScaleSet {
    let tier = ScaleTier::new;
    ScaleSet::new([
        vec![
            tier(
                "Expert",
                1,
                "Broad cybersecurity expertise, developer-level familiarity with the target, \
                 and command of sophisticated tools that are difficult to master.",
            ),
            tier(
                "Proficient",
                2,
                "Familiar with security behavior, classical attacks, and related disciplines \
                 such as electrical engineering or software development.",
            ),
            tier("Layman", 3, "No particular expertise."),
        ],
        vec![
            tier("Custom", 1, "Bespoke equipment."),
            tier(
                "Specialized",
                2,
                "Expensive commercially available equipment with controlled sales; operating \
                 skill is difficult to obtain.",
            ),
            tier(
                "Standard",
                3,
                "Mass-market commercially available equipment such as smartphones or laptops; \
                 operating skill is publicly learnable.",
            ),
        ],
        vec![
            tier(
                "Nearby",
                1,
                "Attacker in the same room, in immediate visibility of the victim, with no \
                 physical obstacles in between.",
            ),
            tier(
                "Moderate",
                2,
                "Attacker in the same space without obstacles, but far enough that the victim \
                 cannot see the attacker.",
            ),
            tier(
                "Remote",
                3,
                "Attacker can mount the attack from a different location than the victim.",
            ),
        ],
        vec![
            tier("Long", 1, "Attacker can access the device continuously."),
            tier("Moderate", 2, "Attacker can access the device multiple times."),
            tier("Short", 3, "Attacker can access the device once, in real time."),
        ],
        vec![
            tier(
                "Critical",
                1,
                "Low-level information about the hardware design or source code.",
            ),
            tier(
                "Restricted",
                2,
                "Proprietary confidential developer information such as specifications or \
                 guidances.",
            ),
            tier("Public", 3, "Public domain information."),
        ],
        vec![
            tier(
                "High",
                3,
                "Severe or catastrophic adverse effect on the user; denial of service may \
                 cause irreparable harm or loss of life.",
            ),
            tier(
                "Moderate",
                2,
                "Moderate adverse effect on the user; for example, altered sensor data causes \
                 wrong actuator commands, but the malicious effect is temporary.",
            ),
            tier(
                "Low",
                1,
                "Limited adverse effect posing surmountable problems; for example, loss of \
                 personal information that does not stop correct device functioning.",
            ),
        ],
    ])
    .expect("built-in scales are well-formed")
}

/// The probability bands: Low 5-7, Moderate 8-12, High 13-15.
pub fn builtin_bins() -> ProbabilityBins {
    ProbabilityBins::new(vec![
        ProbabilityBin {
            label: "low".into(),
            min: 5,
            max: 7,
        },
        ProbabilityBin {
            label: "moderate".into(),
            min: 8,
            max: 12,
        },
        ProbabilityBin {
            label: "high".into(),
            min: 13,
            max: 15,
        },
    ])
    .expect("built-in bins are well-formed")
}

/// The 3x3 (probability bin, impact) -> risk level map.
pub fn builtin_matrix() -> RiskMatrix {
    use RiskLevel::*;
    let labels = vec!["low".to_string(), "moderate".to_string(), "high".to_string()];
    RiskMatrix::new(
        labels.clone(),
        labels,
        vec![
            vec![VeryLow, Moderate, High],
            vec![Low, Moderate, High],
            vec![Moderate, High, VeryHigh],
        ],
    )
    .expect("built-in matrix is well-formed")
}

/// The eleven architectural attack points. Only the non-invasive direct
/// interfaces (sensing, actuating, and telemetry) are in scope.
pub fn builtin_attack_points() -> Vec<AttackPoint> {
    let point = |number, description: &str, examples: &[&str], in_scope| {
        AttackPoint::new(
            number,
            description,
            examples.iter().map(|e| e.to_string()).collect(),
            in_scope,
        )
        .expect("built-in attack points are well-formed")
    };
    vec![
        point(1, "Sensing channel", &["fault injection"], true),
        point(2, "Sensor-to-processor link", &["probing"], false),
        point(3, "Processor and digital hardware", &["hardware trojans"], false),
        point(4, "Processor-to-actuator link", &["probing"], false),
        point(5, "Actuating channel", &["control spoofing"], true),
        point(6, "Processor-to-memory bus", &["probing"], false),
        point(7, "Off-chip memory", &["microprobing"], false),
        point(8, "Processor-to-telemetry link", &["probing"], false),
        point(9, "Telemetry antenna", &["shielding/cutting the antenna"], true),
        point(
            10,
            "Wireless power delivery",
            &["denial of sleep", "power analysis"],
            true,
        ),
        point(11, "Wireless data link", &["man-in-the-middle"], true),
    ]
}

/// One broken customization rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub message: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.rule, self.message)
    }
}

/// Checks a replacement (scales, bins, matrix) triple: the bins must
/// exactly partition the attainable probability-sum range of the
/// scales, and the matrix must cover bins x severity tiers.
///
/// Tier-shape rules (at least two contiguous tiers from 1) are already
/// enforced by the [`ScaleSet`] constructor; the matrix's totality and
/// monotonicity by the [`RiskMatrix`] constructor. An empty result
/// means the triple is accepted.
pub fn validate_scale_customization(
    scales: &ScaleSet,
    bins: &ProbabilityBins,
    matrix: &RiskMatrix,
) -> Vec<Violation> {
    let mut violations = Vec::new();
    let (min, max) = scales.attainable_sum_range();
    let (lo, hi) = bins.span();
    if lo != min || hi != max {
        violations.push(Violation {
            rule: "BIN_COVERAGE",
            message: format!(
                "bins cover [{lo}, {hi}] but the attainable sum range is [{min}, {max}]"
            ),
        });
    }
    for sum in bins.gaps() {
        violations.push(Violation {
            rule: "BIN_COVERAGE",
            message: format!("sum {sum} is not covered by any bin"),
        });
    }
    let bin_labels = bins.labels();
    if matrix.bin_labels() != bin_labels.as_slice() {
        violations.push(Violation {
            rule: "MATRIX_AXES",
            message: format!(
                "matrix probability labels {:?} do not match bin labels {:?}",
                matrix.bin_labels(),
                bin_labels
            ),
        });
    }
    let impact_labels = scales.impact_labels();
    if matrix.impact_labels() != impact_labels.as_slice() {
        violations.push(Violation {
            rule: "MATRIX_AXES",
            message: format!(
                "matrix impact labels {:?} do not match severity tiers {:?}",
                matrix.impact_labels(),
                impact_labels
            ),
        });
    }
    violations
}
