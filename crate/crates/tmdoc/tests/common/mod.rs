//! Shared builders for the four case-study fixture documents.
// Each test target compiles this module separately, so some helpers are
// unused from any single target's point of view.
#![allow(dead_code)]

use std::path::PathBuf;

use tmdoc::model::{
    Asset, Assumptions, AttackerActivity, AttackerCardinality, AttackerPosition, AttackerProfile,
    AttackerSophistication, Device, DeviceCategory, PrivacyGoal, ScoreVector, SecurityProperty,
    TeamMember, Threat, ThreatModelDocument, ThreatTarget,
};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn fixture_names() -> [&'static str; 4] {
    [
        "d1.tmdoc.json",
        "d2.tmdoc.json",
        "d3.tmdoc.json",
        "d4.tmdoc.json",
    ]
}

pub fn fixture_docs() -> [ThreatModelDocument; 4] {
    [d1_doc(), d2_doc(), d3_doc(), d4_doc()]
}

fn team() -> Vec<TeamMember> {
    vec![
        TeamMember {
            name: "Hardware lead".into(),
            discipline: "hardware".into(),
        },
        TeamMember {
            name: "Wireless lead".into(),
            discipline: "wireless link".into(),
        },
        TeamMember {
            name: "Security analyst".into(),
            discipline: "security".into(),
        },
    ]
}

fn attackers() -> Vec<AttackerProfile> {
    vec![
        AttackerProfile {
            id: "ATK-1".into(),
            position: AttackerPosition::External,
            activity: AttackerActivity::Passive,
            cardinality: AttackerCardinality::Individual,
            sophistication: AttackerSophistication::Sophisticated,
            description: "Remote eavesdropper capable of capturing wireless traffic.".into(),
        },
        AttackerProfile {
            id: "ATK-2".into(),
            position: AttackerPosition::External,
            activity: AttackerActivity::Active,
            cardinality: AttackerCardinality::Individual,
            sophistication: AttackerSophistication::Sophisticated,
            description: "Remote active adversary able to send, replay, modify, or block \
                          messages; no physical access to the user."
                .into(),
        },
    ]
}

fn assumptions(environment: &str, scenario: &str) -> Assumptions {
    Assumptions {
        operational_environment: environment.into(),
        security_boundaries: vec![
            "Wireless telemetry between the device and its external controller".into(),
            "Wireless power delivery into the device".into(),
        ],
        use_scenarios: vec![scenario.into()],
        exclusions: vec![
            "Semi-invasive and invasive hardware attacks".into(),
            "Attacks on the controller, cloud service, and dashboard".into(),
        ],
    }
}

fn target(device: &str, impact: &str, rationale: Option<&str>) -> ThreatTarget {
    ThreatTarget {
        device: device.into(),
        impact: Some(impact.into()),
        impact_rationale: rationale.map(str::to_string),
    }
}

fn threat_t2(device: &str) -> Threat {
    Threat {
        id: "T2".into(),
        description: "A man-in-the-middle with specialized equipment tampers with the data or \
                      control signals, producing a false health report or command and causing a \
                      wrong treatment or therapy."
            .into(),
        violates: vec![SecurityProperty::Integrity],
        stride_tags: Some(vec!["tampering".into()]),
        targets: vec![target(device, "high", None)],
        scores: Some(ScoreVector::new(1, 2, 2, 3, 3)),
        score_overrides: None,
    }
}

fn threat_t3(device: &str) -> Threat {
    Threat {
        id: "T3".into(),
        description: "Jamming of the wireless data link prevents sensor data from being \
                      collected and stimulation from being applied correctly."
            .into(),
        violates: vec![SecurityProperty::Availability],
        stride_tags: Some(vec!["denial of service".into()]),
        targets: vec![target(device, "high", None)],
        scores: Some(ScoreVector::new(1, 2, 3, 2, 3)),
        score_overrides: None,
    }
}

fn threat_t5(device: &str) -> Threat {
    Threat {
        id: "T5".into(),
        description: "Eavesdropping on the data stream with standard Bluetooth equipment leaks \
                      the patient's confidential information."
            .into(),
        violates: vec![
            SecurityProperty::Confidentiality,
            SecurityProperty::Authenticity,
        ],
        stride_tags: Some(vec!["information disclosure".into()]),
        targets: vec![target(device, "low", None)],
        scores: Some(ScoreVector::new(2, 2, 2, 3, 3)),
        score_overrides: None,
    }
}

fn threat_t6(device: &str) -> Threat {
    Threat {
        id: "T6".into(),
        description: "Interference with the communication channel substitutes the user data \
                      with counterfeit data, leading to a wrong or missing therapy."
            .into(),
        violates: vec![SecurityProperty::Authenticity],
        stride_tags: Some(vec!["spoofing".into()]),
        targets: vec![target(device, "high", None)],
        scores: Some(ScoreVector::new(1, 2, 2, 3, 3)),
        score_overrides: None,
    }
}

fn threat_t8(device: &str, impact: &str, rationale: &str) -> Threat {
    Threat {
        id: "T8".into(),
        description: "High-volume radio traffic depletes the battery: even with \
                      authentication, validating commands and data consumes extra power and \
                      can end in denial of service."
            .into(),
        violates: vec![SecurityProperty::Availability],
        stride_tags: Some(vec!["denial of service".into()]),
        targets: vec![target(device, impact, Some(rationale))],
        scores: Some(ScoreVector::new(2, 2, 2, 3, 3)),
        score_overrides: None,
    }
}

pub fn d1_doc() -> ThreatModelDocument {
    ThreatModelDocument {
        schema_version: "1.0".into(),
        title: "BioMote injectable threat model".into(),
        team: team(),
        assumptions: assumptions(
            "A single user wears the external controller in a public space; adversaries have \
             no physical access to the user and cannot bring large high-end equipment.",
            "Continuous monitoring of blood alcohol content outside a clinical laboratory",
        ),
        scales: None,
        probability_bins: None,
        risk_matrix: None,
        devices: vec![Device {
            id: "D1".into(),
            name: "BioMote".into(),
            category: DeviceCategory::Injectable,
            purpose: "Wireless sensor node for continuous monitoring of the blood alcohol \
                      content (ethanol, background, and pH)."
                .into(),
            status: "In-vitro tests".into(),
            attack_points: vec![9, 10, 11],
            assets: vec![Asset {
                id: "D1-A1".into(),
                name: "Backscattered user sensor data".into(),
                tangible: true,
                description: "Blood alcohol content measurements backscattered to the wearable \
                              controller."
                    .into(),
                privacy_goals: Some(vec![
                    PrivacyGoal::MeasurementAndLog,
                    PrivacyGoal::Patient,
                ]),
            }],
        }],
        attackers: attackers(),
        threats: vec![
            Threat {
                id: "T1".into(),
                description: "A counterfeit wearable controller powers up the mote and \
                              collects the sensitive private health data."
                    .into(),
                violates: vec![
                    SecurityProperty::Confidentiality,
                    SecurityProperty::Authenticity,
                ],
                stride_tags: Some(vec![
                    "spoofing".into(),
                    "information disclosure".into(),
                ]),
                targets: vec![target(
                    "D1",
                    "low",
                    Some("Loss of personal information does not stop the device from \
                          functioning correctly."),
                )],
                scores: Some(ScoreVector::new(3, 3, 2, 3, 3)),
                score_overrides: None,
            },
            threat_t2("D1"),
            threat_t3("D1"),
        ],
    }
}

pub fn d2_doc() -> ThreatModelDocument {
    ThreatModelDocument {
        schema_version: "1.0".into(),
        title: "Wireless capsule endoscope threat model".into(),
        team: team(),
        assumptions: assumptions(
            "The capsule is swallowed and operated in a clinical laboratory under the \
             supervision of a physician; attackers share the public space around the \
             facility.",
            "Short-term colorectal cancer screening with locomotion control in a laboratory",
        ),
        scales: None,
        probability_bins: None,
        risk_matrix: None,
        devices: vec![Device {
            id: "D2".into(),
            name: "Wireless capsule endoscope".into(),
            category: DeviceCategory::Ingestible,
            purpose: "Wireless spherical endoscopic capsule for colorectal cancer screening \
                      with a locomotion control."
                .into(),
            status: "In-vitro tests".into(),
            attack_points: vec![5, 9, 10, 11],
            assets: vec![
                Asset {
                    id: "D2-A1".into(),
                    name: "User data".into(),
                    tangible: true,
                    description: "Cancer information and video frames streamed via Bluetooth."
                        .into(),
                    privacy_goals: Some(vec![
                        PrivacyGoal::MeasurementAndLog,
                        PrivacyGoal::Patient,
                    ]),
                },
                Asset {
                    id: "D2-A2".into(),
                    name: "Control signals from an external device".into(),
                    tangible: true,
                    description: "Locomotion and illumination commands sent to the capsule."
                        .into(),
                    privacy_goals: None,
                },
            ],
        }],
        attackers: attackers(),
        threats: vec![
            threat_t5("D2"),
            threat_t6("D2"),
            Threat {
                id: "T7".into(),
                description: "A replayed command decreases the illumination or switches the \
                              Bluetooth module off, reducing the information extractable from \
                              video frames and forcing repeated measurements."
                    .into(),
                violates: vec![SecurityProperty::Availability],
                stride_tags: Some(vec!["denial of service".into()]),
                targets: vec![target("D2", "low", None)],
                scores: Some(ScoreVector::new(2, 2, 2, 3, 3)),
                score_overrides: None,
            },
            threat_t8(
                "D2",
                "low",
                "Short-term supervised use: a denial of service is resolved quickly by \
                 repeating the procedure with another capsule.",
            ),
        ],
    }
}

pub fn d3_doc() -> ThreatModelDocument {
    ThreatModelDocument {
        schema_version: "1.0".into(),
        title: "Trimodal implantable neural interface threat model".into(),
        team: team(),
        assumptions: assumptions(
            "The implant operates in a clinical laboratory, wirelessly paired with a control \
             arena; attackers cannot approach the subject directly.",
            "Optical and electrical stimulation with neural recording in a laboratory arena",
        ),
        scales: None,
        probability_bins: None,
        risk_matrix: None,
        devices: vec![Device {
            id: "D3".into(),
            name: "Trimodal wireless implantable neural interface SoC".into(),
            category: DeviceCategory::Implantable,
            purpose: "Wireless trimodal neural interface SoC providing optical and electrical \
                      stimulation capabilities and neural recordings."
                .into(),
            status: "In-vivo tests in freely behaving animals".into(),
            attack_points: vec![1, 5, 9, 10, 11],
            assets: vec![
                Asset {
                    id: "D3-A1".into(),
                    name: "Recording and stimulation parameters".into(),
                    tangible: true,
                    description: "BLE and on-off-keying signals carrying configuration at \
                                  13.56 MHz."
                        .into(),
                    privacy_goals: None,
                },
                Asset {
                    id: "D3-A2".into(),
                    name: "Evoked neural activities".into(),
                    tangible: true,
                    description: "On-off-keying RF signals at 433 MHz carrying sensed neural \
                                  data."
                        .into(),
                    privacy_goals: Some(vec![
                        PrivacyGoal::MeasurementAndLog,
                        PrivacyGoal::Patient,
                    ]),
                },
            ],
        }],
        attackers: attackers(),
        threats: vec![
            threat_t2("D3"),
            threat_t3("D3"),
            Threat {
                id: "T4".into(),
                description: "A software-defined radio or external hub collects the evoked \
                              neural activities of the user, leaking personal confidential \
                              information."
                    .into(),
                violates: vec![
                    SecurityProperty::Confidentiality,
                    SecurityProperty::Authenticity,
                ],
                stride_tags: Some(vec!["information disclosure".into()]),
                targets: vec![target("D3", "low", None)],
                scores: Some(ScoreVector::new(2, 3, 2, 3, 3)),
                score_overrides: None,
            },
        ],
    }
}

pub fn d4_doc() -> ThreatModelDocument {
    ThreatModelDocument {
        schema_version: "1.0".into(),
        title: "Transcutaneous oxygen sensing wearable threat model".into(),
        team: team(),
        assumptions: assumptions(
            "The wearable readout is used both at home and in clinical environments; the \
             device may be left unattended briefly before use.",
            "Non-invasive transcutaneous oxygen sensing in home and clinical settings",
        ),
        scales: None,
        probability_bins: None,
        risk_matrix: None,
        devices: vec![Device {
            id: "D4".into(),
            name: "Transcutaneous oxygen sensing readout".into(),
            category: DeviceCategory::Wearable,
            purpose: "Fluorescence-based readout dedicated to sensing transcutaneous oxygen \
                      diffusing through the skin."
                .into(),
            status: "Ex-vivo tests".into(),
            attack_points: vec![9, 10, 11],
            assets: vec![
                Asset {
                    id: "D4-A1".into(),
                    name: "User data".into(),
                    tangible: true,
                    description: "Partial pressure of transcutaneous oxygen transmitted via \
                                  BLE."
                        .into(),
                    privacy_goals: Some(vec![
                        PrivacyGoal::MeasurementAndLog,
                        PrivacyGoal::Patient,
                    ]),
                },
                Asset {
                    id: "D4-A2".into(),
                    name: "Control signals from an external controller".into(),
                    tangible: true,
                    description: "Configuration commands received from the external \
                                  controller."
                        .into(),
                    privacy_goals: None,
                },
            ],
        }],
        attackers: attackers(),
        threats: vec![
            threat_t5("D4"),
            threat_t6("D4"),
            threat_t8(
                "D4",
                "high",
                "Used outside the hospital: a denial of service cannot be remedied quickly \
                 by replacing the device.",
            ),
        ],
    }
}
