//! Threat-model-as-code toolkit for miniaturized wireless biomedical
//! devices: parse and validate structured threat-model documents, score
//! threats on six characteristics, map (probability, impact) through a
//! risk matrix, and render ranked registers, per-device grids, full
//! reports, and version-to-version risk diffs.

pub mod catalog;
pub mod cli;
pub mod docio;
pub mod model;
pub mod report;
pub mod scoring;
