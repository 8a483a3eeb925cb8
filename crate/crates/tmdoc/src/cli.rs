//! Command-line front door. All subcommands write payloads to the
//! output stream and diagnostics to the error stream; exit codes are
//! 0 (success/valid), 1 (validation errors), 2 (parse or schema
//! error), 3 (usage error).

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog;
use crate::docio::{self, ValidateOptions};
use crate::model::{Assessment, CharacteristicId, DeviceCategory, ThreatModelDocument};
use crate::report::{self, GridAxes, RegisterFormat};
use crate::scoring;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "tmdoc",
    about = "Threat-model-as-code toolkit for miniaturized wireless biomedical devices",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a skeleton threat-model document
    Init {
        path: PathBuf,
        /// Device category of the placeholder device
        #[arg(long, value_enum, default_value_t = CategoryArg::Wearable)]
        category: CategoryArg,
        /// Document title
        #[arg(long)]
        title: Option<String>,
    },
    /// Parse a document and print its validation report
    Validate {
        doc: PathBuf,
        #[arg(long)]
        assume_worst: bool,
    },
    /// Print the ranked threat register
    Assess {
        doc: PathBuf,
        /// Restrict to one device
        #[arg(long)]
        device: Option<String>,
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
        #[arg(long)]
        assume_worst: bool,
    },
    /// Print per-device risk-matrix grids
    Matrix {
        doc: PathBuf,
        #[arg(long)]
        device: Option<String>,
    },
    /// Write the full markdown report
    Report {
        doc: PathBuf,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print risk deltas between two document versions
    Diff { old_doc: PathBuf, new_doc: PathBuf },
    /// Print the built-in catalog tables
    Catalog {
        #[arg(value_enum)]
        view: CatalogView,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CategoryArg {
    Injectable,
    Ingestible,
    Implantable,
    Wearable,
}

impl From<CategoryArg> for DeviceCategory {
    fn from(arg: CategoryArg) -> DeviceCategory {
        match arg {
            CategoryArg::Injectable => DeviceCategory::Injectable,
            CategoryArg::Ingestible => DeviceCategory::Ingestible,
            CategoryArg::Implantable => DeviceCategory::Implantable,
            CategoryArg::Wearable => DeviceCategory::Wearable,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Markdown,
}

impl From<FormatArg> for RegisterFormat {
    fn from(arg: FormatArg) -> RegisterFormat {
        match arg {
            FormatArg::Table => RegisterFormat::Table,
            FormatArg::Json => RegisterFormat::Json,
            FormatArg::Markdown => RegisterFormat::Markdown,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CatalogView {
    Scales,
    Matrix,
    AttackPoints,
}

/// Dispatches a full invocation. The first argv element is the program
/// name, as in `std::env::args`.
pub fn run<O: Write, E: Write>(
    argv: impl IntoIterator<Item = String>,
    out: &mut O,
    err: &mut E,
) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(parse_err) => {
            let rendered = parse_err.render();
            return match parse_err.kind() {
                clap::error::ErrorKind::DisplayHelp
                | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match cli.command {
        Command::Init {
            path,
            category,
            title,
        } => cmd_init(&path, category.into(), title.as_deref(), out, err),
        Command::Validate { doc, assume_worst } => cmd_validate(&doc, assume_worst, out, err),
        Command::Assess {
            doc,
            device,
            format,
            assume_worst,
        } => cmd_assess(&doc, device.as_deref(), format.into(), assume_worst, out, err),
        Command::Matrix { doc, device } => cmd_matrix(&doc, device.as_deref(), out, err),
        Command::Report { doc, output } => cmd_report(&doc, output.as_deref(), out, err),
        Command::Diff { old_doc, new_doc } => cmd_diff(&old_doc, &new_doc, out, err),
        Command::Catalog { view } => cmd_catalog(view, out),
    }
}

fn load_document<E: Write>(path: &Path, err: &mut E) -> Result<ThreatModelDocument, i32> {
    let text = fs::read_to_string(path).map_err(|io_err| {
        let _ = writeln!(err, "error: cannot read {}: {io_err}", path.display());
        EXIT_USAGE
    })?;
    docio::parse_document(&text).map_err(|parse_err| {
        let _ = writeln!(err, "error: {}: {parse_err}", path.display());
        EXIT_PARSE
    })
}

/// Validates and, when requested, applies the assume-worst
/// substitutions. Diagnostics go to the error stream; on failure the
/// exit code is returned.
fn validated_for_assessment<E: Write>(
    doc: &ThreatModelDocument,
    assume_worst: bool,
    err: &mut E,
) -> Result<ThreatModelDocument, i32> {
    let report = docio::validate_document(doc, ValidateOptions { assume_worst });
    if !report.is_valid() {
        let _ = writeln!(err, "{report}");
        return Err(EXIT_INVALID);
    }
    Ok(if assume_worst {
        docio::apply_assume_worst(doc)
    } else {
        doc.clone()
    })
}

fn assess<E: Write>(doc: &ThreatModelDocument, err: &mut E) -> Result<Vec<Assessment>, i32> {
    scoring::assess_document(doc).map_err(|scoring_err| {
        let _ = writeln!(err, "error: {scoring_err}");
        EXIT_INVALID
    })
}

fn cmd_init<O: Write, E: Write>(
    path: &Path,
    category: DeviceCategory,
    title: Option<&str>,
    out: &mut O,
    err: &mut E,
) -> i32 {
    if path.exists() {
        let _ = writeln!(err, "error: {} already exists", path.display());
        return EXIT_USAGE;
    }
    let title = title
        .map(str::to_string)
        .or_else(|| {
            path.file_name()
                .map(|n| n.to_string_lossy().trim_end_matches(docio::FILE_EXTENSION).to_string())
        })
        .unwrap_or_else(|| "Untitled threat model".to_string());
    let text = docio::scaffold_document(&title, category);
    if let Err(io_err) = fs::write(path, text) {
        let _ = writeln!(err, "error: cannot write {}: {io_err}", path.display());
        return EXIT_USAGE;
    }
    let _ = writeln!(out, "wrote {}", path.display());
    EXIT_OK
}

fn cmd_validate<O: Write, E: Write>(
    doc_path: &Path,
    assume_worst: bool,
    out: &mut O,
    err: &mut E,
) -> i32 {
    let doc = match load_document(doc_path, err) {
        Ok(doc) => doc,
        Err(code) => return code,
    };
    let report = docio::validate_document(&doc, ValidateOptions { assume_worst });
    let _ = writeln!(out, "{report}");
    if report.is_valid() {
        EXIT_OK
    } else {
        EXIT_INVALID
    }
}

fn cmd_assess<O: Write, E: Write>(
    doc_path: &Path,
    device: Option<&str>,
    format: RegisterFormat,
    assume_worst: bool,
    out: &mut O,
    err: &mut E,
) -> i32 {
    let doc = match load_document(doc_path, err) {
        Ok(doc) => doc,
        Err(code) => return code,
    };
    let effective = match validated_for_assessment(&doc, assume_worst, err) {
        Ok(doc) => doc,
        Err(code) => return code,
    };
    let mut assessments = match assess(&effective, err) {
        Ok(assessments) => assessments,
        Err(code) => return code,
    };
    if let Some(id) = device {
        if doc.device(id).is_none() {
            let _ = writeln!(err, "error: unknown device {id:?}");
            return EXIT_USAGE;
        }
        assessments.retain(|a| a.device_id == id);
    }
    let _ = write!(out, "{}", report::render_threat_register(&assessments, format));
    EXIT_OK
}

fn cmd_matrix<O: Write, E: Write>(
    doc_path: &Path,
    device: Option<&str>,
    out: &mut O,
    err: &mut E,
) -> i32 {
    let doc = match load_document(doc_path, err) {
        Ok(doc) => doc,
        Err(code) => return code,
    };
    let effective = match validated_for_assessment(&doc, false, err) {
        Ok(doc) => doc,
        Err(code) => return code,
    };
    let assessments = match assess(&effective, err) {
        Ok(assessments) => assessments,
        Err(code) => return code,
    };
    let axes = scoring::effective_catalog(&doc)
        .map(|c| GridAxes::from_catalog(&c))
        .unwrap_or_else(|_| GridAxes::builtin());
    let device_ids: Vec<&str> = match device {
        Some(id) => {
            if doc.device(id).is_none() {
                let _ = writeln!(err, "error: unknown device {id:?}");
                return EXIT_USAGE;
            }
            vec![id]
        }
        None => {
            let mut ids: Vec<&str> = doc.devices.iter().map(|d| d.id.as_str()).collect();
            ids.sort_unstable();
            ids
        }
    };
    for (i, id) in device_ids.iter().enumerate() {
        if i > 0 {
            let _ = writeln!(out);
        }
        let filtered: Vec<Assessment> = assessments
            .iter()
            .filter(|a| a.device_id == *id)
            .cloned()
            .collect();
        let grid = report::render_matrix_grid(&filtered, None, &axes)
            .expect("grid over pre-filtered assessments cannot fail");
        let _ = writeln!(out, "Device: {id}");
        let _ = write!(out, "{grid}");
    }
    EXIT_OK
}

fn cmd_report<O: Write, E: Write>(
    doc_path: &Path,
    output: Option<&Path>,
    out: &mut O,
    err: &mut E,
) -> i32 {
    let doc = match load_document(doc_path, err) {
        Ok(doc) => doc,
        Err(code) => return code,
    };
    let effective = match validated_for_assessment(&doc, false, err) {
        Ok(doc) => doc,
        Err(code) => return code,
    };
    let assessments = match assess(&effective, err) {
        Ok(assessments) => assessments,
        Err(code) => return code,
    };
    let text = report::render_full_report(&doc, &assessments);
    match output {
        Some(path) => {
            if let Err(io_err) = fs::write(path, &text) {
                let _ = writeln!(err, "error: cannot write {}: {io_err}", path.display());
                return EXIT_USAGE;
            }
            let _ = writeln!(out, "wrote {}", path.display());
        }
        None => {
            let _ = write!(out, "{text}");
        }
    }
    EXIT_OK
}

fn cmd_diff<O: Write, E: Write>(
    old_path: &Path,
    new_path: &Path,
    out: &mut O,
    err: &mut E,
) -> i32 {
    let mut assessed = Vec::new();
    for path in [old_path, new_path] {
        let doc = match load_document(path, err) {
            Ok(doc) => doc,
            Err(code) => return code,
        };
        let effective = match validated_for_assessment(&doc, false, err) {
            Ok(doc) => doc,
            Err(code) => return code,
        };
        match assess(&effective, err) {
            Ok(assessments) => assessed.push(assessments),
            Err(code) => return code,
        }
    }
    let new = assessed.pop().unwrap();
    let old = assessed.pop().unwrap();
    match report::diff_assessments(&old, &new) {
        Ok(deltas) => {
            let _ = write!(out, "{}", report::render_risk_deltas(&deltas));
            EXIT_OK
        }
        Err(diff_err) => {
            let _ = writeln!(err, "error: {diff_err}");
            EXIT_INVALID
        }
    }
}

fn cmd_catalog<O: Write>(view: CatalogView, out: &mut O) -> i32 {
    let text = match view {
        CatalogView::Scales => catalog_scales_text(),
        CatalogView::Matrix => catalog_matrix_text(),
        CatalogView::AttackPoints => catalog_attack_points_text(),
    };
    let _ = write!(out, "{text}");
    EXIT_OK
}

fn catalog_scales_text() -> String {
    let scales = catalog::builtin_scales();
    let mut out = String::new();
    for characteristic in CharacteristicId::ALL {
        let _ = writeln!(
            out,
            "{}: {} ({})",
            characteristic.short(),
            characteristic.title(),
            characteristic.key()
        );
        for tier in scales.tiers(characteristic) {
            let _ = writeln!(out, "  {}  {:<12} {}", tier.value, tier.label, tier.description);
        }
    }
    out
}

fn catalog_matrix_text() -> String {
    let matrix = catalog::builtin_matrix();
    let bins = catalog::builtin_bins();
    let mut out = String::new();
    let _ = writeln!(out, "{:<18}Impact", "");
    let header: Vec<String> = matrix
        .impact_labels()
        .iter()
        .map(|l| format!("{:<10}", capitalized(l)))
        .collect();
    let _ = writeln!(out, "{:<18}{}", "Probability", header.join("  "));
    for bin in bins.bins() {
        let label = format!("{} ({}-{})", capitalized(&bin.label), bin.min, bin.max);
        let cells: Vec<String> = matrix
            .impact_labels()
            .iter()
            .map(|impact| {
                format!(
                    "{:<10}",
                    matrix
                        .lookup(&bin.label, impact)
                        .expect("built-in matrix is total")
                        .to_string()
                )
            })
            .collect();
        let _ = writeln!(out, "{label:<18}{}", cells.join("  ").trim_end());
    }
    out
}

fn catalog_attack_points_text() -> String {
    let mut out = String::new();
    for point in catalog::builtin_attack_points() {
        let scope = if point.in_scope { "in scope" } else { "out of scope" };
        let _ = writeln!(
            out,
            "{:>2}  {:<28} {:<13} {}",
            point.number,
            point.description,
            format!("[{scope}]"),
            point.example_attacks.join(", ")
        );
    }
    out
}

fn capitalized(label: &str) -> String {
    let mut chars = label.chars();
    match chars.next() {
        Some(first) => first.to_uppercase().collect::<String>() + chars.as_str(),
        None => String::new(),
    }
}
