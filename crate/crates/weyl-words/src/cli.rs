//! Command-line front door.
//!
//! Four subcommands: `word` looks up the palindromic reduced word for one
//! reflection, `table` prints every reflection of a type, `verify` runs
//! the full checking suite, and `corrections` lists the reference-plate
//! fixes. Exit codes: 0 on success, 1 when verification finds a failure,
//! 2 on usage or parse errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cartan::{all_labels, TypeLabel};
use crate::formulas::{all_entries, bourbaki_corrections, coordinate_label, reflection_word};
use crate::roots::{EuclideanVector, Root, RootSystem};
use crate::verify::{
    check_inversion_characterizations, check_simply_laced_lengths, small_group_oracle_bounded,
    verify_all, Failure, ReasonCode, VerificationReport, DEFAULT_GROUP_BOUND,
};
use crate::{Error, Result};

#[derive(Parser)]
#[command(
    name = "weyl-words",
    version,
    about = "Palindromic reduced words for the reflections of finite Weyl groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the distinguished word for one reflection.
    ///
    /// The root is given by simple-root coefficients ("1,2,2,1") or, in
    /// the classical types, by coordinates ("e2+e4", "2e1", "e1-e3").
    Word {
        #[arg(value_name = "TYPE")]
        label: String,
        #[arg(value_name = "ROOT")]
        root: String,
    },
    /// Print the full reflection table of a type.
    Table {
        #[arg(value_name = "TYPE")]
        label: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check every distinguished word of a type, or of every type.
    Verify {
        /// A type label, or "all" for every type through rank 8.
        #[arg(value_name = "TYPE|all")]
        target: String,
        /// Write the verification report here as JSON.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
        /// Skip the group-enumeration oracle above this group order.
        #[arg(long, value_name = "N", default_value_t = DEFAULT_GROUP_BOUND)]
        max_group_order: u128,
    },
    /// List the corrections to item (II) of the classical plates.
    Corrections,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// A full reflection table in serialization-friendly form.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExportRecord {
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
    pub entries: Vec<ExportEntry>,
}

/// One reflection row: exact coordinates and the word.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExportEntry {
    pub root_coeffs: Vec<i64>,
    pub coroot_coeffs: Vec<i64>,
    /// Ambient coordinates as exact fraction strings.
    pub euclid: Vec<String>,
    pub word: String,
    pub length: usize,
    pub palindrome: bool,
}

/// Builds the export form of a type's reflection table.
pub fn export_record(sys: &RootSystem) -> ExportRecord {
    let entries = all_entries(sys)
        .into_iter()
        .map(|e| ExportEntry {
            root_coeffs: e.root.coeffs().to_vec(),
            coroot_coeffs: e.coroot.coeffs().to_vec(),
            euclid: e.euclid.0.iter().map(|x| x.to_string()).collect(),
            word: e.word.to_string(),
            length: e.length,
            palindrome: e.word.is_palindrome(),
        })
        .collect();
    ExportRecord {
        type_label: sys.label().to_string(),
        rank: sys.rank(),
        entries,
    }
}

/// Coefficient string in the `a`-basis: `(3, 2)` renders as `3a1+2a2`.
fn delta_string(root: &Root) -> String {
    let mut out = String::new();
    for (k, c) in root.coeffs().iter().enumerate() {
        if *c == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        if *c != 1 {
            out.push_str(&c.to_string());
        }
        out.push_str(&format!("a{}", k + 1));
    }
    out
}

/// Renders the reflection table as aligned text rows
/// `coordinate | delta | word`, one reflection per line.
pub fn table_text(sys: &RootSystem) -> String {
    let mut out = String::new();
    for entry in all_entries(sys) {
        let label = coordinate_label(sys, &entry.root).expect("entry root");
        out.push_str(&format!(
            "{label} | {} | {}\n",
            delta_string(&entry.root),
            entry.word
        ));
    }
    out
}

fn table_csv(sys: &RootSystem) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["root", "coroot", "euclid", "word", "length", "palindrome"])
        .expect("in-memory write");
    for e in export_record(sys).entries {
        w.write_record([
            e.root_coeffs
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(","),
            e.coroot_coeffs
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(","),
            e.euclid.join(" "),
            e.word,
            e.length.to_string(),
            e.palindrome.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8")
}

/// Parses a root given as simple-root coefficients or, for the classical
/// types, as a signed combination of coordinate vectors.
pub fn parse_root_spec(sys: &RootSystem, spec: &str) -> Result<Root> {
    let s = spec.trim();
    if !s.contains('e') {
        let root = Root::parse(s)?;
        if root.coeffs().len() != sys.rank() || !sys.is_positive_root(&root) {
            return Err(Error::NotARoot {
                label: sys.label(),
                coeffs: root.to_string(),
            });
        }
        return Ok(root);
    }
    if sys.label().is_exceptional() {
        return Err(Error::ParseRoot(format!(
            "coordinate form is supported for classical types only; \
             give simple-root coefficients for {}",
            sys.label()
        )));
    }
    let target = parse_coordinates(sys, s)?;
    sys.positive_roots()
        .iter()
        .find(|r| sys.euclidean(r).expect("positive root") == target)
        .cloned()
        .ok_or_else(|| Error::NotARoot {
            label: sys.label(),
            coeffs: s.to_string(),
        })
}

fn parse_coordinates(sys: &RootSystem, s: &str) -> Result<EuclideanVector> {
    let err = || Error::ParseRoot(s.to_string());
    let dim = sys
        .euclidean(&sys.positive_roots()[0])
        .expect("positive root")
        .0
        .len();
    let mut v = vec![Rational64::zero(); dim];
    let bytes = s.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let sign = match bytes[pos] {
            b'+' => {
                pos += 1;
                1
            }
            b'-' => {
                pos += 1;
                -1
            }
            _ if pos == 0 => 1,
            _ => return Err(err()),
        };
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let coeff: i64 = if pos == start {
            1
        } else {
            s[start..pos].parse().map_err(|_| err())?
        };
        if pos >= bytes.len() || bytes[pos] != b'e' {
            return Err(err());
        }
        pos += 1;
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let idx: usize = s[start..pos].parse().map_err(|_| err())?;
        if idx == 0 || idx > dim {
            return Err(err());
        }
        v[idx - 1] += Rational64::from_integer(sign * coeff);
    }
    Ok(EuclideanVector(v))
}

fn parse_label(s: &str) -> Result<TypeLabel> {
    s.parse()
}

/// Runs one type's full battery: the word sweep with conjugation
/// cross-check, the enumeration oracle when the group order is within
/// `bound`, and the applicable structural laws.
fn verify_one(label: TypeLabel, bound: u128) -> VerificationReport {
    let mut report = verify_all(label);
    let sys = RootSystem::build(label);
    if label.weyl_order() <= bound {
        let oracle = small_group_oracle_bounded(&sys, bound).expect("order within bound");
        for root in sys.positive_roots() {
            let expected = sys.reflection_length(root).expect("positive root");
            if oracle[root] != expected {
                report.failures.push(Failure {
                    root: root.to_string(),
                    reason: ReasonCode::NotReduced,
                    detail: format!(
                        "group enumeration puts the reflection at depth {}, \
                         inversion count says {expected}",
                        oracle[root]
                    ),
                });
            }
        }
    }
    if label.is_simply_laced() && !check_simply_laced_lengths(label).expect("simply laced") {
        report.failures.push(Failure {
            root: "*".to_string(),
            reason: ReasonCode::NotReduced,
            detail: "simply laced length law failed".to_string(),
        });
    }
    if matches!(label.family(), crate::Family::B | crate::Family::C)
        && !check_inversion_characterizations(label)
    {
        report.failures.push(Failure {
            root: "*".to_string(),
            reason: ReasonCode::NotReduced,
            detail: "inversion-set characterization failed".to_string(),
        });
    }
    report
}

fn cmd_verify(
    target: &str,
    report_path: Option<&PathBuf>,
    bound: u128,
) -> std::result::Result<ExitCode, Box<dyn std::error::Error>> {
    let (labels, multi) = if target.eq_ignore_ascii_case("all") {
        (all_labels(), true)
    } else {
        (vec![parse_label(target)?], false)
    };
    let mut reports = Vec::new();
    let mut checked = 0;
    let mut total = 0;
    for label in labels {
        let report = verify_one(label, bound);
        let prefix = if multi {
            format!("{label}: ")
        } else {
            String::new()
        };
        if report.passed() {
            println!("{prefix}{}/{} ok", report.checked, report.total);
        } else {
            for f in &report.failures {
                println!("{prefix}FAIL {} {}: {}", f.root, f.reason, f.detail);
            }
            println!(
                "{prefix}{}/{} checked, {} failures",
                report.checked,
                report.total,
                report.failures.len()
            );
        }
        checked += report.checked;
        total += report.total;
        reports.push(report);
    }
    if multi {
        println!("total: {checked}/{total}");
    }
    if let Some(path) = report_path {
        let json = if multi {
            serde_json::to_string_pretty(&reports)?
        } else {
            serde_json::to_string_pretty(&reports[0])?
        };
        std::fs::write(path, json + "\n")?;
    }
    let ok = reports.iter().all(VerificationReport::passed);
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn dispatch(command: Command) -> std::result::Result<ExitCode, Box<dyn std::error::Error>> {
    match command {
        Command::Word { label, root } => {
            let sys = RootSystem::build(parse_label(&label)?);
            let root = parse_root_spec(&sys, &root)?;
            let word = reflection_word(&sys, &root)?;
            println!("{word}");
            println!("length: {}", word.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { label, format } => {
            let sys = RootSystem::build(parse_label(&label)?);
            match format {
                Format::Text => print!("{}", table_text(&sys)),
                Format::Json => println!("{}", serde_json::to_string_pretty(&export_record(&sys))?),
                Format::Csv => print!("{}", table_csv(&sys)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            target,
            report,
            max_group_order,
        } => cmd_verify(&target, report.as_ref(), max_group_order),
        Command::Corrections => {
            for c in bourbaki_corrections() {
                println!(
                    "{} plate, {}: {}; corrected: {}",
                    c.plate, c.location, c.erroneous, c.corrected
                );
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Entry point for the binary. Parses arguments (usage errors exit 2),
/// runs the subcommand, and maps domain errors to exit code 2.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
