//! The `trusslab` command line: `verify`, `convert`, `enumerate`,
//! `decompose` and `report`.
//!
//! Results go to stdout (or `--output`) as JSON and a one-line summary goes
//! to stderr. Exit status is 0 on success, 1 when the input is well formed
//! but fails a law or hypothesis, and 2 when the input or the flags are
//! rejected.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::canonical::{canonical_form_with, Canonicalizer};
use crate::enumeration::{self, compare_with_oracle, EnumerationError, SearchOptions};
use crate::group::FiniteGroup;
use crate::json::{self, JsonError};
use crate::structures::{
    ditruss_consequences, lambda_family, skew_truss_consequences, AlgebraObject, Kind, StructureError,
};
use crate::substructure::{self, SubstructureError, CONGRUENCE_ORDER_CAP};
use crate::transforms::{self, TransformError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "trusslab", version, about = "Skew trusses, ditrusses, weak trusses and interchange near-rings on finite groups")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// Structure JSON file, or `-` for stdin.
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the defining axioms and the consequences that apply.
    Verify(InputArg),
    /// Move a structure to another kind on the same carrier.
    Convert {
        #[command(flatten)]
        input: InputArg,
        /// Expected kind of the input; checked against the file.
        #[arg(long, value_parser = parse_kind)]
        from: Option<Kind>,
        #[arg(long, value_parser = parse_kind)]
        to: Kind,
        /// Emit only the converted structure, without the transform record.
        #[arg(long)]
        bare: bool,
    },
    /// Classify every structure of one kind on a group.
    Enumerate {
        /// Catalog name (Z1..Z8, V4, S3, D4, Q8) or a group JSON file.
        #[arg(long)]
        group: String,
        #[arg(long, value_parser = parse_kind)]
        kind: Kind,
        /// List isomorphism class representatives only.
        #[arg(long)]
        up_to_iso: bool,
        /// Also run the raw brute force (order at most 3) and compare.
        #[arg(long)]
        oracle: bool,
        /// Search orders up to N without the size guard.
        #[arg(long)]
        cap: Option<usize>,
        /// Skew and weak trusses: σ an idempotent endomorphism.
        #[arg(long)]
        idempotent_sigma: bool,
        /// Interchange near-rings: associative ones only.
        #[arg(long)]
        associative_only: bool,
        /// Constant-λ ditrusses: image-commuting σ and λ_0 only.
        #[arg(long)]
        image_commuting: bool,
    },
    /// Zero-symmetric and constant parts, ideals and congruences
    /// (congruences are searched for orders up to 12).
    Decompose(InputArg),
    /// Descriptive summary: σ flags, λ-maps, automorphisms, canonical form.
    Report(InputArg),
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse::<Kind>().map_err(|e| e.to_string())
}

/// What a command produced: the JSON document, a summary line and a status.
struct Outcome {
    value: Value,
    summary: String,
    code: i32,
}

impl Outcome {
    fn new(value: Value, summary: impl Into<String>, code: i32) -> Self {
        Outcome {
            value,
            summary: summary.into(),
            code,
        }
    }
}

/// A failure before any result exists.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.to_string(),
        }
    }

    fn semantic(message: impl ToString) -> Self {
        Failure {
            code: EXIT_FAILED,
            message: message.to_string(),
        }
    }
}

impl From<JsonError> for Failure {
    fn from(e: JsonError) -> Self {
        Failure::input(e)
    }
}

impl From<TransformError> for Failure {
    fn from(e: TransformError) -> Self {
        Failure::semantic(e)
    }
}

impl From<EnumerationError> for Failure {
    fn from(e: EnumerationError) -> Self {
        match e {
            EnumerationError::Structure(_) => Failure::semantic(e),
            _ => Failure::input(e),
        }
    }
}

impl From<SubstructureError> for Failure {
    fn from(e: SubstructureError) -> Self {
        match e {
            SubstructureError::CarrierTooLarge { .. } => Failure::input(e),
            _ => Failure::semantic(e),
        }
    }
}

impl From<StructureError> for Failure {
    fn from(e: StructureError) -> Self {
        Failure::semantic(e)
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_structure(arg: &InputArg) -> Result<AlgebraObject, Failure> {
    Ok(json::parse_structure(&read_input(&arg.input)?)?)
}

fn load_group(spec: &str) -> Result<FiniteGroup, Failure> {
    let path = Path::new(spec);
    if path.is_file() {
        return Ok(json::parse_group(&read_input(path)?)?);
    }
    Ok(json::parse_group(spec)?)
}

fn theorem_reports(obj: &AlgebraObject) -> Vec<Value> {
    let mut out = Vec::new();
    if !obj.is_verified() {
        return out;
    }
    match obj.kind() {
        Kind::SkewTruss => {
            if let Ok(r) = skew_truss_consequences(obj) {
                out.push(serde_json::to_value(r).unwrap());
            }
        }
        Kind::Ditruss => {
            // Only applies when · is left distributive.
            if let Ok(r) = ditruss_consequences(obj) {
                out.push(serde_json::to_value(r).unwrap());
            }
        }
        _ => {}
    }
    out
}

fn cmd_verify(arg: &InputArg) -> Result<Outcome, Failure> {
    let obj = load_structure(arg)?;
    let check = obj.check();
    let theorems = theorem_reports(&obj);
    let failed: Vec<&str> = check.axioms.iter().filter(|a| !a.passed).map(|a| a.law.as_str()).collect();
    let value = json!({
        "command": "verify",
        "kind": obj.kind(),
        "group": obj.group().name(),
        "verified": check.verified,
        "axioms": check.axioms,
        "sigma_flags": obj.sigma_flags(),
        "theorems": theorems,
    });
    let summary = if check.verified {
        format!("{} on {}: all axioms hold", obj.kind(), obj.group().name())
    } else {
        format!("{} on {}: failed {}", obj.kind(), obj.group().name(), failed.join(", "))
    };
    Ok(Outcome::new(value, summary, if check.verified { EXIT_OK } else { EXIT_FAILED }))
}

fn cmd_convert(arg: &InputArg, from: Option<Kind>, to: Kind, bare: bool) -> Result<Outcome, Failure> {
    let obj = load_structure(arg)?;
    if let Some(expected) = from {
        if expected != obj.kind() {
            return Err(Failure::input(format!("--from {expected} but the input is a {}", obj.kind())));
        }
    }
    let done = match (obj.kind(), to) {
        (Kind::SkewTruss, Kind::WeakTruss) => transforms::truss_to_weak(&obj)?,
        (Kind::WeakTruss, Kind::SkewTruss) => transforms::weak_to_truss(&obj)?,
        (Kind::Ditruss, Kind::Ditruss) => transforms::ditruss_involution(&obj)?,
        (Kind::Ditruss, Kind::InterchangeNr) => transforms::ditruss_to_interchange(&obj)?,
        (Kind::InterchangeNr, Kind::Ditruss) => transforms::interchange_to_ditruss(&obj)?,
        (Kind::InterchangeNr, Kind::InterchangeNr) => transforms::interchange_opposite(&obj)?,
        (src, dst) => return Err(Failure::input(format!("no conversion from {src} to {dst}"))),
    };
    let structure = json::structure_to_value(&done.object);
    let value = if bare {
        structure
    } else {
        json!({"structure": structure, "record": done.record})
    };
    let summary = format!("{} -> {} via {}", done.record.source_kind, done.record.target_kind, done.record.forward_name);
    Ok(Outcome::new(value, summary, EXIT_OK))
}

#[allow(clippy::too_many_arguments)]
fn cmd_enumerate(
    group: &str,
    kind: Kind,
    up_to_iso: bool,
    oracle: bool,
    cap: Option<usize>,
    idempotent_sigma: bool,
    associative_only: bool,
    image_commuting: bool,
) -> Result<Outcome, Failure> {
    let flag_kinds = [
        (idempotent_sigma, "--idempotent-sigma", [Kind::SkewTruss, Kind::WeakTruss].as_slice()),
        (associative_only, "--associative-only", [Kind::InterchangeNr].as_slice()),
        (image_commuting, "--image-commuting", [Kind::Ditruss].as_slice()),
    ];
    for (set, flag, kinds) in flag_kinds {
        if set && !kinds.contains(&kind) {
            return Err(Failure::input(format!("{flag} does not apply to {kind}")));
        }
    }
    let g = Arc::new(load_group(group)?);
    if oracle && g.order() > enumeration::oracle::ORACLE_ORDER_CAP {
        return Err(Failure::input(format!(
            "--oracle needs a group of order at most {}, got {}",
            enumeration::oracle::ORACLE_ORDER_CAP,
            g.order()
        )));
    }
    let mut opts = SearchOptions::default();
    if let Some(c) = cap {
        opts.cap = c;
        opts.guarded_cap = opts.guarded_cap.max(c);
    }
    opts.filter.idempotent_endomorphism_sigma = idempotent_sigma;
    opts.filter.associative_only = associative_only;
    opts.filter.image_commuting = image_commuting;
    opts.keep_all = !up_to_iso;
    let result = enumeration::enumerate(&g, kind, &opts)?;
    let mut value = serde_json::to_value(&result).unwrap();
    let mut summary = format!(
        "{} on {}: {} structures, {} up to isomorphism",
        kind,
        g.name(),
        result.total_count,
        result.iso_class_count
    );
    let mut code = EXIT_OK;
    if oracle {
        let cmp = compare_with_oracle(&g, &result)?;
        summary.push_str(&format!(
            "; oracle {} ({})",
            cmp.oracle_total,
            if cmp.agrees { "agrees" } else { "DISAGREES" }
        ));
        if !cmp.agrees {
            code = EXIT_FAILED;
        }
        value["oracle"] = serde_json::to_value(cmp).unwrap();
    }
    Ok(Outcome::new(value, summary, code))
}

/// The skew truss `(G, +, ∘, σ)` underlying a skew truss or ditruss.
fn truss_view(obj: &AlgebraObject) -> Result<AlgebraObject, Failure> {
    match obj.kind() {
        Kind::SkewTruss => Ok(obj.clone()),
        Kind::Ditruss => {
            let t = AlgebraObject::skew_truss(obj.group_arc().clone(), obj.circ().unwrap().clone(), obj.sigma().unwrap().clone())?;
            if t.is_verified() {
                Ok(t)
            } else {
                Err(Failure::semantic("the circ operation is not a skew truss for sigma"))
            }
        }
        other => Err(Failure::input(format!("decompose takes a skew-truss or ditruss, got {other}"))),
    }
}

fn cmd_decompose(arg: &InputArg) -> Result<Outcome, Failure> {
    let obj = load_structure(arg)?;
    if !obj.is_verified() {
        return Err(Failure::semantic(format!("input is not a verified {}", obj.kind())));
    }
    let truss = truss_view(&obj)?;
    let decomposition = substructure::zero_symmetric_constant_decomposition(&obj)?;
    let ideals = substructure::ideals(&truss)?;
    let congruences = substructure::congruences(&truss)?;
    let holds = decomposition.all_hold();
    let value = json!({
        "command": "decompose",
        "kind": obj.kind(),
        "group": obj.group().name(),
        "T0": decomposition.zero_symmetric,
        "Tc": decomposition.constant,
        "decomposition": decomposition,
        "ideals": ideals.iter().map(|i| &i.elements).collect::<Vec<_>>(),
        "congruence_count": congruences.len(),
    });
    let summary = format!(
        "T0 {:?}, Tc {:?}, {} ideals, {} congruences",
        decomposition.zero_symmetric,
        decomposition.constant,
        ideals.len(),
        congruences.len()
    );
    Ok(Outcome::new(value, summary, if holds { EXIT_OK } else { EXIT_FAILED }))
}

fn cmd_report(arg: &InputArg) -> Result<Outcome, Failure> {
    let obj = load_structure(arg)?;
    let canon = Canonicalizer::new(obj.group());
    let canonical = canonical_form_with(&canon, &obj)?;
    let mut value = json!({
        "command": "report",
        "kind": obj.kind(),
        "group": obj.group().name(),
        "order": obj.group().order(),
        "abelian": obj.group().is_abelian(),
        "verified": obj.is_verified(),
        "sigma_flags": obj.sigma_flags(),
        "automorphism_count": canon.automorphism_count(),
        "is_canonical": canonical == obj,
        "canonical_form": canonical,
    });
    if obj.is_verified() && obj.kind() != Kind::WeakTruss {
        if let Ok(fam) = lambda_family(&obj) {
            value["lambda"] = json!({
                "constant": fam.constant,
                "all_endomorphisms": fam.all_endomorphisms,
                "at_zero": fam.at_zero(),
            });
        }
    }
    if obj.is_verified() && obj.kind() == Kind::SkewTruss {
        if let Ok(z) = substructure::is_zero_symmetric(&obj) {
            value["zero_symmetry"] = serde_json::to_value(z).unwrap();
        }
        if obj.group().order() <= CONGRUENCE_ORDER_CAP {
            if let Ok(ideals) = substructure::ideals(&obj) {
                value["ideal_count"] = json!(ideals.len());
            }
        }
    }
    let summary = format!(
        "{} on {} (order {}), {}",
        obj.kind(),
        obj.group().name(),
        obj.group().order(),
        if obj.is_verified() { "verified" } else { "not verified" }
    );
    let code = if obj.is_verified() { EXIT_OK } else { EXIT_FAILED };
    Ok(Outcome::new(value, summary, code))
}

fn dispatch(config: &CliConfig) -> Result<Outcome, Failure> {
    match &config.command {
        Command::Verify(arg) => cmd_verify(arg),
        Command::Convert { input, from, to, bare } => cmd_convert(input, *from, *to, *bare),
        Command::Enumerate {
            group,
            kind,
            up_to_iso,
            oracle,
            cap,
            idempotent_sigma,
            associative_only,
            image_commuting,
        } => cmd_enumerate(
            group,
            *kind,
            *up_to_iso,
            *oracle,
            *cap,
            *idempotent_sigma,
            *associative_only,
            *image_commuting,
        ),
        Command::Decompose(arg) => cmd_decompose(arg),
        Command::Report(arg) => cmd_report(arg),
    }
}

fn emit(config: &CliConfig, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &config.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::input(format!("stdout: {e}"))),
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = stdout.write_all(rendered.as_bytes());
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    enumeration::configure_threads_from_env();
    let (text, summary, code) = match dispatch(&config) {
        Ok(out) => (json::to_pretty(&out.value), out.summary, out.code),
        Err(f) => {
            let kind = if f.code == EXIT_INPUT { "input" } else { "failed" };
            let value = json!({"error": {"kind": kind, "message": f.message}});
            (json::to_pretty(&value), format!("error: {}", f.message), f.code)
        }
    };
    let code = match emit(&config, &text, stdout) {
        Ok(()) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            return f.code;
        }
    };
    let _ = writeln!(stderr, "{summary}");
    code
}
