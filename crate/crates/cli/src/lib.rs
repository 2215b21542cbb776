//! The `nillift` command line: load and validate algebra files, lift roots
//! through nilpotent ideals, search for embedding witnesses and replay the
//! worked examples.

mod demos;
mod render;
mod report;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nillift_core::classify::{
    find_anticommuting_pair, find_complex_witness, find_left_ideal_mod4_certificate,
    find_odd_left_ideal_certificate, find_quaternion_witness, DEFAULT_BUDGET,
};
use nillift_core::rational::parse_lenient;
use nillift_core::{
    frobenius_classify, hensel_lift, parse_poly, radical, Algebra, AlgebraError, CatalogSpec,
    ClassifyOutcome, Element, FormatError, Frobenius, LiftError, Search, StructureError, Subspace,
};

pub use demos::DEMOS;
pub use report::{sha256_hex, Report};

pub mod exit {
    pub const OK: i32 = 0;
    pub const CERTIFICATE: i32 = 1;
    pub const INVALID: i32 = 2;
    pub const PARSE: i32 = 3;
    pub const NOT_SEPARABLE: i32 = 4;
    pub const RESIDUE_NOT_IN_IDEAL: i32 = 5;
    pub const UNKNOWN: i32 = 6;
    pub const DEMO_FAILED: i32 = 7;
}

#[derive(Parser, Debug)]
#[command(
    name = "nillift",
    version,
    about = "Exact lifting and embedding witnesses for finite-dimensional algebras over Q"
)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Add wall-clock time to the report (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check an algebra file for shape, unit and associativity.
    Validate { file: PathBuf },
    /// Lift a root of f modulo a nilpotent ideal to an exact root.
    Lift {
        file: PathBuf,
        /// Polynomial in X, e.g. "X^2-X" or "(X-1)^2".
        #[arg(long)]
        poly: String,
        /// Comma-separated rational coordinates of b.
        #[arg(long)]
        element: String,
        /// "rad", or generators of a two-sided ideal as "c,c,...;c,c,...".
        #[arg(long, default_value = "rad")]
        ideal: String,
    },
    /// Search for a witness or an obstruction certificate.
    Classify {
        file: PathBuf,
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Replay a worked example with every identity checked.
    Demo { name: String },
    /// Write a catalog algebra to a file, e.g. `catalog Quat -1 -1 --out h.json`.
    #[command(allow_negative_numbers = true)]
    Catalog {
        name: String,
        params: Vec<String>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Property {
    Complex,
    Quaternion,
    Anticommuting,
    Frobenius,
}

/// What a run printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    status: &'static str,
    message: String,
    outcome: Value,
}

impl Failure {
    fn new(code: i32, status: &'static str, message: impl Into<String>) -> Self {
        let message = message.into();
        Failure {
            code,
            status,
            outcome: json!({ "error": message }),
            message,
        }
    }

    fn parse(message: impl Into<String>) -> Self {
        Failure::new(exit::PARSE, "parse error", message)
    }
}

/// Runs the command line given without the program name.
pub fn run<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(
        std::iter::once("nillift".to_string()).chain(args.iter().cloned()),
    ) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Output {
                    code: exit::OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Output {
                    code: exit::PARSE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };

    let start = Instant::now();
    let mut report = Report::new(args);
    let result = execute(&cli.command, &mut report);
    let mut stderr = String::new();
    match result {
        Ok(()) => {}
        Err(f) => {
            report.status = f.status.into();
            report.exit_code = f.code;
            report.outcome = f.outcome;
            stderr = format!("error: {}\n", f.message);
        }
    }
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    let stdout = if cli.json {
        report.to_json()
    } else {
        report.to_text()
    };
    Output {
        code: report.exit_code,
        stdout,
        stderr,
    }
}

fn execute(command: &Command, report: &mut Report) -> Result<(), Failure> {
    match command {
        Command::Validate { file } => validate(file, report),
        Command::Lift {
            file,
            poly,
            element,
            ideal,
        } => lift(file, poly, element, ideal, report),
        Command::Classify {
            file,
            property,
            budget,
            seed,
        } => classify(file, *property, Search::new(*budget, *seed), report),
        Command::Demo { name } => demo(name, report),
        Command::Catalog { name, params, out } => catalog(name, params, out, report),
    }
}

/// Reads and parses an algebra file, recording its digest.
fn load(path: &Path, report: &mut Report) -> Result<Algebra, Failure> {
    let bytes =
        std::fs::read(path).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    report.inputs.insert("file".into(), sha256_hex(&bytes));
    let text =
        String::from_utf8(bytes).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    Algebra::from_json(&text).map_err(|e| match e {
        FormatError::Shape(_) => Failure::new(exit::INVALID, "invalid", e.to_string()),
        _ => Failure::parse(e.to_string()),
    })
}

fn invalid(e: nillift_core::ValidationError) -> Failure {
    use nillift_core::ValidationError as V;
    let outcome = match &e {
        V::Associativity {
            i,
            j,
            k,
            left,
            right,
        } => json!({
            "error": e.to_string(),
            "law": "associativity",
            "triple": [i, j, k],
            "left": render::coords(left),
            "right": render::coords(right),
        }),
        V::Unit { index, side, got } => json!({
            "error": e.to_string(),
            "law": "unit",
            "index": index,
            "side": side.to_string(),
            "got": render::coords(got),
        }),
        V::Shape(_) => json!({ "error": e.to_string(), "law": "shape" }),
    };
    Failure {
        code: exit::INVALID,
        status: "invalid",
        message: e.to_string(),
        outcome,
    }
}

/// Loads a file and insists on a valid presentation.
fn load_valid(path: &Path, report: &mut Report) -> Result<Algebra, Failure> {
    let alg = load(path, report)?;
    alg.validate().map_err(invalid)?;
    Ok(alg)
}

fn validate(file: &Path, report: &mut Report) -> Result<(), Failure> {
    let alg = load_valid(file, report)?;
    report.status = "valid".into();
    report.outcome = json!({
        "name": alg.name(),
        "dim": alg.dim(),
        "basis": alg.basis_names(),
    });
    Ok(())
}

fn parse_coords(alg: &Algebra, text: &str, what: &str) -> Result<Element, Failure> {
    let coords = text
        .split(',')
        .map(|s| parse_lenient(s.trim()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::parse(format!("{what}: {e}")))?;
    alg.element(coords)
        .map_err(|e| Failure::parse(format!("{what}: {e}")))
}

fn parse_ideal(alg: &Algebra, text: &str) -> Result<Subspace, Failure> {
    if text.trim() == "rad" {
        return radical(alg)
            .map(|r| r.radical)
            .map_err(|e| Failure::parse(format!("radical: {e}")));
    }
    let gens = text
        .split(';')
        .enumerate()
        .map(|(k, g)| parse_coords(alg, g, &format!("ideal generator {k}")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(alg.two_sided_ideal_span(&gens))
}

fn lift(
    file: &Path,
    poly: &str,
    element: &str,
    ideal: &str,
    report: &mut Report,
) -> Result<(), Failure> {
    let alg = load_valid(file, report)?;
    let f = parse_poly(poly).map_err(|e| Failure::parse(format!("--poly: {e}")))?;
    let b = parse_coords(&alg, element, "--element")?;
    let ideal = parse_ideal(&alg, ideal)?;
    let r = hensel_lift(&alg, &ideal, &b, &f).map_err(|e| match e {
        LiftError::NotSeparable { ref gcd } => Failure {
            code: exit::NOT_SEPARABLE,
            status: "not separable",
            message: e.to_string(),
            outcome: json!({ "error": e.to_string(), "gcd": gcd.to_string() }),
        },
        LiftError::ResidueNotInIdeal { ref residue } => Failure {
            code: exit::RESIDUE_NOT_IN_IDEAL,
            status: "residue not in ideal",
            message: e.to_string(),
            outcome: json!({ "error": e.to_string(), "residue": render::element(&alg, residue) }),
        },
        LiftError::Structure(StructureError::NotNilpotent { .. })
        | LiftError::Structure(StructureError::NotAnIdeal)
        | LiftError::Algebra(AlgebraError::NotAnIdeal) => {
            Failure::new(exit::PARSE, "ideal not nilpotent", e.to_string())
        }
        other => Failure::parse(other.to_string()),
    })?;
    let root = alg.eval_poly(&f, &r.lifted).is_zero();
    let in_ideal = ideal
        .contains((&r.lifted - &b).coords())
        .expect("algebra dimension");
    report.status = "lifted".into();
    report.outcome = json!({
        "polynomial": f.to_string(),
        "b": render::element(&alg, &b),
        "ideal": render::subspace(&alg, &ideal),
        "nilpotency_index": r.nilpotency_index,
        "lifted": render::element(&alg, &r.lifted),
        "iterations": r.iterations,
        "residual_path": r.residual_path,
        "f_of_a_is_zero": root,
        "a_minus_b_in_ideal": in_ideal,
    });
    Ok(())
}

fn classify_exit(o: &ClassifyOutcome) -> (i32, &'static str) {
    if o.is_witness() {
        (exit::OK, "witness")
    } else if o.is_certificate() {
        (exit::CERTIFICATE, "certificate")
    } else {
        (exit::UNKNOWN, "unknown")
    }
}

/// Runs `primary`, and if it finds nothing, the certificate search with the
/// same budget; the budget spent is the total.
fn with_fallback(
    alg: &Algebra,
    search: Search,
    primary: fn(&Algebra, Search) -> ClassifyOutcome,
    fallback: fn(&Algebra, Search) -> ClassifyOutcome,
) -> ClassifyOutcome {
    let first = primary(alg, search);
    if !first.is_unknown() {
        return first;
    }
    let second = fallback(alg, search);
    ClassifyOutcome {
        budget_used: first.budget_used + second.budget_used,
        ..second
    }
}

fn classify(
    file: &Path,
    property: Property,
    search: Search,
    report: &mut Report,
) -> Result<(), Failure> {
    let alg = load_valid(file, report)?;
    report.seed = Some(search.seed);
    report.budget = Some(search.budget);
    if property == Property::Frobenius {
        let f = frobenius_classify(&alg);
        let (code, status) = match f {
            Frobenius::NotRealDivision(_) => (exit::CERTIFICATE, "certificate"),
            _ => (exit::OK, "witness"),
        };
        report.status = status.into();
        report.exit_code = code;
        report.outcome = json!({ "property": "frobenius", "result": render::frobenius(&alg, &f) });
        return Ok(());
    }
    let (name, o) = match property {
        Property::Complex => (
            "complex",
            with_fallback(
                &alg,
                search,
                find_complex_witness,
                find_odd_left_ideal_certificate,
            ),
        ),
        Property::Quaternion => (
            "quaternion",
            with_fallback(
                &alg,
                search,
                find_quaternion_witness,
                find_left_ideal_mod4_certificate,
            ),
        ),
        Property::Anticommuting => ("anticommuting", find_anticommuting_pair(&alg, search)),
        Property::Frobenius => unreachable!(),
    };
    let (code, status) = classify_exit(&o);
    report.status = status.into();
    report.exit_code = code;
    let mut outcome = render::outcome(&alg, &o);
    outcome["property"] = json!(name);
    report.outcome = outcome;
    Ok(())
}

fn demo(name: &str, report: &mut Report) -> Result<(), Failure> {
    let Some((outcome, checks)) = demos::run_demo(name) else {
        return Err(Failure::new(
            exit::PARSE,
            "unknown demo",
            format!("unknown demo {name:?}; known: {}", DEMOS.join(", ")),
        ));
    };
    let passed = checks.all_passed();
    report.status = if passed {
        "verified"
    } else {
        "verification failed"
    }
    .into();
    report.exit_code = if passed { exit::OK } else { exit::DEMO_FAILED };
    report.outcome = json!({
        "demo": name,
        "checks": checks.to_json(),
        "all_checks_passed": passed,
        "result": outcome,
    });
    Ok(())
}

fn catalog(name: &str, params: &[String], out: &Path, report: &mut Report) -> Result<(), Failure> {
    let text = if params.is_empty() {
        name.to_string()
    } else {
        format!("{name}({})", params.join(","))
    };
    let spec = CatalogSpec::parse(&text)
        .map_err(|e| Failure::new(exit::PARSE, "unknown catalog entry", e.to_string()))?;
    let alg = spec
        .build()
        .map_err(|e| Failure::new(exit::PARSE, "unknown catalog entry", e.to_string()))?;
    let body = alg.to_json();
    std::fs::write(out, &body).map_err(|e| Failure::parse(format!("{}: {e}", out.display())))?;
    report.status = "written".into();
    report.outcome = json!({
        "name": alg.name(),
        "dim": alg.dim(),
        "out": out.display().to_string(),
        "sha256": sha256_hex(body.as_bytes()),
    });
    Ok(())
}
