//! Command-line front end for `zetafix`: spec-file ingestion, built-in fixtures and
//! reports in human and JSON form.
//!
//! Exit codes: 0 success, 1 other failure, 2 invalid input, 3 undefined zeta function,
//! 4 internal cross-check mismatch.

pub mod render;
pub mod report;
pub mod specfile;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use zetafix::fixtures::{builtin_fixtures, sol_type_three, Fixture};
use zetafix::suite::{sequence_zeta, ZetaKind};
use zetafix::zeta::SequenceOracle;

use report::{Command, Failure};
use specfile::{Options, SpecFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNDEFINED: i32 = 3;
pub const EXIT_CROSS_CHECK: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "L")]
    L,
    #[value(name = "N")]
    N,
    #[value(name = "R")]
    R,
    #[value(name = "AM")]
    Am,
}

impl From<Which> for ZetaKind {
    fn from(w: Which) -> Self {
        match w {
            Which::L => ZetaKind::Lefschetz,
            Which::N => ZetaKind::Nielsen,
            Which::R => ZetaKind::Reidemeister,
            Which::Am => ZetaKind::ArtinMazur,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "zetafix", version, about = "Fixed-point numbers and zeta functions of affine maps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Spec file (JSON).
    pub spec: PathBuf,
    /// Largest iterate n to tabulate.
    #[arg(long)]
    pub max_n: Option<u64>,
    #[arg(long, value_enum, default_value = "human")]
    pub format: Format,
    /// Eigenvalue classification tolerance; overrides the spec file.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Parse and validate a spec file.
    Validate(Common),
    /// Table of L(f^n), N(f^n), R(f^n).
    Numbers(Common),
    /// One zeta function as an exact rational function.
    Zeta {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "N")]
        which: Which,
    },
    /// Gauss, Euler and Dold congruence checks.
    Congruences(Common),
    /// Asymptotic Nielsen number, entropy bound and radius of convergence.
    Entropy(Common),
    /// Coincidence numbers of map and map2, with the cyclic-holonomy trichotomy.
    Coincidence(Common),
    /// Everything above in one document.
    Report(Common),
    /// List the built-in fixtures, or write them as spec files.
    Fixtures {
        /// Directory to write `<name>.json` spec files into.
        #[arg(long)]
        write: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
}

/// Spec file for a built-in fixture.
pub fn fixture_spec_file(f: &Fixture) -> SpecFile {
    SpecFile::from_model(&f.spec, &f.map, f.map2.as_ref(), Options::default())
}

#[derive(Serialize)]
struct FixtureListing {
    name: String,
    description: String,
    dimension: usize,
    holonomy_order: usize,
    coincidence: bool,
}

#[derive(Serialize)]
struct SequenceListing {
    name: String,
    description: String,
    terms: Vec<String>,
    reidemeister_zeta: String,
}

#[derive(Serialize)]
struct FixturesDocument {
    schema: u32,
    fixtures: Vec<FixtureListing>,
    sequences: Vec<SequenceListing>,
}

const SOL_PARAMETERS: [i64; 3] = [2, 3, -2];

fn fixtures_document() -> Result<FixturesDocument, zetafix::Error> {
    let fixtures = builtin_fixtures()
        .iter()
        .map(|f| FixtureListing {
            name: f.name.into(),
            description: f.description.into(),
            dimension: f.spec.dimension(),
            holonomy_order: f.spec.order(),
            coincidence: f.map2.is_some(),
        })
        .collect();
    let mut sequences = Vec::new();
    for r in SOL_PARAMETERS {
        let seq = sol_type_three(r);
        let terms = (1..=8)
            .map(|n| seq.term(n).map(|t| t.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        let z = sequence_zeta(ZetaKind::Reidemeister, &seq)?;
        sequences.push(SequenceListing {
            name: format!("sol_type_three_{r}"),
            description: format!("Sol type III automorphism, R(phi^n) = |1 - ({r})^n|"),
            terms,
            reidemeister_zeta: z.function.to_string(),
        });
    }
    Ok(FixturesDocument {
        schema: report::REPORT_SCHEMA,
        fixtures,
        sequences,
    })
}

fn run_fixtures(write: Option<&Path>, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if let Some(dir) = write {
        if let Err(e) = std::fs::create_dir_all(dir) {
            let _ = writeln!(err, "error: IoError: {}: {e}", dir.display());
            return EXIT_OTHER;
        }
        for f in builtin_fixtures() {
            let path = dir.join(format!("{}.json", f.name));
            if let Err(e) = std::fs::write(&path, fixture_spec_file(&f).to_json()) {
                let _ = writeln!(err, "error: IoError: {}: {e}", path.display());
                return EXIT_OTHER;
            }
            let _ = writeln!(out, "wrote {}", path.display());
        }
        return EXIT_OK;
    }
    let doc = match fixtures_document() {
        Ok(d) => d,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", e.kind());
            return EXIT_OTHER;
        }
    };
    match format {
        Format::Json => {
            let _ = out.write_all(specfile::to_json_text(&doc).as_bytes());
        }
        Format::Human => {
            for f in &doc.fixtures {
                let tag = if f.coincidence { " [coincidence]" } else { "" };
                let _ = writeln!(
                    out,
                    "{:<24} dim {} |Φ| = {}  {}{tag}",
                    f.name, f.dimension, f.holonomy_order, f.description
                );
            }
            for s in &doc.sequences {
                let _ = writeln!(out, "{:<24} {}", s.name, s.description);
                let _ = writeln!(out, "{:<24} R(phi^n): {} ...", "", s.terms.join(", "));
                let _ = writeln!(out, "{:<24} R_phi(z) = {}", "", s.reidemeister_zeta);
            }
        }
    }
    EXIT_OK
}

fn report_failure(failure: Failure, err: &mut dyn Write) -> i32 {
    let (code, line) = match failure {
        Failure::Undefined(msg) => (EXIT_UNDEFINED, msg),
        Failure::CrossCheck(e) => (EXIT_CROSS_CHECK, format!("error: {}: {e}", e.kind())),
        Failure::Invalid(kind, msg) => (EXIT_INVALID, format!("error: {kind}: {msg}")),
        Failure::Other(e) => (EXIT_OTHER, format!("error: {}: {e}", e.kind())),
    };
    let _ = writeln!(err, "{line}");
    code
}

fn run_spec(command: Command, common: &Common, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut input = match SpecFile::read(&common.spec) {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return if e.kind == "IoError" { EXIT_OTHER } else { EXIT_INVALID };
        }
    };
    if let Some(t) = common.tol {
        input.options.tolerance = Some(t);
    }
    let loaded = match input.load() {
        Ok(l) => l,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INVALID;
        }
    };
    let max_n = common.max_n.unwrap_or_else(|| report::default_max_n(command));
    if max_n == 0 {
        let _ = writeln!(err, "error: InvalidInput: --max-n must be at least 1");
        return EXIT_INVALID;
    }
    let doc = match report::build(command, &input, &loaded, max_n) {
        Ok(d) => d,
        Err(f) => return report_failure(f, err),
    };
    let text = match common.format {
        Format::Json => doc.to_json(),
        Format::Human => render::human(&doc),
    };
    let _ = out.write_all(text.as_bytes());
    EXIT_OK
}

/// Parse `args` (including the program name) and run. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match &cli.command {
        Cmd::Validate(c) => run_spec(Command::Validate, c, out, err),
        Cmd::Numbers(c) => run_spec(Command::Numbers, c, out, err),
        Cmd::Zeta { common, which } => run_spec(Command::Zeta((*which).into()), common, out, err),
        Cmd::Congruences(c) => run_spec(Command::Congruences, c, out, err),
        Cmd::Entropy(c) => run_spec(Command::Entropy, c, out, err),
        Cmd::Coincidence(c) => run_spec(Command::Coincidence, c, out, err),
        Cmd::Report(c) => run_spec(Command::Report, c, out, err),
        Cmd::Fixtures { write, format } => run_fixtures(write.as_deref(), *format, out, err),
    }
}
