//! Machine-readable report documents. Exact values are strings, infinities are `"inf"`,
//! and floats only appear in the asymptotics section.

use num::{BigInt, One, Signed};
use serde::Serialize;
use serde_json::Value;

use zetafix::algebra::{has_root_of_unity_eigenvalue, Polynomial, Rational};
use zetafix::congruence::{check_dold_lefschetz, check_euler, check_gauss, CongruenceKind, CongruenceReport};
use zetafix::invariants::{
    coincidence_numbers, coincidence_trichotomy, numbers_table, Extended, TrichotomyCase, TrichotomyReport,
};
use zetafix::manifold::{
    is_virtually_unipotent, reidemeister_zeta_defined, AffineMapSpec, Definedness, ManifoldSpec,
};
use zetafix::suite::{
    asymptotic_nielsen, entropy_lower_bound, radius_report, verify_functional_equation, zeta, Construction,
    PlusCase, Settings, ZetaKind, ZetaResult,
};
use zetafix::Error;

use crate::specfile::{to_json_text, Loaded, SpecFile};

pub const REPORT_SCHEMA: u32 = 1;

/// Which sections a document carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Numbers,
    Zeta(ZetaKind),
    Congruences,
    Entropy,
    Coincidence,
    Report,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Numbers => "numbers",
            Command::Zeta(_) => "zeta",
            Command::Congruences => "congruences",
            Command::Entropy => "entropy",
            Command::Coincidence => "coincidence",
            Command::Report => "report",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Parameters {
    pub max_n: u64,
    pub tolerance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ElementOrder {
    pub label: String,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidationSection {
    pub status: String,
    pub dimension: usize,
    pub holonomy_order: usize,
    pub orientable: bool,
    pub element_orders: Vec<ElementOrder>,
    pub maps: Vec<MapCompatibility>,
}

/// Whether every `A ∈ Φ` has some `A' ∈ Φ` with `A' D = D A`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MapCompatibility {
    pub label: String,
    pub compatible: bool,
    /// Labels of holonomy elements with no partner.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub unmatched: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumbersRow {
    pub n: u64,
    #[serde(rename = "L")]
    pub lefschetz: String,
    #[serde(rename = "N")]
    pub nielsen: String,
    #[serde(rename = "R")]
    pub reidemeister: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum ConstructionEntry {
    DirectReconstruction,
    DeDuFormula { case: String, p: usize, n: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ErrorEntry {
    pub kind: String,
    pub message: String,
}

impl From<&Error> for ErrorEntry {
    fn from(e: &Error) -> Self {
        ErrorEntry {
            kind: e.kind().to_string(),
            message: e.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZetaEntry {
    pub which: String,
    pub defined: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub function: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numerator: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub denominator: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<ConstructionEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FunctionalEntry {
    pub zeta: String,
    /// `holds`, `fails` or `not_applicable`.
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ViolationEntry {
    pub modulus: u64,
    pub sum: String,
    pub residue: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CongruenceEntry {
    pub kind: String,
    pub sequence: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    pub passes: bool,
    pub checked: usize,
    pub skipped: Vec<u64>,
    pub violations: Vec<ViolationEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticsSection {
    pub n_infinity: Value,
    pub entropy: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius_checked: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius_error: Option<ErrorEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DefinednessEntry {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiagnosticsSection {
    pub reidemeister_zeta: DefinednessEntry,
    pub root_of_unity_eigenvalue: bool,
    pub virtually_unipotent: bool,
    pub homeomorphism: bool,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoincidenceRow {
    pub n: u64,
    #[serde(rename = "L")]
    pub lefschetz: String,
    #[serde(rename = "N")]
    pub nielsen: Option<String>,
    #[serde(rename = "R")]
    pub reidemeister: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrichotomyEntry {
    pub case: u8,
    pub predicted_nielsen: String,
    pub lefschetz: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lefschetz_double_cover: Option<String>,
    pub epsilon_o: i32,
    pub epsilon_e: i32,
    pub generator: String,
    pub m_triv: usize,
    pub k_tau: usize,
    pub rotations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoincidenceSection {
    pub maps: [String; 2],
    pub numbers: Vec<CoincidenceRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trichotomy: Option<TrichotomyEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trichotomy_error: Option<ErrorEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportDocument {
    pub schema: u32,
    pub command: String,
    pub input: SpecFile,
    pub parameters: Parameters,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validation: Option<ValidationSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numbers: Option<Vec<NumbersRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zeta: Option<Vec<ZetaEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub functional_equation: Option<Vec<FunctionalEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub congruences: Option<Vec<CongruenceEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub asymptotics: Option<AsymptoticsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<DiagnosticsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coincidence: Option<CoincidenceSection>,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        to_json_text(self)
    }
}

/// A float rounded to 15 significant digits, or `"inf"`.
pub fn float_value(x: f64) -> Value {
    if x.is_infinite() {
        return Value::String(if x > 0.0 { "inf" } else { "-inf" }.into());
    }
    if x.is_nan() {
        return Value::String("nan".into());
    }
    let rounded: f64 = format!("{x:.14e}").parse().expect("formatted float parses");
    serde_json::Number::from_f64(rounded).map_or(Value::Null, Value::Number)
}

fn extended(v: &Extended<impl ToString>) -> String {
    match v {
        Extended::Finite(x) => x.to_string(),
        Extended::Infinite => "inf".into(),
    }
}

fn coeffs(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn case_name(case: PlusCase) -> &'static str {
    match case {
        PlusCase::PiEqual => "PiEqual",
        PlusCase::PiProper => "PiProper",
    }
}

fn construction_entry(c: &Construction) -> ConstructionEntry {
    match *c {
        Construction::DirectReconstruction => ConstructionEntry::DirectReconstruction,
        Construction::DeDuFormula { case, p, n } => ConstructionEntry::DeDuFormula {
            case: case_name(case).into(),
            p,
            n,
        },
    }
}

/// The message printed when an undefined zeta function is requested.
pub fn undefined_message(which: ZetaKind, e: &Error) -> String {
    let s = which.symbol();
    match e {
        Error::ZetaUndefined { n, .. } => {
            if *n == 1 {
                format!("undefined: {s}(f)=∞")
            } else {
                format!("undefined: {s}(f^{n})=∞")
            }
        }
        Error::ZetaUnknown { n_max } => {
            format!("unknown: no infinite {s}(f^n) found for n <= {n_max}, but D has a root-of-unity eigenvalue")
        }
        other => other.to_string(),
    }
}

/// A failure that aborts the command.
#[derive(Debug)]
pub enum Failure {
    /// An internal consistency check failed.
    CrossCheck(Error),
    /// The requested quantity does not exist (undefined Reidemeister zeta function).
    Undefined(String),
    /// Input accepted by the loader but not usable for this command.
    Invalid(String, String),
    Other(Error),
}

impl Failure {
    pub(crate) fn from_error(e: Error) -> Self {
        if e.is_cross_check_failure() {
            Failure::CrossCheck(e)
        } else {
            Failure::Other(e)
        }
    }
}

fn zeta_entry(which: ZetaKind, r: &Result<ZetaResult, Error>) -> ZetaEntry {
    let mut entry = ZetaEntry {
        which: which.symbol().into(),
        defined: false,
        function: None,
        numerator: None,
        denominator: None,
        construction: None,
        degree_bound: None,
        reason: None,
        error: None,
    };
    match r {
        Ok(z) => {
            entry.defined = z.defined;
            entry.function = Some(z.function.to_string());
            entry.numerator = Some(coeffs(z.function.numerator()));
            entry.denominator = Some(coeffs(z.function.denominator()));
            entry.construction = Some(construction_entry(&z.construction));
            entry.degree_bound = Some(z.degree_bound);
        }
        Err(e @ (Error::ZetaUndefined { .. } | Error::ZetaUnknown { .. })) => {
            entry.reason = Some(undefined_message(which, e).replace('∞', "inf"));
        }
        Err(e) => entry.error = Some(e.into()),
    }
    entry
}

fn functional_entry(loaded: &Loaded, which: ZetaKind, z: &Result<ZetaResult, Error>) -> Result<FunctionalEntry, Failure> {
    let mut entry = FunctionalEntry {
        zeta: which.symbol().into(),
        status: "not_applicable".into(),
        epsilon: None,
        ratio: None,
        degree: None,
        dimension: None,
        case: None,
        reason: None,
    };
    let z = match z {
        Ok(z) => z,
        Err(e) => {
            entry.reason = Some(format!("zeta function unavailable: {}", e.kind()));
            return Ok(entry);
        }
    };
    match verify_functional_equation(&loaded.spec, &loaded.map, z) {
        Ok(r) => {
            entry.status = if r.holds { "holds" } else { "fails" }.into();
            entry.epsilon = Some(r.epsilon.to_string());
            entry.ratio = Some(r.ratio.to_string());
            entry.degree = Some(r.degree_d.to_string());
            entry.dimension = Some(r.dimension);
            entry.case = r.case.map(|c| case_name(c).into());
        }
        Err(e @ (Error::NotOrientable | Error::DegreeZero)) => {
            entry.reason = Some(e.kind().into());
        }
        Err(e @ Error::NotConstantRatio) => {
            entry.status = "fails".into();
            entry.reason = Some(e.kind().into());
        }
        Err(e) => return Err(Failure::from_error(e)),
    }
    Ok(entry)
}

fn congruence_entry(sequence: &str, r: &CongruenceReport) -> CongruenceEntry {
    CongruenceEntry {
        kind: match r.kind {
            CongruenceKind::Gauss => "Gauss",
            CongruenceKind::Euler => "Euler",
            CongruenceKind::Dold => "Dold",
        }
        .into(),
        sequence: sequence.into(),
        prime: r.prime,
        passes: r.passes(),
        checked: r.checked.len(),
        skipped: r.skipped.clone(),
        violations: r
            .violations
            .iter()
            .map(|v| ViolationEntry {
                modulus: v.modulus,
                sum: v.sum.to_string(),
                residue: v.residue.to_string(),
            })
            .collect(),
    }
}

/// Largest `r` with `p^r <= n`.
fn max_exponent(p: u64, n: u64) -> u32 {
    let mut r = 0;
    let mut q = p;
    while q <= n {
        r += 1;
        q *= p;
    }
    r
}

fn compatibility(spec: &ManifoldSpec, map: &AffineMapSpec) -> MapCompatibility {
    let d = &map.d;
    let unmatched: Vec<String> = spec
        .holonomy()
        .iter()
        .filter(|h| {
            let da = d * &h.matrix;
            !spec.matrices().any(|b| b * d == da)
        })
        .map(|h| h.label.clone())
        .collect();
    MapCompatibility {
        label: map.label.clone(),
        compatible: unmatched.is_empty(),
        unmatched,
    }
}

fn validation_section(loaded: &Loaded) -> ValidationSection {
    let v = loaded.spec.validation_report();
    let maps = std::iter::once(&loaded.map)
        .chain(&loaded.map2)
        .map(|m| compatibility(&loaded.spec, m))
        .collect();
    ValidationSection {
        status: "OK".into(),
        dimension: v.dimension,
        holonomy_order: v.order,
        orientable: v.orientable,
        element_orders: loaded
            .spec
            .holonomy()
            .iter()
            .zip(&v.element_orders)
            .map(|(h, &order)| ElementOrder {
                label: h.label.clone(),
                order,
            })
            .collect(),
        maps,
    }
}

fn numbers_section(loaded: &Loaded, max_n: u64) -> Result<Vec<NumbersRow>, Failure> {
    let table = numbers_table(&loaded.spec, &loaded.map, max_n).map_err(Failure::from_error)?;
    Ok(table
        .iter()
        .map(|row| NumbersRow {
            n: row.n,
            lefschetz: row.lefschetz.to_string(),
            nielsen: row.nielsen.to_string(),
            reidemeister: extended(&row.reidemeister),
        })
        .collect())
}

fn congruence_section(loaded: &Loaded, n_max: u64) -> Result<Vec<CongruenceEntry>, Failure> {
    let fail = Failure::from_error;
    let table = numbers_table(&loaded.spec, &loaded.map, n_max).map_err(fail)?;
    let nielsen: Vec<Extended<BigInt>> = table.iter().map(|r| Extended::Finite(r.nielsen.clone())).collect();
    let reidemeister: Vec<Extended<BigInt>> = table.iter().map(|r| r.reidemeister.clone()).collect();
    let mut out = vec![
        congruence_entry("N", &check_gauss(&nielsen, n_max).map_err(fail)?),
        congruence_entry("R", &check_gauss(&reidemeister, n_max).map_err(fail)?),
        congruence_entry("L", &check_dold_lefschetz(&loaded.spec, &loaded.map, n_max).map_err(fail)?),
    ];
    for p in [2, 3] {
        let r = max_exponent(p, n_max);
        if r > 0 {
            out.push(congruence_entry("N", &check_euler(&nielsen, p, r).map_err(fail)?));
        }
    }
    Ok(out)
}

fn asymptotics_section(loaded: &Loaded, nielsen: Option<&Result<ZetaResult, Error>>) -> Result<AsymptoticsSection, Failure> {
    let tol = loaded.settings.tol;
    let n_inf = asymptotic_nielsen(&loaded.map, tol).map_err(Failure::from_error)?;
    let entropy = entropy_lower_bound(&loaded.map, tol).map_err(Failure::from_error)?;
    let mut section = AsymptoticsSection {
        n_infinity: float_value(n_inf),
        entropy: float_value(entropy),
        radius: None,
        radius_checked: None,
        radius_error: None,
    };
    match nielsen {
        Some(Ok(z)) => {
            let r = radius_report(&loaded.map, z, tol).map_err(Failure::from_error)?;
            section.radius = Some(float_value(r.radius));
            section.radius_checked = Some(r.checked);
        }
        Some(Err(e)) => section.radius_error = Some(e.into()),
        None => {}
    }
    Ok(section)
}

fn diagnostics_section(loaded: &Loaded) -> Result<DiagnosticsSection, Failure> {
    let d = &loaded.map.d;
    let root_of_unity = has_root_of_unity_eigenvalue(d);
    let unipotent = is_virtually_unipotent(&loaded.map, loaded.settings.tol).map_err(Failure::from_error)?;
    let homeomorphism = d.det().abs().is_one();
    let mut notes = Vec::new();
    let definedness = match reidemeister_zeta_defined(&loaded.spec, &loaded.map, loaded.settings.n_max) {
        Definedness::Defined => {
            if homeomorphism {
                notes.push(
                    "R_f(z) is defined and f is a homeomorphism, so the manifold is an infra-nilmanifold".into(),
                );
            }
            DefinednessEntry {
                status: "defined".into(),
                n: None,
                witness: None,
                n_max: None,
            }
        }
        Definedness::Undefined { n, label } => {
            notes.push(format!(
                "R(f^{n}) is infinite (det(I - {label} D^{n}) = 0), so R_f(z) is not defined"
            ));
            DefinednessEntry {
                status: "undefined".into(),
                n: Some(n),
                witness: Some(label),
                n_max: None,
            }
        }
        Definedness::Unknown { n_max } => DefinednessEntry {
            status: "unknown".into(),
            n: None,
            witness: None,
            n_max: Some(n_max),
        },
    };
    if root_of_unity {
        notes.push("D has a root-of-unity eigenvalue".into());
    }
    if unipotent {
        notes.push("every eigenvalue of D has modulus 1, so L(f^n) = N(f^n) for all n".into());
    }
    Ok(DiagnosticsSection {
        reidemeister_zeta: definedness,
        root_of_unity_eigenvalue: root_of_unity,
        virtually_unipotent: unipotent,
        homeomorphism,
        notes,
    })
}

fn trichotomy_entry(r: &TrichotomyReport) -> TrichotomyEntry {
    TrichotomyEntry {
        case: match r.case {
            TrichotomyCase::Case1 => 1,
            TrichotomyCase::Case2 => 2,
            TrichotomyCase::Case3 => 3,
        },
        predicted_nielsen: r.predicted_nielsen.to_string(),
        lefschetz: r.lefschetz.to_string(),
        lefschetz_double_cover: r.lefschetz_double_cover.as_ref().map(|x| x.to_string()),
        epsilon_o: r.epsilon_o,
        epsilon_e: r.epsilon_e,
        generator: r.decomposition.generator.clone(),
        m_triv: r.decomposition.m_triv,
        k_tau: r.decomposition.k_tau,
        rotations: r
            .decomposition
            .rotations
            .iter()
            .map(|x| format!("{}/{}", x.numerator, x.order))
            .collect(),
    }
}

fn coincidence_section(loaded: &Loaded, max_n: u64) -> Result<CoincidenceSection, Failure> {
    let g = loaded.map2.as_ref().ok_or_else(|| {
        Failure::Invalid("InvalidInput".into(), "coincidence needs a second map (map2)".into())
    })?;
    let f = &loaded.map;
    let mut numbers = Vec::new();
    for n in 1..=max_n {
        let c = coincidence_numbers(&loaded.spec, f, g, n).map_err(Failure::from_error)?;
        numbers.push(CoincidenceRow {
            n,
            lefschetz: c.lefschetz.to_string(),
            nielsen: c.nielsen.as_ref().map(Rational::to_string),
            reidemeister: extended(&c.reidemeister),
        });
    }
    let (trichotomy, trichotomy_error) = match coincidence_trichotomy(&loaded.spec, f, g) {
        Ok(r) => (Some(trichotomy_entry(&r)), None),
        Err(e) if e.is_cross_check_failure() => return Err(Failure::CrossCheck(e)),
        Err(e) => (None, Some(ErrorEntry::from(&e))),
    };
    Ok(CoincidenceSection {
        maps: [f.label.clone(), g.label.clone()],
        numbers,
        trichotomy,
        trichotomy_error,
    })
}

fn propagate_cross_check(r: &Result<ZetaResult, Error>) -> Result<(), Failure> {
    match r {
        Err(e) if e.is_cross_check_failure() => Err(Failure::CrossCheck(e.clone())),
        _ => Ok(()),
    }
}

/// Number of terms used by the congruence checks when `max_n` is not given.
pub const DEFAULT_CONGRUENCE_N: u64 = 30;
/// Table length used by the other commands when `max_n` is not given.
pub const DEFAULT_TABLE_N: u64 = 12;

pub fn default_max_n(command: Command) -> u64 {
    match command {
        Command::Congruences => DEFAULT_CONGRUENCE_N,
        _ => DEFAULT_TABLE_N,
    }
}

/// Run `command` on a loaded spec. `input` is echoed verbatim.
pub fn build(command: Command, input: &SpecFile, loaded: &Loaded, max_n: u64) -> Result<ReportDocument, Failure> {
    let settings: &Settings = &loaded.settings;
    let mut doc = ReportDocument {
        schema: REPORT_SCHEMA,
        command: command.name().into(),
        input: input.clone(),
        parameters: Parameters {
            max_n,
            tolerance: settings.tol,
        },
        validation: None,
        numbers: None,
        zeta: None,
        functional_equation: None,
        congruences: None,
        asymptotics: None,
        diagnostics: None,
        coincidence: None,
    };
    let run = |kind| zeta(kind, &loaded.spec, &loaded.map, settings);
    match command {
        Command::Validate => doc.validation = Some(validation_section(loaded)),
        Command::Numbers => doc.numbers = Some(numbers_section(loaded, max_n)?),
        Command::Zeta(kind) => {
            let z = match run(kind) {
                Ok(z) => z,
                Err(e @ (Error::ZetaUndefined { .. } | Error::ZetaUnknown { .. })) => {
                    return Err(Failure::Undefined(undefined_message(kind, &e)))
                }
                Err(e) => return Err(Failure::from_error(e)),
            };
            doc.zeta = Some(vec![zeta_entry(kind, &Ok(z))]);
        }
        Command::Congruences => doc.congruences = Some(congruence_section(loaded, max_n)?),
        Command::Entropy => {
            let n = run(ZetaKind::Nielsen);
            propagate_cross_check(&n)?;
            doc.asymptotics = Some(asymptotics_section(loaded, Some(&n))?);
        }
        Command::Coincidence => doc.coincidence = Some(coincidence_section(loaded, max_n)?),
        Command::Report => {
            doc.validation = Some(validation_section(loaded));
            doc.numbers = Some(numbers_section(loaded, max_n)?);
            let kinds = [ZetaKind::Lefschetz, ZetaKind::Nielsen, ZetaKind::Reidemeister, ZetaKind::ArtinMazur];
            let results: Vec<Result<ZetaResult, Error>> = kinds.iter().map(|&k| run(k)).collect();
            for r in &results {
                propagate_cross_check(r)?;
            }
            doc.zeta = Some(kinds.iter().zip(&results).map(|(&k, r)| zeta_entry(k, r)).collect());
            doc.functional_equation = Some(vec![
                functional_entry(loaded, ZetaKind::Lefschetz, &results[0])?,
                functional_entry(loaded, ZetaKind::Nielsen, &results[1])?,
            ]);
            doc.congruences = Some(congruence_section(loaded, DEFAULT_CONGRUENCE_N.max(max_n))?);
            doc.asymptotics = Some(asymptotics_section(loaded, Some(&results[1]))?);
            doc.diagnostics = Some(diagnostics_section(loaded)?);
            if loaded.map2.is_some() {
                doc.coincidence = Some(coincidence_section(loaded, max_n)?);
            }
        }
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_are_rounded() {
        assert_eq!(float_value(0.5), serde_json::json!(0.5));
        assert_eq!(float_value(f64::INFINITY), serde_json::json!("inf"));
        let x = float_value(std::f64::consts::PI);
        assert_eq!(x.to_string(), "3.14159265358979");
    }

    #[test]
    fn exponents() {
        assert_eq!(max_exponent(2, 30), 4);
        assert_eq!(max_exponent(3, 30), 3);
        assert_eq!(max_exponent(5, 4), 0);
    }
}
