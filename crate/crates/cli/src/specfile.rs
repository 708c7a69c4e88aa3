//! The JSON spec-file format: a manifold, one or two maps, and options.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use zetafix::algebra::{Rational, RationalMatrix};
use zetafix::manifold::{AffineMapSpec, ManifoldSpec};
use num::{BigInt, ToPrimitive, Zero};
use zetafix::suite::Settings;

pub const SCHEMA_VERSION: u32 = 1;

/// A matrix or vector entry: a JSON integer, or a string `"p/q"` / `"p"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    pub fn from_rational(r: &Rational) -> Self {
        match (r.is_integer(), r.numer().to_i64()) {
            (true, Some(v)) => Entry::Int(v),
            _ => Entry::Text(r.to_string()),
        }
    }

    pub fn to_rational(&self) -> Result<Rational, String> {
        match self {
            Entry::Int(v) => Ok(Rational::from_integer((*v).into())),
            Entry::Text(s) => parse_rational(s),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p = BigInt::from_str(p).map_err(|_| format!("bad numerator in {s:?}"))?;
    let q = BigInt::from_str(q).map_err(|_| format!("bad denominator in {s:?}"))?;
    if q.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(p, q))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HolonomyEntry {
    pub label: String,
    pub matrix: Vec<Vec<Entry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapEntry {
    pub label: String,
    #[serde(rename = "D")]
    pub d: Vec<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub translation: Option<Vec<Entry>>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_bound_override: Option<usize>,
}

impl Options {
    pub fn is_empty(&self) -> bool {
        *self == Options::default()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub schema: u32,
    pub name: String,
    pub dimension: usize,
    pub holonomy: Vec<HolonomyEntry>,
    pub map: MapEntry,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map2: Option<MapEntry>,
    #[serde(default, skip_serializing_if = "Options::is_empty")]
    pub options: Options,
}

/// A spec file that parsed and validated.
#[derive(Clone, Debug, PartialEq)]
pub struct Loaded {
    pub spec: ManifoldSpec,
    pub map: AffineMapSpec,
    pub map2: Option<AffineMapSpec>,
    pub settings: Settings,
}

/// Why a spec file was rejected.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecError {
    /// `ParseError`, `SchemaError`, or the name of the failing validation rule.
    pub kind: String,
    pub message: String,
}

impl SpecError {
    fn new(kind: &str, message: impl Into<String>) -> Self {
        SpecError {
            kind: kind.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.message)
    }
}

impl From<zetafix::Error> for SpecError {
    fn from(e: zetafix::Error) -> Self {
        SpecError::new(e.kind(), e.to_string())
    }
}

fn matrix_entries(m: &RationalMatrix) -> Vec<Vec<Entry>> {
    m.rows()
        .iter()
        .map(|r| r.iter().map(Entry::from_rational).collect())
        .collect()
}

fn map_entry(map: &AffineMapSpec) -> MapEntry {
    MapEntry {
        label: map.label.clone(),
        d: matrix_entries(&map.d),
        translation: map
            .translation
            .as_ref()
            .map(|t| t.iter().map(Entry::from_rational).collect()),
    }
}

fn to_matrix(rows: &[Vec<Entry>], dim: usize, what: &str) -> Result<RationalMatrix, SpecError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(SpecError::new(
            "DimensionMismatch",
            format!("{what} must be {dim}x{dim}"),
        ));
    }
    let parsed = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|e| e.to_rational().map_err(|m| SpecError::new("ParseError", format!("{what}: {m}"))))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RationalMatrix::from_rows(parsed)?)
}

fn to_map(entry: &MapEntry, dim: usize) -> Result<AffineMapSpec, SpecError> {
    let d = to_matrix(&entry.d, dim, &format!("map {}", entry.label))?;
    let mut map = AffineMapSpec::new(entry.label.clone(), d);
    if let Some(t) = &entry.translation {
        let t = t
            .iter()
            .map(|e| e.to_rational().map_err(|m| SpecError::new("ParseError", m)))
            .collect::<Result<Vec<_>, _>>()?;
        map = map.with_translation(t);
    }
    Ok(map)
}

impl SpecFile {
    pub fn from_model(
        spec: &ManifoldSpec,
        map: &AffineMapSpec,
        map2: Option<&AffineMapSpec>,
        options: Options,
    ) -> Self {
        SpecFile {
            schema: SCHEMA_VERSION,
            name: spec.name().to_string(),
            dimension: spec.dimension(),
            holonomy: spec
                .holonomy()
                .iter()
                .map(|h| HolonomyEntry {
                    label: h.label.clone(),
                    matrix: matrix_entries(&h.matrix),
                })
                .collect(),
            map: map_entry(map),
            map2: map2.map(map_entry),
            options,
        }
    }

    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let file: SpecFile =
            serde_json::from_str(text).map_err(|e| SpecError::new("ParseError", e.to_string()))?;
        if file.schema != SCHEMA_VERSION {
            return Err(SpecError::new(
                "SchemaError",
                format!("unsupported schema {}, expected {SCHEMA_VERSION}", file.schema),
            ));
        }
        Ok(file)
    }

    pub fn read(path: &Path) -> Result<Self, SpecError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| SpecError::new("IoError", format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        to_json_text(self)
    }

    /// Build and validate the model objects.
    pub fn load(&self) -> Result<Loaded, SpecError> {
        let dim = self.dimension;
        let elements = self
            .holonomy
            .iter()
            .map(|h| Ok((h.label.clone(), to_matrix(&h.matrix, dim, &format!("holonomy {}", h.label))?)))
            .collect::<Result<Vec<_>, SpecError>>()?;
        let spec = ManifoldSpec::new(self.name.clone(), dim, elements)?;
        let map = to_map(&self.map, dim)?;
        spec.check_map(&map)?;
        let map2 = match &self.map2 {
            Some(m) => {
                let m = to_map(m, dim)?;
                spec.check_map(&m)?;
                Some(m)
            }
            None => None,
        };
        let mut settings = Settings::default();
        if let Some(t) = self.options.tolerance {
            settings.tol = t;
        }
        if let Some(n) = self.options.n_max {
            settings.n_max = n;
        }
        settings.degree_bound_override = self.options.degree_bound_override;
        Ok(Loaded {
            spec,
            map,
            map2,
            settings,
        })
    }
}

/// Pretty JSON with arrays of scalars kept on one line, plus a trailing newline.
pub fn to_json_text(value: &impl Serialize) -> String {
    let pretty = serde_json::to_string_pretty(value).expect("values serialize");
    let mut out = compact_scalar_arrays(&pretty);
    out.push('\n');
    out
}

fn compact_scalar_arrays(pretty: &str) -> String {
    let chars: Vec<char> = pretty.chars().collect();
    let mut out = String::with_capacity(pretty.len());
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == '"' {
            let end = string_end(&chars, i);
            out.extend(&chars[i..end]);
            i = end;
            continue;
        }
        if c == '[' {
            if let Some(end) = scalar_array_end(&chars, i) {
                out.push('[');
                let mut j = i + 1;
                let mut pending_space = false;
                while j < end {
                    let d = chars[j];
                    if d == '"' {
                        let e = string_end(&chars, j);
                        if pending_space {
                            out.push(' ');
                            pending_space = false;
                        }
                        out.extend(&chars[j..e]);
                        j = e;
                        continue;
                    }
                    if d.is_whitespace() {
                        pending_space = out.ends_with(',');
                    } else {
                        if pending_space {
                            out.push(' ');
                            pending_space = false;
                        }
                        out.push(d);
                    }
                    j += 1;
                }
                out.push(']');
                i = end + 1;
                continue;
            }
        }
        out.push(c);
        i += 1;
    }
    out
}

/// Index one past the closing quote of the string starting at `start`.
fn string_end(chars: &[char], start: usize) -> usize {
    let mut j = start + 1;
    while j < chars.len() {
        match chars[j] {
            '\\' => j += 2,
            '"' => return j + 1,
            _ => j += 1,
        }
    }
    chars.len()
}

/// Index of the `]` closing the array at `start` if it holds no arrays or objects.
fn scalar_array_end(chars: &[char], start: usize) -> Option<usize> {
    let mut j = start + 1;
    while j < chars.len() {
        match chars[j] {
            '"' => j = string_end(chars, j),
            '[' | '{' => return None,
            ']' => return Some(j),
            _ => j += 1,
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries() {
        assert_eq!(parse_rational("-3/6").unwrap(), Rational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational(" 7 ").unwrap(), Rational::from_integer(7.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        let big = parse_rational("123456789012345678901234567890").unwrap();
        assert_eq!(Entry::from_rational(&big), Entry::Text("123456789012345678901234567890".into()));
        assert_eq!(
            Entry::from_rational(&Rational::new(1.into(), 3.into())),
            Entry::Text("1/3".into())
        );
    }

    #[test]
    fn scalar_arrays_on_one_line() {
        let v = serde_json::json!({"m": [[1, -2], ["1/2", "a, [b]"]], "e": [], "o": [{"x": [3]}]});
        let text = to_json_text(&v);
        assert!(text.contains("[1, -2]"), "{text}");
        assert!(text.contains(r#"["1/2", "a, [b]"]"#), "{text}");
        assert!(text.contains(r#""x": [3]"#), "{text}");
        let back: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn rejects_bad_schema_and_shapes() {
        let text = r#"{"schema": 2, "name": "x", "dimension": 1,
            "holonomy": [{"label": "I", "matrix": [[1]]}], "map": {"label": "f", "D": [[2]]}}"#;
        assert_eq!(SpecFile::parse(text).unwrap_err().kind, "SchemaError");
        let text = r#"{"schema": 1, "name": "x", "dimension": 2,
            "holonomy": [{"label": "I", "matrix": [[1]]}], "map": {"label": "f", "D": [[2]]}}"#;
        let err = SpecFile::parse(text).unwrap().load().unwrap_err();
        assert_eq!(err.kind, "DimensionMismatch");
    }
}
