//! Plain-text rendering of report documents.

use std::fmt::Write;

use serde_json::Value;

use crate::report::{
    AsymptoticsSection, CoincidenceSection, CongruenceEntry, DiagnosticsSection, FunctionalEntry, NumbersRow,
    ReportDocument, ValidationSection, ZetaEntry,
};

fn inf(s: &str) -> &str {
    if s == "inf" {
        "∞"
    } else {
        s
    }
}

fn float(v: &Value) -> String {
    match v {
        Value::String(s) => inf(s).to_string(),
        other => other.to_string(),
    }
}

fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{}{c}", " ".repeat(w - c.chars().count())))
            .collect::<Vec<_>>()
            .join("  ")
    };
    writeln!(out, "{}", line(header.to_vec())).unwrap();
    for row in rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect())).unwrap();
    }
}

fn validation(out: &mut String, v: &ValidationSection, name: &str) {
    writeln!(
        out,
        "{}: {name}, dimension {}, holonomy order {}, {}",
        v.status,
        v.dimension,
        v.holonomy_order,
        if v.orientable { "orientable" } else { "non-orientable" }
    )
    .unwrap();
    for e in &v.element_orders {
        writeln!(out, "  {} has order {}", e.label, e.order).unwrap();
    }
    for m in &v.maps {
        if m.compatible {
            writeln!(out, "  map {} is compatible: every A has A' with A' D = D A", m.label).unwrap();
        } else {
            writeln!(
                out,
                "  warning: map {} has no A' with A' D = D A for {}",
                m.label,
                m.unmatched.join(", ")
            )
            .unwrap();
        }
    }
}

fn numbers(out: &mut String, rows: &[NumbersRow]) {
    let rows: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.lefschetz.clone(),
                r.nielsen.clone(),
                inf(&r.reidemeister).to_string(),
            ]
        })
        .collect();
    table(out, &["n", "L(f^n)", "N(f^n)", "R(f^n)"], &rows);
}

fn zeta(out: &mut String, z: &ZetaEntry) {
    let label = format!("{}_f(z)", z.which);
    match (&z.function, &z.reason, &z.error) {
        (Some(f), _, _) => {
            writeln!(out, "{label} = {f}").unwrap();
            if let Some(c) = &z.construction {
                let how = match c {
                    crate::report::ConstructionEntry::DirectReconstruction => "direct reconstruction".to_string(),
                    crate::report::ConstructionEntry::DeDuFormula { case, p, n } => {
                        format!("Lefschetz closed form ({case}, p = {p}, n = {n})")
                    }
                };
                writeln!(out, "  construction: {how}").unwrap();
            }
            if let Some(b) = z.degree_bound {
                writeln!(out, "  degree bound: {b}").unwrap();
            }
        }
        (None, Some(reason), _) => writeln!(out, "{label}: {}", reason.replace("inf", "∞")).unwrap(),
        (None, None, Some(e)) => writeln!(out, "{label}: error {}: {}", e.kind, e.message).unwrap(),
        (None, None, None) => writeln!(out, "{label}: unavailable").unwrap(),
    }
}

fn functional(out: &mut String, f: &FunctionalEntry) {
    write!(out, "functional equation for {}_f: {}", f.zeta, f.status).unwrap();
    if let Some(e) = &f.epsilon {
        write!(out, ", epsilon = {e}").unwrap();
    }
    if let Some(d) = &f.degree {
        write!(out, ", degree = {d}").unwrap();
    }
    if let Some(m) = f.dimension {
        write!(out, ", m = {m}").unwrap();
    }
    if let Some(c) = &f.case {
        write!(out, ", case {c}").unwrap();
    }
    if let Some(r) = &f.reason {
        write!(out, " ({r})").unwrap();
    }
    writeln!(out).unwrap();
}

fn congruence(out: &mut String, c: &CongruenceEntry) {
    let name = match c.prime {
        Some(p) => format!("{} (p = {p})", c.kind),
        None => c.kind.clone(),
    };
    write!(
        out,
        "{name} congruence on {}(f^n): {}, {} moduli checked",
        c.sequence,
        if c.passes { "pass" } else { "FAIL" },
        c.checked
    )
    .unwrap();
    if !c.skipped.is_empty() {
        write!(out, ", {} skipped (infinite terms)", c.skipped.len()).unwrap();
    }
    writeln!(out).unwrap();
    for v in &c.violations {
        writeln!(out, "  modulus {}: sum {} has residue {}", v.modulus, v.sum, v.residue).unwrap();
    }
}

fn asymptotics(out: &mut String, a: &AsymptoticsSection) {
    writeln!(out, "asymptotic Nielsen number N∞ = {}", float(&a.n_infinity)).unwrap();
    writeln!(out, "entropy lower bound log N∞ = {}", float(&a.entropy)).unwrap();
    if let Some(r) = &a.radius {
        let checked = if a.radius_checked == Some(true) {
            "agrees with 1/N∞"
        } else {
            "not compared, 1 is an eigenvalue of D"
        };
        writeln!(out, "radius of convergence of N_f(z) = {} ({checked})", float(r)).unwrap();
    }
    if let Some(e) = &a.radius_error {
        writeln!(out, "radius of convergence unavailable: {}", e.kind).unwrap();
    }
}

fn diagnostics(out: &mut String, d: &DiagnosticsSection) {
    let r = &d.reidemeister_zeta;
    let status = match (r.n, &r.witness, r.n_max) {
        (Some(n), Some(w), _) => format!("undefined, R(f^{n}) = ∞ (witness {w})"),
        (_, _, Some(m)) => format!("unknown after scanning n <= {m}"),
        _ => r.status.clone(),
    };
    writeln!(out, "R_f(z) definedness: {status}").unwrap();
    writeln!(out, "root-of-unity eigenvalue: {}", d.root_of_unity_eigenvalue).unwrap();
    writeln!(out, "virtually unipotent: {}", d.virtually_unipotent).unwrap();
    writeln!(out, "homeomorphism: {}", d.homeomorphism).unwrap();
    for n in &d.notes {
        writeln!(out, "note: {n}").unwrap();
    }
}

fn coincidence(out: &mut String, c: &CoincidenceSection) {
    writeln!(out, "coincidences of {} and {}", c.maps[0], c.maps[1]).unwrap();
    let rows: Vec<Vec<String>> = c
        .numbers
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.lefschetz.clone(),
                r.nielsen.clone().unwrap_or_else(|| "-".into()),
                inf(&r.reidemeister).to_string(),
            ]
        })
        .collect();
    table(out, &["n", "L(f^n,g^n)", "N(f^n,g^n)", "R(f^n,g^n)"], &rows);
    if let Some(t) = &c.trichotomy {
        write!(
            out,
            "trichotomy case {}: N(f,g) = {} (L(f,g) = {}",
            t.case, t.predicted_nielsen, t.lefschetz
        )
        .unwrap();
        if let Some(l0) = &t.lefschetz_double_cover {
            write!(out, ", double cover L = {l0}").unwrap();
        }
        writeln!(out, ", signs {} {})", t.epsilon_o, t.epsilon_e).unwrap();
        write!(
            out,
            "  generator {}: {} trivial, {} sign",
            t.generator, t.m_triv, t.k_tau
        )
        .unwrap();
        if !t.rotations.is_empty() {
            write!(out, ", rotations {}", t.rotations.join(" ")).unwrap();
        }
        writeln!(out).unwrap();
    }
    if let Some(e) = &c.trichotomy_error {
        writeln!(out, "trichotomy not applicable: {}", e.kind).unwrap();
    }
}

fn sep(out: &mut String) {
    if !out.is_empty() {
        out.push('\n');
    }
}

/// Render a document as text, section by section.
pub fn human(doc: &ReportDocument) -> String {
    let mut out = String::new();
    if let Some(v) = &doc.validation {
        sep(&mut out);
        validation(&mut out, v, &doc.input.name);
    }
    if let Some(rows) = &doc.numbers {
        sep(&mut out);
        numbers(&mut out, rows);
    }
    if let Some(zs) = &doc.zeta {
        sep(&mut out);
        for z in zs {
            zeta(&mut out, z);
        }
    }
    if let Some(fs) = &doc.functional_equation {
        sep(&mut out);
        for f in fs {
            functional(&mut out, f);
        }
    }
    if let Some(cs) = &doc.congruences {
        sep(&mut out);
        for c in cs {
            congruence(&mut out, c);
        }
    }
    if let Some(a) = &doc.asymptotics {
        sep(&mut out);
        asymptotics(&mut out, a);
    }
    if let Some(d) = &doc.diagnostics {
        sep(&mut out);
        diagnostics(&mut out, d);
    }
    if let Some(c) = &doc.coincidence {
        sep(&mut out);
        coincidence(&mut out, c);
    }
    out
}
