//! Output rendering: triangles as CSV/JSON/Markdown, path listings,
//! descent-oracle summaries, and transition-matrix views.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use gkp_core::paths::enumerate_paths;
use gkp_core::poly::TransitionReport;
use gkp_core::rational::format_rational;
use gkp_core::stirling::{descent_histogram, enumerate_stirling_perms, eulerian_triangle};
use gkp_core::triangle::{AffineWeight, GkpSpec, Triangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Md,
}

/// Wire form of a triangle. Field order is fixed, keys are never maps,
/// and rationals are canonical strings, so serialize(parse(s)) == s.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleDoc {
    pub spec: SpecDoc,
    pub nmax: usize,
    pub entries: Vec<EntryDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecDoc {
    pub a: [String; 3],
    pub b: [String; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub n: usize,
    pub k: usize,
    pub v: String,
}

fn weight_doc(w: &AffineWeight) -> [String; 3] {
    [
        format_rational(&w.c0),
        format_rational(&w.c1),
        format_rational(&w.c2),
    ]
}

pub fn triangle_doc(t: &Triangle, spec: &GkpSpec) -> TriangleDoc {
    let mut entries = Vec::new();
    for (n, row) in t.rows().enumerate() {
        for (k, v) in row.iter().enumerate() {
            entries.push(EntryDoc {
                n,
                k,
                v: format_rational(v),
            });
        }
    }
    TriangleDoc {
        spec: SpecDoc {
            a: weight_doc(&spec.a),
            b: weight_doc(&spec.b),
        },
        nmax: t.n_max(),
        entries,
    }
}

pub fn render_triangle(t: &Triangle, spec: &GkpSpec, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("n,k,value\n");
            for (n, row) in t.rows().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    out.push_str(&format!("{n},{k},{}\n", format_rational(v)));
                }
            }
            out
        }
        Format::Json => {
            let mut s = serde_json::to_string(&triangle_doc(t, spec)).expect("plain data");
            s.push('\n');
            s
        }
        Format::Md => {
            let n_max = t.n_max();
            let mut out = String::from("| n\\k |");
            for k in 0..=n_max {
                out.push_str(&format!(" {k} |"));
            }
            out.push('\n');
            out.push_str(&"|---".repeat(n_max + 2));
            out.push_str("|\n");
            for (n, row) in t.rows().enumerate() {
                out.push_str(&format!("| {n} |"));
                for k in 0..=n_max {
                    match row.get(k) {
                        Some(v) => out.push_str(&format!(" {} |", format_rational(v))),
                        None => out.push_str("  |"),
                    }
                }
                out.push('\n');
            }
            out
        }
    }
}

/// One line per path (step string, rise abscissas, their complement,
/// weight when a spec is given) plus count/total footers.
pub fn render_paths(n: usize, k: usize, spec: Option<&GkpSpec>) -> String {
    let mut out = String::new();
    let mut count = 0u64;
    let mut total = gkp_core::rational::rat(0);
    for p in enumerate_paths(n, k).expect("validated by caller") {
        count += 1;
        let rises = p.rise_abscissas();
        out.push_str(&format!(
            "{} | \u{3c3}={} | \u{3c3}\u{303}={}",
            p.step_string(),
            rises.display(),
            rises.complement().display()
        ));
        if let Some(spec) = spec {
            let w = p.weight(spec);
            total += &w;
            out.push_str(&format!(" | w={}", format_rational(&w)));
        }
        out.push('\n');
    }
    out.push_str(&format!("count = {count}\n"));
    if spec.is_some() {
        out.push_str(&format!("total = {}\n", format_rational(&total)));
    }
    out
}

/// Brute-force summary for Q_{m,n}: word count, descent histograms in
/// both conventions, and the matching triangle row.
pub fn render_oracle(m: usize, n: usize) -> String {
    let count = enumerate_stirling_perms(m, n).count();
    let internal = descent_histogram(m, n, false);
    let with_final = descent_histogram(m, n, true);
    let hist_row = |hist: &std::collections::BTreeMap<usize, u64>, len: usize| {
        (0..len)
            .map(|k| hist.get(&k).copied().unwrap_or(0).to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut out = format!("count = {count}\n");
    out.push_str(&format!(
        "descents (internal): {}\n",
        hist_row(&internal, n.max(1))
    ));
    out.push_str(&format!(
        "descents (with final): {}\n",
        hist_row(&with_final, n + 1)
    ));
    if n >= 1 {
        let b = eulerian_triangle(m, n);
        let row = b
            .row(n)
            .expect("built to n")
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .join(",");
        let matches = row == hist_row(&internal, n);
        out.push_str(&format!("triangle row {n} (r={m}): {row}\n"));
        out.push_str(&format!("match: {}\n", if matches { "yes" } else { "NO" }));
    }
    out
}

/// The b = 1 transition matrix as a Markdown table.
pub fn render_basis_matrix(a: &AffineWeight, n_max: usize) -> String {
    let spec = GkpSpec::new(a.clone(), AffineWeight::unit());
    let t = Triangle::from_recurrence(&spec, n_max);
    render_triangle(&t, &spec, Format::Md)
}

/// Per-degree pass/fail lines for the transition identity.
pub fn render_transition_report(report: &TransitionReport) -> String {
    let mut out = String::new();
    for check in &report.checks {
        match &check.first_diff {
            None => out.push_str(&format!("n={}: pass\n", check.n)),
            Some((i, lhs, rhs)) => out.push_str(&format!(
                "n={}: FAIL at coefficient {} ({} != {})\n",
                check.n,
                i,
                format_rational(lhs),
                format_rational(rhs)
            )),
        }
    }
    out.push_str(&format!(
        "transition identity: {}\n",
        if report.all_pass() { "PASS" } else { "FAIL" }
    ));
    out
}
