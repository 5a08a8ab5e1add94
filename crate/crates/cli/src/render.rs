//! Output documents in the supported formats.

use std::fmt::Write;

use clap::ValueEnum;
use layerlie::charcalc::{CheckStatus, Expansion, OrderedWeightList, VerifyReport, WeightMatrix};
use layerlie::{Poly, Rational, Weight};
use serde::{Deserialize, Serialize};

use crate::Failure;

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

/// What a command prints, and its exit status.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Output {
    pub stdout: String,
    pub status: u8,
    /// Diagnostics; not cached.
    #[serde(skip)]
    pub stderr: Vec<String>,
}

impl Output {
    fn ok(stdout: String) -> Result<Self, Failure> {
        Ok(Output { stdout, status: 0, stderr: Vec::new() })
    }
}

fn unsupported(format: Format, what: &str) -> Result<Output, Failure> {
    Err(Failure::Usage(format!("{what} cannot be written as {format:?}").to_lowercase()))
}

fn json<T: Serialize>(value: &T) -> Result<Output, Failure> {
    let mut s = serde_json::to_string(value).map_err(|e| Failure::Usage(e.to_string()))?;
    s.push('\n');
    Output::ok(s)
}

pub fn scalar(format: Format, algebra: &str, w: &Weight, field: &str, value: &Rational) -> Result<Output, Failure> {
    match format {
        Format::Text | Format::Latex => Output::ok(format!("{value}\n")),
        Format::Json => json(&serde_json::json!({
            "algebra": algebra,
            "weight": w.labels(),
            field: value.to_string(),
        })),
        Format::Csv => Output::ok(format!("algebra,weight,{field}\n{algebra},\"{w}\",{value}\n")),
    }
}

pub fn polynomial(format: Format, p: &Poly) -> Result<Output, Failure> {
    match format {
        Format::Text => Output::ok(format!("{}\n", p.to_text())),
        Format::Latex => Output::ok(format!("{}\n", p.to_latex())),
        Format::Json => json(&p.to_doc()),
        Format::Csv => {
            let doc = p.to_doc();
            let mut s: String = (1..=doc.vars).map(|i| format!("l{i},")).collect();
            s.push_str("coef\n");
            for t in &doc.terms {
                let exps: Vec<String> = t.exp.iter().map(u32::to_string).collect();
                let _ = writeln!(s, "{},{}", exps.join(","), t.coef);
            }
            Output::ok(s)
        }
    }
}

fn term_text(c: i64, symbol: &str, w: &Weight, first: bool) -> String {
    let sign = match (c < 0, first) {
        (true, true) => "-",
        (true, false) => " - ",
        (false, true) => "",
        (false, false) => " + ",
    };
    let mag = c.unsigned_abs();
    if mag == 1 {
        format!("{sign}{symbol}{w}")
    } else {
        format!("{sign}{mag}*{symbol}{w}")
    }
}

fn latex_symbol(symbol: &str) -> &str {
    match symbol {
        "ch" => "\\mathrm{ch}",
        "L" => "\\mathcal{L}",
        other => other,
    }
}

/// `symbol` names the basis: `ch`, `m` or `L`.
pub fn expansion(
    format: Format,
    e: &Expansion,
    order: Option<&OrderedWeightList>,
    symbol: &str,
) -> Result<Output, Failure> {
    let doc = e.to_doc(order);
    let pairs = doc.weights.iter().zip(&doc.coeffs).map(|(l, &c)| (Weight::new(l.clone()), c));
    match format {
        Format::Json => json(&doc),
        Format::Text => {
            let mut s: String = pairs.enumerate().map(|(i, (w, c))| term_text(c, symbol, &w, i == 0)).collect();
            if s.is_empty() {
                s.push('0');
            }
            s.push('\n');
            Output::ok(s)
        }
        Format::Latex => {
            let sym = latex_symbol(symbol);
            let mut s: String = pairs
                .enumerate()
                .map(|(i, (w, c))| term_text(c, &format!("{sym}_{{"), &w, i == 0).replace('*', "\\,") + "}")
                .collect();
            if s.is_empty() {
                s.push('0');
            }
            s.push('\n');
            Output::ok(s)
        }
        Format::Csv => {
            let mut s = String::from("weight,coeff\n");
            for (w, c) in pairs {
                let _ = writeln!(s, "\"{w}\",{c}");
            }
            Output::ok(s)
        }
    }
}

pub fn matrix(format: Format, m: &WeightMatrix) -> Result<Output, Failure> {
    match format {
        Format::Csv => Output::ok(m.to_csv()),
        Format::Json => json(&m.to_doc()),
        Format::Text => {
            let labels: Vec<String> = m.order.weights().iter().map(Weight::to_string).collect();
            let lw = labels.iter().map(String::len).max().unwrap_or(0);
            let rows = m.matrix.to_square();
            let cw = rows.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
            let mut s = String::new();
            for (label, row) in labels.iter().zip(&rows) {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>cw$}")).collect();
                let _ = writeln!(s, "{label:<lw$}  {}", cells.join(" "));
            }
            Output::ok(s)
        }
        Format::Latex => {
            let n = m.order.len();
            let mut s = format!("\\left(\\begin{{array}}{{{}}}\n", "r".repeat(n));
            let rows = m.matrix.to_square();
            for (i, row) in rows.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(i64::to_string).collect();
                let end = if i + 1 < n { "\\\\" } else { "" };
                let _ = writeln!(s, "{}{end}", cells.join("&"));
            }
            s.push_str("\\end{array}\\right)\n");
            Output::ok(s)
        }
    }
}

pub fn report(format: Format, r: &VerifyReport) -> Result<Output, Failure> {
    match format {
        Format::Json => json(r),
        Format::Text => {
            let mut s = String::new();
            for c in &r.checks {
                let tag = match c.status {
                    CheckStatus::Pass => "pass",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::Skip => "skip",
                };
                match &c.witness {
                    Some(wit) => writeln!(s, "{tag}  {}: {wit}", c.name),
                    None => writeln!(s, "{tag}  {}", c.name),
                }
                .expect("writing to a string");
            }
            let failed = r.failures().count();
            if failed == 0 {
                s.push_str("all checks passed\n");
            } else {
                let _ = writeln!(s, "{failed} of {} checks failed", r.checks.len());
            }
            Output::ok(s)
        }
        Format::Csv => {
            let mut s = String::from("name,status,witness\n");
            for c in &r.checks {
                let status = serde_json::to_value(c.status).expect("status serializes");
                let wit = c.witness.as_deref().unwrap_or("").replace('"', "\"\"");
                let _ = writeln!(s, "{},{},\"{wit}\"", c.name, status.as_str().unwrap_or_default());
            }
            Output::ok(s)
        }
        Format::Latex => unsupported(format, "a verification report"),
    }
}
