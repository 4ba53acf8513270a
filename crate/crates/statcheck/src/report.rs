//! Serialisable verdict reports and plain-text/CSV rendering.
//!
//! Exact values are written as `p/q` strings (integers as `p`). Floating-point
//! values only appear in spectra and are rounded to 12 significant digits.

use serde::{Deserialize, Serialize};
use statcheck_core::audit::{AuditVerdict, Violation, ViolationKind};
use statcheck_core::scalar::{format_rational, parse_rational};
use statcheck_core::{Partition, Rational, Side};

use crate::config::ResolvedSpec;

pub fn rational_strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

/// Rounds to 12 significant digits; `-0` becomes `0`.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let v: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if v == 0.0 {
        0.0
    } else {
        v
    }
}

pub fn round_all(xs: &[f64]) -> Vec<f64> {
    xs.iter().map(|&x| round_sig(x)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub kind: String,
    pub partition: Vec<usize>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub title: String,
    pub label: String,
    pub n: usize,
    pub input_side: String,
    pub qm_ok: bool,
    pub sm_ok: bool,
    pub qs_ok: bool,
    pub c: Vec<String>,
    pub omega: Vec<String>,
    pub violations: Vec<ViolationRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerdictRecord {
    pub fn new(title: &str, v: &AuditVerdict) -> Self {
        Self {
            title: title.to_string(),
            label: v.label.clone(),
            n: v.n,
            input_side: v.input_side.name().to_string(),
            qm_ok: v.qm_ok,
            sm_ok: v.sm_ok,
            qs_ok: v.qs_ok,
            c: rational_strings(&v.c),
            omega: rational_strings(&v.omega),
            violations: v
                .violations
                .iter()
                .map(|x| ViolationRecord {
                    kind: x.kind.code().to_string(),
                    partition: x.partition.parts().to_vec(),
                    value: format_rational(&x.value),
                })
                .collect(),
            notes: Vec::new(),
        }
    }

    pub fn to_verdict(&self) -> Result<AuditVerdict, String> {
        let rationals = |xs: &[String]| {
            xs.iter()
                .map(|s| parse_rational(s).ok_or_else(|| format!("not a rational: {s:?}")))
                .collect::<Result<Vec<_>, _>>()
        };
        let violations = self
            .violations
            .iter()
            .map(|r| {
                Ok(Violation {
                    kind: ViolationKind::from_code(&r.kind).ok_or_else(|| format!("unknown violation kind {:?}", r.kind))?,
                    partition: Partition::new(r.partition.clone()).map_err(|e| e.to_string())?,
                    value: parse_rational(&r.value).ok_or_else(|| format!("not a rational: {:?}", r.value))?,
                })
            })
            .collect::<Result<Vec<_>, String>>()?;
        Ok(AuditVerdict {
            label: self.label.clone(),
            n: self.n,
            input_side: Side::parse(&self.input_side).ok_or_else(|| format!("unknown side {:?}", self.input_side))?,
            qm_ok: self.qm_ok,
            sm_ok: self.sm_ok,
            qs_ok: self.qs_ok,
            violations,
            c: rationals(&self.c)?,
            omega: rationals(&self.omega)?,
        })
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "✓"
    } else {
        "✗"
    }
}

fn kinds_text(v: &AuditVerdict) -> String {
    let kinds: Vec<&str> = v.kinds().into_iter().map(ViolationKind::code).collect();
    if kinds.is_empty() {
        String::from("-")
    } else {
        kinds.join(",")
    }
}

/// `Gentile | QM ✗ | SM ✓ | QS ✗ | gentile q=2 N=4 | NEGATIVE_C`
pub fn verdict_row(title: &str, v: &AuditVerdict) -> String {
    format!(
        "{title} | QM {} | SM {} | QS {} | {} | {}",
        mark(v.qm_ok),
        mark(v.sm_ok),
        mark(v.qs_ok),
        v.label,
        kinds_text(v)
    )
}

pub fn verdict_text(rows: &[(ResolvedSpec, AuditVerdict)]) -> String {
    let mut out = String::new();
    for (spec, v) in rows {
        out.push_str(&verdict_row(&spec.title, v));
        out.push('\n');
        out.push_str(&format!("    C = ({})  Omega = ({})\n", rational_strings(&v.c).join(","), rational_strings(&v.omega).join(",")));
        for kind in v.kinds() {
            out.push_str(&format!("    {}: {}\n", kind.code(), kind.interpretation()));
        }
    }
    out
}

pub fn verdict_json(rows: &[(ResolvedSpec, AuditVerdict)]) -> String {
    let records: Vec<VerdictRecord> = rows.iter().map(|(s, v)| VerdictRecord::new(&s.title, v)).collect();
    serde_json::to_string_pretty(&records).expect("records serialise")
}

pub fn verdict_csv(rows: &[(ResolvedSpec, AuditVerdict)]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["title", "label", "n", "input_side", "qm_ok", "sm_ok", "qs_ok", "violations", "c", "omega"])
        .expect("in-memory write");
    for (s, v) in rows {
        let n = v.n.to_string();
        let c = rational_strings(&v.c).join(" ");
        let omega = rational_strings(&v.omega).join(" ");
        w.write_record([
            s.title.as_str(),
            v.label.as_str(),
            n.as_str(),
            v.input_side.name(),
            if v.qm_ok { "true" } else { "false" },
            if v.sm_ok { "true" } else { "false" },
            if v.qs_ok { "true" } else { "false" },
            kinds_text(v).as_str(),
            c.as_str(),
            omega.as_str(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

/// Column-aligned plain text; the first row is the header.
pub fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<width$}", width = widths[c]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn csv_rows(rows: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}
