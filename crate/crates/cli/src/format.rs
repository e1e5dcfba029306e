//! Rendering of records, metrics and search reports as aligned text, CSV,
//! JSON or Markdown, and parsing of the CSV/JSON forms back into rows.
//!
//! CSV and JSON carry every integer as an exact decimal string and every
//! irrational root as `√p` or `√(p/q)`. Nothing is ever written as a float.

use std::fmt::{self, Display, Write as _};
use std::str::FromStr;

use clap::ValueEnum;
use exradii_core::families::Source;
use exradii_core::tables::{TableFamily, TableRow};
use exradii_core::{
    ExactRational, ExactRoot, IsoTriangleRecord, PythParams, SearchReport, Side, Target,
    TriangleMetrics,
};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const SCHEMA_VERSION: &str = "exradii/1";
pub const GENERATED_BY: &str = concat!("exradii ", env!("CARGO_PKG_VERSION"));

pub const ISO_COLUMNS: [&str; 11] = [
    "source", "K_or_L", "m", "n", "alpha", "beta", "rho_beta", "rho_alpha", "area", "height",
    "perimeter",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
    Markdown,
}

/// A value carried as its decimal (or root) string in CSV and JSON.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dec<T>(pub T);

impl<T: Display> Serialize for Dec<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de, T: FromStr> Deserialize<'de> for Dec<T>
where
    T::Err: Display,
{
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map(Dec).map_err(serde::de::Error::custom)
    }
}

impl<T: Display> Display for Dec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An [`ExactRoot`] that parses back from its display form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootText(pub ExactRoot);

impl Display for RootText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for RootText {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let rational = |t: &str| {
            ExactRational::from_str(t).map_err(|e| format!("bad rational {t:?}: {e}"))
        };
        let root = match s.strip_prefix('√') {
            Some(rest) => {
                let inner = rest
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .unwrap_or(rest);
                ExactRoot::new(rational(inner)?)
            }
            None => ExactRoot::from_value(rational(s)?),
        }
        .map_err(|e| e.to_string())?;
        Ok(RootText(root))
    }
}

impl Serialize for RootText {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RootText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One isosceles triangle in the stable CSV/JSON schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoRow {
    pub source: String,
    #[serde(rename = "K_or_L")]
    pub k_or_l: Option<Dec<u64>>,
    pub m: Option<Dec<u64>>,
    pub n: Option<Dec<u64>>,
    pub alpha: Dec<u64>,
    pub beta: Dec<u64>,
    pub rho_beta: RootText,
    pub rho_alpha: RootText,
    pub area: Dec<u128>,
    pub height: Dec<u64>,
    pub perimeter: Dec<u128>,
}

impl IsoRow {
    pub fn from_record(rec: &IsoTriangleRecord, source: &Source) -> Self {
        let params = source.params();
        IsoRow {
            source: source.tag().to_string(),
            k_or_l: params.map(|p| Dec(p.0)),
            m: params.map(|p| Dec(p.1)),
            n: params.map(|p| Dec(p.2)),
            alpha: Dec(rec.alpha),
            beta: Dec(rec.beta),
            rho_beta: RootText(rec.rho_beta.clone()),
            rho_alpha: RootText(rec.rho_alpha.clone()),
            area: Dec(rec.area),
            height: Dec(rec.h),
            perimeter: Dec(rec.perimeter()),
        }
    }

    pub fn from_table_row(row: &TableRow) -> Self {
        let int = |v: u64| RootText(ExactRoot::from_value(ExactRational::from_integer(v.into())).unwrap());
        IsoRow {
            source: match row.family {
                TableFamily::F1 => "F1",
                TableFamily::F2 => "F2",
            }
            .to_string(),
            k_or_l: Some(Dec(row.scale)),
            m: Some(Dec(row.m)),
            n: Some(Dec(row.n)),
            alpha: Dec(row.alpha),
            beta: Dec(row.beta),
            rho_beta: int(row.rho_beta),
            rho_alpha: int(row.rho_alpha),
            area: Dec(row.area),
            height: Dec(row.height),
            perimeter: Dec(row.perimeter()),
        }
    }

    /// `K=1, n=1, m=2` style label; `scale_name` is K, L or δ.
    pub fn label(&self, scale_name: &str) -> String {
        match (&self.k_or_l, &self.m, &self.n) {
            (Some(k), Some(m), Some(n)) => format!("{scale_name}={k}, n={n}, m={m}"),
            _ => self.source.clone(),
        }
    }

    fn scale_name(&self) -> &'static str {
        match self.source.as_str() {
            "F1" => "K",
            "F2" => "L",
            _ => "δ",
        }
    }
}

/// A Pythagorean triangle row. `alpha` is the hypotenuse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PythRow {
    pub source: String,
    pub delta: Dec<u64>,
    pub m: Dec<u64>,
    pub n: Dec<u64>,
    pub alpha: Dec<u64>,
    pub beta: Dec<u64>,
    pub gamma: Dec<u64>,
    pub rho_alpha: Dec<u64>,
    pub rho_beta: Dec<u64>,
    pub rho_gamma: Dec<u64>,
    pub area: Dec<u128>,
    pub perimeter: Dec<u128>,
}

impl PythRow {
    pub fn new(p: &PythParams, sides: (u64, u64, u64), rho: (u64, u64, u64)) -> Self {
        let (a, b, c) = sides;
        PythRow {
            source: "pyth".to_string(),
            delta: Dec(p.delta),
            m: Dec(p.mn.m()),
            n: Dec(p.mn.n()),
            alpha: Dec(a),
            beta: Dec(b),
            gamma: Dec(c),
            rho_alpha: Dec(rho.0),
            rho_beta: Dec(rho.1),
            rho_gamma: Dec(rho.2),
            area: Dec(b as u128 * c as u128 / 2),
            perimeter: Dec(a as u128 + b as u128 + c as u128),
        }
    }
}

#[derive(Serialize)]
struct EnvelopeRef<'a, R> {
    schema_version: &'a str,
    generated_by: &'a str,
    rows: &'a [R],
}

#[derive(Deserialize)]
struct Envelope<R> {
    schema_version: String,
    rows: Vec<R>,
}

fn to_json<R: Serialize>(rows: &[R]) -> String {
    let env = EnvelopeRef {
        schema_version: SCHEMA_VERSION,
        generated_by: GENERATED_BY,
        rows,
    };
    let mut s = serde_json::to_string_pretty(&env).expect("rows serialize");
    s.push('\n');
    s
}

fn to_csv<R: Serialize>(rows: &[R], header: &[&str]) -> String {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.serialize(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn parse_csv<R: for<'de> Deserialize<'de>>(text: &str) -> Result<Vec<R>, String> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())
}

pub fn parse_json<R: for<'de> Deserialize<'de>>(text: &str) -> Result<Vec<R>, String> {
    let env: Envelope<R> = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if env.schema_version != SCHEMA_VERSION {
        return Err(format!("unsupported schema {}", env.schema_version));
    }
    Ok(env.rows)
}

/// Left-aligned text columns separated by two spaces, no trailing blanks.
fn aligned(header: &[&str], body: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(cell);
            } else {
                write!(s, "{cell:<w$}  ").unwrap();
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    for row in body {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn markdown(header: &[&str], body: &[Vec<String>]) -> String {
    let mut out = format!("| {} |\n", header.join(" | "));
    out.push_str(&format!("|{}\n", "---|".repeat(header.len())));
    for row in body {
        out.push_str(&format!("| {} |\n", row.join(" | ")));
    }
    out
}

const ISO_HEADER: [&str; 9] = ["source", "params", "α", "β=γ", "ρβ=ργ", "ρα", "E", "h", "perimeter"];

fn iso_cells(r: &IsoRow) -> Vec<String> {
    vec![
        r.source.clone(),
        r.label(r.scale_name()),
        r.alpha.to_string(),
        r.beta.to_string(),
        r.rho_beta.to_string(),
        r.rho_alpha.to_string(),
        r.area.to_string(),
        r.height.to_string(),
        r.perimeter.to_string(),
    ]
}

pub fn render_iso(rows: &[IsoRow], format: Format) -> String {
    match format {
        Format::Csv => to_csv(rows, &ISO_COLUMNS),
        Format::Json => to_json(rows),
        Format::Table => aligned(&ISO_HEADER, &rows.iter().map(iso_cells).collect::<Vec<_>>()),
        Format::Markdown => markdown(&ISO_HEADER, &rows.iter().map(iso_cells).collect::<Vec<_>>()),
    }
}

const PYTH_COLUMNS: [&str; 12] = [
    "source", "delta", "m", "n", "alpha", "beta", "gamma", "rho_alpha", "rho_beta", "rho_gamma",
    "area", "perimeter",
];

const PYTH_HEADER: [&str; 9] = ["params", "α", "β", "γ", "ρα", "ρβ", "ργ", "E", "perimeter"];

pub fn render_pyth(rows: &[PythRow], format: Format) -> String {
    let cells = || -> Vec<Vec<String>> {
        rows.iter()
            .map(|r| {
                vec![
                    format!("δ={}, n={}, m={}", r.delta, r.n, r.m),
                    r.alpha.to_string(),
                    r.beta.to_string(),
                    r.gamma.to_string(),
                    r.rho_alpha.to_string(),
                    r.rho_beta.to_string(),
                    r.rho_gamma.to_string(),
                    r.area.to_string(),
                    r.perimeter.to_string(),
                ]
            })
            .collect()
    };
    match format {
        Format::Csv => to_csv(rows, &PYTH_COLUMNS),
        Format::Json => to_json(rows),
        Format::Table => aligned(&PYTH_HEADER, &cells()),
        Format::Markdown => markdown(&PYTH_HEADER, &cells()),
    }
}

const PAPER_HEADER: [&str; 5] = ["params", "α", "β = γ", "ρ_β = ρ_γ", "ρ_α"];

/// Both worked tables. With `verbatim_labels` every F2 row is labelled with
/// `K=` as in the original print; otherwise F2 rows use `L=`.
pub fn render_paper_tables(
    f1: &[TableRow],
    f2: &[TableRow],
    format: Format,
    verbatim_labels: bool,
) -> String {
    let rows: Vec<IsoRow> = f1.iter().chain(f2).map(IsoRow::from_table_row).collect();
    match format {
        Format::Csv => return to_csv(&rows, &ISO_COLUMNS),
        Format::Json => return to_json(&rows),
        Format::Table | Format::Markdown => {}
    }
    let section = |title: &str, part: &[IsoRow], scale: &str| {
        let body: Vec<Vec<String>> = part
            .iter()
            .map(|r| {
                vec![
                    r.label(scale),
                    r.alpha.to_string(),
                    r.beta.to_string(),
                    r.rho_beta.to_string(),
                    r.rho_alpha.to_string(),
                ]
            })
            .collect();
        match format {
            Format::Markdown => format!("### {title}\n\n{}", markdown(&PAPER_HEADER, &body)),
            _ => format!("{title}\n{}", aligned(&PAPER_HEADER, &body)),
        }
    };
    let f2_scale = if verbatim_labels { "K" } else { "L" };
    let (r1, r2) = rows.split_at(f1.len());
    format!(
        "{}\n{}",
        section("Family F1", r1, "K"),
        section("Family F2", r2, f2_scale)
    )
}

#[derive(Serialize)]
struct MetricsView {
    schema_version: &'static str,
    a: String,
    b: String,
    c: String,
    s: String,
    heron16: String,
    area: String,
    heron: bool,
    cos_a: String,
    cos_b: String,
    cos_c: String,
    rho_a: String,
    rho_b: String,
    rho_c: String,
    rho_a_integral: bool,
    rho_b_integral: bool,
    rho_c_integral: bool,
}

impl MetricsView {
    fn new(m: &TriangleMetrics) -> Self {
        MetricsView {
            schema_version: SCHEMA_VERSION,
            a: m.sides.a().to_string(),
            b: m.sides.b().to_string(),
            c: m.sides.c().to_string(),
            s: m.s.to_string(),
            heron16: m.heron16.to_string(),
            area: m.area.surd_string(),
            heron: m.is_heron(),
            cos_a: m.cos_a.to_string(),
            cos_b: m.cos_b.to_string(),
            cos_c: m.cos_c.to_string(),
            rho_a: m.rho_a.to_string(),
            rho_b: m.rho_b.to_string(),
            rho_c: m.rho_c.to_string(),
            rho_a_integral: m.rho_a.is_integer(),
            rho_b_integral: m.rho_b.is_integer(),
            rho_c_integral: m.rho_c.is_integer(),
        }
    }
}

fn kind(root: &ExactRoot) -> &'static str {
    if root.is_integer() {
        "integer"
    } else if root.is_rational() {
        "rational"
    } else {
        "irrational"
    }
}

pub fn render_metrics(m: &TriangleMetrics, format: Format) -> String {
    let v = MetricsView::new(m);
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&v).expect("serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.serialize(&v).expect("in-memory write");
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        Format::Table | Format::Markdown => {
            let mut body = vec![
                vec!["sides".into(), format!("{}", m.sides)],
                vec!["s".into(), v.s.clone()],
                vec!["16E²".into(), v.heron16.clone()],
                vec![
                    "E".into(),
                    format!(
                        "{} ({})",
                        v.area,
                        if m.is_heron() { "Heron" } else { "not Heron" }
                    ),
                ],
            ];
            for x in Side::ALL {
                body.push(vec![format!("cos {}", x.to_string().to_uppercase()), m.cos(x).to_string()]);
            }
            for x in Side::ALL {
                body.push(vec![format!("ρ_{x}"), format!("{} ({})", m.rho(x), kind(m.rho(x)))]);
            }
            if format == Format::Markdown {
                markdown(&["quantity", "value"], &body)
            } else {
                aligned(&["quantity", "value"], &body)
            }
        }
    }
}

fn target_name(t: Target) -> &'static str {
    match t {
        Target::Prop1 => "prop1",
        Target::Prop2 => "prop2",
        Target::Theorem1 => "theorem1",
    }
}

fn pairs(set: impl IntoIterator<Item = (u64, u64)>) -> Vec<String> {
    set.into_iter().map(|(a, b)| format!("({a}, {b})")).collect()
}

#[derive(Serialize)]
struct ReportView {
    schema_version: &'static str,
    generated_by: &'static str,
    target: &'static str,
    max_perimeter: String,
    oracle: usize,
    family: usize,
    missing: usize,
    extra: usize,
    prop1_violations: usize,
    overlaps: usize,
    elapsed_ms: String,
    result: &'static str,
}

#[derive(Serialize)]
struct ReportDetail<'a> {
    #[serde(flatten)]
    summary: &'a ReportView,
    missing_from_family: Vec<String>,
    extra_in_family: Vec<String>,
    violations: Vec<String>,
}

pub fn render_report(r: &SearchReport, format: Format) -> String {
    let view = ReportView {
        schema_version: SCHEMA_VERSION,
        generated_by: GENERATED_BY,
        target: target_name(r.target),
        max_perimeter: r.bound.to_string(),
        oracle: r.oracle_set.len(),
        family: r.family_set.len(),
        missing: r.missing_from_family.len(),
        extra: r.extra_in_family.len(),
        prop1_violations: r.prop1_violations.len(),
        overlaps: r.overlaps.len(),
        elapsed_ms: format!("{:.3}", r.elapsed.as_secs_f64() * 1e3),
        result: if r.passed() { "PASS" } else { "FAIL" },
    };
    let violations: Vec<String> = r
        .prop1_violations
        .iter()
        .map(|v| format!("({}, {}) E={}: {}", v.alpha, v.beta, v.area, v.reason))
        .collect();
    match format {
        Format::Json => {
            let detail = ReportDetail {
                summary: &view,
                missing_from_family: pairs(r.missing_from_family.iter().copied()),
                extra_in_family: pairs(r.extra_in_family.iter().copied()),
                violations,
            };
            let mut s = serde_json::to_string_pretty(&detail).expect("serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.serialize(&view).expect("in-memory write");
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        Format::Table | Format::Markdown => {
            let mut body = vec![
                vec!["target".into(), view.target.into()],
                vec!["max perimeter".into(), view.max_perimeter.clone()],
                vec!["oracle triangles".into(), view.oracle.to_string()],
            ];
            if r.target != Target::Prop1 {
                body.push(vec!["family triangles".into(), view.family.to_string()]);
                body.push(vec!["missing from family".into(), view.missing.to_string()]);
                body.push(vec!["extra in family".into(), view.extra.to_string()]);
                body.push(vec!["multi-source triangles".into(), view.overlaps.to_string()]);
            }
            body.push(vec!["prop1 violations".into(), view.prop1_violations.to_string()]);
            body.push(vec!["elapsed".into(), format!("{} ms", view.elapsed_ms)]);
            let mut out = if format == Format::Markdown {
                markdown(&["check", "value"], &body)
            } else {
                aligned(&["check", "value"], &body)
            };
            for (label, list) in [
                ("missing", pairs(r.missing_from_family.iter().copied())),
                ("extra", pairs(r.extra_in_family.iter().copied())),
                ("violation", violations),
            ] {
                for item in list.iter().take(20) {
                    writeln!(out, "{label}: {item}").unwrap();
                }
            }
            writeln!(out, "{}", view.result).unwrap();
            out
        }
    }
}
