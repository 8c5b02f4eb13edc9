use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use trunctab_core::bijection::{pair_to_straight, shifted_to_tableau, straight_to_pair, tableau_to_shifted, SkewTableau};
use trunctab_core::closed::Family;
use trunctab_core::exact::{Int, QSeries};
use trunctab_core::oracle::{count_syt_oracle, pp_series_with_fixed, Filling};
use trunctab_core::shape::{Partition, TruncatedShape};
use trunctab_core::symfunc::{rsk, rsk_inverse, IntMatrix, Tableau};
use trunctab_core::verify::{run, Limits, Report, Suite};
use trunctab_core::Error;

use crate::shape_spec::{ParseError, ShapeSpec};

pub const EXIT_VERIFY: u8 = 2;
pub const EXIT_UNSUPPORTED: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;
pub const EXIT_INPUT: u8 = 1;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }

    fn unsupported(spec: &ShapeSpec, what: &str) -> Self {
        CliError::new(EXIT_UNSUPPORTED, format!("unsupported family: no {what} for {spec}"))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooLarge { .. } => EXIT_BUDGET,
            Error::RequiresNLeqM { .. } | Error::NonconvergentSpec => EXIT_UNSUPPORTED,
            _ => EXIT_INPUT,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::new(EXIT_INPUT, e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::new(EXIT_INPUT, format!("bad JSON: {e}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// A command's result: JSON for `--json`, text otherwise, and an exit code.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, code: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum CountMethod {
    Formula,
    Oracle,
    Limit,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GfMethod {
    Closed,
    Oracle,
    Both,
}

fn parse_shape(s: &str) -> CliResult<(ShapeSpec, TruncatedShape)> {
    let spec: ShapeSpec = s.parse()?;
    let shape = spec.to_shape()?;
    Ok((spec, shape))
}

fn family(spec: &ShapeSpec, shape: &TruncatedShape, what: &str) -> CliResult<Family> {
    Family::detect(shape).ok_or_else(|| CliError::unsupported(spec, what))
}

fn count_one(spec: &ShapeSpec, shape: &TruncatedShape, method: CountMethod, budget: usize) -> CliResult<Int> {
    match method {
        CountMethod::Oracle => Ok(count_syt_oracle(shape, budget)?),
        CountMethod::Formula => Ok(family(spec, shape, "product formula")?.formula()?),
        CountMethod::Limit => Ok(family(spec, shape, "generating-function limit")?.limit()?),
        CountMethod::All => unreachable!("expanded by the caller"),
    }
}

fn method_name(m: CountMethod) -> &'static str {
    match m {
        CountMethod::Formula => "formula",
        CountMethod::Oracle => "oracle",
        CountMethod::Limit => "limit",
        CountMethod::All => "all",
    }
}

pub fn count(shape: &str, method: CountMethod, budget: usize) -> CliResult<Output> {
    let start = Instant::now();
    let (spec, tshape) = parse_shape(shape)?;
    let canonical = spec.to_string();
    if method != CountMethod::All {
        let value = count_one(&spec, &tshape, method, budget)?;
        let ms = start.elapsed().as_millis();
        let json = json!({
            "shape": canonical,
            "method": method_name(method),
            "count": value.to_string(),
            "elapsed_ms": ms,
        });
        return Ok(Output::ok(json, format!("{canonical}: {value} ({}, {ms} ms)", method_name(method))));
    }
    family(&spec, &tshape, "product formula")?;
    let mut results = Vec::new();
    let mut text = String::new();
    let mut values = Vec::new();
    for m in [CountMethod::Formula, CountMethod::Limit, CountMethod::Oracle] {
        match count_one(&spec, &tshape, m, budget) {
            Ok(v) => {
                text.push_str(&format!("  {:<8} {v}\n", method_name(m)));
                results.push(json!({ "method": method_name(m), "count": v.to_string() }));
                values.push(Some(v));
            }
            Err(e) => {
                text.push_str(&format!("  {:<8} error: {e}\n", method_name(m)));
                results.push(json!({ "method": method_name(m), "error": e.message }));
                values.push(None);
            }
        }
    }
    let agreement = values.iter().all(Option::is_some) && values.windows(2).all(|w| w[0] == w[1]);
    let ms = start.elapsed().as_millis();
    let json = json!({
        "shape": canonical,
        "method": "all",
        "results": results,
        "agreement": agreement,
        "elapsed_ms": ms,
    });
    let text = format!("{canonical} ({ms} ms)\n{text}  agreement: {agreement}");
    Ok(Output { json, text, code: if agreement { 0 } else { EXIT_VERIFY } })
}

fn coeff_strings(s: &QSeries) -> Vec<String> {
    s.coeffs().iter().map(Int::to_string).collect()
}

pub fn gf(shape: &str, order: usize, method: GfMethod, budget: usize) -> CliResult<Output> {
    let (spec, tshape) = parse_shape(shape)?;
    let closed = || -> CliResult<QSeries> {
        let fam = family(&spec, &tshape, "closed generating function")?;
        fam.gf(order).map_err(|e| match e {
            Error::RequiresNLeqM { .. } => {
                CliError::new(EXIT_UNSUPPORTED, format!("unsupported family: closed form needs rows >= columns ({e})"))
            }
            e => e.into(),
        })
    };
    let oracle = || -> CliResult<QSeries> { Ok(pp_series_with_fixed(&tshape, order, &[], budget)?) };
    match method {
        GfMethod::Closed | GfMethod::Oracle => {
            let s = if method == GfMethod::Closed { closed()? } else { oracle()? };
            Ok(Output::ok(json!(coeff_strings(&s)), s.to_string()))
        }
        GfMethod::Both => {
            let (c, o) = (closed()?, oracle()?);
            let equal = c == o;
            let json = json!({
                "shape": spec.to_string(),
                "order": order,
                "closed": coeff_strings(&c),
                "oracle": coeff_strings(&o),
                "equal": equal,
            });
            let text = format!("closed {c}\noracle {o}\nequal: {equal}");
            Ok(Output { json, text, code: if equal { 0 } else { EXIT_VERIFY } })
        }
    }
}

fn report_json(r: &Report) -> Value {
    json!({
        "suite": r.suite.name(),
        "passed": r.passed(),
        "cases": r.cases.iter().map(|c| json!({
            "name": c.name,
            "status": c.status.name(),
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

fn report_text(r: &Report) -> String {
    let width = r.cases.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
    let mut out = format!("suite {}: {}\n", r.suite, if r.passed() { "pass" } else { "FAIL" });
    for c in &r.cases {
        out.push_str(&format!("  {:<4} {:<width$}  {}\n", c.status.name(), c.name, c.detail));
    }
    out
}

pub fn verify(suite: &str, limits: &Limits) -> CliResult<Output> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(|_| {
            let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
            CliError::new(EXIT_INPUT, format!("unknown suite {suite:?}; expected one of {} or all", names.join(", ")))
        })?]
    };
    let reports: Vec<Report> = suites.into_iter().map(|s| run(s, limits)).collect();
    let passed = reports.iter().all(Report::passed);
    let json = if reports.len() == 1 { report_json(&reports[0]) } else { Value::Array(reports.iter().map(report_json).collect()) };
    let text = reports.iter().map(report_text).collect::<Vec<_>>().join("\n");
    Ok(Output { json, text: text.trim_end().to_string(), code: if passed { 0 } else { EXIT_VERIFY } })
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct SkewJson {
    pub outer: Vec<usize>,
    #[serde(default)]
    pub inner: Vec<usize>,
    pub rows: Vec<Vec<u64>>,
}

impl SkewJson {
    fn from_tableau(t: &SkewTableau) -> Self {
        SkewJson { outer: t.outer.parts().to_vec(), inner: t.inner.parts().to_vec(), rows: t.rows.clone() }
    }

    fn to_tableau(&self) -> CliResult<SkewTableau> {
        Ok(SkewTableau::new(
            Partition::new(self.outer.iter().copied())?,
            Partition::new(self.inner.iter().copied())?,
            self.rows.clone(),
        )?)
    }
}

#[derive(Deserialize)]
struct FillingJson {
    shape: String,
    rows: Vec<Vec<u64>>,
}

#[derive(Deserialize)]
struct PairJson {
    shape: String,
    p: SkewJson,
    q: Option<SkewJson>,
}

fn phi_forward(input: &str, roundtrip: bool) -> CliResult<Value> {
    let f: FillingJson = serde_json::from_str(input)?;
    let (spec, shape) = parse_shape(&f.shape)?;
    let t = Filling::new(shape, f.rows)?;
    let mut out = json!({ "shape": spec.to_string() });
    match spec {
        ShapeSpec::ShiftedStaircase { n, k } => {
            let p = shifted_to_tableau(&t)?;
            out["p"] = serde_json::to_value(SkewJson::from_tableau(&p))?;
            if roundtrip {
                out["roundtrip"] = json!(tableau_to_shifted(&p, n, k).as_ref() == Ok(&t));
            }
        }
        ShapeSpec::RectStaircase { rows, cols, k } => {
            let (p, q) = straight_to_pair(&t)?;
            out["p"] = serde_json::to_value(SkewJson::from_tableau(&p))?;
            out["q"] = serde_json::to_value(SkewJson::from_tableau(&q))?;
            if roundtrip {
                out["roundtrip"] = json!(pair_to_straight(&p, &q, cols, rows, k).as_ref() == Ok(&t));
            }
        }
        _ => return Err(CliError::unsupported(&spec, "bijection")),
    }
    Ok(out)
}

fn phi_inverse(input: &str, roundtrip: bool) -> CliResult<Value> {
    let pair: PairJson = serde_json::from_str(input)?;
    let spec: ShapeSpec = pair.shape.parse()?;
    let p = pair.p.to_tableau()?;
    let (t, back) = match spec {
        ShapeSpec::ShiftedStaircase { n, k } => {
            let t = tableau_to_shifted(&p, n, k)?;
            let back = shifted_to_tableau(&t).map(|p2| p2 == p);
            (t, back)
        }
        ShapeSpec::RectStaircase { rows, cols, k } => {
            let q = pair.q.ok_or_else(|| CliError::new(EXIT_INPUT, "missing \"q\" for a rectangle"))?.to_tableau()?;
            let t = pair_to_straight(&p, &q, cols, rows, k)?;
            let back = straight_to_pair(&t).map(|pq| pq == (p, q));
            (t, back)
        }
        _ => return Err(CliError::unsupported(&spec, "bijection")),
    };
    let mut out = json!({ "shape": spec.to_string(), "rows": t.rows() });
    if roundtrip {
        out["roundtrip"] = json!(back == Ok(true));
    }
    Ok(out)
}

fn finish_transform(out: Value, roundtrip: bool) -> Output {
    let ok = !roundtrip || out["roundtrip"] == json!(true);
    let text = serde_json::to_string_pretty(&out).expect("serializable");
    Output { json: out, text, code: if ok { 0 } else { EXIT_VERIFY } }
}

pub fn phi(input: &str, inverse: bool, roundtrip: bool) -> CliResult<Output> {
    let out = if inverse { phi_inverse(input, roundtrip)? } else { phi_forward(input, roundtrip)? };
    Ok(finish_transform(out, roundtrip))
}

#[derive(Deserialize)]
struct RskPairJson {
    p: Vec<Vec<u64>>,
    q: Vec<Vec<u64>>,
    rows: usize,
    cols: usize,
}

pub fn rsk_cmd(input: &str, inverse: bool, roundtrip: bool) -> CliResult<Output> {
    let out = if inverse {
        let pair: RskPairJson = serde_json::from_str(input)?;
        let (p, q) = (Tableau::new(pair.p), Tableau::new(pair.q));
        let a = rsk_inverse(&p, &q, pair.rows, pair.cols)?;
        let mut out = json!(a.rows());
        if roundtrip {
            out = json!({ "matrix": a.rows(), "roundtrip": rsk(&a) == (p, q) });
        }
        out
    } else {
        let rows: Vec<Vec<u64>> = serde_json::from_str(input)?;
        let a = IntMatrix::new(rows)?;
        let (p, q) = rsk(&a);
        let mut out = json!({ "p": p.rows, "q": q.rows });
        if roundtrip {
            out["roundtrip"] = json!(rsk_inverse(&p, &q, a.n_rows(), a.n_cols()).as_ref() == Ok(&a));
        }
        out
    };
    Ok(finish_transform(out, roundtrip))
}
