//! The `rfcli` harness.
//!
//! A run is a [`RunConfig`] dispatched by [`run`] into a [`RunReport`], which
//! [`emit`] renders as CSV, JSON or a terminal table. Output is a function of
//! the config alone: wall time is only included with `--timing`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::detection::{
    divisibility_congruence, divisibility_full_oracle, rf_growth_table, upper_bound_certificate,
    UpperBoundCertificate,
};
use crate::error::{Error, Result};
use crate::extremal::{
    almost_periodic_by_divisors, conjecture_table, lcm_degree, lcm_p, running_min, witness_audit,
};
use crate::lamplighter::{
    bound_formula, word_length_bound, word_length_exact, BoundEdgeCase, LampElement, DEFAULT_BALL_CAP,
};
use crate::par::Exec;
use crate::polyring::{
    factor, format_factored, format_laurent, format_poly, is_irreducible, multiplicative_order_t,
    multiplicative_order_t_brute, parse_ordinary_poly, PrimeModulus,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Largest `p^d` for which `lcm-deg` prints the factored LCM.
const FACTORED_PRINT_CAP: u64 = 1 << 10;
/// Largest `p^(deg g + 1)` for which `order` runs the brute-force scan.
const BRUTE_ORDER_CAP: u64 = 1 << 20;
/// Default cap for the full normal-subgroup oracle in `divisibility`.
const DEFAULT_FULL_CAP: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Human,
    Csv,
    Json,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Command {
    /// RF(n) for n up to the radius.
    RfTable {
        #[arg(long, env = "RF_RADIUS")]
        radius: u32,
    },
    /// Minimal detecting congruence quotient of an element `(lamp, shift)`.
    Divisibility {
        element: String,
        /// Index cap for the full normal-subgroup cross-check.
        #[arg(long, env = "RF_FULL_CAP", default_value_t = DEFAULT_FULL_CAP)]
        full_cap: u64,
    },
    /// Residue-field detection certificate of an element.
    Certificate { element: String },
    /// Degree of LCM(P_i) with its bounds, for i = 1..=d.
    LcmDeg {
        #[arg(long, env = "RF_D")]
        d: u32,
    },
    /// Divisibility audit of the hard witness element for degree d.
    WitnessAudit {
        #[arg(long, env = "RF_D")]
        d: u32,
    },
    /// Almost-periodic polynomial explorer for k = 1..=k_max.
    Conjecture {
        #[arg(long, env = "RF_K_MAX")]
        k_max: u32,
    },
    /// Multiplicative order of t modulo a polynomial.
    Order { poly: String },
    /// Factorisation into monic irreducibles.
    Factor { poly: String },
    /// Exact word length and the closed-form upper bound.
    Wordlen { element: String },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::RfTable { .. } => "rf-table",
            Command::Divisibility { .. } => "divisibility",
            Command::Certificate { .. } => "certificate",
            Command::LcmDeg { .. } => "lcm-deg",
            Command::WitnessAudit { .. } => "witness-audit",
            Command::Conjecture { .. } => "conjecture",
            Command::Order { .. } => "order",
            Command::Factor { .. } => "factor",
            Command::Wordlen { .. } => "wordlen",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "rfcli", version, about = "Residual finiteness computations for Z/p wr Z")]
pub struct Cli {
    #[arg(long, env = "RF_PRIME", default_value_t = 2)]
    pub prime: u64,
    #[arg(long, env = "RF_FORMAT", value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, env = "RF_OUT")]
    pub out: Option<PathBuf>,
    /// Seed for randomized self-checks.
    #[arg(long, env = "RF_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Largest ball radius.
    #[arg(long, env = "RF_CAP_RADIUS", default_value_t = 12)]
    pub cap_radius: u32,
    /// Largest ball size.
    #[arg(long, env = "RF_CAP_BALL", default_value_t = DEFAULT_BALL_CAP)]
    pub cap_ball: usize,
    /// Largest k for the almost-periodic explorer.
    #[arg(long, env = "RF_CAP_K", default_value_t = 12)]
    pub cap_k: u32,
    /// Largest quotient order searched.
    #[arg(long, env = "RF_CAP_ORDER", default_value_t = 1_000_000)]
    pub cap_order: u64,
    /// Run sweeps on one thread.
    #[arg(long, env = "RF_SEQUENTIAL")]
    pub sequential: bool,
    /// Include wall time in the output (breaks byte-for-byte reproducibility).
    #[arg(long, env = "RF_TIMING")]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Serialize)]
pub struct Caps {
    pub radius: u32,
    pub ball: usize,
    pub k: u32,
    pub order: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub prime: u64,
    pub command: Command,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: u64,
    pub caps: Caps,
    pub sequential: bool,
    pub timing: bool,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        RunConfig {
            prime: cli.prime,
            command: cli.command,
            format: cli.format,
            out: cli.out,
            seed: cli.seed,
            caps: Caps {
                radius: cli.cap_radius,
                ball: cli.cap_ball,
                k: cli.cap_k,
                order: cli.cap_order,
            },
            sequential: cli.sequential,
            timing: cli.timing,
        }
    }
}

impl RunConfig {
    fn exec(&self) -> Exec {
        if self.sequential {
            Exec::Sequential
        } else {
            Exec::default()
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub config: RunConfig,
    pub version: &'static str,
    pub elapsed: Option<Duration>,
    /// Tabular view used by the CSV and human formats.
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Structured view used by the JSON format.
    pub result: Value,
    pub notes: Vec<String>,
    pub warnings: Vec<String>,
}

struct Output {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    result: Value,
    notes: Vec<String>,
    warnings: Vec<String>,
}

impl Output {
    fn new(header: Vec<&'static str>) -> Self {
        Output {
            header,
            rows: Vec::new(),
            result: Value::Null,
            notes: Vec::new(),
            warnings: Vec::new(),
        }
    }
}

/// Process exit code for an error: 2 for bad input, 3 for a cap, 1 otherwise.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::Internal(_) | Error::Io(_) => 1,
        _ => 2,
    }
}

pub fn run(config: RunConfig) -> Result<RunReport> {
    let start = Instant::now();
    let p = PrimeModulus::new(config.prime)?;
    let exec = config.exec();
    let out = match &config.command {
        Command::RfTable { radius } => rf_table(p, *radius, &config, exec)?,
        Command::Divisibility { element, full_cap } => divisibility(p, element, *full_cap, &config, exec)?,
        Command::Certificate { element } => certificate(p, element)?,
        Command::LcmDeg { d } => lcm_deg(p, *d, exec)?,
        Command::WitnessAudit { d } => audit(p, *d, &config, exec)?,
        Command::Conjecture { k_max } => conjecture(p, *k_max, &config, exec)?,
        Command::Order { poly } => order(p, poly)?,
        Command::Factor { poly } => factor_cmd(p, poly)?,
        Command::Wordlen { element } => wordlen(p, element)?,
    };
    let elapsed = config.timing.then(|| start.elapsed());
    Ok(RunReport {
        config,
        version: VERSION,
        elapsed,
        header: out.header.into_iter().map(String::from).collect(),
        rows: out.rows,
        result: out.result,
        notes: out.notes,
        warnings: out.warnings,
    })
}

fn rf_table(p: PrimeModulus, radius: u32, config: &RunConfig, exec: Exec) -> Result<Output> {
    if radius > config.caps.radius {
        return Err(Error::cap("rf-table radius", config.caps.radius as u64));
    }
    let table = rf_growth_table(p, radius, config.caps.ball, config.caps.order, exec)?;
    let mut header = vec!["n", "rf", "witness", "ball_size"];
    if config.timing {
        header.push("elapsed_ms");
    }
    let mut out = Output::new(header);
    let mut records = Vec::new();
    for r in &table.records {
        let mut row = vec![
            r.n.to_string(),
            r.rf.to_string(),
            r.witness.to_string(),
            r.ball_size.to_string(),
        ];
        if config.timing {
            row.push(r.elapsed.as_millis().to_string());
        }
        out.rows.push(row);
        let mut rec = json!({
            "n": r.n,
            "rf": r.rf,
            "witness": r.witness.to_string(),
            "witness_distance": r.witness_distance,
            "ball_size": r.ball_size,
            "bound": r.bound,
        });
        if config.timing {
            rec["elapsed_ms"] = json!(r.elapsed.as_millis() as u64);
        }
        records.push(rec);
        if r.rf > r.bound {
            out.warnings.push(format!("RF({}) = {} exceeds (2(n+1)p)^2 = {}", r.n, r.rf, r.bound));
        }
        if r.witness_distance > r.n {
            out.warnings.push(format!("witness for n = {} has length {}", r.n, r.witness_distance));
        }
    }
    for w in table.records.windows(2) {
        if w[1].rf < w[0].rf {
            out.warnings.push(format!("RF decreases from n = {} to n = {}", w[0].n, w[1].n));
        }
    }
    let slope = table.log_log_slope();
    if let Some(s) = slope {
        out.notes.push(format!("log-log slope of RF(n) for n >= 1 (reporting only): {s:.4}"));
    }
    out.result = json!({
        "records": records,
        "log_log_slope": slope,
        "search_bound": table.search_bound,
    });
    Ok(out)
}

fn divisibility(
    p: PrimeModulus,
    element: &str,
    full_cap: u64,
    config: &RunConfig,
    exec: Exec,
) -> Result<Output> {
    let x = LampElement::parse(element, p)?;
    let r = divisibility_congruence(&x, config.caps.order, exec)?;
    let q = &r.certificate.quotient;
    let oracle_cap = r.value.min(full_cap).max(2);
    let full = divisibility_full_oracle(&x, oracle_cap, config.seed, None)?;
    let mut out = Output::new(vec!["element", "D", "g", "k", "order", "exhaustive", "full_index"]);
    let full_index = full.index.map_or_else(|| format!(">{oracle_cap}"), |i| i.to_string());
    out.rows.push(vec![
        x.to_string(),
        r.value.to_string(),
        format_poly(q.modulus()),
        q.period().to_string(),
        q.order().to_string(),
        r.exhaustive.to_string(),
        full_index,
    ]);
    if let Some(i) = full.index.filter(|&i| i < r.value) {
        let sub = full.subgroup.as_ref().expect("index implies subgroup");
        out.warnings.push(format!(
            "full-oracle gap: a normal subgroup of index {i} (alpha = {}, k = {}, twist = {}) omits {x}, below the congruence value {}",
            format_poly(&sub.alpha),
            sub.period,
            format_poly(&sub.twist),
            r.value
        ));
    }
    if !full.verified {
        out.warnings.push("full-oracle subgroup failed the sampled normality check".into());
    }
    if r.value > full_cap {
        out.notes.push(format!(
            "full oracle searched indices up to {full_cap} only; the congruence value is {}",
            r.value
        ));
    }
    let sub = full.subgroup.as_ref();
    out.result = json!({
        "element": x.to_string(),
        "D": r.value,
        "g": format_poly(q.modulus()),
        "k": q.period(),
        "order": q.order(),
        "exhaustive": r.exhaustive,
        "search_bound": r.search_bound,
        "image": {
            "residue": format_poly(&r.certificate.image.residue),
            "shift": r.certificate.image.shift,
        },
        "full_oracle": {
            "cap": oracle_cap,
            "index": full.index,
            "alpha": sub.map(|s| format_poly(&s.alpha)),
            "k": sub.map(|s| s.period),
            "twist": sub.map(|s| format_poly(&s.twist)),
            "verified": full.verified,
        },
    });
    Ok(out)
}

fn certificate(p: PrimeModulus, element: &str) -> Result<Output> {
    let x = LampElement::parse(element, p)?;
    let c = upper_bound_certificate(&x)?;
    let n = word_length_exact(&x);
    let order_bound = UpperBoundCertificate::order_bound(p.get() as u64, n);
    let q = &c.certificate.quotient;
    let detects = c.certificate.verify(&x);
    let mut out = Output::new(vec![
        "element",
        "entry",
        "numerator",
        "pi",
        "k",
        "field_size",
        "field_bound",
        "order",
        "order_bound",
        "word_length",
        "detects",
    ]);
    let entry = serde_json::to_value(c.entry).expect("enum serializes");
    let entry = entry.as_str().unwrap_or_default().to_string();
    out.rows.push(vec![
        x.to_string(),
        entry.clone(),
        format_poly(&c.numerator),
        format_poly(q.modulus()),
        q.period().to_string(),
        c.field_size.to_string(),
        c.field_bound.to_string(),
        c.certificate.order.to_string(),
        order_bound.to_string(),
        n.to_string(),
        detects.to_string(),
    ]);
    if !detects {
        out.warnings.push(format!("certificate quotient does not detect {x}"));
    }
    if c.field_size > c.field_bound {
        out.warnings.push(format!("field size {} exceeds 2(deg f + 1)p = {}", c.field_size, c.field_bound));
    }
    if c.certificate.order > order_bound {
        out.warnings.push(format!("order {} exceeds (2(n+1)p)^2 = {order_bound}", c.certificate.order));
    }
    out.result = json!({
        "element": x.to_string(),
        "entry": entry,
        "numerator": format_poly(&c.numerator),
        "pi": format_poly(q.modulus()),
        "k": q.period(),
        "field_size": c.field_size,
        "field_bound": c.field_bound,
        "order": c.certificate.order,
        "order_bound": order_bound,
        "word_length": n,
        "detects": detects,
    });
    Ok(out)
}

fn lcm_deg(p: PrimeModulus, d: u32, exec: Exec) -> Result<Output> {
    if d == 0 {
        return Err(Error::InvalidDegree(0));
    }
    let mut out = Output::new(vec!["d", "degree", "lower", "upper", "ratio"]);
    let mut records = Vec::new();
    for i in 1..=d {
        let deg = lcm_degree(p, i)?;
        out.rows.push(vec![
            i.to_string(),
            deg.degree.to_string(),
            deg.lower.to_string(),
            deg.upper.to_string(),
            deg.ratio().to_string(),
        ]);
        if !deg.within_bounds() {
            out.warnings.push(format!(
                "deg LCM(P_{i}) = {} outside [{}, {}]",
                deg.degree, deg.lower, deg.upper
            ));
        }
        let factored = if deg.lower <= FACTORED_PRINT_CAP {
            let prof = lcm_p(p, i, exec)?;
            if prof.degree != deg.degree {
                out.warnings.push(format!(
                    "closed-form degree {} differs from expansion {} at d = {i}",
                    deg.degree, prof.degree
                ));
            }
            Some(format_factored(&prof.factored))
        } else {
            None
        };
        records.push(json!({
            "d": i,
            "degree": deg.degree,
            "lower": deg.lower,
            "upper": deg.upper,
            "ratio": deg.ratio(),
            "factored": factored,
        }));
    }
    out.result = Value::Array(records);
    Ok(out)
}

fn audit(p: PrimeModulus, d: u32, config: &RunConfig, exec: Exec) -> Result<Output> {
    let a = witness_audit(p, d, config.caps.order, exec)?;
    let w = &a.witness;
    let q = &a.divisibility.certificate.quotient;
    let mut out = Output::new(vec![
        "d",
        "word_length",
        "D",
        "ratio",
        "g",
        "k",
        "s",
        "modulus_degree_ok",
        "period_ok",
        "meets_lower_bound",
    ]);
    out.rows.push(vec![
        d.to_string(),
        w.word_length_exact.to_string(),
        a.divisibility.value.to_string(),
        a.ratio().to_string(),
        format_poly(q.modulus()),
        a.period.to_string(),
        w.s.to_string(),
        a.modulus_degree_ok().to_string(),
        a.period_ok().to_string(),
        a.meets_lower_bound().to_string(),
    ]);
    if !w.degree_within_bound() {
        out.warnings.push(format!(
            "witness degree {} exceeds C p^d = {} with C = lcm_degree / p^d + 1 (ratio deg / p^d = {})",
            w.degree(),
            w.degree_bound(),
            w.degree_ratio()
        ));
    }
    for (g, k) in &a.detector_violations {
        out.warnings.push(format!(
            "detecting quotient ({}, {k}) has modulus degree <= {d} or period <= {}",
            format_poly(g),
            w.s
        ));
    }
    if !a.meets_lower_bound() {
        out.warnings.push(format!("D = {} is below p^(3d/2)", a.divisibility.value));
    }
    if !a.period_vs_sqrt_dw() {
        out.notes.push(format!("k = {} is below sqrt(d p^d)", a.period));
    }
    out.result = json!({
        "d": d,
        "word_length": w.word_length_exact,
        "word_length_bound": w.word_length_bound,
        "D": a.divisibility.value,
        "lower_bound": w.index_lower_bound(),
        "ratio": a.ratio(),
        "g": format_poly(q.modulus()),
        "k": a.period,
        "s": w.s,
        "w": w.w,
        "lamp": format_poly(&w.lamp),
        "lamp_degree": w.degree(),
        "lcm_degree": w.lcm_degree,
        "degree_bound": w.degree_bound(),
        "modulus_degree_ok": a.modulus_degree_ok(),
        "period_ok": a.period_ok(),
        "meets_lower_bound": a.meets_lower_bound(),
        "k_ge_sqrt_w": a.period_vs_sqrt_w(),
        "k_ge_sqrt_dw": a.period_vs_sqrt_dw(),
        "detectors_checked": a.detectors_checked,
        "search_bound": a.search_bound,
    });
    Ok(out)
}

fn conjecture(p: PrimeModulus, k_max: u32, config: &RunConfig, exec: Exec) -> Result<Output> {
    if k_max > config.caps.k {
        return Err(Error::cap("conjecture k_max", config.caps.k as u64));
    }
    let table = conjecture_table(p, k_max, exec)?;
    let mins = running_min(&table);
    let mut out = Output::new(vec!["k", "size", "lcm_degree", "scale", "ratio", "running_min"]);
    let mut records = Vec::new();
    for (prof, m) in table.iter().zip(&mins) {
        out.rows.push(vec![
            prof.k.to_string(),
            prof.members.len().to_string(),
            prof.lcm_degree.to_string(),
            prof.scale.to_string(),
            prof.ratio().to_string(),
            m.to_string(),
        ]);
        records.push(json!({
            "k": prof.k,
            "size": prof.members.len(),
            "lcm_degree": prof.lcm_degree,
            "scale": prof.scale,
            "ratio": prof.ratio(),
            "running_min": m,
        }));
    }
    if let Some(last) = table.last() {
        if almost_periodic_by_divisors(p, k_max, exec)? != last.members {
            out.warnings.push(format!("A_{k_max} enumeration strategies disagree"));
        }
    }
    out.notes.push("exploratory: ratios are data, no verdict is drawn".into());
    out.result = Value::Array(records);
    Ok(out)
}

fn order(p: PrimeModulus, poly: &str) -> Result<Output> {
    let g = parse_ordinary_poly(poly, p)?;
    let structural = multiplicative_order_t(&g)?;
    let brute_cap = (p.get() as u64).checked_pow(g.degree_or_zero() as u32 + 1);
    let brute = match brute_cap {
        Some(c) if c <= BRUTE_ORDER_CAP => Some(multiplicative_order_t_brute(&g)?),
        _ => None,
    };
    let mut out = Output::new(vec!["poly", "order", "brute"]);
    out.rows.push(vec![
        format_poly(&g),
        structural.to_string(),
        brute.map_or_else(String::new, |b| b.to_string()),
    ]);
    match brute {
        Some(b) if b != structural => {
            out.warnings.push(format!("brute-force order {b} differs from structural {structural}"))
        }
        None => out.notes.push("brute-force scan skipped (degree too large)".into()),
        _ => {}
    }
    out.result = json!({ "poly": format_poly(&g), "order": structural, "brute": brute });
    Ok(out)
}

fn factor_cmd(p: PrimeModulus, poly: &str) -> Result<Output> {
    let f = parse_ordinary_poly(poly, p)?;
    let fp = factor(&f)?;
    let irreducible = match f.degree() {
        Some(d) if d >= 1 => is_irreducible(&f)?,
        _ => false,
    };
    let mut out = Output::new(vec!["poly", "factored", "degree", "irreducible"]);
    out.rows.push(vec![
        format_poly(&f),
        format_factored(&fp),
        fp.degree().to_string(),
        irreducible.to_string(),
    ]);
    if fp.expand() != f {
        out.warnings.push("factorisation does not expand to the input".into());
    }
    let factors: Vec<Value> = fp
        .factors()
        .iter()
        .map(|(g, e)| json!({ "factor": format_poly(g), "multiplicity": e }))
        .collect();
    out.result = json!({
        "poly": format_poly(&f),
        "unit": fp.unit(),
        "factors": factors,
        "factored": format_factored(&fp),
        "irreducible": irreducible,
    });
    Ok(out)
}

fn wordlen(p: PrimeModulus, element: &str) -> Result<Output> {
    let x = LampElement::parse(element, p)?;
    let exact = word_length_exact(&x);
    let bound = word_length_bound(&x);
    let formula = bound_formula(&x);
    let class = BoundEdgeCase::classify(&x);
    let mut out = Output::new(vec!["element", "exact", "bound", "formula", "edge_case"]);
    let class_name = class.map(|c| c.describe()).unwrap_or("");
    out.rows.push(vec![
        x.to_string(),
        exact.to_string(),
        bound.to_string(),
        formula.to_string(),
        class_name.to_string(),
    ]);
    if formula < exact && class == Some(BoundEdgeCase::ConstantAtOrigin) {
        out.warnings.push(format!(
            "closed-form value {formula} misses the lamp at the origin; bound raised to {bound}"
        ));
    }
    if bound < exact {
        out.warnings.push(format!(
            "closed-form bound {bound} is below the exact length {exact} ({})",
            if class_name.is_empty() { "unclassified" } else { class_name }
        ));
    }
    out.result = json!({
        "element": x.to_string(),
        "lamp": format_laurent(x.lamp()),
        "shift": x.shift(),
        "exact": exact,
        "bound": bound,
        "formula": formula,
        "edge_case": class.map(|c| c.describe()),
    });
    Ok(out)
}

fn config_line(report: &RunReport) -> String {
    serde_json::to_string(&report.config).expect("config serializes")
}

/// Renders a report. Identical reports give identical bytes.
pub fn emit(report: &RunReport, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Json => {
            let mut doc = json!({
                "tool": "rfcli",
                "version": report.version,
                "config": report.config,
                "result": report.result,
                "notes": report.notes,
                "warnings": report.warnings,
            });
            if let Some(e) = report.elapsed {
                doc["elapsed_ms"] = json!(e.as_millis() as u64);
            }
            let mut bytes = serde_json::to_vec_pretty(&doc).map_err(|e| Error::Io(e.to_string()))?;
            bytes.push(b'\n');
            Ok(bytes)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&report.header).map_err(|e| Error::Io(e.to_string()))?;
            for row in &report.rows {
                w.write_record(row).map_err(|e| Error::Io(e.to_string()))?;
            }
            let mut bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
            let mut tail = String::new();
            writeln!(tail, "# rfcli {} {}", report.version, config_line(report)).unwrap();
            for n in &report.notes {
                writeln!(tail, "# note: {n}").unwrap();
            }
            for wn in &report.warnings {
                writeln!(tail, "# warning: {wn}").unwrap();
            }
            if let Some(e) = report.elapsed {
                writeln!(tail, "# elapsed_ms: {}", e.as_millis()).unwrap();
            }
            bytes.extend_from_slice(tail.as_bytes());
            Ok(bytes)
        }
        Format::Human => {
            let mut s = String::new();
            writeln!(s, "rfcli {} {}", report.version, report.config.command.name()).unwrap();
            writeln!(s, "config: {}", config_line(report)).unwrap();
            let mut widths: Vec<usize> = report.header.iter().map(String::len).collect();
            for row in &report.rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                padded.join("  ").trim_end().to_string()
            };
            writeln!(s, "{}", line(&report.header)).unwrap();
            for row in &report.rows {
                writeln!(s, "{}", line(row)).unwrap();
            }
            for n in &report.notes {
                writeln!(s, "note: {n}").unwrap();
            }
            for w in &report.warnings {
                writeln!(s, "warning: {w}").unwrap();
            }
            if let Some(e) = report.elapsed {
                writeln!(s, "elapsed: {} ms", e.as_millis()).unwrap();
            }
            Ok(s.into_bytes())
        }
    }
}

/// Entry point shared by the binary and the tests.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let config = RunConfig::from(cli);
    let format = config.format;
    let out_path = config.out.clone();
    let result = run(config).and_then(|report| {
        let bytes = emit(&report, format)?;
        match &out_path {
            Some(path) => std::fs::write(path, &bytes)
                .map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display()))),
            None => std::io::stdout()
                .write_all(&bytes)
                .map_err(|e| Error::Io(e.to_string())),
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::CapExceeded { partial: Some(lb), .. } = &e {
                eprintln!("partial lower bound: {lb}");
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
