//! Batch front end: parses flags, runs suites, renders reports.
//!
//! JSON is the normative format. Without `--timing` the output is a pure
//! function of the arguments, so repeated runs are byte-identical.

use std::ffi::OsString;
use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::clifford::{
    cg_oracle_compare, symbol_det_expected, symbol_det_poly, torus_kernel_dims, verify_algebra,
    verify_group_equivariance,
};
use crate::exact::Rational;
use crate::report::{CheckEntry, VerificationReport};
use crate::sphere::{
    check_eigenvalue_bounds, dplus_kernel_formula, kernel_dimension, spectrum_block, verify_adjoint_blocks,
    verify_gram, verify_s3_identities, BlockCache, BlockKind, BlockStore, SphereError,
};
use crate::su2::GroupElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Operators accepted by `--operator`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OperatorArg {
    D0,
    Dplus,
    Dminus,
    DplusDminus,
    DminusDplus,
    Lap,
    LapTilde,
    ZSquaredSum,
}

impl From<OperatorArg> for BlockKind {
    fn from(o: OperatorArg) -> Self {
        match o {
            OperatorArg::D0 => BlockKind::D0,
            OperatorArg::Dplus => BlockKind::Dplus,
            OperatorArg::Dminus => BlockKind::Dminus,
            OperatorArg::DplusDminus => BlockKind::DplusDminus,
            OperatorArg::DminusDplus => BlockKind::DminusDplus,
            OperatorArg::Lap => BlockKind::Lap,
            OperatorArg::LapTilde => BlockKind::LapTilde,
            OperatorArg::ZSquaredSum => BlockKind::ZSquaredSum,
        }
    }
}

#[derive(Args, Clone, Debug)]
pub struct Common {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Directory for cached operator blocks.
    #[arg(long, env = "HSD_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Wrap the report in an envelope carrying the wall time.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args, Clone, Debug)]
pub struct SpinRange {
    /// Single spin index.
    #[arg(long, conflicts_with = "m_max")]
    pub m: Option<u32>,
    /// Run every spin index up to this value.
    #[arg(long)]
    pub m_max: Option<u32>,
}

impl SpinRange {
    fn spins(&self, default_max: u32) -> Vec<u32> {
        match (self.m, self.m_max) {
            (Some(m), _) => vec![m],
            (None, Some(mx)) => (0..=mx).collect(),
            (None, None) => (0..=default_max).collect(),
        }
    }
}

#[derive(Subcommand, Clone, Debug)]
pub enum Command {
    /// Adjointness, equivariance, Clifford relations and Casimir, plus the symbol determinant.
    VerifyAlgebra {
        #[arg(long, default_value_t = 20)]
        m_max: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Clifford maps against Clebsch-Gordan projections.
    VerifyCg {
        #[command(flatten)]
        spins: SpinRange,
        #[command(flatten)]
        common: Common,
    },
    /// Group-level equivariance on the fixed rational test set.
    VerifyEquivariance {
        #[command(flatten)]
        spins: SpinRange,
        #[command(flatten)]
        common: Common,
    },
    /// Curvature identities, block adjointness and Gram cross-validation on the 3-sphere.
    VerifyS3 {
        #[command(flatten)]
        spins: SpinRange,
        #[arg(long, default_value_t = 6)]
        n_max: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Exact spectrum of one operator on degrees 0..=n-max.
    Spectrum {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 6)]
        n_max: u32,
        #[arg(long, value_enum, default_value = "d0")]
        operator: OperatorArg,
        #[command(flatten)]
        common: Common,
    },
    /// Kernel dimension with completeness certificate.
    Kernel {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 6)]
        n_max: u32,
        #[arg(long, value_enum, default_value = "dplus")]
        operator: OperatorArg,
        #[command(flatten)]
        common: Common,
    },
    /// First-eigenvalue lower bounds.
    Bounds {
        #[command(flatten)]
        spins: SpinRange,
        #[arg(long, default_value_t = 6)]
        n_max: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Flat-torus kernel dimensions.
    Torus {
        #[command(flatten)]
        spins: SpinRange,
        #[command(flatten)]
        common: Common,
    },
    /// Every suite with its default ranges, capped by --m-max / --n-max.
    ReportAll {
        #[arg(long)]
        m_max: Option<u32>,
        #[arg(long)]
        n_max: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::VerifyAlgebra { common, .. }
            | Command::VerifyCg { common, .. }
            | Command::VerifyEquivariance { common, .. }
            | Command::VerifyS3 { common, .. }
            | Command::Spectrum { common, .. }
            | Command::Kernel { common, .. }
            | Command::Bounds { common, .. }
            | Command::Torus { common, .. }
            | Command::ReportAll { common, .. } => common,
        }
    }
}

/// Parsed command line.
#[derive(Parser, Clone, Debug)]
#[command(name = "hsd", version, about = "Exact higher spin Dirac operator verification")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad flags; the payload is clap's rendered message.
    Usage(String),
    Precondition(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) => f.write_str(s),
            CliError::Precondition(s) => write!(f, "precondition failed: {s}"),
            CliError::Io(s) => write!(f, "i/o error: {s}"),
        }
    }
}

impl From<SphereError> for CliError {
    fn from(e: SphereError) -> Self {
        match e {
            SphereError::Cache(s) => CliError::Io(s),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

/// Result of a run: the JSON document and whether every check passed.
pub struct Outcome {
    pub document: Value,
    pub passed: bool,
}

fn kind_name(k: BlockKind) -> &'static str {
    k.name()
}

fn spectrum_entries(store: &BlockStore, kind: BlockKind, m: u32, n_max: u32) -> Result<VerificationReport, SphereError> {
    let reports: Vec<_> = (0..=n_max).into_par_iter().map(|n| spectrum_block(store, kind, m, n)).collect::<Result<_, _>>()?;
    let mut out = VerificationReport::new("spectrum");
    for r in reports {
        for line in &r.lines {
            let e = CheckEntry::new("eigenvalue", "closed-form spectrum on Peter-Weyl blocks")
                .param("operator", kind_name(kind))
                .param("m", r.m)
                .param("n", r.n)
                .value("eigenvalue", line.eigenvalue.to_string())
                .value("multiplicity", line.multiplicity)
                .value("predicted", line.predicted)
                .value("blocks", line.blocks.clone())
                .status(line.multiplicity == line.predicted);
            out.push(e);
        }
        let e = CheckEntry::new("spectral_accounting", "closed-form spectrum on Peter-Weyl blocks")
            .param("operator", kind_name(kind))
            .param("m", r.m)
            .param("n", r.n)
            .value("dimension", r.dimension)
            .value("accounted", r.accounted)
            .value("annihilated", r.annihilated)
            .value("labeling", r.labeling.describe());
        out.push(if r.passed() {
            e.status(true)
        } else {
            e.fail_with(json!({"unaccounted": r.dimension as i64 - r.accounted as i64, "annihilated": r.annihilated}))
        });
    }
    Ok(out)
}

/// The dimension the literature formulas give, where one applies.
fn expected_kernel(kind: BlockKind, m: u32) -> Option<usize> {
    match kind {
        BlockKind::Dplus => Some(dplus_kernel_formula(m)),
        BlockKind::LapTilde if m.is_multiple_of(2) => Some(((m / 2 + 1) * (m / 2 + 1)) as usize),
        BlockKind::Lap if m >= 1 => Some(0),
        BlockKind::D0 if m % 2 == 1 => Some(0),
        _ => None,
    }
}

fn kernel_entries(store: &BlockStore, kind: BlockKind, m: u32, n_max: u32) -> Result<VerificationReport, SphereError> {
    let r = kernel_dimension(store, kind, m, n_max)?;
    let expected = expected_kernel(kind, m);
    let dim_value = match r.dimension {
        Some(d) => json!(d),
        None => json!("infinite"),
    };
    let per_degree: Vec<Value> = r.per_degree.iter().map(|d| json!({"n": d.n, "nullity": d.nullity, "predicted": d.predicted})).collect();
    let mut e = CheckEntry::new("kernel_dimension", "kernel dimension from closed-form spectra")
        .param("operator", kind_name(kind))
        .param("m", m)
        .param("n_max", n_max)
        .value("dimension", dim_value)
        .value("required_degree", r.required_degree.map_or(Value::Null, Value::from))
        .value("certificate", r.certificate.clone())
        .value("per_degree", per_degree);
    if let Some(x) = expected {
        e = e.value("expected", x);
    }
    let ok = r.status.is_pass() && expected.is_none_or(|x| r.dimension == Some(x));
    let mut out = VerificationReport::new("kernel");
    out.push(if ok { e.status(true) } else { e.fail_with(json!({"dimension": r.dimension, "expected": expected})) });
    Ok(out)
}

fn bounds_entries(store: &BlockStore, spins: &[u32], n_max: u32) -> Result<VerificationReport, SphereError> {
    let reports: Vec<_> =
        spins.par_iter().map(|&m| check_eigenvalue_bounds(store, m, n_max)).collect::<Result<_, _>>()?;
    let mut out = VerificationReport::new("bounds");
    for r in reports {
        let mut e = CheckEntry::new("eigenvalue_bounds", "first eigenvalue lower bounds")
            .param("m", r.m)
            .param("n_max", r.n_max)
            .value("lambda1", r.lambda1.to_string())
            .value("lambda_bound", r.lambda_bound.to_string())
            .value("lambda_equality", r.lambda_equality)
            .value("mu1", r.mu1.to_string())
            .value("mu_bound", r.mu_bound.as_ref().map_or(Value::Null, |b| Value::from(b.to_string())));
        if let Some(f) = &r.friedrich {
            e = e.value("friedrich", json!({"value": f.value.to_string(), "bound": f.bound.to_string(), "equality": f.equality}));
        }
        if let Some(c) = &r.minimizers {
            e = e.value(
                "minimizers",
                json!({"kernel_of": kind_name(c.operator), "degrees": c.degrees, "vectors": c.vectors, "contained": c.contained}),
            );
        }
        out.push(if r.status.is_pass() { e.status(true) } else { e.fail_with(json!({"spectra_complete": r.spectra_complete})) });
    }
    Ok(out)
}

fn torus_entries(spins: &[u32]) -> VerificationReport {
    let mut out = VerificationReport::new("torus");
    for &m in spins {
        let t = torus_kernel_dims(m);
        let e = CheckEntry::new("torus_kernel", "flat torus kernels via the principal symbol")
            .param("m", m)
            .value("dim_ker_d0", t.d0.map_or(json!("not applicable"), Value::from))
            .value("dim_ker_dplus", t.dplus)
            .value("rank_plus_e1", t.rank_plus_e1)
            .value("det_zero_e1", t.det_zero_e1.to_string());
        out.push(if t.certified { e.status(true) } else { e.fail_with(json!({"rank_plus_e1": t.rank_plus_e1})) });
    }
    out
}

fn symbol_entries(m_max: u32) -> VerificationReport {
    let mut out = VerificationReport::new("symbol");
    let results: Vec<_> = (0..=m_max).into_par_iter().map(|m| (m, symbol_det_poly(m), symbol_det_expected(m))).collect();
    for (m, got, want) in results {
        let e = CheckEntry::new("symbol_determinant", "principal symbol determinant")
            .param("m", m)
            .value("terms", got.len())
            .value("vanishes", got.is_zero());
        out.push(if got == want { e.status(true) } else { e.fail_with(json!({"determinant": got.to_string()})) });
    }
    out
}

fn algebra_suite(m_max: u32) -> VerificationReport {
    let mut r = verify_algebra(m_max);
    r.extend(symbol_entries(m_max));
    r.suite = "verify-algebra".into();
    r
}

fn cg_suite(spins: &[u32]) -> VerificationReport {
    let mut out = VerificationReport::new("verify-cg");
    let parts: Vec<_> = spins.par_iter().map(|&m| cg_oracle_compare(m)).collect();
    parts.into_iter().for_each(|p| out.extend(p));
    out
}

fn equivariance_suite(spins: &[u32]) -> VerificationReport {
    let mut out = VerificationReport::new("verify-equivariance");
    let parts: Vec<_> = spins
        .par_iter()
        .map(|&m| GroupElement::test_set().iter().map(|g| verify_group_equivariance(m, g)).collect::<Vec<_>>())
        .collect();
    parts.into_iter().flatten().for_each(|p| out.extend(p));
    out
}

fn s3_suite(store: &BlockStore, spins: &[u32], n_max: u32) -> Result<VerificationReport, SphereError> {
    let pairs: Vec<(u32, u32)> = spins.iter().flat_map(|&m| (0..=n_max).map(move |n| (m, n))).collect();
    let parts: Vec<_> = pairs
        .par_iter()
        .map(|&(m, n)| -> Result<_, SphereError> {
            let mut r = verify_s3_identities(store, m, n)?;
            r.extend(verify_adjoint_blocks(store, m, n)?);
            Ok(r)
        })
        .collect::<Result<_, _>>()?;
    let mut out = VerificationReport::new("verify-s3");
    parts.into_iter().for_each(|p| out.extend(p));
    for n in 0..=n_max.min(2) {
        out.push(verify_gram(n)?);
    }
    Ok(out)
}

fn report_all(store: &BlockStore, m_cap: Option<u32>, n_cap: Option<u32>) -> Result<Vec<VerificationReport>, SphereError> {
    let cap = |d: u32| m_cap.map_or(d, |c| c.min(d));
    let n_max = n_cap.map_or(6, |c| c.min(6));
    let range = |d: u32| (0..=cap(d)).collect::<Vec<_>>();
    let mut spectrum = VerificationReport::new("spectrum");
    for kind in [BlockKind::D0, BlockKind::DplusDminus, BlockKind::DminusDplus, BlockKind::Lap, BlockKind::LapTilde] {
        for m in range(4) {
            spectrum.extend(spectrum_entries(store, kind, m, n_max)?);
        }
    }
    let mut kernel = VerificationReport::new("kernel");
    let kernel_jobs = range(4)
        .into_iter()
        .flat_map(|m| {
            let mut v = vec![(BlockKind::Dplus, m)];
            if m % 2 == 0 {
                v.push((BlockKind::LapTilde, m));
            }
            if m >= 1 {
                v.push((BlockKind::Lap, m));
            }
            if m % 2 == 1 {
                v.push((BlockKind::D0, m));
            }
            v
        })
        .collect::<Vec<_>>();
    for (kind, m) in kernel_jobs {
        match kernel_entries(store, kind, m, n_max) {
            Ok(r) => kernel.extend(r),
            Err(SphereError::InsufficientDegree { required, n_max }) => kernel.push(
                CheckEntry::new("kernel_dimension", "kernel dimension from closed-form spectra")
                    .param("operator", kind_name(kind))
                    .param("m", m)
                    .param("n_max", n_max)
                    .value("skipped", format!("zero modes reach degree {required}")),
            ),
            Err(e) => return Err(e),
        }
    }
    Ok(vec![
        algebra_suite(cap(20)),
        cg_suite(&range(8)),
        equivariance_suite(&range(8)),
        s3_suite(store, &range(4), n_max)?,
        spectrum,
        kernel,
        bounds_entries(store, &range(4), n_max)?,
        torus_entries(&range(5)),
    ])
}

fn store_for(common: &Common) -> Result<BlockStore, CliError> {
    Ok(match &common.cache_dir {
        Some(dir) => BlockStore::with_cache(BlockCache::new(dir)?),
        None => BlockStore::new(),
    })
}

/// Runs a parsed command and builds its JSON document.
pub fn execute(config: &RunConfig) -> Result<Outcome, CliError> {
    let common = config.command.common();
    let store = store_for(common)?;
    let single = |r: VerificationReport| Outcome { passed: r.passed(), document: r.to_json() };
    Ok(match &config.command {
        Command::VerifyAlgebra { m_max, .. } => single(algebra_suite(*m_max)),
        Command::VerifyCg { spins, .. } => single(cg_suite(&spins.spins(8))),
        Command::VerifyEquivariance { spins, .. } => single(equivariance_suite(&spins.spins(8))),
        Command::VerifyS3 { spins, n_max, .. } => single(s3_suite(&store, &spins.spins(4), *n_max)?),
        Command::Spectrum { m, n_max, operator, .. } => {
            let kind = BlockKind::from(*operator);
            if !kind.is_square() {
                return Err(CliError::Precondition(format!("{kind} has no spectrum; choose a square operator")));
            }
            single(spectrum_entries(&store, kind, *m, *n_max)?)
        }
        Command::Kernel { m, n_max, operator, .. } => single(kernel_entries(&store, (*operator).into(), *m, *n_max)?),
        Command::Bounds { spins, n_max, .. } => single(bounds_entries(&store, &spins.spins(4), *n_max)?),
        Command::Torus { spins, .. } => single(torus_entries(&spins.spins(5))),
        Command::ReportAll { m_max, n_max, .. } => {
            let sections = report_all(&store, *m_max, *n_max)?;
            let passed = sections.iter().all(VerificationReport::passed);
            let mut all = VerificationReport::new("report-all");
            let summaries: Vec<Value> = sections
                .iter()
                .map(|s| json!({"suite": s.suite, "summary": s.summary()}))
                .collect();
            sections.into_iter().for_each(|s| all.extend(s));
            let mut doc = all.to_json();
            doc["sections"] = Value::Array(summaries);
            Outcome { document: doc, passed }
        }
    })
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("json values serialize")
}

/// Projects the JSON document onto the requested format.
pub fn render(document: &Value, format: Format) -> String {
    let entries = document["entries"].as_array().cloned().unwrap_or_default();
    let suite = document["suite"].as_str().unwrap_or("");
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(document).expect("json values serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["suite", "check", "params", "status", "values", "provenance"]).expect("in-memory csv");
            for e in &entries {
                w.write_record([
                    suite,
                    e["check"].as_str().unwrap_or(""),
                    &compact(&e["params"]),
                    e["status"].as_str().unwrap_or(""),
                    &compact(&e["values"]),
                    e["provenance"].as_str().unwrap_or(""),
                ])
                .expect("in-memory csv");
            }
            String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
        }
        Format::Text => {
            let mut s = String::new();
            for e in &entries {
                let status = if e["status"] == "pass" { "PASS" } else { "FAIL" };
                let params = e["params"]
                    .as_object()
                    .map(|p| p.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect::<Vec<_>>().join(" "))
                    .unwrap_or_default();
                let values = e["values"]
                    .as_object()
                    .map(|p| p.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect::<Vec<_>>().join(" "))
                    .unwrap_or_default();
                s.push_str(&format!("{status} {} [{params}] {values}\n", e["check"].as_str().unwrap_or("")));
            }
            let sum = &document["summary"];
            s.push_str(&format!("{suite}: {} passed, {} failed\n", sum["pass"], sum["fail"]));
            s
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => compact(other),
    }
}

/// Entry point used by the binary. Returns the process exit code:
/// 0 when every check passed, 1 on a failed check, 2 on usage, precondition or
/// output errors.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    run_with(argv, &mut stdout, &mut stderr)
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    match run_config(&config, stdout) {
        Ok(passed) => i32::from(!passed),
        Err(e) => {
            let _ = writeln!(stderr, "hsd: {e}");
            e.exit_code()
        }
    }
}

fn run_config(config: &RunConfig, stdout: &mut dyn Write) -> Result<bool, CliError> {
    let common = config.command.common();
    // open early so an unwritable path fails before any work is done
    let mut file = match &common.out {
        Some(path) => Some(File::create(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?),
        None => None,
    };
    let start = Instant::now();
    let outcome = execute(config)?;
    let document = if common.timing {
        let mut env = Map::new();
        env.insert("wall_time_seconds".into(), json!(start.elapsed().as_secs_f64()));
        env.insert("report".into(), outcome.document);
        Value::Object(env)
    } else {
        outcome.document
    };
    let text = if common.timing && common.format != Format::Json {
        let inner = render(&document["report"], common.format);
        format!("{inner}wall time: {:.3}s\n", document["wall_time_seconds"].as_f64().unwrap_or(0.0))
    } else {
        render(&document, common.format)
    };
    match file.as_mut() {
        Some(f) => f.write_all(text.as_bytes()).map_err(|e| CliError::Io(e.to_string()))?,
        None => stdout.write_all(text.as_bytes()).map_err(|e| CliError::Io(e.to_string()))?,
    }
    Ok(outcome.passed)
}

/// Rational values in reports are strings; this parses one back.
pub fn parse_rational(s: &str) -> Option<Rational> {
    s.parse().ok()
}
