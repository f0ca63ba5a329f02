//! Command-line front end: `realize`, `analyze` and `verify-paper`.

pub mod corpus;
pub mod verify;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand};
use irrbase::chains::{
    achievable_lengths, chain_report, max_irredundant_length, min_base_length, BaseSequence,
    ChainReport,
};
use irrbase::perm::PermGroup;
use irrbase::realize::{instantiate, witness_spec, GroupSpec, IntervalRequest, ResourceGuard};
use irrbase::Error;
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "irrbase",
    version,
    about = "Irredundant bases of permutation groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a witness group spec whose irredundant-base lengths are {min..max}.
    Realize(RealizeArgs),
    /// Analyze the group described by a spec file.
    Analyze(AnalyzeArgs),
    /// Check the stated results on concrete groups.
    VerifyPaper(VerifyArgs),
}

#[derive(Args, Debug)]
struct RealizeArgs {
    #[arg(long = "min")]
    min: usize,
    #[arg(long = "max")]
    max: usize,
    /// Build the group and report its lengths.
    #[arg(long)]
    instantiate: bool,
    /// Also write the spec to this file.
    #[arg(long, value_name = "PATH")]
    emit_spec: Option<PathBuf>,
    /// Field degree to use instead of the default.
    #[arg(long, value_name = "N")]
    explicit_f: Option<u64>,
    /// Include wall-clock timings in the report.
    #[arg(long)]
    timings: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("mode").args(["lengths", "min_base", "max_irredundant", "chain"])))]
struct AnalyzeArgs {
    #[arg(long, value_name = "PATH")]
    spec: PathBuf,
    #[arg(long)]
    lengths: bool,
    #[arg(long)]
    min_base: bool,
    #[arg(long)]
    max_irredundant: bool,
    /// Points separated by ';', as indices or labels.
    #[arg(long, value_name = "POINTS")]
    chain: Option<String>,
    #[arg(long)]
    timings: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "quick")]
    level: verify::Level,
    #[arg(long)]
    json: bool,
}

/// Full analysis of one group.
#[derive(Serialize, Debug)]
pub struct ReportEnvelope {
    pub spec: GroupSpec,
    pub domain_size: usize,
    pub group_order: String,
    pub b: usize,
    #[serde(rename = "I")]
    pub max_irredundant: usize,
    pub lengths: Vec<usize>,
    pub is_interval: bool,
    pub witnesses: BTreeMap<usize, Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<ChainView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

#[derive(Serialize, Debug)]
pub struct ChainView {
    pub points: Vec<String>,
    #[serde(flatten)]
    pub report: ChainReport,
    pub irredundant_base: bool,
}

#[derive(Serialize, Debug)]
struct Extremal {
    spec: GroupSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    b: Option<usize>,
    #[serde(rename = "I", skip_serializing_if = "Option::is_none")]
    max_irredundant: Option<usize>,
    witness: Vec<String>,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Guard { .. } => EXIT_GUARD,
            Error::ConstructionIntegrity(_) => EXIT_VERIFY,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

struct Timer {
    enabled: bool,
    laps: BTreeMap<String, f64>,
}

impl Timer {
    fn new(enabled: bool) -> Self {
        Timer {
            enabled,
            laps: BTreeMap::new(),
        }
    }

    fn time<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            self.laps
                .insert(name.to_string(), start.elapsed().as_secs_f64());
        }
        out
    }

    fn finish(self) -> Option<BTreeMap<String, f64>> {
        self.enabled.then_some(self.laps)
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report types serialize")
}

/// Runs the CLI on `args` (including the program name), writing reports to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Realize(a) => realize(a, out, err),
        Command::Analyze(a) => analyze(a, out),
        Command::VerifyPaper(a) => verify_paper(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn guard() -> Result<ResourceGuard, Failure> {
    Ok(ResourceGuard::from_env()?)
}

fn full_report(
    spec: &GroupSpec,
    group: &PermGroup,
    chain: Option<&BaseSequence>,
    timer: &mut Timer,
) -> Result<ReportEnvelope, Failure> {
    let report = timer.time("lengths", || achievable_lengths(group));
    let chain = match chain {
        Some(seq) => Some(chain_view(group, seq)?),
        None => None,
    };
    Ok(ReportEnvelope {
        spec: spec.clone(),
        domain_size: group.degree(),
        group_order: group.order().to_string(),
        b: report.min_length,
        max_irredundant: report.max_length,
        lengths: report.lengths,
        is_interval: report.is_interval,
        witnesses: report
            .witnesses
            .iter()
            .map(|(k, w)| (*k, w.labels()))
            .collect(),
        chain,
        timings: None,
    })
}

fn chain_view(group: &PermGroup, seq: &BaseSequence) -> Result<ChainView, Failure> {
    let report = chain_report(group, seq)?;
    Ok(ChainView {
        points: seq.labels(),
        irredundant_base: report.is_irredundant_base(),
        report,
    })
}

fn realize(a: RealizeArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let request = IntervalRequest::new(a.min, a.max)?;
    let spec = witness_spec(request, a.explicit_f)?;
    let spec_json = serde_json::to_string(&spec).expect("spec serializes");
    if let Some(path) = &a.emit_spec {
        std::fs::write(path, format!("{spec_json}\n"))
            .map_err(|e| input_error(format!("cannot write {}: {e}", path.display())))?;
    }
    let guard = guard()?;
    if !a.instantiate {
        let _ = writeln!(out, "{spec_json}");
        guard.check_estimate(&spec.estimate()?)?;
        return Ok(EXIT_OK);
    }
    if let Err(e) = guard.check_estimate(&spec.estimate()?) {
        let _ = writeln!(out, "{spec_json}");
        return Err(e.into());
    }
    let mut timer = Timer::new(a.timings);
    let inst = timer.time("build", || instantiate(&spec, &guard))?;
    let mut env = full_report(
        &inst.spec,
        &inst.group,
        inst.known_chain.as_ref(),
        &mut timer,
    )?;
    env.timings = timer.finish();
    let _ = writeln!(out, "{}", to_json(&env));
    if env.lengths != request.lengths() {
        let _ = writeln!(
            err,
            "error: lengths {:?} differ from the requested {:?}",
            env.lengths,
            request.lengths()
        );
        return Ok(EXIT_VERIFY);
    }
    Ok(EXIT_OK)
}

fn parse_chain(group: &PermGroup, text: &str) -> Result<BaseSequence, Failure> {
    let domain = group.domain();
    let mut points = Vec::new();
    for tok in text.split(';').map(str::trim).filter(|t| !t.is_empty()) {
        let p = match domain.index_of(tok) {
            Some(i) => i,
            None => tok
                .parse::<usize>()
                .map_err(|_| input_error(format!("unknown point {tok:?}")))?,
        };
        points.push(p);
    }
    Ok(BaseSequence::new(domain, points)?)
}

fn analyze(a: AnalyzeArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = std::fs::read_to_string(&a.spec)
        .map_err(|e| input_error(format!("cannot read {}: {e}", a.spec.display())))?;
    let spec: GroupSpec =
        serde_json::from_str(&text).map_err(|e| input_error(format!("invalid spec: {e}")))?;
    spec.validate()?;
    let guard = guard()?;
    let mut timer = Timer::new(a.timings);
    let inst = timer.time("build", || instantiate(&spec, &guard))?;
    let group = &inst.group;
    if let Some(c) = &a.chain {
        let seq = parse_chain(group, c)?;
        let _ = writeln!(out, "{}", to_json(&chain_view(group, &seq)?));
        return Ok(EXIT_OK);
    }
    if a.min_base || a.max_irredundant {
        let (len, w) = if a.min_base {
            timer.time("min_base", || min_base_length(group))
        } else {
            timer.time("max_irredundant", || max_irredundant_length(group))
        };
        let ex = Extremal {
            spec: inst.spec.clone(),
            b: a.min_base.then_some(len),
            max_irredundant: a.max_irredundant.then_some(len),
            witness: w.labels(),
        };
        let _ = writeln!(out, "{}", to_json(&ex));
        return Ok(EXIT_OK);
    }
    let mut env = full_report(&inst.spec, group, None, &mut timer)?;
    env.timings = timer.finish();
    let _ = writeln!(out, "{}", to_json(&env));
    match &spec.expected_lengths {
        Some(e) if *e != env.lengths => Ok(EXIT_VERIFY),
        _ => Ok(EXIT_OK),
    }
}

fn verify_paper(a: VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let checks = verify::verify_paper(a.level);
    if a.json {
        let _ = writeln!(out, "{}", to_json(&checks));
    } else {
        for c in &checks {
            let _ = writeln!(out, "{}", c.line());
        }
        let passed = checks.iter().filter(|c| c.passed).count();
        let _ = writeln!(out, "{passed}/{} checks passed", checks.len());
    }
    Ok(if checks.iter().all(|c| c.passed) {
        EXIT_OK
    } else {
        EXIT_VERIFY
    })
}
