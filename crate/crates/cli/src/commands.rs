use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::time::Instant;

use iklp_core::klcore::{hadamard_binomial, inverse_kl_uniform, max_degree, PavingData, UniformParams};
use iklp_core::lemmascan::{default_k_samples, family_check, theorem_pipeline, verify_interlacing_lemma, LemmaInstance};
use iklp_core::realroots::{interlaces, wronskian_orientation};
use iklp_core::report::{CheckReport, Outcome, Status, SummaryRow};
use iklp_core::scan::ScanConfig;
use iklp_core::Error as CoreError;
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{CheckArgs, CheckName, InterlaceArgs, LemmaArgs, LemmaName, OutputArgs, PavingArgs, ScanArgs, UniformArgs};
use crate::error::CliError;

/// What a command found: whether any mathematical check failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Finding {
    Clean,
    Failure,
}

impl Finding {
    pub fn exit_code(self) -> i32 {
        match self {
            Finding::Clean => 0,
            Finding::Failure => 1,
        }
    }

    fn from_failed(failed: bool) -> Self {
        if failed {
            Finding::Failure
        } else {
            Finding::Clean
        }
    }
}

type CmdResult = Result<Finding, CliError>;

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path).map(BufWriter::new).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Destination for the main report: a file if given, else stdout.
fn sink(out: &OutputArgs) -> Result<Box<dyn Write>, CliError> {
    Ok(match &out.output {
        Some(path) => Box::new(create(path)?),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_jsonl<T: Serialize>(w: &mut dyn Write, items: &[T]) -> Result<(), CliError> {
    for item in items {
        serde_json::to_writer(&mut *w, item).map_err(io::Error::from)?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

fn write_summary(out: &OutputArgs, rows: &[SummaryRow]) -> Result<(), CliError> {
    let Some(path) = &out.summary else {
        return Ok(());
    };
    let mut w = csv::Writer::from_writer(create(path)?);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

fn thread_pool(jobs: usize) -> Result<rayon::ThreadPool, CliError> {
    let jobs = match std::env::var("IKLP_JOBS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|e| CliError::Usage(format!("IKLP_JOBS={v:?}: {e}")))?,
        Err(_) => jobs,
    };
    if jobs == 0 {
        return Err(CliError::Usage("jobs must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn timed(data: &PavingData, timing: bool) -> Result<CheckReport, CoreError> {
    let start = Instant::now();
    let mut rep = theorem_pipeline(data)?;
    if timing {
        rep.elapsed_us = Some(start.elapsed().as_micros() as u64);
    }
    Ok(rep)
}

#[derive(Debug, Default)]
struct Tally {
    cases: usize,
    pass: usize,
    fail: usize,
    not_matroidal: usize,
}

impl Tally {
    fn add(&mut self, status: Status) {
        self.cases += 1;
        match status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::NotMatroidal => self.not_matroidal += 1,
            Status::Skipped => {}
        }
    }

    fn finding(&self) -> Finding {
        Finding::from_failed(self.pass < self.cases - self.not_matroidal)
    }
}

impl std::fmt::Display for Tally {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} cases, {} pass, {} fail, {} not-matroidal",
            self.cases, self.pass, self.fail, self.not_matroidal
        )
    }
}

pub fn uniform(args: &UniformArgs) -> CmdResult {
    let q = inverse_kl_uniform(UniformParams::new(args.m, args.d)?)?;
    let transforms = if args.b_transform {
        let natural = iklp_core::klcore::b_transform(&q)?;
        let rank = hadamard_binomial(&q.poly, max_degree(args.d))?;
        Some((natural, rank))
    } else {
        None
    };
    let mut out = io::stdout().lock();
    if args.json {
        #[derive(Serialize)]
        struct UniformOut<'a> {
            m: u32,
            d: u32,
            coeffs: Vec<String>,
            #[serde(skip_serializing_if = "Option::is_none")]
            b_natural: Option<&'a iklp_core::RatPoly>,
            #[serde(skip_serializing_if = "Option::is_none")]
            b_rank: Option<&'a iklp_core::RatPoly>,
        }
        let value = UniformOut {
            m: args.m,
            d: args.d,
            coeffs: q.coefficient_strings(),
            b_natural: transforms.as_ref().map(|t| &t.0),
            b_rank: transforms.as_ref().map(|t| &t.1),
        };
        serde_json::to_writer(&mut out, &value).map_err(io::Error::from)?;
        writeln!(out)?;
    } else {
        writeln!(out, "{}", q.poly)?;
        if let Some((natural, rank)) = &transforms {
            writeln!(out, "B (n = deg Q): {natural}")?;
            writeln!(out, "B (n = {}): {rank}", max_degree(args.d))?;
        }
    }
    Ok(Finding::Clean)
}

fn print_report(w: &mut dyn Write, rep: &CheckReport) -> io::Result<()> {
    let poly = iklp_core::RatPoly::new(rep.coeffs.iter().map(|c| c.parse().expect("own output")).collect());
    writeln!(w, "Q = {poly}")?;
    write!(w, "status: {}", rep.status)?;
    if let Some(reason) = &rep.reason {
        write!(w, " ({reason})")?;
    }
    writeln!(w)?;
    for (name, o) in rep.checks.iter() {
        match &o.witness {
            Some(wit) => writeln!(w, "  {name}: {} ({wit})", o.status)?,
            None => writeln!(w, "  {name}: {}", o.status)?,
        }
    }
    w.flush()
}

pub fn paving(args: &PavingArgs) -> CmdResult {
    let data = PavingData::new(args.m, args.d, args.lambda.clone())?;
    let rep = timed(&data, args.out.timing)?;
    let mut w = sink(&args.out)?;
    if args.json {
        write_jsonl(&mut *w, std::slice::from_ref(&rep))?;
    } else {
        print_report(&mut *w, &rep)?;
    }
    write_summary(&args.out, &[SummaryRow::from(&rep)])?;
    Ok(Finding::from_failed(rep.status == Status::Fail))
}

/// A line of `check` output: a report, or why the line could not be used.
#[derive(Debug, Serialize)]
#[serde(untagged)]
enum BatchEntry {
    Report(Box<CheckReport>),
    Error { error: &'static str, line: usize, message: String },
}

fn restrict(mut rep: CheckReport, only: &[CheckName]) -> CheckReport {
    if only.is_empty() || rep.status == Status::NotMatroidal {
        return rep;
    }
    let keep = |name: CheckName| only.contains(&name);
    let c = &mut rep.checks;
    for (name, slot) in [
        (CheckName::HadamardRealRooted, &mut c.hadamard_real_rooted),
        (CheckName::BTransformRealRooted, &mut c.b_transform_real_rooted),
        (CheckName::LogConcave, &mut c.log_concave),
        (CheckName::HigherOrderTuran, &mut c.higher_order_turan),
        (CheckName::Positivity, &mut c.positivity),
    ] {
        if !keep(name) {
            *slot = Outcome::skipped();
        }
    }
    rep.status = CheckReport::summarize(&rep.checks);
    rep
}

pub fn check(args: &CheckArgs) -> CmdResult {
    let file = File::open(&args.input).map_err(|source| CliError::Io {
        path: args.input.clone(),
        source,
    })?;
    let mut lines = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|source| CliError::Io {
            path: args.input.clone(),
            source,
        })?;
        if !line.trim().is_empty() {
            lines.push((i + 1, line));
        }
    }

    let pool = thread_pool(args.jobs)?;
    let entries: Vec<BatchEntry> = pool.install(|| {
        lines
            .par_iter()
            .map(|(lineno, line)| {
                let parsed = serde_json::from_str::<PavingData>(line)
                    .map_err(|e| e.to_string())
                    .and_then(|d| d.validate().map(|_| d).map_err(|e| e.to_string()));
                match parsed.and_then(|d| timed(&d, args.out.timing).map_err(|e| e.to_string())) {
                    Ok(rep) => BatchEntry::Report(Box::new(restrict(rep, &args.checks))),
                    Err(message) => BatchEntry::Error {
                        error: "parse",
                        line: *lineno,
                        message,
                    },
                }
            })
            .collect()
    });

    let mut w = sink(&args.out)?;
    write_jsonl(&mut *w, &entries)?;
    let mut failed = false;
    let mut rows = Vec::new();
    for e in &entries {
        match e {
            BatchEntry::Report(rep) => {
                failed |= rep.status == Status::Fail;
                rows.push(SummaryRow::from(rep.as_ref()));
            }
            BatchEntry::Error { .. } => failed = true,
        }
    }
    write_summary(&args.out, &rows)?;
    Ok(Finding::from_failed(failed))
}

fn scan_config(args: &ScanArgs) -> ScanConfig {
    ScanConfig {
        d_min: args.d_min,
        d_max: args.d_max,
        m_max: args.m_max,
        lambda_max: args.lambda_max,
        profiles: args.profiles,
        seed: args.seed,
        families: args.families.clone(),
        n_min: args.n_min,
        n_max: args.n_max,
        param_max: args.param_max,
        jobs: args.jobs,
    }
}

pub fn scan(args: &ScanArgs) -> CmdResult {
    let config = scan_config(args);
    config.validate()?;
    let pool = thread_pool(config.jobs)?;
    let mut w = sink(&args.out)?;
    let mut tally = Tally::default();

    let rows: Vec<SummaryRow> = if config.families.is_empty() {
        let population = config.paving_population();
        let reports = pool.install(|| {
            population
                .par_iter()
                .map(|d| timed(d, args.out.timing))
                .collect::<Result<Vec<_>, _>>()
        })?;
        write_jsonl(&mut *w, &reports)?;
        reports.iter().for_each(|r| tally.add(r.status));
        reports.iter().map(SummaryRow::from).collect()
    } else {
        let grid = config.family_grid();
        let ks = default_k_samples();
        let reports = pool.install(|| {
            grid.par_iter()
                .map(|p| family_check(p, &ks))
                .collect::<Result<Vec<_>, _>>()
        })?;
        write_jsonl(&mut *w, &reports)?;
        reports.iter().for_each(|r| tally.add(r.status));
        reports.iter().map(SummaryRow::from).collect()
    };
    write_summary(&args.out, &rows)?;
    eprintln!("{tally}");
    Ok(tally.finding())
}

fn lemma_instances(args: &LemmaArgs) -> Result<Vec<LemmaInstance>, CliError> {
    let need = |r: &Option<crate::args::IntRange>, name: &str| {
        r.clone()
            .map(|r| r.0)
            .ok_or_else(|| CliError::Usage(format!("{name} is required for this lemma")))
    };
    let ds = args.d.0.clone();
    let mut out = Vec::new();
    match args.lemma {
        LemmaName::M1 | LemmaName::MD => {
            for m in need(&args.m, "--m")? {
                for d in ds.clone() {
                    out.push(match args.lemma {
                        LemmaName::M1 => LemmaInstance::M1 { m, d },
                        _ => LemmaInstance::MD { m, d },
                    });
                }
            }
        }
        LemmaName::HH1 => {
            for h in need(&args.h, "--h")? {
                for d in ds.clone() {
                    out.push(LemmaInstance::HH1 { h, d });
                }
            }
        }
        LemmaName::HM => {
            let hs = need(&args.h, "--h")?;
            for m in need(&args.m, "--m")? {
                for h in hs.clone().filter(|&h| h <= m) {
                    for d in ds.clone() {
                        out.push(LemmaInstance::HM { m, h, d });
                    }
                }
            }
        }
    }
    for inst in &out {
        inst.validate()?;
    }
    if out.is_empty() {
        return Err(CliError::Usage("no lemma instances in the given ranges".into()));
    }
    Ok(out)
}

pub fn lemma(args: &LemmaArgs) -> CmdResult {
    let instances = lemma_instances(args)?;
    let pool = thread_pool(args.jobs)?;
    let reports = pool.install(|| {
        instances
            .par_iter()
            .map(verify_interlacing_lemma)
            .collect::<Result<Vec<_>, _>>()
    })?;
    let mut w = sink(&args.out)?;
    write_jsonl(&mut *w, &reports)?;
    let mut tally = Tally::default();
    reports.iter().for_each(|r| tally.add(r.status));
    write_summary(&args.out, &reports.iter().map(SummaryRow::from).collect::<Vec<_>>())?;
    eprintln!("{tally}");
    Ok(tally.finding())
}

pub fn interlace(args: &InterlaceArgs) -> CmdResult {
    #[derive(Serialize)]
    struct InterlaceOut {
        #[serde(flatten)]
        verdict: iklp_core::realroots::InterlaceVerdict<iklp_core::Rational>,
        #[serde(skip_serializing_if = "Option::is_none")]
        wronskian_sign: Option<String>,
    }
    let verdict = interlaces(&args.f, &args.g)?;
    let wronskian_sign = if verdict.is_alternating() {
        Some(wronskian_orientation(&args.f, &args.g)?.to_string())
    } else {
        None
    };
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, &InterlaceOut { verdict, wronskian_sign }).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(Finding::Clean)
}
