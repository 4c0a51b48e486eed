use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use boolspec::format::{
    function_from_hex, parse_point_set, parse_point_text, parse_truth_table, write_point_set, write_truth_table,
};
use boolspec::function::set_max_n;
use boolspec::search::{Annealing, SearchConfig};
use boolspec::{
    analyze, exhaustive, search, AnalysisReport, BooleanFunction, GeneratorKind, GeneratorSpec, SplitMix64,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{
    AnalyzeArgs, Cli, Command, ExhaustArgs, Family, GenerateArgs, GeneratorArgs, InputFormat, Kind, SearchArgs,
    SweepArgs,
};
use crate::envelope::{digest_hex, Payload, ReportEnvelope, SearchSummary, SCHEMA_VERSION};
use crate::rows::{analysis_row, trace_row, ANALYSIS_HEADER, TRACE_HEADER};
use crate::{CliError, Outcome};

pub const MAX_N_ENV: &str = "BOOLSPEC_MAX_N";

struct Context<'a> {
    cli: &'a Cli,
    echo: Vec<String>,
    started: Instant,
}

impl Context<'_> {
    fn emit_envelope(&self, digest_input: &[u8], payload: Payload) -> Result<(), CliError> {
        let envelope = ReportEnvelope {
            schema_version: SCHEMA_VERSION.into(),
            command: self.echo.clone(),
            input_digest: digest_hex(digest_input),
            payload,
            timing_ms: (!self.cli.reproducible).then(|| self.started.elapsed().as_millis() as u64),
        };
        write_json(&envelope)
    }
}

fn write_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn configure_max_n(cli: &Cli) -> Result<(), CliError> {
    let from_env = match std::env::var(MAX_N_ENV) {
        Ok(v) => Some(
            v.trim()
                .parse::<u32>()
                .map_err(|_| CliError::Usage(format!("{MAX_N_ENV}={v:?} is not a valid dimension")))?,
        ),
        Err(_) => None,
    };
    if let Some(n) = cli.max_n.or(from_env) {
        set_max_n(n);
    }
    Ok(())
}

pub fn dispatch(cli: &Cli, echo: Vec<String>) -> Result<Outcome, CliError> {
    configure_max_n(cli)?;
    let ctx = Context { cli, echo, started: Instant::now() };
    match &cli.command {
        Command::Analyze(a) => cmd_analyze(&ctx, a),
        Command::Generate(a) => cmd_generate(&ctx, a),
        Command::Exhaust(a) => cmd_exhaust(&ctx, a),
        Command::Search(a) => cmd_search(&ctx, a),
        Command::Sweep(a) => cmd_sweep(&ctx, a),
    }
}

fn read_function(path: &Path, format: Option<InputFormat>) -> Result<BooleanFunction, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let format = format.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some("tt" | "table") => InputFormat::Table,
        _ => InputFormat::Points,
    });
    let parsed = match format {
        InputFormat::Points => parse_point_set(&text).map(|s| s.to_function()),
        InputFormat::Table => parse_truth_table(&text),
    };
    parsed.map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn canonical_bytes(f: &BooleanFunction) -> Vec<u8> {
    let mut bytes = format!("n={}\n", f.n()).into_bytes();
    bytes.extend(f.to_bytes());
    bytes
}

fn outcome(violation: bool) -> Outcome {
    if violation {
        Outcome::Violation
    } else {
        Outcome::Clean
    }
}

fn warn_all(report: &AnalysisReport) {
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
}

fn cmd_analyze(ctx: &Context, args: &AnalyzeArgs) -> Result<Outcome, CliError> {
    let f = read_function(&args.input, args.format)?;
    let report = analyze(&f, ctx.cli.paranoid);
    warn_all(&report);
    let violation = report.has_violation();
    if ctx.cli.csv {
        let mut w = csv::Writer::from_writer(std::io::stdout().lock());
        w.write_record(ANALYSIS_HEADER)?;
        w.write_record(analysis_row(&report))?;
        w.flush()?;
    } else {
        ctx.emit_envelope(&canonical_bytes(&f), Payload::Analysis(Box::new(report)))?;
    }
    Ok(outcome(violation))
}

fn parse_vector(text: &str, n: u32) -> Result<usize, CliError> {
    parse_point_text(text, n).map_err(|e| CliError::Usage(format!("invalid vector {text:?}: {e}")))
}

fn generator_spec(args: &GeneratorArgs, seed: u64) -> Result<GeneratorSpec, CliError> {
    let n = args.n;
    let kind = match args.kind {
        Kind::CoordinateSubspace => GeneratorKind::CoordinateSubspace { k: args.k },
        Kind::AffineSubspace => GeneratorKind::AffineSubspace {
            basis: args.basis.iter().map(|b| parse_vector(b, n)).collect::<Result<_, _>>()?,
            shift: args.shift.as_deref().map(|s| parse_vector(s, n)).transpose()?.unwrap_or(0),
        },
        Kind::HammingBall => GeneratorKind::HammingBall {
            center: args.center.as_deref().map(|s| parse_vector(s, n)).transpose()?.unwrap_or(0),
            radius: args.radius,
        },
        Kind::Random => GeneratorKind::RandomDensity { p: args.p },
        Kind::Sidon => GeneratorKind::SidonGreedy { m: args.m },
    };
    Ok(GeneratorSpec::new(n, kind, seed))
}

fn write_text(path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_generate(ctx: &Context, args: &GenerateArgs) -> Result<Outcome, CliError> {
    let spec = generator_spec(&args.generator, ctx.cli.seed)?;
    let generated = spec.generate()?;
    if generated.flagged {
        eprintln!(
            "warning: Sidon target m={} unreachable; emitting maximal set of size {}",
            args.generator.m,
            generated.set.len()
        );
    }
    write_text(args.output.as_ref(), &write_point_set(&generated.set))?;
    Ok(Outcome::Clean)
}

fn write_tables(dir: &Path, n: u32, label: &str, tables: &[String]) -> Result<(), CliError> {
    for (i, hex) in tables.iter().enumerate() {
        let f = function_from_hex(n, hex)?;
        fs::write(dir.join(format!("{label}-{i}.tt")), write_truth_table(&f))?;
    }
    Ok(())
}

fn cmd_exhaust(ctx: &Context, args: &ExhaustArgs) -> Result<Outcome, CliError> {
    if ctx.cli.csv {
        return Err(CliError::Usage("exhaust emits JSON only".into()));
    }
    if args.sample.is_none() && args.n > exhaustive::MAX_EXHAUSTIVE_N {
        return Err(CliError::Usage(format!(
            "n={} exceeds the exhaustive limit {}; use --sample N for a seeded sampled run",
            args.n,
            exhaustive::MAX_EXHAUSTIVE_N
        )));
    }
    let job = || match args.sample {
        Some(count) => exhaustive::sampled(args.n, count, ctx.cli.seed),
        None => exhaustive::enumerate_with(args.n, args.cross_check),
    };
    let summary = match args.workers {
        Some(w) => exhaustive::with_workers(w.max(1), job),
        None => job(),
    }?;
    if let Some(dir) = &args.tables_out {
        fs::create_dir_all(dir)?;
        write_tables(dir, summary.n, "violation", &summary.violations)?;
        write_tables(dir, summary.n, "classical-violation", &summary.classical_violations)?;
        write_tables(dir, summary.n, "equality", &summary.equality_cases)?;
        write_tables(dir, summary.n, "argmin", &summary.argmin)?;
    }
    let violation = !summary.is_clean();
    if violation {
        eprintln!(
            "{} violations, {} classical violations",
            summary.violation_count(),
            summary.classical_violation_count()
        );
    }
    let digest = format!("exhaust n={} sample={:?} seed={}", args.n, args.sample, ctx.cli.seed);
    ctx.emit_envelope(digest.as_bytes(), Payload::Exhaustive(summary))?;
    Ok(outcome(violation))
}

fn write_trace<W: Write>(out: W, trace: &boolspec::SearchTrace) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(TRACE_HEADER)?;
    for r in &trace.records {
        w.write_record(trace_row(r))?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_search(ctx: &Context, args: &SearchArgs) -> Result<Outcome, CliError> {
    let config = SearchConfig {
        n: args.initial.n,
        initial: generator_spec(&args.initial, ctx.cli.seed)?,
        max_iterations: args.iters,
        restarts: args.restarts,
        annealing: Annealing { enabled: !args.no_anneal, initial_temperature: args.temperature, cooling: args.cooling },
        seed: ctx.cli.seed,
        recompute_interval: args.recompute_interval,
    };
    let trace = search::run(&config)?;
    if let Some(path) = &args.trace_out {
        write_trace(fs::File::create(path)?, &trace)?;
    }
    if let Some(path) = &args.best_out {
        fs::write(path, write_point_set(&trace.best))?;
    }
    let violation = trace.best_report.as_ref().is_some_and(|r| !r.degenerate && !r.holds);
    if ctx.cli.csv {
        write_trace(std::io::stdout().lock(), &trace)?;
        return Ok(outcome(violation));
    }
    let summary = SearchSummary {
        records: trace.records.len(),
        accepted: trace.records.iter().filter(|r| r.accepted).count(),
        best_restart: trace.best_restart,
        best_objective_float: trace.best_objective.to_f64(),
        best: trace.best,
        best_objective: trace.best_objective,
        best_report: trace.best_report,
        config,
    };
    let digest = serde_json::to_vec(&summary.config)?;
    ctx.emit_envelope(&digest, Payload::Search(summary))?;
    Ok(outcome(violation))
}

fn parse_range(text: &str) -> Result<(u32, u32), CliError> {
    let bad = || CliError::Usage(format!("invalid range {text:?}; expected a..b"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let (a, b) = (a.trim().parse::<u32>().map_err(|_| bad())?, b.trim().parse::<u32>().map_err(|_| bad())?);
    if a > b {
        return Err(CliError::Usage(format!("empty range {text}")));
    }
    Ok((a, b))
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Ball => "ball",
        Family::Random => "random",
        Family::Sidon => "sidon",
        Family::Subspace => "subspace",
    }
}

fn sweep_instance(args: &SweepArgs, family: Family, n: u32, seed: u64) -> Result<(String, GeneratorSpec), CliError> {
    let (param, kind) = match family {
        Family::Subspace => (format!("k={}", args.k), GeneratorKind::CoordinateSubspace { k: args.k }),
        Family::Sidon => {
            let m = args.m.unwrap_or_else(|| (2f64.powf(f64::from(n) / 2.0)).ceil() as usize);
            (format!("m={m}"), GeneratorKind::SidonGreedy { m })
        }
        Family::Ball => {
            (format!("radius={}", args.radius), GeneratorKind::HammingBall { center: 0, radius: args.radius })
        }
        Family::Random => (format!("p={}", args.p), GeneratorKind::RandomDensity { p: args.p }),
    };
    let instance_seed = SplitMix64::split(seed, u64::from(n)).next_u64();
    Ok((param, GeneratorSpec::new(n, kind, instance_seed)))
}

fn cmd_sweep(ctx: &Context, args: &SweepArgs) -> Result<Outcome, CliError> {
    if ctx.cli.json {
        return Err(CliError::Usage("sweep emits CSV only".into()));
    }
    let (lo, hi) = parse_range(&args.n_range)?;
    let mut families = args.family.clone();
    families.sort_unstable_by_key(|&f| family_name(f));
    families.dedup();

    let mut instances = Vec::new();
    for &family in &families {
        for n in lo..=hi {
            let (param, spec) = sweep_instance(args, family, n, ctx.cli.seed)?;
            instances.push((family, param, spec));
        }
    }
    let paranoid = ctx.cli.paranoid;
    let rows = instances
        .par_iter()
        .map(|(family, param, spec)| {
            let generated = spec.generate()?;
            let report = analyze(&generated.set.to_function(), paranoid);
            Ok((*family, param.clone(), generated.flagged, report))
        })
        .collect::<Result<Vec<_>, boolspec::Error>>()?;

    let mut w = csv::Writer::from_writer(std::io::stdout().lock());
    let mut header = vec!["family", "param", "flagged"];
    header.extend(ANALYSIS_HEADER);
    w.write_record(&header)?;
    let mut violation = false;
    for (family, param, flagged, report) in &rows {
        violation |= report.has_violation();
        let mut record = vec![family_name(*family).to_string(), param.clone(), flagged.to_string()];
        record.extend(analysis_row(report));
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(outcome(violation))
}
