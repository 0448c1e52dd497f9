//! `axial`: command-line front end.
//!
//! Exit codes: 0 success, 2 invalid input, 3 work cap exceeded, 4 result
//! unknown within the search bounds.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use axial_core::automaton::{build_window_graph, Universe};
use axial_core::counting::{count_box_with, entropy_1d, entropy_estimate_table, CountMethod, ENTROPY_TOL};
use axial_core::measures::{empirical_stats, sample_box};
use axial_core::models::{build_model_with, ModelDescriptor};
use axial_core::optimize::{
    classify_mme, enumerate_simple_maximizing_cycles, independence_entropy, independence_pressure, ClassifyBounds,
    ConditionTwo, CycleLimits, MaximizingCycle, Verdict,
};
use axial_core::{Caps, Error, ExactScore, SetWord, SubshiftSpec};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "axial", version, about = "Independence entropy and axial powers of shifts of finite type")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Logarithm base for float values.
    #[arg(long, global = true, value_enum, default_value_t = LogBase::E)]
    log_base: LogBase,
    /// Work caps, e.g. `sites=24,nodes=1e9,vertices=1e6`.
    #[arg(long, global = true)]
    caps: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LogBase {
    #[value(name = "e")]
    E,
    #[value(name = "2")]
    Two,
    #[value(name = "10")]
    Ten,
}

impl LogBase {
    fn name(self) -> &'static str {
        match self {
            LogBase::E => "e",
            LogBase::Two => "2",
            LogBase::Ten => "10",
        }
    }

    fn convert(self, nats: f64) -> f64 {
        match self {
            LogBase::E => nats,
            LogBase::Two => nats / std::f64::consts::LN_2,
            LogBase::Ten => nats / std::f64::consts::LN_10,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Transfer,
    Backtrack,
}

#[derive(Clone, Copy, ValueEnum)]
enum UniverseArg {
    Candidates,
    Exhaustive,
}

#[derive(Subcommand)]
enum Command {
    /// Independence entropy with a maximizing cycle.
    Hind {
        model: String,
        /// Also write the window graph to this file.
        #[arg(long)]
        dump_graph: Option<PathBuf>,
    },
    /// Simple maximizing cycles up to rotation.
    Cycles {
        model: String,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, default_value_t = 10_000)]
        max_count: usize,
    },
    /// Uniqueness of isotropic limiting measures of maximal entropy.
    Classify {
        model: String,
        /// Period bound for the fallback orbit search (default twice the cycle length).
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, default_value_t = 10_000)]
        max_count: usize,
    },
    /// Single-site pressure; unlisted symbols get weight 1.
    Pressure {
        model: String,
        /// `symbol=value,...` with positive integers, fractions `p/q` or decimals.
        #[arg(long, default_value = "")]
        weights: String,
    },
    /// Exact count of the box `[0,n-1]^d`.
    Count {
        model: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Box-count estimates against the independence entropy.
    Table {
        model: String,
        #[arg(long, value_delimiter = ',', default_values_t = vec![1usize, 2, 3, 4])]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = vec![1usize, 2])]
        d: Vec<usize>,
        /// Write rows as CSV to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// One-dimensional topological entropy.
    Entropy1d {
        model: String,
        #[arg(long, default_value_t = ENTROPY_TOL)]
        tol: f64,
    },
    /// Samples from the limiting measure of a maximizing cycle.
    Sample {
        model: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Which simple maximizing cycle to use, in sorted order.
        #[arg(long, default_value_t = 0)]
        cycle: usize,
        /// Write samples as CSV to this file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Window graph as text.
    DumpGraph {
        model: String,
        #[arg(long, value_enum, default_value_t = UniverseArg::Candidates)]
        universe: UniverseArg,
        /// Write to this file instead of standard output.
        #[arg(long)]
        dump_graph: Option<PathBuf>,
    },
}

enum Failure {
    Core(Error),
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<(Value, String, bool), Failure>;

fn parse_caps(text: &str) -> Result<Caps, Failure> {
    let mut caps = Caps::default();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part.split_once('=').ok_or_else(|| Failure::Usage(format!("bad cap {part:?}")))?;
        let v: f64 = value.trim().parse().map_err(|_| Failure::Usage(format!("bad cap value {value:?}")))?;
        if !(v >= 0.0 && v.fract() == 0.0 && v <= u64::MAX as f64) {
            return Err(Failure::Usage(format!("cap {key} must be a nonnegative integer")));
        }
        let u = v as u64;
        match key.trim() {
            "forbidden_len" | "max_forbidden_len" => caps.max_forbidden_len = u as usize,
            "candidates" => caps.candidates = u as usize,
            "vertices" => caps.vertices = u as usize,
            "sites" => caps.sites = u as usize,
            "nodes" => caps.nodes = u,
            "transfer_side" => caps.transfer_side = u as usize,
            "transfer_states" => caps.transfer_states = u as usize,
            other => return Err(Failure::Usage(format!("unknown cap {other:?}"))),
        }
    }
    Ok(caps)
}

fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        return (q != BigInt::from(0)).then(|| BigRational::new(p, q));
    }
    if let Some((int, frac)) = text.split_once('.') {
        let digits = format!("{int}{frac}");
        let p: BigInt = digits.parse().ok()?;
        let q = num_traits::pow(BigInt::from(10), frac.len());
        return Some(BigRational::new(p, q));
    }
    text.parse::<BigInt>().ok().map(BigRational::from_integer)
}

fn parse_weights(spec: &SubshiftSpec, text: &str) -> Result<BTreeMap<u8, BigRational>, Failure> {
    let mut g: BTreeMap<u8, BigRational> =
        (0..spec.sigma() as u8).map(|a| (a, BigRational::from_integer(1.into()))).collect();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (sym, value) = part.split_once('=').ok_or_else(|| Failure::Usage(format!("bad weight {part:?}")))?;
        let a = spec
            .alphabet()
            .index_of(sym.trim())
            .ok_or_else(|| Failure::Usage(format!("unknown symbol {:?} in weights", sym.trim())))?;
        let v = parse_rational(value).ok_or_else(|| Failure::Usage(format!("bad weight value {value:?}")))?;
        g.insert(a, v);
    }
    Ok(g)
}

fn word_json(spec: &SubshiftSpec, w: &SetWord) -> Value {
    json!(w.symbols(spec.alphabet()))
}

fn score_fields(doc: &mut Value, p: String, n: u64, nats: f64, base: LogBase) {
    doc["p"] = json!(p);
    doc["n"] = json!(n);
    doc["nats"] = json!(nats);
    doc["base"] = json!(base.name());
    doc["value"] = json!(base.convert(nats));
}

fn exact_json(s: &ExactScore, base: LogBase) -> Value {
    let mut v = json!({});
    score_fields(&mut v, s.p().to_string(), s.n(), s.nats(), base);
    v
}

fn cycle_json(spec: &SubshiftSpec, c: &MaximizingCycle, base: LogBase) -> Value {
    let mut v = exact_json(&c.score, base);
    v["word"] = word_json(spec, &c.word);
    v["text"] = json!(c.word.render(spec.alphabet()));
    v["simple"] = json!(c.simple);
    v
}

fn text_score(label: &str, s: &ExactScore, base: LogBase) -> String {
    format!("{label} = {s} = {:.12} (base {})", base.convert(s.nats()), base.name())
}

fn run(cli: &Cli) -> Outcome {
    let caps = match &cli.caps {
        Some(t) => parse_caps(t)?,
        None => Caps::default(),
    };
    let base = cli.log_base;
    let model_of = |m: &str| -> Result<SubshiftSpec, Failure> {
        let desc: ModelDescriptor = m.parse()?;
        Ok(build_model_with(&desc, &caps)?)
    };
    let header = |command: &str, model: &str| json!({"schema_version": SCHEMA_VERSION, "command": command, "model": model});

    match &cli.command {
        Command::Hind { model, dump_graph } => {
            let spec = model_of(model)?;
            if let Some(path) = dump_graph {
                let g = build_window_graph(&spec, Universe::Candidates, &caps)?;
                fs::write(path, g.dump(&spec)).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            }
            let (h, cycle) = independence_entropy(&spec, &caps)?;
            let mut doc = header("hind", model);
            score_fields(&mut doc, h.p().to_string(), h.n(), h.nats(), base);
            doc["witness"] = word_json(&spec, &cycle.word);
            doc["witness_text"] = json!(cycle.word.render(spec.alphabet()));
            let text = format!("{}\nwitness {}", text_score("h_ind", &h, base), cycle.word.render(spec.alphabet()));
            Ok((doc, text, false))
        }
        Command::Cycles { model, max_len, max_count } => {
            let spec = model_of(model)?;
            let limits = CycleLimits { max_len: *max_len, max_count: *max_count };
            let en = enumerate_simple_maximizing_cycles(&spec, limits, &caps)?;
            let mut doc = header("cycles", model);
            score_fields(&mut doc, en.entropy.p().to_string(), en.entropy.n(), en.entropy.nats(), base);
            doc["complete"] = json!(en.complete);
            doc["count"] = json!(en.cycles.len());
            doc["cycles"] = json!(en.cycles.iter().map(|c| cycle_json(&spec, c, base)).collect::<Vec<_>>());
            let mut text = format!("{}\n{} simple maximizing cycles", text_score("h_ind", &en.entropy, base), en.cycles.len());
            if !en.complete {
                text.push_str(" (search incomplete)");
            }
            for c in &en.cycles {
                text.push_str(&format!("\n{}", c.word.render(spec.alphabet())));
            }
            Ok((doc, text, !en.complete))
        }
        Command::Classify { model, bound, max_len, max_count } => {
            let spec = model_of(model)?;
            let bounds = ClassifyBounds {
                cycles: CycleLimits { max_len: *max_len, max_count: *max_count },
                orbit_bound: *bound,
            };
            let r = classify_mme(&spec, bounds, &caps)?;
            let mut doc = header("classify", model);
            score_fields(&mut doc, r.entropy.p().to_string(), r.entropy.n(), r.entropy.nats(), base);
            let (verdict, k) = match &r.verdict {
                Verdict::Unique => ("unique", None),
                Verdict::ExactlyK { k } => ("exactly_k", Some(*k)),
                Verdict::Multiple => ("multiple", None),
                Verdict::UnknownWithinBounds => ("unknown_within_bounds", None),
            };
            doc["verdict"] = json!(verdict);
            if let Some(k) = k {
                doc["k"] = json!(k);
            }
            doc["enumeration_complete"] = json!(r.enumeration_complete);
            doc["letters_disjoint"] = json!(r.letters_disjoint);
            doc["bound"] = json!(r.bound);
            let evidence: Vec<Value> = r
                .cycles
                .iter()
                .zip(&r.condition_two)
                .map(|(c, two)| {
                    let mut v = cycle_json(&spec, c, base);
                    v["condition_two"] = match two {
                        ConditionTwo::UniqueWithinBound { bound, certified } => {
                            json!({"result": "unique_within_bound", "bound": bound, "certified": certified})
                        }
                        ConditionTwo::Counterexample(orbit) => json!({
                            "result": "counterexample",
                            "orbit": orbit,
                            "anti_diagonal": orbit.t() == 1 && orbit.drift + 1 == orbit.period,
                        }),
                    };
                    v
                })
                .collect();
            doc["cycles"] = json!(evidence);
            let mut text = verdict.to_string();
            if let Some(k) = k {
                text.push_str(&format!(" k={k}"));
            }
            text.push_str(&format!("\n{}", text_score("h_ind", &r.entropy, base)));
            for (c, two) in r.cycles.iter().zip(&r.condition_two) {
                let note = match two {
                    ConditionTwo::UniqueWithinBound { certified: true, .. } => "diagonal orbit only".to_string(),
                    ConditionTwo::UniqueWithinBound { bound, .. } => format!("no other orbit with period <= {bound}"),
                    ConditionTwo::Counterexample(o) => format!("second orbit, period {} drift {}", o.t(), o.drift),
                };
                text.push_str(&format!("\n{}  {note}", c.word.render(spec.alphabet())));
            }
            Ok((doc, text, r.verdict == Verdict::UnknownWithinBounds))
        }
        Command::Pressure { model, weights } => {
            let spec = model_of(model)?;
            let g = parse_weights(&spec, weights)?;
            let r = independence_pressure(&spec, &g, &caps)?;
            let mut doc = header("pressure", model);
            score_fields(&mut doc, r.pressure.p_string(), r.pressure.n(), r.pressure.nats(), base);
            doc["witness"] = word_json(&spec, &r.witness.word);
            doc["witness_text"] = json!(r.witness.word.render(spec.alphabet()));
            doc["weights"] = json!(g
                .iter()
                .map(|(&a, v)| (spec.alphabet().symbol(a).to_string(), v.to_string()))
                .collect::<BTreeMap<_, _>>());
            let text = format!(
                "pressure = {} = {:.12} (base {})\nwitness {}",
                r.pressure,
                base.convert(r.pressure.nats()),
                base.name(),
                r.witness.word.render(spec.alphabet())
            );
            Ok((doc, text, false))
        }
        Command::Count { model, n, d, method } => {
            let spec = model_of(model)?;
            let method = match method {
                MethodArg::Auto => CountMethod::Auto,
                MethodArg::Transfer => CountMethod::Transfer,
                MethodArg::Backtrack => CountMethod::Backtrack,
            };
            let r = count_box_with(&spec, *n, *d, method, &caps)?;
            let mut doc = header("count", model);
            doc["n"] = json!(r.n);
            doc["d"] = json!(r.d);
            doc["count"] = json!(r.count.to_string());
            doc["estimate_nats"] = json!(r.estimate);
            doc["base"] = json!(base.name());
            doc["estimate"] = json!(base.convert(r.estimate));
            doc["method"] = json!(r.method);
            let text = format!("count({n},{d}) = {}\nestimate = {:.12} (base {})", r.count, base.convert(r.estimate), base.name());
            Ok((doc, text, false))
        }
        Command::Table { model, n, d, csv } => {
            let spec = model_of(model)?;
            let t = entropy_estimate_table(&spec, n, d, &caps)?;
            let h = t.h_ind.nats();
            let mut csv_text = Vec::new();
            {
                let mut wtr = csv::Writer::from_writer(&mut csv_text);
                wtr.write_record(["n", "d", "count", "estimate_nats", "h_ind_nats"]).expect("in-memory write");
                for r in &t.rows {
                    wtr.write_record([
                        r.n.to_string(),
                        r.d.to_string(),
                        r.count.to_string(),
                        format!("{}", r.estimate),
                        format!("{h}"),
                    ])
                    .expect("in-memory write");
                }
                wtr.flush().expect("in-memory write");
            }
            let csv_text = String::from_utf8(csv_text).expect("csv is utf-8");
            if let Some(path) = csv {
                fs::write(path, &csv_text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            }
            let mut doc = header("table", model);
            doc["h_ind"] = exact_json(&t.h_ind, base);
            doc["rows"] = json!(t
                .rows
                .iter()
                .map(|r| json!({
                    "n": r.n,
                    "d": r.d,
                    "count": r.count.to_string(),
                    "estimate_nats": r.estimate,
                    "estimate": base.convert(r.estimate),
                }))
                .collect::<Vec<_>>());
            doc["checks"] = json!(t.checks);
            if cli.format == Format::Csv {
                return Ok((doc, csv_text.trim_end().to_string(), false));
            }
            let mut text = text_score("h_ind", &t.h_ind, base);
            for r in &t.rows {
                text.push_str(&format!("\nn={} d={} count={} estimate={:.12}", r.n, r.d, r.count, base.convert(r.estimate)));
            }
            text.push_str(&format!(
                "\nsandwich {} doubling {} slice {}",
                t.checks.sandwich, t.checks.doubling, t.checks.slice
            ));
            Ok((doc, text, false))
        }
        Command::Entropy1d { model, tol } => {
            let spec = model_of(model)?;
            if !(*tol > 0.0 && *tol < 1.0) {
                return Err(Failure::Usage("tol must lie in (0, 1)".into()));
            }
            let h = entropy_1d(&spec, *tol, &caps)?;
            let mut doc = header("entropy1d", model);
            doc["nats"] = json!(h);
            doc["base"] = json!(base.name());
            doc["value"] = json!(base.convert(h));
            doc["tol"] = json!(tol);
            Ok((doc, format!("h = {:.12} (base {})", base.convert(h), base.name()), false))
        }
        Command::Sample { model, n, d, count, seed, cycle, emit } => {
            let spec = model_of(model)?;
            let en = enumerate_simple_maximizing_cycles(&spec, CycleLimits::default(), &caps)?;
            let chosen = en.cycles.get(*cycle).ok_or_else(|| {
                Failure::Usage(format!("cycle index {cycle} out of range ({} cycles)", en.cycles.len()))
            })?;
            let batch = sample_box(&spec, &chosen.word, *n, *d, *seed, *count)?;
            let stats = empirical_stats(&batch);
            if let Some(path) = emit {
                write_samples(&spec, &batch, path)?;
            }
            let mut doc = header("sample", model);
            doc["n"] = json!(n);
            doc["d"] = json!(d);
            doc["count"] = json!(count);
            doc["seed"] = json!(seed);
            doc["rng"] = json!(batch.algorithm);
            doc["word"] = word_json(&spec, &batch.word);
            doc["word_text"] = json!(batch.word.render(spec.alphabet()));
            doc["violations"] = json!(stats.violations);
            doc["per_site_entropy_nats"] = json!(stats.per_site_entropy);
            doc["mean_log_cell_size"] = exact_json(&stats.mean_log_cell_size, base);
            doc["sampled_mean_log_cell_size_nats"] = json!(stats.sampled_mean_log_cell_size);
            doc["parity_rate"] = json!(stats.parity_rate);
            doc["multi_cell_frequencies"] = json!(stats
                .multi_cell_frequencies
                .iter()
                .enumerate()
                .map(|(a, f)| (spec.alphabet().symbol(a as u8).to_string(), *f))
                .collect::<BTreeMap<_, _>>());
            let text = format!(
                "{} samples of {}, violations {}\nmean log cell size {}\nper-site entropy {:.6} nats\nparity rate {:.4}",
                count,
                batch.word.render(spec.alphabet()),
                stats.violations,
                stats.mean_log_cell_size,
                stats.per_site_entropy,
                stats.parity_rate
            );
            Ok((doc, text, false))
        }
        Command::DumpGraph { model, universe, dump_graph } => {
            let spec = model_of(model)?;
            let universe = match universe {
                UniverseArg::Candidates => Universe::Candidates,
                UniverseArg::Exhaustive => Universe::Exhaustive,
            };
            let g = build_window_graph(&spec, universe, &caps)?;
            let dump = g.dump(&spec);
            let mut doc = header("dump-graph", model);
            doc["vertices"] = json!(g.vertex_count());
            doc["edges"] = json!(g.edges().len());
            match dump_graph {
                Some(path) => {
                    fs::write(path, &dump).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                    doc["path"] = json!(path.display().to_string());
                    Ok((doc, format!("{} vertices, {} edges", g.vertex_count(), g.edges().len()), false))
                }
                None => {
                    doc["graph"] = json!(dump);
                    Ok((doc, dump.trim_end().to_string(), false))
                }
            }
        }
    }
}

fn write_samples(spec: &SubshiftSpec, batch: &axial_core::measures::SampleBatch, path: &PathBuf) -> Result<(), Failure> {
    let io = |e: csv::Error| Failure::Io(format!("{}: {e}", path.display()));
    let mut wtr = csv::Writer::from_path(path).map_err(io)?;
    let sites = batch.n.pow(batch.d as u32);
    let mut head = vec!["sample".to_string(), "phase".to_string()];
    for s in 0..sites {
        let mut coords = Vec::with_capacity(batch.d);
        let mut r = s;
        for _ in 0..batch.d {
            coords.push(r % batch.n);
            r /= batch.n;
        }
        coords.reverse();
        head.push(format!("s{}", coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("_")));
    }
    wtr.write_record(&head).map_err(io)?;
    for (i, s) in batch.samples.iter().enumerate() {
        let mut row = vec![i.to_string(), s.phase.to_string()];
        row.extend(s.letters.iter().map(|&a| spec.alphabet().symbol(a).to_string()));
        wtr.write_record(&row).map_err(io)?;
    }
    wtr.flush().map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(t) = std::env::var("AXIAL_THREADS") {
        match t.trim().parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                eprintln!("error: AXIAL_THREADS must be a positive integer");
                return ExitCode::from(2);
            }
        }
    }
    match run(&cli) {
        Ok((doc, text, unknown)) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string(&doc).expect("json serializes")),
                Format::Text | Format::Csv => println!("{text}"),
            }
            ExitCode::from(if unknown { 4 } else { 0 })
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_cap() { 3 } else { 2 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
