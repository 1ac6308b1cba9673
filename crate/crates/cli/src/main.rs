//! `qpa`: law checks, Toda brackets, cup-one squares and track group
//! arithmetic from the command line.

mod expr;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use glob::Pattern;
use serde_json::{json, Value};

use qpa_core::check::check_instance_with;
use qpa_core::einfty::{Lift, Squares};
use qpa_core::enumerate::Bounds;
use qpa_core::instances::{builtin, load_instance, to_json, Instance, BUILTINS};
use qpa_core::qpa::{Brackets, HomologyRing};
use qpa_core::report::{LawReport, Status};
use qpa_core::trackgroup::{parse_word, verify_track_laws, Perm, TrackElem, MAX_TABLE_DEGREE};

#[derive(Parser, Debug)]
#[command(name = "qpa", version, about = "Quadratic pair algebras: law checks, brackets and squares")]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
struct RunConfig {
    /// Coordinate window for infinite carriers.
    #[arg(long, global = true, env = "QPA_BOUND")]
    bound: Option<u64>,
    /// Seed for sampled tuples.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Maximum tuples per law and degree combination.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Human,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run law suites on an instance.
    Check {
        /// `builtin:NAME` or a path to instance JSON.
        #[arg(long)]
        instance: String,
        /// Glob over law ids, e.g. 'T*'; repeatable.
        #[arg(long)]
        laws: Vec<String>,
    },
    /// The Massey product ⟨a,b,c⟩.
    Bracket { instance: String, a: String, b: String, c: String },
    /// The cup-one square of an even class.
    Sq1 {
        instance: String,
        a: String,
        #[arg(long, default_value = "tauhat")]
        lift: String,
    },
    /// Symmetric track group arithmetic.
    Track {
        #[command(subcommand)]
        op: TrackOp,
    },
    /// List built-in instances.
    Instances,
    /// Print a built-in instance as JSON.
    Emit { name: String },
}

#[derive(Subcommand, Debug)]
enum TrackOp {
    /// Multiply two words, e.g. `mul 4 't1 t3' 't3 t1'`.
    Mul { n: usize, a: String, b: String },
    /// Check the group laws for every n up to nmax.
    Verify {
        #[arg(long, default_value_t = 5)]
        nmax: usize,
    },
    /// List every element of the group in degree n.
    Table { n: usize },
}

/// A failure that maps onto an exit code.
enum Fail {
    /// Usage or load problems.
    Usage(String),
    /// The computation ran and the answer is negative.
    Negative(String),
}

impl RunConfig {
    fn bounds(&self) -> Result<Bounds, Fail> {
        let mut b = Bounds::default().with_seed(self.seed);
        if let Some(w) = self.bound {
            if w == 0 {
                return Err(Fail::Usage("bound must be at least 1".into()));
            }
            b = b.with_window(w);
        }
        if let Some(k) = self.budget {
            if k == 0 {
                return Err(Fail::Usage("budget must be at least 1".into()));
            }
            b = b.with_budget(k);
        }
        Ok(b)
    }
}

fn load(spec: &str) -> Result<Instance, Fail> {
    let r = match spec.strip_prefix("builtin:") {
        Some(name) => builtin(name),
        None => load_instance(spec),
    };
    r.map_err(|e| Fail::Usage(format!("cannot load '{spec}': {e}")))
}

fn out(line: impl AsRef<str>) {
    let mut o = io::stdout().lock();
    let _ = writeln!(o, "{}", line.as_ref());
    let _ = o.flush();
}

fn render(r: &LawReport, f: Format) -> String {
    match f {
        Format::Json => serde_json::to_string(r).expect("reports serialize"),
        Format::Tsv => {
            let w = r.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
            format!("{}\t{}\t{}\t{}\t{}", r.law_id, r.status, r.tuples_checked, r.skipped, w)
        }
        Format::Human => {
            let mut s = format!("({}) {:<7} {:>8} tuples  {}", r.law_id, r.status, r.tuples_checked, r.label);
            if r.status == Status::Vacuous {
                s.push_str("  [vacuous]");
            }
            if let Some(w) = &r.witness {
                s.push_str(&format!("\n    witness {w}"));
            }
            if let Some(n) = &r.note {
                s.push_str(&format!("\n    note: {n}"));
            }
            s
        }
    }
}

fn report_all<'a>(reports: impl IntoIterator<Item = &'a LawReport>, f: Format) -> (usize, usize, usize) {
    let (mut pass, mut fail, mut vac) = (0, 0, 0);
    for r in reports {
        match r.status {
            Status::Pass => pass += 1,
            Status::Fail => fail += 1,
            Status::Vacuous => vac += 1,
        }
        out(render(r, f));
    }
    (pass, fail, vac)
}

fn summary(name: &str, (pass, fail, vac): (usize, usize, usize), f: Format) -> Result<(), Fail> {
    let status = if fail == 0 { "pass" } else { "fail" };
    match f {
        Format::Json => out(
            json!({"summary": {"instance": name, "laws": pass + fail + vac, "pass": pass, "fail": fail, "vacuous": vac, "status": status}})
                .to_string(),
        ),
        Format::Tsv => out(format!("#summary\t{name}\t{pass}\t{fail}\t{vac}\t{status}")),
        Format::Human => out(format!("{name}: {pass} pass, {fail} fail, {vac} vacuous")),
    }
    if fail == 0 {
        Ok(())
    } else {
        Err(Fail::Negative(format!("{fail} law(s) failed")))
    }
}

fn cmd_check(cfg: &RunConfig, instance: &str, laws: &[String]) -> Result<(), Fail> {
    let b = cfg.bounds()?;
    let pats = laws
        .iter()
        .map(|p| Pattern::new(p).map_err(|e| Fail::Usage(format!("bad law pattern '{p}': {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let inst = load(instance)?;
    let select = |id: &str| pats.is_empty() || pats.iter().any(|p| p.matches(id));
    let mut counts = (0, 0, 0);
    let mut seen = 0;
    check_instance_with(&inst, &b, &select, &mut |r| {
        seen += 1;
        let (p, f, v) = report_all([r], cfg.format);
        counts = (counts.0 + p, counts.1 + f, counts.2 + v);
    });
    if seen == 0 {
        return Err(Fail::Usage(format!("no law of '{}' matches {laws:?}", inst.name())));
    }
    summary(inst.name(), counts, cfg.format)
}

fn ring_of(inst: &Instance) -> Result<Brackets<'_>, Fail> {
    Brackets::algebra(&inst.qpa).map_err(|e| Fail::Usage(format!("homology of '{}': {e}", inst.name())))
}

fn cmd_bracket(cfg: &RunConfig, instance: &str, a: &str, b: &str, c: &str) -> Result<(), Fail> {
    let inst = load(instance)?;
    let br = ring_of(&inst)?;
    let class = |s: &str| expr::parse_class(&br.ring, s).map_err(Fail::Usage);
    let (p, x) = class(a)?;
    let (q, y) = class(b)?;
    let (r, z) = class(c)?;
    if !br.fits(p, q, r) {
        return Err(Fail::Negative(format!(
            "degree {} of ⟨{a},{b},{c}⟩ exceeds the truncation {}",
            p + q + r + 1,
            br.top()
        )));
    }
    let m = br.bracket(p, &x, q, &y, r, &z).map_err(|e| Fail::Negative(e.to_string()))?;
    emit_value(m.to_json(), cfg.format);
    Ok(())
}

fn emit_value(v: Value, f: Format) {
    match f {
        Format::Json => out(v.to_string()),
        _ => out(serde_json::to_string_pretty(&v).expect("json values serialize")),
    }
}

fn cmd_sq1(cfg: &RunConfig, instance: &str, a: &str, lift: &str) -> Result<(), Fail> {
    let lift = Lift::parse(lift).map_err(|e| Fail::Usage(e.to_string()))?;
    let inst = load(instance)?;
    let e = match inst.einfty() {
        Ok(Some(e)) => e,
        Ok(None) => return Err(Fail::Usage(format!("'{}' carries no E∞ structure", inst.name()))),
        Err(err) => return Err(Fail::Usage(format!("E∞ structure of '{}': {err}", inst.name()))),
    };
    let sq = Squares::new(e).map_err(|err| Fail::Usage(err.to_string()))?;
    let ring: &HomologyRing = sq.ring();
    let (d, x) = expr::parse_class(ring, a).map_err(Fail::Usage)?;
    let v = sq.sq1(d, &x, lift).map_err(|err| Fail::Negative(err.to_string()))?;
    let h1 = ring.h1(2 * d);
    emit_value(
        json!({
            "degree": d,
            "class": ring.h0(d).format(&x),
            "value": h1.format(&v),
            "coords": v.iter().map(coord).collect::<Vec<_>>(),
            "value_degree": 2 * d,
            "lift": lift.name(),
        }),
        cfg.format,
    );
    Ok(())
}

/// An integer coordinate as a JSON number when it fits, else as a string.
fn coord(x: &impl ToString) -> Value {
    let s = x.to_string();
    s.parse::<i64>().map_or(Value::String(s), Value::from)
}

fn track_json(t: &TrackElem) -> Value {
    let images: Vec<usize> = (0..t.degree()).map(|i| t.delta().image(i) + 1).collect();
    json!({"word": t.to_string(), "perm": images, "omega": t.omega_bit(), "epsilon": t.epsilon()})
}

fn cmd_track(cfg: &RunConfig, op: &TrackOp) -> Result<(), Fail> {
    let usage = |e: qpa_core::Error| Fail::Usage(e.to_string());
    match op {
        TrackOp::Mul { n, a, b } => {
            let x = TrackElem::from_word(*n, &parse_word(a).map_err(usage)?).map_err(usage)?;
            let y = TrackElem::from_word(*n, &parse_word(b).map_err(usage)?).map_err(usage)?;
            let z = x.mul(&y).map_err(usage)?;
            emit_value(track_json(&z), cfg.format);
            Ok(())
        }
        TrackOp::Verify { nmax } => {
            let reports = verify_track_laws(*nmax).map_err(usage)?;
            let counts = report_all(&reports, cfg.format);
            summary(&format!("track n<={nmax}"), counts, cfg.format)
        }
        TrackOp::Table { n } => {
            if *n == 0 || *n > MAX_TABLE_DEGREE {
                return Err(Fail::Usage(format!("table degree must be in 1..={MAX_TABLE_DEGREE}")));
            }
            for p in Perm::all(*n) {
                for w in [false, true] {
                    emit_value(track_json(&TrackElem::from_parts(p.clone(), w)), Format::Json);
                }
            }
            Ok(())
        }
    }
}

fn cmd_instances(cfg: &RunConfig) -> Result<(), Fail> {
    for name in BUILTINS {
        let inst = load(&format!("builtin:{name}"))?;
        let einfty = matches!(inst.einfty(), Ok(Some(_)));
        let top = inst.qpa.degrees.len() - 1;
        match cfg.format {
            Format::Json => out(json!({"name": name, "truncation": top, "einfty": einfty}).to_string()),
            Format::Tsv => out(format!("{name}\t{top}\t{einfty}")),
            Format::Human => out(format!("{name:<26} degrees 0..={top}{}", if einfty { "  E∞" } else { "" })),
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Fail> {
    if let Some(j) = cli.run.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| Fail::Usage(format!("cannot start {j} workers: {e}")))?;
    }
    match &cli.cmd {
        Cmd::Check { instance, laws } => cmd_check(&cli.run, instance, laws),
        Cmd::Bracket { instance, a, b, c } => cmd_bracket(&cli.run, instance, a, b, c),
        Cmd::Sq1 { instance, a, lift } => cmd_sq1(&cli.run, instance, a, lift),
        Cmd::Track { op } => cmd_track(&cli.run, op),
        Cmd::Instances => cmd_instances(&cli.run),
        Cmd::Emit { name } => {
            let inst = load(&format!("builtin:{}", name.trim_start_matches("builtin:")))?;
            out(to_json(&inst));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Negative(msg)) => {
            eprintln!("qpa: {msg}");
            ExitCode::from(1)
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("qpa: {msg}");
            ExitCode::from(2)
        }
    }
}
