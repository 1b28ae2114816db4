//! `polya`: command-line front end for exact Pólya enumeration, signed cycle
//! indices and trace-power determinants.

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use polya::algebra::{format_rat, parse_rat, Rat};
use polya::cycleindex::cycle_index;
use polya::enumeration::{extended_enumerate, polya_enumerate, Caps, DeltaWeight, GenFunction};
use polya::formats::{self, poly_to_json};
use polya::symdet::{det_bareiss, det_via_traces, elementary_symmetric_direct, elementary_symmetric_via_cycle_index};
use polya::verify::{run_suite, Suite, VerifyConfig};
use polya::{Error, PermGroup, Strategy};

#[derive(Debug, Parser)]
#[command(name = "polya", version, about = "Exact weighted Pólya enumeration and its signed variants")]
struct Cli {
    /// Worker threads for parallel kernels (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Run every kernel on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct GroupArgs {
    /// Named group (`sym:n`, `alt:n`, `cyclic:n`, `dihedral:n`, `trivial:n`),
    /// a group JSON file, or inline group JSON.
    #[arg(long)]
    group: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the cycle index Z_G in t1..tn.
    CycleIndex {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Classical weighted enumeration Z_G(p1, …, pn) in w1..wm.
    Enumerate {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        colors: usize,
        /// Comma-separated numeric color weights r1,…,rm.
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Δ-weighted enumeration Σ Δ(σ) Z(σ, p(w)).
    Extended {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        colors: usize,
        /// `uniform`, `sign`, or `@file.json` with a Δ table.
        #[arg(long)]
        delta: String,
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// e_n(w1..wm) from the signed cycle index of Sym(n).
    Esym {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Compare against the subset expansion.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Determinant from traces of matrix powers.
    Det {
        /// Matrix JSON file.
        #[arg(long)]
        matrix: String,
        /// Compare against Bareiss elimination.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run verification suites; exits 1 on the first identity failure.
    Verify {
        /// lemma-key, main1, main3, remark, esym, det, consistency or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random (G, Δ, m) triples for main1/main3.
        #[arg(long, default_value_t = 50)]
        trials: usize,
        /// Largest m for the esym suite (all 1 ≤ n ≤ m).
        #[arg(long, default_value_t = 7)]
        max_esym: usize,
        /// Largest matrix order for the det suite.
        #[arg(long, default_value_t = 6)]
        max_order: usize,
        /// Random matrices per order for the det suite.
        #[arg(long, default_value_t = 200)]
        matrices: usize,
        #[arg(long, default_value_t = Caps::default().max_colorings)]
        max_colorings: u64,
        #[arg(long, default_value_t = Caps::default().max_work)]
        max_work: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Result of a command: lines for text mode, a value for JSON mode, and
/// whether every requested check passed.
struct Output {
    text: Vec<String>,
    json: Value,
    ok: bool,
}

impl Output {
    fn ok(text: Vec<String>, json: Value) -> Self {
        Output { text, json, ok: true }
    }
}

fn load_group(arg: &str) -> Result<PermGroup, Error> {
    let arg = arg.trim();
    if arg.starts_with('{') {
        return formats::group_from_json(&formats::parse_json(arg)?);
    }
    if let Some((kind, n)) = arg.split_once(':') {
        if !kind.is_empty() && !kind.contains(['/', '\\', '.']) && n.chars().all(|c| c.is_ascii_digit()) {
            return PermGroup::named(arg);
        }
    }
    formats::group_from_json(&read_json(arg)?)
}

fn read_json(path: &str) -> Result<Value, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Validation(format!("cannot read {path}: {e}")))?;
    formats::parse_json(&text)
}

fn parse_weights(s: &str, m: usize) -> Result<Vec<Rat>, Error> {
    let w = s.split(',').map(parse_rat).collect::<Result<Vec<_>, _>>()?;
    if w.len() != m {
        return Err(Error::Dimension { expected: m, found: w.len() });
    }
    Ok(w)
}

fn parse_delta(s: &str) -> Result<DeltaWeight, Error> {
    match s {
        "uniform" => Ok(DeltaWeight::Uniform),
        "sign" => Ok(DeltaWeight::Sign),
        other => match other.strip_prefix('@') {
            Some(path) => formats::delta_from_json(&read_json(path)?),
            None => Err(Error::Validation(format!("--delta must be uniform, sign or @file.json, got {other:?}"))),
        },
    }
}

fn genfunction_output(gf: GenFunction, weights: Option<&str>) -> Result<Output, Error> {
    let poly_json = poly_to_json(gf.poly(), "w");
    match weights {
        None => Ok(Output::ok(vec![gf.to_text()], poly_json)),
        Some(w) => {
            let value = gf.eval(&parse_weights(w, gf.colors())?)?;
            Ok(Output::ok(vec![format_rat(&value)], json!({"polynomial": poly_json, "value": format_rat(&value)})))
        }
    }
}

fn run(command: Command, strategy: Strategy) -> Result<(Output, Format), Error> {
    match command {
        Command::CycleIndex { group, format } => {
            let g = load_group(&group.group)?;
            let z = cycle_index(&g, strategy);
            Ok((Output::ok(vec![z.to_text()], poly_to_json(z.poly(), "t")), format))
        }
        Command::Enumerate { group, colors, weights, format } => {
            check_colors(colors)?;
            let g = load_group(&group.group)?;
            let gf = polya_enumerate(&g, colors, strategy)?;
            Ok((genfunction_output(gf, weights.as_deref())?, format))
        }
        Command::Extended { group, colors, delta, weights, format } => {
            check_colors(colors)?;
            let g = load_group(&group.group)?;
            let d = parse_delta(&delta)?;
            let gf = extended_enumerate(&g, &d, colors, strategy)?;
            Ok((genfunction_output(gf, weights.as_deref())?, format))
        }
        Command::Esym { n, m, check, format } => {
            let e = elementary_symmetric_via_cycle_index(n, m)?;
            let mut out = Output::ok(vec![e.to_text("w")], poly_to_json(&e, "w"));
            if check {
                let pass = elementary_symmetric_direct(n, m, &Caps::default())? == e;
                out.text.push(verdict(pass).to_string());
                out.json = json!({"polynomial": out.json, "check": verdict(pass)});
                out.ok = pass;
            }
            Ok((out, format))
        }
        Command::Det { matrix, check, format } => {
            let l = formats::matrix_from_json(&read_json(&matrix)?)?;
            let det = det_via_traces(&l)?;
            let mut out = Output::ok(vec![format_rat(&det)], json!({"det": format_rat(&det)}));
            if check {
                let oracle = det_bareiss(&l);
                let pass = oracle == det;
                out.text.push(format!("bareiss {}", format_rat(&oracle)));
                out.text.push(verdict(pass).to_string());
                out.json = json!({"det": format_rat(&det), "bareiss": format_rat(&oracle), "check": verdict(pass)});
                out.ok = pass;
            }
            Ok((out, format))
        }
        Command::Verify {
            suite,
            max_n,
            max_m,
            seed,
            trials,
            max_esym,
            max_order,
            matrices,
            max_colorings,
            max_work,
            format,
        } => {
            let suites = if suite == "all" { Suite::ALL.to_vec() } else { vec![Suite::parse(&suite)?] };
            let cfg = VerifyConfig {
                max_n,
                max_m,
                seed,
                trials,
                max_esym,
                max_order,
                matrices_per_order: matrices,
                caps: Caps { max_colorings, max_work, ..Caps::default() },
                strategy,
            };
            cfg.validate()?;
            let mut out = Output::ok(Vec::new(), Value::Null);
            let mut reports = Vec::new();
            for s in suites {
                let r = run_suite(s, &cfg)?;
                out.text.push(r.summary());
                if let Some(c) = &r.counterexample {
                    out.text.push(format!("counterexample: {c}"));
                }
                out.ok &= r.passed();
                reports.push(json!({
                    "suite": s.name(),
                    "cases": r.cases,
                    "pass": r.passed(),
                    "counterexample": r.counterexample,
                }));
            }
            out.json = json!({"seed": seed, "suites": reports});
            Ok((out, format))
        }
    }
}

fn check_colors(m: usize) -> Result<(), Error> {
    if m == 0 {
        return Err(Error::Validation("--colors must be at least 1".into()));
    }
    Ok(())
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn format_of(command: &Command) -> Format {
    match command {
        Command::CycleIndex { format, .. }
        | Command::Enumerate { format, .. }
        | Command::Extended { format, .. }
        | Command::Esym { format, .. }
        | Command::Det { format, .. }
        | Command::Verify { format, .. } => *format,
    }
}

/// Collapses a message onto one line.
fn one_line(msg: &str) -> String {
    msg.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let rendered = e.render().to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("error: {}", one_line(first.trim_start_matches("error:").trim()));
            return ExitCode::from(2);
        }
    };

    #[cfg(feature = "parallel")]
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
            eprintln!("error: {}", one_line(&e.to_string()));
            return ExitCode::from(2);
        }
    }
    let strategy = if cli.sequential { Strategy::Sequential } else { Strategy::default() };

    let format = format_of(&cli.command);
    let stdout = std::io::stdout();
    let mut stdout = stdout.lock();
    match run(cli.command, strategy) {
        Ok((out, format)) => {
            let written = match format {
                Format::Text => out.text.iter().try_for_each(|l| writeln!(stdout, "{l}")),
                Format::Json => writeln!(stdout, "{}", json!({"ok": out.ok, "result": out.json})),
            };
            if written.is_err() {
                return ExitCode::from(2);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if format == Format::Json {
                let _ = writeln!(stdout, "{}", json!({"ok": false, "error": e.to_string()}));
            }
            eprintln!("error: {}", one_line(&e.to_string()));
            ExitCode::from(2)
        }
    }
}
