//! Command-line front end; every verb maps onto a library operation.
//!
//! Exit codes: 0 on success, 1 on a domain error (the error name goes to
//! stderr), 2 on a usage error.

use std::io::Write;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::enumerate::{self, CountMode, PathClassQuery, PathFamily, DEFAULT_LENGTH_CAP};
use crate::error::Error;
use crate::evolve::{devolve_full, devolve_step, evolve_full, evolve_step, is_hybrid, Flavor};
use crate::fps::FormalPowerSeries;
use crate::matching::{matching_to_path, path_to_matching, HybridMatching};
use crate::path::LatticePath;
use crate::permutation::{
    build_esdp, build_osdp, extract_permutation, length_distribution, Permutation,
};
use crate::render::{render, RenderFormat};
use crate::series::{length_gf_closed, pascal_catalan_factor, GfCatalog};
use crate::verify::{run_suites, Suite, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "hybrid-paths",
    version,
    about = "Special Dyck paths, Schröder paths, matchings, and 231-avoiding permutations"
)]
struct Cli {
    /// Emit JSON instead of plain text where both exist.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FlavorArg {
    Little,
    Big,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::Little => Flavor::Little,
            FlavorArg::Big => Flavor::Big,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClassArg {
    Dyck,
    Esdp,
    Osdp,
    LittleSchroeder,
    BigSchroeder,
    LittleHybrid,
    BigHybrid,
}

impl From<ClassArg> for PathFamily {
    fn from(c: ClassArg) -> PathFamily {
        match c {
            ClassArg::Dyck => PathFamily::Dyck,
            ClassArg::Esdp => PathFamily::Esdp,
            ClassArg::Osdp => PathFamily::Osdp,
            ClassArg::LittleSchroeder => PathFamily::LittleSchroeder,
            ClassArg::BigSchroeder => PathFamily::BigSchroeder,
            ClassArg::LittleHybrid => PathFamily::LittleHybrid,
            ClassArg::BigHybrid => PathFamily::BigHybrid,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    ClosedForm,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Tokens,
    Ascii,
    Svg,
}

/// Named series; `s`/`S` etc. follow the catalog, so matching is
/// case-sensitive and done by hand.
#[derive(Debug, Clone, Copy)]
enum SeriesName {
    LittleSchroederGf,
    BigSchroederGf,
    EvenSpecialGf,
    OddSpecialGf,
    LittleHybridGf,
    BigHybridGf,
    RootGf,
    PascalCatalan,
    LengthGf,
}

fn parse_series_name(s: &str) -> Result<SeriesName, String> {
    Ok(match s {
        "s" | "little-schroeder" => SeriesName::LittleSchroederGf,
        "S" | "big-schroeder" => SeriesName::BigSchroederGf,
        "E" | "even-special" => SeriesName::EvenSpecialGf,
        "O" | "odd-special" => SeriesName::OddSpecialGf,
        "L" | "little-hybrid" => SeriesName::LittleHybridGf,
        "B" | "big-hybrid" => SeriesName::BigHybridGf,
        "R" | "root" => SeriesName::RootGf,
        "pascal-catalan" => SeriesName::PascalCatalan,
        "length-gf" => SeriesName::LengthGf,
        other => {
            return Err(format!(
                "unknown series {other:?} (expected s, S, E, O, L, B, R, pascal-catalan, length-gf)"
            ))
        }
    })
}

fn parse_suite(s: &str) -> Result<String, String> {
    if s == "all" || Suite::from_name(s).is_some() {
        Ok(s.to_string())
    } else {
        let names: Vec<&str> = Suite::all().iter().map(|x| x.name()).collect();
        Err(format!(
            "unknown suite {s:?} (expected all or one of {names:?})"
        ))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Class membership flags of a path.
    Classify {
        #[arg(long)]
        path: String,
    },
    /// Evolve a path: full evolution by default, one application with
    /// --step, full trace JSON with --trace.
    Evolve {
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        #[arg(long)]
        path: String,
        #[arg(long)]
        step: bool,
        #[arg(long)]
        trace: bool,
    },
    /// Reverse the evolution: full devolution by default, one step with
    /// --step.
    Devolve {
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        #[arg(long)]
        path: String,
        #[arg(long)]
        step: bool,
    },
    /// Full evolution trace as JSON.
    Trace {
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        #[arg(long)]
        path: String,
    },
    /// The matching of a little hybrid path.
    ToMatching {
        #[arg(long)]
        path: String,
    },
    /// The little hybrid path of a 2-distant noncrossing matching.
    FromMatching {
        #[arg(long)]
        matching: String,
    },
    /// The 231-avoiding permutation an evolution writes down.
    PermExtract {
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        #[arg(long)]
        path: String,
    },
    /// The special Dyck path whose evolution writes down a permutation.
    PermBuild {
        #[arg(long)]
        perm: String,
        #[arg(long, value_enum, default_value = "big")]
        flavor: FlavorArg,
    },
    /// Path-length distribution of the 231-avoiding permutations of 1..=n.
    Lengths {
        #[arg(long)]
        n: usize,
    },
    /// Counts of a path class for every even length up to a bound.
    Counts {
        #[arg(long = "class", value_enum)]
        class: ClassArg,
        #[arg(long)]
        max_length: usize,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ModeArg,
        /// Refuse exhaustive generation beyond this length.
        #[arg(long, default_value_t = DEFAULT_LENGTH_CAP)]
        cap: usize,
        #[arg(long)]
        csv: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// A named generating function to a requested order.
    Series {
        #[arg(long, value_parser = parse_series_name)]
        name: SeriesName,
        #[arg(long)]
        order: usize,
    },
    /// Run invariant suites; nonzero exit on any failure.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: String,
        #[arg(long)]
        max_length: Option<usize>,
        /// Bound for the conjecture suite.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Draw a path as tokens, ASCII art, or SVG.
    Render {
        #[arg(long)]
        path: String,
        #[arg(long, value_enum, default_value = "tokens")]
        format: FormatArg,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

/// Runs the CLI against explicit argv and output sinks; returns the exit
/// code. `args[0]` is the program name.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{}: {}", e.name(), e);
            1
        }
    }
}

/// Convenience entry point for `main`.
pub fn run_from_env() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    run(&args, &mut std::io::stdout(), &mut std::io::stderr())
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Error> {
    let io = |_e: std::io::Error| Error::InternalMismatch("write failed".into());
    match &cli.command {
        Command::Classify { path } => {
            let path = LatticePath::parse(path)?;
            let cl = path.classify();
            let little_hybrid = is_hybrid(&path, Flavor::Little);
            let big_hybrid = is_hybrid(&path, Flavor::Big);
            if cli.json {
                let v = serde_json::json!({
                    "dyck": cl.is_dyck,
                    "esdp": cl.is_esdp,
                    "osdp": cl.is_osdp,
                    "little-schroeder": cl.is_little_schroeder,
                    "big-schroeder": cl.is_big_schroeder,
                    "little-hybrid": little_hybrid,
                    "big-hybrid": big_hybrid,
                });
                writeln!(out, "{v}").map_err(io)?;
            } else {
                let yn = |b: bool| if b { "yes" } else { "no" };
                writeln!(out, "dyck: {}", yn(cl.is_dyck)).map_err(io)?;
                writeln!(out, "esdp: {}", yn(cl.is_esdp)).map_err(io)?;
                writeln!(out, "osdp: {}", yn(cl.is_osdp)).map_err(io)?;
                writeln!(out, "little-schroeder: {}", yn(cl.is_little_schroeder)).map_err(io)?;
                writeln!(out, "big-schroeder: {}", yn(cl.is_big_schroeder)).map_err(io)?;
                writeln!(out, "little-hybrid: {}", yn(little_hybrid)).map_err(io)?;
                writeln!(out, "big-hybrid: {}", yn(big_hybrid)).map_err(io)?;
            }
            Ok(0)
        }
        Command::Evolve {
            flavor,
            path,
            step,
            trace,
        } => {
            let path = LatticePath::parse(path)?;
            let flavor: Flavor = (*flavor).into();
            if *trace {
                let trace = evolve_full(&path, flavor)?;
                writeln!(out, "{}", trace.to_json()).map_err(io)?;
            } else if *step {
                writeln!(out, "{}", evolve_step(&path, flavor)?).map_err(io)?;
            } else {
                let trace = evolve_full(&path, flavor)?;
                writeln!(out, "{}", trace.final_path()).map_err(io)?;
            }
            Ok(0)
        }
        Command::Devolve { flavor, path, step } => {
            let path = LatticePath::parse(path)?;
            let flavor: Flavor = (*flavor).into();
            let result = if *step {
                devolve_step(&path, flavor)?
            } else {
                devolve_full(&path, flavor)?
            };
            writeln!(out, "{result}").map_err(io)?;
            Ok(0)
        }
        Command::Trace { flavor, path } => {
            let path = LatticePath::parse(path)?;
            let trace = evolve_full(&path, (*flavor).into())?;
            writeln!(out, "{}", trace.to_json()).map_err(io)?;
            Ok(0)
        }
        Command::ToMatching { path } => {
            let path = LatticePath::parse(path)?;
            let m = path_to_matching(&path)?;
            if cli.json {
                writeln!(out, "{}", m.to_json()).map_err(io)?;
            } else {
                writeln!(out, "{m}").map_err(io)?;
            }
            Ok(0)
        }
        Command::FromMatching { matching } => {
            let m = HybridMatching::parse(matching)?;
            writeln!(out, "{}", matching_to_path(&m)?).map_err(io)?;
            Ok(0)
        }
        Command::PermExtract { flavor, path } => {
            let path = LatticePath::parse(path)?;
            let perm = extract_permutation(&path, (*flavor).into())?;
            writeln!(out, "{perm}").map_err(io)?;
            Ok(0)
        }
        Command::PermBuild { perm, flavor } => {
            let perm = Permutation::parse(perm)?;
            let path = match Flavor::from(*flavor) {
                Flavor::Big => build_osdp(&perm)?,
                Flavor::Little => build_esdp(&perm)?,
            };
            writeln!(out, "{path}").map_err(io)?;
            Ok(0)
        }
        Command::Lengths { n } => {
            let dist = length_distribution(*n);
            if cli.json {
                let pairs: Vec<(usize, u64)> = dist.counts.iter().map(|(&l, &c)| (l, c)).collect();
                let v = serde_json::json!({ "n": n, "counts": pairs });
                writeln!(out, "{v}").map_err(io)?;
            } else {
                writeln!(out, "{dist}").map_err(io)?;
            }
            Ok(0)
        }
        Command::Counts {
            class,
            max_length,
            mode,
            cap,
            csv,
            threads,
        } => {
            let family: PathFamily = (*class).into();
            let mode = match mode {
                ModeArg::Exhaustive => CountMode::Exhaustive,
                ModeArg::ClosedForm => CountMode::ClosedForm,
            };
            let lengths: Vec<usize> = (0..=*max_length).filter(|l| l % 2 == 0).collect();
            let counts = parallel_counts(family, &lengths, mode, *cap, *threads)?;
            if cli.json {
                let pairs: Vec<(usize, String)> = lengths
                    .iter()
                    .zip(&counts)
                    .map(|(&l, c)| (l, c.to_string()))
                    .collect();
                let v = serde_json::json!({ "class": family.name(), "counts": pairs });
                writeln!(out, "{v}").map_err(io)?;
            } else if *csv {
                writeln!(out, "length,count").map_err(io)?;
                for (l, c) in lengths.iter().zip(&counts) {
                    writeln!(out, "{l},{c}").map_err(io)?;
                }
            } else {
                let header: Vec<String> = lengths.iter().map(|l| l.to_string()).collect();
                let values: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
                let widths: Vec<usize> = header
                    .iter()
                    .zip(&values)
                    .map(|(h, v)| h.len().max(v.len()))
                    .collect();
                let mut line1 = String::from("length:");
                let mut line2 = format!("{}:", family.name());
                let pad = family.name().len().max(6);
                line1 = format!("{line1:<width$}", width = pad + 1);
                line2 = format!("{line2:<width$}", width = pad + 1);
                for ((h, v), w) in header.iter().zip(&values).zip(&widths) {
                    line1.push_str(&format!(" {h:>w$}"));
                    line2.push_str(&format!(" {v:>w$}"));
                }
                writeln!(out, "{line1}").map_err(io)?;
                writeln!(out, "{line2}").map_err(io)?;
            }
            Ok(0)
        }
        Command::Series { name, order } => {
            let series = named_series(*name, *order)?;
            if cli.json {
                writeln!(out, "{}", series.to_json()).map_err(io)?;
            } else {
                writeln!(out, "{series}").map_err(io)?;
            }
            Ok(0)
        }
        Command::Verify {
            suite,
            max_length,
            n,
            threads,
        } => {
            let mut opts = VerifyOptions::default();
            if let Some(l) = max_length {
                opts.max_length = *l;
            }
            if let Some(n) = n {
                opts.conjecture_n = *n;
            }
            opts.threads = *threads;
            let suites = if suite == "all" {
                Suite::all()
            } else {
                vec![Suite::from_name(suite).expect("validated by the parser")]
            };
            let outcomes = run_suites(&suites, &opts);
            let mut checks = 0usize;
            let mut failures = 0usize;
            for outcome in &outcomes {
                for check in &outcome.checks {
                    checks += 1;
                    if check.pass {
                        writeln!(out, "[{}] {}: PASS", outcome.suite.name(), check.name)
                            .map_err(io)?;
                    } else {
                        failures += 1;
                        writeln!(
                            out,
                            "[{}] {}: FAIL ({})",
                            outcome.suite.name(),
                            check.name,
                            check.detail
                        )
                        .map_err(io)?;
                    }
                }
            }
            if failures == 0 {
                writeln!(out, "verify: PASS ({checks} checks)").map_err(io)?;
                Ok(0)
            } else {
                writeln!(out, "verify: FAIL ({failures} of {checks} checks)").map_err(io)?;
                Ok(1)
            }
        }
        Command::Render {
            path,
            format,
            out: file,
        } => {
            let path = LatticePath::parse(path)?;
            let format = match format {
                FormatArg::Tokens => RenderFormat::Tokens,
                FormatArg::Ascii => RenderFormat::Ascii,
                FormatArg::Svg => RenderFormat::Svg,
            };
            let text = render(&path, format);
            match file {
                Some(f) => std::fs::write(f, &text)
                    .map_err(|e| Error::InternalMismatch(format!("cannot write {f:?}: {e}")))?,
                None => {
                    writeln!(out, "{text}").map_err(io)?;
                }
            }
            Ok(0)
        }
    }
}

fn named_series(name: SeriesName, order: usize) -> Result<FormalPowerSeries, Error> {
    Ok(match name {
        SeriesName::LittleSchroederGf => GfCatalog::new(order)?.s.truncate(order),
        SeriesName::BigSchroederGf => GfCatalog::new(order)?.big_s.truncate(order),
        SeriesName::EvenSpecialGf => GfCatalog::new(order)?.e.truncate(order),
        SeriesName::OddSpecialGf => GfCatalog::new(order)?.o.truncate(order),
        SeriesName::LittleHybridGf => GfCatalog::new(order)?.little_hybrid.truncate(order),
        SeriesName::BigHybridGf => GfCatalog::new(order)?.big_hybrid.truncate(order),
        SeriesName::RootGf => GfCatalog::new(order)?.r.truncate(order),
        SeriesName::PascalCatalan => pascal_catalan_factor(order)?.truncate(order),
        SeriesName::LengthGf => length_gf_closed(order)?,
    })
}

fn parallel_counts(
    family: PathFamily,
    lengths: &[usize],
    mode: CountMode,
    cap: usize,
    threads: usize,
) -> Result<Vec<BigUint>, Error> {
    let count_one =
        |&len: &usize| enumerate::count(&PathClassQuery::new(family, len).with_cap(cap), mode);
    let workers = threads.max(1).min(lengths.len().max(1));
    if workers <= 1 {
        return lengths.iter().map(count_one).collect();
    }
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Result<BigUint, Error>>>> = Mutex::new(vec![None; lengths.len()]);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= lengths.len() {
                    break;
                }
                let r = count_one(&lengths[i]);
                results.lock().unwrap()[i] = Some(r);
            });
        }
    });
    results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|o| o.expect("every length ran"))
        .collect()
}
