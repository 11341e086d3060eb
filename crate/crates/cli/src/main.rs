use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use toric_core::fleet::{fuzz_theorem, survey_rows, wall_degrees_on_fan, FuzzConfig};
use toric_core::io::{load_fan, load_system, ClassFile};
use toric_core::render::{slice_table, RenderSpec};
use toric_core::surface::{candidate_curves, explore_orders, reduce};
use toric_core::{Error, Fan, LinearSystemSpec, WitnessMode};

const EXIT_INPUT: u8 = 2;
const EXIT_SPECIAL: u8 = 3;
const EXIT_VIOLATION: u8 = 4;

/// Speciality of linear systems with base points at torus-fixed points.
#[derive(Parser)]
#[command(name = "toric", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Global {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Accept fans that fail validation.
    #[arg(long, global = true)]
    unchecked: bool,
    /// Only count walls whose two fixed points both carry a positive multiplicity.
    #[arg(long, global = true)]
    strict_marked: bool,
}

impl Global {
    fn mode(&self) -> WitnessMode {
        if self.strict_marked {
            WitnessMode::StrictMarked
        } else {
            WitnessMode::AllFixedPoints
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write a fan file.
    Gen {
        #[command(subcommand)]
        fan: GenFan,
        /// Output file (stdout if absent).
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Speciality report; exits 3 when the system is special.
    Special { system: PathBuf },
    /// Virtual and effective dimension and h¹.
    Dim {
        system: PathBuf,
        /// Print the lattice points of the polytope, one per line.
        #[arg(long)]
        dump: bool,
    },
    /// Walls whose invariant curve meets the system in ≤ −2.
    Witness { system: PathBuf },
    /// Check D·C = N − 1 on random ample divisors of a fan.
    CheckLemma2 {
        fan: PathBuf,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare h¹ > 0 with the existence of a witness on random systems.
    Fuzz {
        /// Dimensions to draw from.
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        max_mult: i64,
    },
    /// (−1)-special reduction of a surface class.
    Reduce {
        class: PathBuf,
        /// Coefficient bound for the candidate curves.
        #[arg(long, default_value_t = 3)]
        bound: i64,
        /// Explore every qualifying order for the first steps.
        #[arg(long)]
        all_orders: bool,
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Lattice-point speciality against the (−1)-special verdict on random P2/Fa systems.
    Survey {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        bound: i64,
    },
    /// SVG of a 2D system; a slice table for 3D.
    Render {
        system: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 400)]
        size: u32,
    },
}

#[derive(Subcommand)]
enum GenFan {
    /// The projective plane.
    P2,
    /// Projective space of dimension `n`.
    Pn { n: usize },
    /// The Hirzebruch surface F_a.
    Hirzebruch { a: i64 },
    /// Product of two fan files.
    Product { first: PathBuf, second: PathBuf },
    /// Star subdivision of one maximal cone.
    Blowup { fan: PathBuf, cone: usize },
    /// Random smooth complete 2D fan built by blow-ups.
    Random2d {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        steps: usize,
    },
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn cmd_gen(fan: GenFan, output: Option<&Path>, g: Global) -> Result<u8> {
    let fan = match fan {
        GenFan::P2 => Fan::projective_space(2)?,
        GenFan::Pn { n } => Fan::projective_space(n)?,
        GenFan::Hirzebruch { a } => {
            if a < 0 {
                bail!("Hirzebruch index must be ≥ 0, got {a}");
            }
            Fan::hirzebruch(a)
        }
        GenFan::Product { first, second } => {
            load_fan(&first, g.unchecked)?.product(&load_fan(&second, g.unchecked)?)
        }
        GenFan::Blowup { fan, cone } => load_fan(&fan, g.unchecked)?.blowup_fixed_point(cone)?,
        GenFan::Random2d { seed, steps } => toric_core::fan::random_fan_2d(seed, steps)?,
    };
    let report = fan.validate();
    if !report.passed() {
        bail!("generated fan fails validation: {}", report.summary());
    }
    emit(output, &json_line(&fan)?)?;
    Ok(0)
}

fn system(path: &Path, g: Global) -> Result<LinearSystemSpec> {
    load_system(path, g.unchecked).with_context(|| format!("loading {}", path.display()))
}

fn cmd_special(path: &Path, g: Global) -> Result<u8> {
    let spec = system(path, g)?;
    let report = spec.speciality_report(g.mode())?;
    if g.json {
        print!("{}", json_line(&report)?);
    } else {
        println!("{report}");
        for w in &report.witnesses {
            println!("  witness {} value {}", w.wall, w.value);
        }
    }
    Ok(if report.special { EXIT_SPECIAL } else { 0 })
}

fn cmd_dim(path: &Path, dump: bool, g: Global) -> Result<u8> {
    let spec = system(path, g)?;
    if dump {
        for p in spec.lattice_points() {
            let coords: Vec<String> = p.coords().iter().map(i64::to_string).collect();
            println!("{}", coords.join(" "));
        }
        return Ok(0);
    }
    let (v, eff, h1) = (spec.virtual_dim(), spec.effective_dim(), spec.h1()?);
    if g.json {
        let value = serde_json::json!({ "virtual_dim": v, "effective_dim": eff, "h1": h1 });
        print!("{}", json_line(&value)?);
    } else {
        println!("virtual dimension {v}\neffective dimension {eff}\nh1 {h1}");
    }
    Ok(0)
}

fn cmd_witness(path: &Path, g: Global) -> Result<u8> {
    let spec = system(path, g)?;
    let witnesses = spec.witnesses(g.mode())?;
    if g.json {
        print!("{}", json_line(&witnesses)?);
    } else if witnesses.is_empty() {
        println!("no wall meets the system in ≤ −2");
    } else {
        for w in &witnesses {
            println!("{} value {}", w.wall, w.value);
        }
    }
    Ok(0)
}

fn cmd_check_lemma2(path: &Path, trials: usize, seed: u64, g: Global) -> Result<u8> {
    if trials > 10_000 {
        bail!("at most 10000 trials, got {trials}");
    }
    let fan = Arc::new(load_fan(path, g.unchecked)?);
    let summary = wall_degrees_on_fan(&fan, trials, seed)?;
    if g.json {
        print!("{}", json_line(&summary)?);
    } else {
        println!(
            "{} divisors, {} walls checked, {} failures",
            summary.divisors,
            summary.walls,
            summary.failures.len()
        );
        for f in &summary.failures {
            println!("{}", serde_json::to_string(f)?);
        }
    }
    Ok(if summary.passed() { 0 } else { EXIT_VIOLATION })
}

fn cmd_fuzz(dims: Vec<usize>, trials: usize, seed: u64, max_mult: i64, g: Global) -> Result<u8> {
    if max_mult < 1 {
        bail!("--max-mult must be positive");
    }
    let config = FuzzConfig {
        dims,
        trials,
        seed,
        max_mult,
        mode: g.mode(),
    };
    let summary = fuzz_theorem(&config)?;
    if g.json {
        print!("{}", json_line(&summary)?);
    } else {
        println!(
            "{} trials, {} special, {} special without witness, {} witness without speciality, {} adjacent-pair failures",
            summary.trials,
            summary.special,
            summary.missed.len(),
            summary.spurious.len(),
            summary.pair_failures.len()
        );
        for r in summary.missed.iter().chain(&summary.spurious) {
            println!("trial {}: {}", r.trial, serde_json::to_string(&r.system)?);
        }
    }
    Ok(if summary.passed() { 0 } else { EXIT_VIOLATION })
}

fn cmd_reduce(path: &Path, bound: i64, all_orders: bool, depth: usize, g: Global) -> Result<u8> {
    let class = ClassFile::load(path)?.to_class()?;
    let cands = candidate_curves(class.model(), bound)?;
    let trace = reduce(&class, &cands)?;
    let explored = if all_orders {
        Some(explore_orders(&class, &cands, depth, 20_000)?)
    } else {
        None
    };
    if g.json {
        let value = serde_json::json!({ "trace": trace, "all_orders": explored });
        print!("{}", json_line(&value)?);
        return Ok(0);
    }
    println!("start {class}, v = {}", trace.v_start);
    println!(
        "{:>4}  {:<32} {:>12} {:>6}",
        "step", "subtracted", "intersection", "v"
    );
    for (i, step) in trace.steps.iter().enumerate() {
        let flag = if step.flagged { "  (flagged)" } else { "" };
        println!(
            "{:>4}  {:<32} {:>12} {:>6}{flag}",
            i + 1,
            step.label,
            step.intersection,
            step.v_after
        );
    }
    println!(
        "v {} -> {}: {}",
        trace.v_start,
        trace.v_final,
        if trace.minus_one_special {
            "(-1)-special"
        } else {
            "not (-1)-special within the candidate set"
        }
    );
    if let Some(e) = explored {
        println!(
            "{} distinct outcomes over {} states{}{}",
            e.outcomes.len(),
            e.states,
            if e.truncated { ", truncated" } else { "" },
            if e.order_sensitive {
                ", verdict depends on the order"
            } else {
                ""
            }
        );
        for o in &e.outcomes {
            println!(
                "  final {:?} v = {} (-1)-special: {}",
                o.final_class, o.v_final, o.minus_one_special
            );
        }
    }
    Ok(0)
}

fn cmd_survey(trials: usize, seed: u64, bound: i64, g: Global) -> Result<u8> {
    let rows = survey_rows(trials, seed, bound)?;
    if g.json {
        print!("{}", json_line(&rows)?);
        return Ok(0);
    }
    let agree = rows.iter().filter(|r| r.agree).count();
    let some_order = rows
        .iter()
        .filter(|r| r.special == r.minus_one_special_some_order)
        .count();
    println!(
        "{} systems, {} special; canonical order agrees on {agree}, some order agrees on {some_order}",
        rows.len(),
        rows.iter().filter(|r| r.special).count()
    );
    Ok(0)
}

fn cmd_render(path: &Path, output: Option<&Path>, size: u32, g: Global) -> Result<u8> {
    let spec = system(path, g)?;
    let text = if spec.dim() == 2 {
        RenderSpec::new(&spec, size)?.to_svg()
    } else {
        slice_table(&spec)
    };
    emit(output, &text)?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8> {
    let g = cli.global;
    match cli.command {
        Command::Gen { fan, output } => cmd_gen(fan, output.as_deref(), g),
        Command::Special { system } => cmd_special(&system, g),
        Command::Dim { system, dump } => cmd_dim(&system, dump, g),
        Command::Witness { system } => cmd_witness(&system, g),
        Command::CheckLemma2 { fan, trials, seed } => cmd_check_lemma2(&fan, trials, seed, g),
        Command::Fuzz {
            dims,
            trials,
            seed,
            max_mult,
        } => cmd_fuzz(dims, trials, seed, max_mult, g),
        Command::Reduce {
            class,
            bound,
            all_orders,
            depth,
        } => cmd_reduce(&class, bound, all_orders, depth, g),
        Command::Survey {
            trials,
            seed,
            bound,
        } => cmd_survey(trials, seed, bound, g),
        Command::Render {
            system,
            output,
            size,
        } => cmd_render(&system, output.as_deref(), size, g),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            if let Some(Error::TheoremViolation { report }) = err.downcast_ref::<Error>() {
                eprintln!("error: {err}");
                if let Ok(text) = serde_json::to_string(report) {
                    println!("{text}");
                }
                return ExitCode::from(EXIT_VIOLATION);
            }
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
