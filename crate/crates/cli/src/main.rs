use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gnbg::campaign::{self, Campaign};
use gnbg::grid::{self, GridSpec};
use gnbg::{instance_file, report, CliError, Result};
use gnbg_core::harness::{Budget, DEFAULT_MAX_EVALS, DEFAULT_SOLVE_THRESHOLD};
use gnbg_core::{figure_mode_instance, make_instance, Instance, SUITE_SIZE};

#[derive(Parser)]
#[command(name = "gnbg", version, about = "Generalized numerical benchmark generator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a suite instance and write it as an instance file.
    Generate {
        #[arg(long)]
        id: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate one point on an instance file.
    Eval {
        #[arg(long)]
        instance: PathBuf,
        /// Coordinates separated by commas or whitespace.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Run an optimizer on suite instances and write one record per run.
    Run {
        /// `all`, an id, a range like `16-24`, or a comma-separated mix.
        #[arg(long)]
        id: String,
        #[arg(long)]
        algo: String,
        #[arg(long, default_value_t = 1)]
        runs: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_EVALS)]
        budget: usize,
        #[arg(long, default_value_t = DEFAULT_SOLVE_THRESHOLD)]
        threshold: f64,
        #[arg(long, default_value = "runs")]
        out_dir: PathBuf,
        /// Base run seed; run `r` uses `seed + r`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        instance_seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Aggregate a directory of run records.
    Report {
        #[arg(long)]
        in_dir: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export a 2-D slice of the landscape as a text matrix.
    Grid {
        #[arg(long, conflicts_with = "instance", required_unless_present = "instance")]
        id: Option<u32>,
        #[arg(long)]
        instance: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Rebuild the suite instance at d=2 with zero floor and centered optimum.
        #[arg(long, requires = "id")]
        figure_mode: bool,
        /// Two distinct active dimensions, 0-based, as `a,b`.
        #[arg(long, value_delimiter = ',', default_values_t = [0, 1])]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 101)]
        resolution: usize,
        /// Values for the inactive coordinates; defaults to the global optimum.
        #[arg(long, allow_hyphen_values = true)]
        fixed: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Table,
}

fn parse_point(text: &str) -> Result<Vec<f64>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Argument(format!("cannot parse coordinate {t:?}"))))
        .collect()
}

fn summarize(inst: &Instance) -> String {
    let opt = inst.optimum();
    let head: Vec<String> = opt.iter().take(3).map(|v| format!("{v:.6}")).collect();
    let tail = if opt.len() > 3 { ", ..." } else { "" };
    format!(
        "instance f{} seed {}: d={} o={}\nsigma_min = {:.16e}\noptimum: component {} at [{}{tail}]",
        inst.instance_id,
        inst.seed,
        inst.dim,
        inst.components.len(),
        inst.sigma_min(),
        inst.optimum_component(),
        head.join(", "),
    )
}

fn check_id(id: u32) -> Result<()> {
    if !(1..=SUITE_SIZE).contains(&id) {
        return Err(CliError::Argument(format!("id out of range: {id} (expected 1..={SUITE_SIZE})")));
    }
    Ok(())
}

fn execute(command: Command) -> Result<()> {
    match command {
        Command::Generate { id, seed, out } => {
            check_id(id)?;
            let inst = make_instance(id, seed)?;
            instance_file::write(&inst, &out)?;
            println!("{}", summarize(&inst));
        }
        Command::Eval { instance, point } => {
            let inst = instance_file::read(&instance)?;
            let x = parse_point(&point)?;
            let (value, winner) = inst.evaluate(&x)?;
            println!("value = {value:.16e}");
            println!("winner = {winner}");
        }
        Command::Run { id, algo, runs, budget, threshold, out_dir, seed, instance_seed, jobs } => {
            campaign::check_optimizer(&algo)?;
            let c = Campaign {
                ids: campaign::parse_ids(&id)?,
                optimizer: algo,
                runs,
                budget: Budget::new(budget, threshold)?,
                base_seed: seed,
                instance_seed,
                out_dir,
                jobs,
            };
            let s = campaign::execute_campaign(&c)?;
            println!("wrote {} records, skipped {} complete records", s.written, s.skipped);
        }
        Command::Report { in_dir, format, out } => {
            let table = report::table_for_dir(&in_dir)?;
            let text = match format {
                Format::Csv => report::to_csv(&table),
                Format::Table => report::to_table(&table),
            };
            match out {
                Some(path) => fs::write(&path, text).map_err(|e| CliError::io(path, e))?,
                None => print!("{text}"),
            }
        }
        Command::Grid { id, instance, seed, figure_mode, dims, resolution, fixed, out } => {
            let inst = match (id, instance) {
                (Some(id), _) => {
                    check_id(id)?;
                    if figure_mode {
                        figure_mode_instance(id, seed)?
                    } else {
                        make_instance(id, seed)?
                    }
                }
                (None, Some(path)) => instance_file::read(&path)?,
                (None, None) => unreachable!("clap requires one of --id and --instance"),
            };
            let &[a, b] = dims.as_slice() else {
                return Err(CliError::Argument(format!("--dims needs two entries, got {}", dims.len())));
            };
            let spec = GridSpec {
                dims: (a, b),
                resolution,
                fixed: fixed.as_deref().map(parse_point).transpose()?,
            };
            let g = grid::compute(&inst, &spec, figure_mode)?;
            grid::write(&g, &out)?;
            println!("wrote {resolution}x{resolution} grid to {}", out.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
