use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use glasslam::io::{self as gio, csv as gcsv, ScenarioConfig, TABLE_NAMES};
use glasslam::solver::ResultRow;
use glasslam::Error;
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "glasslam", version, about = "Viscoelastic laminated glass beams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario and write its per-step CSV.
    Solve {
        config: PathBuf,
        /// CSV destination; overrides [output] csv_path. `-` writes to stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Rerun a reference table and compare against the stored targets.
    Tables {
        /// formulations, validation, temperature or all
        name: String,
        /// Elements per layer.
        #[arg(long, default_value_t = glasslam::model::DEFAULT_N_EL)]
        n_el: usize,
    },
    /// Monolithic and layered elastic limits at the scenario's peak load.
    Limits { config: PathBuf },
    /// Run a scenario at several temperatures.
    Sweep {
        config: PathBuf,
        /// Comma-separated temperatures [°C].
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        temperatures: Vec<f64>,
        /// Directory receiving one CSV per temperature.
        #[arg(long)]
        output_dir: Option<PathBuf>,
    },
}

/// Outcome used for the exit status.
enum Failure {
    Tolerance,
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Error(Error::Io(e))
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NonConvergence { .. } | Error::Singular { .. } => 3,
        _ => 2,
    }
}

fn load_config(path: &Path) -> Result<ScenarioConfig, Error> {
    let text = fs::read_to_string(path)?;
    gio::parse_config(&text)
}

fn write_csv(path: &Path, rows: &[ResultRow]) -> Result<(), Error> {
    if path.as_os_str() == "-" {
        gcsv::write_rows(io::stdout().lock(), rows)
    } else {
        gcsv::write_rows(BufWriter::new(File::create(path)?), rows)
    }
}

fn summary(label: &str, r: &ResultRow) -> String {
    format!(
        "{label}: t = {:e} s, w = {:.4} mm, midspan sigma = {:.4} MPa, max sigma = {:.4} MPa",
        r.time,
        r.midspan_deflection * 1e3,
        r.midspan_stress * 1e-6,
        r.max_stress * 1e-6
    )
}

fn solve(config: &Path, output: Option<PathBuf>) -> Result<(), Failure> {
    let cfg = load_config(config)?;
    let rows = gio::run_scenario(&cfg)?;
    let dest = output.or_else(|| cfg.csv_path.clone()).unwrap_or_else(|| PathBuf::from("-"));
    write_csv(&dest, &rows)?;
    if let Some(last) = rows.last() {
        eprintln!("{}", summary("final", last));
    }
    Ok(())
}

fn tables(name: &str, n_el: usize) -> Result<(), Failure> {
    let names: Vec<&str> = if name == "all" { TABLE_NAMES.to_vec() } else { vec![name] };
    let mut ok = true;
    let mut out = io::stdout().lock();
    for n in names {
        let report = gio::reproduce_table_with(n, n_el)?;
        writeln!(out, "{report}\n")?;
        ok &= report.passed();
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Tolerance)
    }
}

fn limits(config: &Path) -> Result<(), Failure> {
    let cfg = load_config(config)?;
    let (mon, lay) = gio::scenario_limits(&cfg)?;
    let mut out = io::stdout().lock();
    writeln!(out, "limit,deflection_m,midspan_stress_Pa,max_stress_Pa")?;
    for (name, r) in [("monolithic", mon), ("layered", lay)] {
        writeln!(out, "{name},{:e},{:e},{:e}", r.deflection, r.midspan_stress, r.max_stress)?;
    }
    Ok(())
}

fn sweep(config: &Path, temperatures: &[f64], output_dir: Option<PathBuf>) -> Result<(), Failure> {
    let cfg = load_config(config)?;
    let configs: Vec<ScenarioConfig> = temperatures
        .iter()
        .map(|&t| {
            let mut c = cfg.clone();
            c.temperature = t;
            c
        })
        .collect();
    let results: Vec<Result<Vec<ResultRow>, Error>> = configs.par_iter().map(gio::run_scenario).collect();
    if let Some(dir) = &output_dir {
        fs::create_dir_all(dir)?;
    }
    let mut out = io::stdout().lock();
    writeln!(out, "temperature_C,time_s,midspan_deflection_m,midspan_stress_Pa,max_stress_Pa")?;
    for (t, res) in temperatures.iter().zip(results) {
        let rows = res?;
        let last = rows.last().expect("grid has steps");
        writeln!(
            out,
            "{t:e},{:e},{:e},{:e},{:e}",
            last.time, last.midspan_deflection, last.midspan_stress, last.max_stress
        )?;
        if let Some(dir) = &output_dir {
            write_csv(&dir.join(format!("sweep_{t}C.csv")), &rows)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve { config, output } => solve(&config, output),
        Command::Tables { name, n_el } => tables(&name, n_el),
        Command::Limits { config } => limits(&config),
        Command::Sweep {
            config,
            temperatures,
            output_dir,
        } => sweep(&config, &temperatures, output_dir),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Tolerance) => {
            eprintln!("error: at least one quantity is outside its tolerance");
            ExitCode::from(1)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
