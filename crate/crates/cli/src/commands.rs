use std::io::Write;
use std::path::Path;

use logiseed::logistic::{generate_sequence, ChaoticSeed, NoiseSource, OsNoise};
use logiseed::mt::MtState;
use logiseed::placement::{placements, GridSpec, Mode};
use logiseed::stats::{
    bifurcation_data, write_bifurcation_csv, write_comparison_csv, BifurcationConfig, StatsReport,
};
use serde::Serialize;

use crate::{
    max_cells_from_env, BifurcateArgs, CliError, Command, Format, GenArgs, PlaceArgs, StatsArgs,
};

/// A validated placement query, shared by `place` and `GET /api/placements`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaceRequest {
    pub seed: ChaoticSeed,
    pub grid: GridSpec,
    pub mode: Mode,
    pub count: Option<usize>,
    pub burn_in: usize,
}

/// Placement JSON followed by a newline.
pub fn render_place<N: NoiseSource + ?Sized>(
    req: &PlaceRequest,
    noise: &mut N,
) -> Result<String, CliError> {
    let mut seq = placements(req.seed, req.grid, req.mode, req.burn_in, noise)?;
    if let Some(k) = req.count {
        seq.truncate(k);
    }
    let mut text = seq.to_json();
    text.push('\n');
    Ok(text)
}

pub fn run_gen(args: &GenArgs) -> Result<String, CliError> {
    let seed = ChaoticSeed::from_decimal(&args.seed.x0, &args.seed.r)?;
    let seq = generate_sequence(seed, args.length, args.burn_in)?;
    match args.format {
        Format::Json => {
            let mut s = serde_json::to_string(&seq).expect("sequence serializes");
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let (x0, r) = seed.to_decimal();
            let mut s = format!("# x0={x0} r={r} burn_in={}\nindex,value\n", args.burn_in);
            for (i, v) in seq.values.iter().enumerate() {
                s.push_str(&format!("{i},{v}\n"));
            }
            Ok(s)
        }
    }
}

pub fn place_request(args: &PlaceArgs, max_cells: usize) -> Result<PlaceRequest, CliError> {
    Ok(PlaceRequest {
        seed: ChaoticSeed::from_decimal(&args.seed.x0, &args.seed.r)?,
        grid: GridSpec::with_max_cells(args.width, args.height, max_cells)?,
        mode: args.mode,
        count: args.count,
        burn_in: args.burn_in,
    })
}

pub fn run_place(args: &PlaceArgs) -> Result<String, CliError> {
    let req = place_request(args, max_cells_from_env()?)?;
    render_place(&req, &mut OsNoise)
}

#[derive(Serialize)]
struct StatsParams {
    seed: ChaoticSeed,
    burn_in: usize,
    mt_seed: u32,
    length: usize,
    bins: usize,
}

#[derive(Serialize)]
struct Comparison {
    params: StatsParams,
    logistic: StatsReport,
    mt19937: StatsReport,
}

pub fn run_stats(args: &StatsArgs) -> Result<String, CliError> {
    let seed = ChaoticSeed::from_decimal(&args.x0, &args.r)?;
    if args.length < 2 {
        return Err(CliError::Invalid(format!(
            "len must be at least 2 for a regression line, got {}",
            args.length
        )));
    }
    let logistic_values = generate_sequence(seed, args.length, args.burn_in)?;
    let mt_values = MtState::new(args.mt_seed).reals(args.length);
    let logistic = StatsReport::compute(logistic_values.values(), args.bins)?;
    let mt19937 = StatsReport::compute(&mt_values, args.bins)?;
    match args.format {
        Format::Json => {
            let report = Comparison {
                params: StatsParams {
                    seed,
                    burn_in: args.burn_in,
                    mt_seed: args.mt_seed,
                    length: args.length,
                    bins: args.bins,
                },
                logistic,
                mt19937,
            };
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut buf = Vec::new();
            write_comparison_csv(&mut buf, &[("logistic", &logistic), ("mt19937", &mt19937)])?;
            Ok(String::from_utf8(buf).expect("csv output is utf-8"))
        }
    }
}

pub fn run_bifurcate(args: &BifurcateArgs) -> Result<String, CliError> {
    let cfg = BifurcationConfig {
        r_min: args.r_min,
        r_max: args.r_max,
        r_steps: args.r_steps,
        settle: args.settle,
        samples: args.samples,
        x0: args.x0,
    };
    let points = bifurcation_data(&cfg)?;
    match args.format {
        Format::Csv => {
            let mut buf = Vec::new();
            write_bifurcation_csv(&mut buf, &points)?;
            Ok(String::from_utf8(buf).expect("csv output is utf-8"))
        }
        Format::Json => {
            let mut s = serde_json::to_string(&points).expect("points serialize");
            s.push('\n');
            Ok(s)
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

/// Runs one subcommand to completion. `serve` blocks until the server stops.
pub fn execute(command: &Command) -> Result<(), CliError> {
    match command {
        Command::Gen(a) => emit(&run_gen(a)?, a.out.as_deref()),
        Command::Place(a) => emit(&run_place(a)?, a.out.as_deref()),
        Command::Stats(a) => emit(&run_stats(a)?, a.out.as_deref()),
        Command::Bifurcate(a) => emit(&run_bifurcate(a)?, a.out.as_deref()),
        Command::Serve(a) => crate::server::run_serve(&a.host, a.port, max_cells_from_env()?),
    }
}
