use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use weylcub::approx::{coeffs_v, error_l2k, GaussianModel, Target};
use weylcub::cubature::build_rule;
use weylcub::export::{write_approx_grid_csv, write_coeffs_json, write_nodes_csv, write_nodes_json, write_nodes_svg};
use weylcub::liealg::{build_algebra, AlgebraLabel};
use weylcub::tables::{self, GOLDEN_TABLE1, GOLDEN_TABLE2, TABLE4_R};
use weylcub::verify::{self, Level};
use weylcub::Error;

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "weylcub", version, about = "Cubature rules from Weyl-group orbit functions")]
struct Cli {
    /// Worker threads for parallel evaluation (results do not depend on it).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Export the nodes and weights of a cubature rule.
    Nodes {
        #[arg(long)]
        algebra: AlgebraLabel,
        #[arg(long = "M")]
        m: i64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute one of the reference tables.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        which: u8,
    },
    /// Approximate the Gaussian model function by v_M and report its L2_K error.
    Approx {
        #[arg(long)]
        algebra: AlgebraLabel,
        #[arg(long = "M")]
        m: i64,
        /// Prefix for `<out>_coeffs.json` and `<out>_grid.csv`.
        #[arg(long)]
        out: Option<String>,
        /// Reference quadrature subdivision for the error integral.
        #[arg(long, default_value_t = TABLE4_R)]
        refinement: usize,
    },
    /// Run the self-check suite.
    Verify {
        #[arg(long, default_value = "quick")]
        level: Level,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) | Error::Json(_) | Error::Csv(_) => EXIT_IO,
        _ => EXIT_USAGE,
    }
}

fn create(path: &PathBuf) -> Result<BufWriter<File>, Error> {
    Ok(BufWriter::new(File::create(path)?))
}

fn nodes(algebra: AlgebraLabel, m: i64, format: Format, out: Option<PathBuf>) -> Result<(), Error> {
    let data = build_algebra(algebra);
    let rule = build_rule(&data, m)?;
    let mut sink: Box<dyn Write> = match &out {
        Some(path) => Box::new(create(path)?),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match format {
        Format::Csv => write_nodes_csv(&rule, &mut sink)?,
        Format::Json => write_nodes_json(&rule, &mut sink)?,
        Format::Svg => write_nodes_svg(&data, &rule, &mut sink)?,
    }
    sink.flush()?;
    Ok(())
}

fn table(which: u8) -> Result<bool, Error> {
    let (text, ok) = match which {
        1 => {
            let rows = tables::table1();
            let bad = tables::golden_mismatches(&rows, &GOLDEN_TABLE1);
            for b in &bad {
                eprintln!("golden mismatch: {b}");
            }
            (tables::format_table1(&rows), bad.is_empty())
        }
        2 => {
            let rows = tables::table2()?;
            let bad = tables::golden_mismatches(&rows, &GOLDEN_TABLE2);
            for b in &bad {
                eprintln!("golden mismatch: {b}");
            }
            (tables::format_table2(&rows), bad.is_empty())
        }
        3 => (tables::format_table3(&tables::table3()?), true),
        _ => (tables::format_table4(&tables::table4(TABLE4_R)?), true),
    };
    print!("{text}");
    Ok(ok)
}

fn approx(algebra: AlgebraLabel, m: i64, out: Option<String>, r: usize) -> Result<(), Error> {
    let data = build_algebra(algebra);
    let model = GaussianModel::for_algebra(&data);
    let f = |y: &weylcub::xmap::OmegaPoint| model.eval(y);
    let coeffs = coeffs_v(&data, m, Target::Omega(&f))?;
    let err = error_l2k(&data, Target::Omega(&f), &coeffs, r)?;
    let prefix = out.unwrap_or_else(|| format!("approx_{algebra}_M{m}"));
    let coeff_path = PathBuf::from(format!("{prefix}_coeffs.json"));
    let grid_path = PathBuf::from(format!("{prefix}_grid.csv"));
    let mut w = create(&coeff_path)?;
    write_coeffs_json(&coeffs, Some(err), &mut w)?;
    w.flush()?;
    let mut w = create(&grid_path)?;
    write_approx_grid_csv(&data, f, &coeffs, 60, &mut w)?;
    w.flush()?;
    println!("algebra {algebra}, M = {m}, {} coefficients", coeffs.len());
    println!(
        "gaussian centre ({}, {}), sigma {}",
        model.center[0], model.center[1], model.sigma
    );
    println!("L2_K error (R = {r}): {err:.7e}");
    println!("wrote {} and {}", coeff_path.display(), grid_path.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let outcome = match cli.command {
        Command::Nodes {
            algebra,
            m,
            format,
            out,
        } => nodes(algebra, m, format, out).map(|()| true),
        Command::Table { which } => table(which),
        Command::Approx {
            algebra,
            m,
            out,
            refinement,
        } => approx(algebra, m, out, refinement).map(|()| true),
        Command::Verify { level } => verify::run(level).map(|report| {
            for c in &report.checks {
                println!("{c}");
            }
            let failed = report.checks.iter().filter(|c| !c.passed).count();
            println!("{} checks, {failed} failed", report.checks.len());
            report.all_passed()
        }),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VERIFY),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
