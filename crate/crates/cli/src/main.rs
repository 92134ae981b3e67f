use std::process::ExitCode;

use acfactor::{factor_quadratic_with, FactorOptions, Ring, Trinomial};
use acfactor_cli::{
    exit_code, parse_polynomial, render_result, OutputFormat, ParsedPoly, RingChoice,
};
use clap::{Parser, ValueEnum};

/// Factor a quadratic trinomial over the integers or the Gaussian integers.
///
/// Exit status: 0 factored, 2 irreducible, 3 not applicable, 1 usage or
/// parse error.
#[derive(Parser, Debug)]
#[command(name = "acfactor", version)]
struct Args {
    /// The polynomial, e.g. "4x^2+8x+3" or "(2+4i)x^2+(7+5i)x+10"
    #[arg(allow_hyphen_values = true)]
    polynomial: String,

    /// Coefficient ring; defaults to the integers, promoting to the Gaussian
    /// integers when an 'i' literal appears
    #[arg(long, value_enum)]
    ring: Option<RingArg>,

    /// Print the worked solution (candidate log, rewrite, grouping array)
    #[arg(long, conflicts_with = "json")]
    explain: bool,

    /// Print a single JSON object instead of text
    #[arg(long)]
    json: bool,

    /// Bound on |a*c| (its norm over the Gaussian integers) for the split
    /// search
    #[arg(long, value_name = "BOUND")]
    max_ac: Option<u64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RingArg {
    Int,
    Gaussian,
}

fn main() -> ExitCode {
    // clap's own error exit code collides with "irreducible", so usage
    // errors are reported manually with status 1.
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(err) => {
            // --help/--version are not errors.
            if err.use_stderr() {
                eprint!("{err}");
                return ExitCode::from(1);
            }
            print!("{err}");
            return ExitCode::SUCCESS;
        }
    };

    let ring = args.ring.map(|r| match r {
        RingArg::Int => RingChoice::Integers,
        RingArg::Gaussian => RingChoice::Gaussian,
    });
    let parsed = match parse_polynomial(&args.polynomial, ring) {
        Ok(parsed) => parsed,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(1);
        }
    };

    let mut options = FactorOptions::default();
    if let Some(bound) = args.max_ac {
        options.max_ac = bound as u128;
    }
    let format = if args.json {
        OutputFormat::Structured
    } else if args.explain {
        OutputFormat::Worked
    } else {
        OutputFormat::Text
    };

    let code = match parsed.poly {
        ParsedPoly::Integers(t) => run(&t, &options, format),
        ParsedPoly::Gaussian(t) => run(&t, &options, format),
    };
    ExitCode::from(code)
}

fn run<R: Ring>(t: &Trinomial<R>, options: &FactorOptions, format: OutputFormat) -> u8 {
    match factor_quadratic_with(t, options) {
        Ok(report) => {
            let rendered = render_result(&report, format);
            if format == OutputFormat::Worked {
                print!("{rendered}");
            } else {
                println!("{rendered}");
            }
            exit_code(&report) as u8
        }
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}
