//! Command-line front end.
//!
//! Exit codes: 0 success, 2 invalid input (parse failure or not in
//! general position, with the violating subset named), 3 verification
//! failure, 4 internal theorem violation (a defect, never the input's
//! fault).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use radon_link::document::{
    input_hash, parse_pointfile, write_pointfile, EnumerationDocument, ResultDocument,
};
use radon_link::error::Error;
use radon_link::generator::{gen_moment_curve, gen_random};
use radon_link::linalg::parse_rational;
use radon_link::oracle::{enumerate, EnumOptions};
use radon_link::sweep::find_partition;
use radon_link::verify::verify_certificate;
use radon_link::Configuration;

#[derive(Parser)]
#[command(name = "radon-link", version, about = "Intersecting and linked simplex pairs \
among n+3 general-position points in R^n, with exact certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find the partition for a point file and verify its certificate.
    Find {
        pointfile: PathBuf,
    },
    /// Re-check a previously produced result document against its input.
    Verify {
        pointfile: PathBuf,
        resultfile: PathBuf,
    },
    /// Enumerate every qualifying subset pair by brute force.
    Enumerate {
        pointfile: PathBuf,
        /// Number of worker threads for the enumeration.
        #[arg(long)]
        jobs: Option<usize>,
        /// Ceiling on the dimension the enumeration will attempt.
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: usize,
    },
    /// Write a generated point file to stdout (or --out).
    Gen {
        /// Dimension of the configuration (n+3 points in R^n).
        #[arg(long)]
        n: usize,
        /// Seed for the random generator.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Coordinate bound for random generation (points in [-B, B]^n).
        #[arg(long, conflicts_with = "moment")]
        bound: Option<i64>,
        /// Comma-separated strictly increasing moment-curve parameters
        /// (exactly n+3 rationals); replaces random generation.
        #[arg(long, value_delimiter = ',')]
        moment: Option<Vec<String>>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Report whether a point file is in general position.
    CheckGp {
        pointfile: PathBuf,
    },
}

const EXIT_INVALID_INPUT: u8 = 2;
const EXIT_VERIFICATION_FAILURE: u8 = 3;
const EXIT_DEFECT: u8 = 4;

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::TheoremViolation(_) | Error::Degenerate(_) => EXIT_DEFECT,
        _ => EXIT_INVALID_INPUT,
    }
}

fn fail(err: Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(exit_code(&err))
}

fn load_configuration(path: &Path) -> Result<Configuration, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_pointfile(&text)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Find { pointfile } => cmd_find(&pointfile),
        Command::Verify { pointfile, resultfile } => cmd_verify(&pointfile, &resultfile),
        Command::Enumerate { pointfile, jobs, max_n } => cmd_enumerate(&pointfile, jobs, max_n),
        Command::Gen { n, seed, bound, moment, out } => cmd_gen(n, seed, bound, moment, out),
        Command::CheckGp { pointfile } => cmd_check_gp(&pointfile),
    }
}

fn cmd_find(pointfile: &Path) -> ExitCode {
    let c = match load_configuration(pointfile) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let result = match find_partition(&c) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let verified = match verify_certificate(&c, &result) {
        Ok(v) => v,
        Err(e) => return fail(e),
    };
    print!("{}", ResultDocument::new(&c, &result, verified).to_json());
    if verified {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: freshly produced certificate failed verification");
        ExitCode::from(EXIT_DEFECT)
    }
}

fn cmd_verify(pointfile: &Path, resultfile: &Path) -> ExitCode {
    let c = match load_configuration(pointfile) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    if let Err(e) = c.require_general_position() {
        return fail(e);
    }
    let text = match std::fs::read_to_string(resultfile) {
        Ok(t) => t,
        Err(e) => {
            return fail(Error::Document(format!("cannot read {}: {e}", resultfile.display())))
        }
    };
    let doc = match ResultDocument::from_json(&text) {
        Ok(d) => d,
        Err(e) => return fail(e),
    };
    if doc.input_sha256 != input_hash(&c) || doc.n != c.dim() {
        println!("{{\"verdict\": \"fail\", \"reason\": \"result does not describe this input\"}}");
        return ExitCode::from(EXIT_VERIFICATION_FAILURE);
    }
    match verify_certificate(&c, &doc.to_partition_result()) {
        Ok(true) => {
            println!("{{\"verdict\": \"pass\"}}");
            ExitCode::SUCCESS
        }
        Ok(false) => {
            println!("{{\"verdict\": \"fail\", \"reason\": \"certificate recomputation failed\"}}");
            ExitCode::from(EXIT_VERIFICATION_FAILURE)
        }
        Err(e @ Error::Document(_)) => fail(e),
        Err(e) => fail(e),
    }
}

fn cmd_enumerate(pointfile: &Path, jobs: Option<usize>, max_n: usize) -> ExitCode {
    if let Some(jobs) = jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            return fail(Error::Generation(format!("cannot size the worker pool: {e}")));
        }
    }
    let c = match load_configuration(pointfile) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    match enumerate(&c, &EnumOptions { max_n }) {
        Ok(report) => {
            print!("{}", EnumerationDocument::new(&c, report).to_json());
            ExitCode::SUCCESS
        }
        Err(e) => fail(e),
    }
}

fn cmd_gen(
    n: usize,
    seed: u64,
    bound: Option<i64>,
    moment: Option<Vec<String>>,
    out: Option<PathBuf>,
) -> ExitCode {
    let built = match &moment {
        Some(raw) => {
            let params: Result<Vec<_>, _> = raw.iter().map(|s| parse_rational(s)).collect();
            match params {
                Ok(params) => gen_moment_curve(n, &params)
                    .map(|c| (c, format!("gen n={n} moment={}", raw.join(",")))),
                Err(msg) => Err(Error::Generation(format!("bad moment parameter: {msg}"))),
            }
        }
        None => {
            let bound = bound.unwrap_or(100);
            gen_random(n, seed, bound).map(|c| (c, format!("gen n={n} seed={seed} bound={bound}")))
        }
    };
    let (c, note) = match built {
        Ok(pair) => pair,
        Err(e) => return fail(e),
    };
    let text = write_pointfile(&c, Some(&note));
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                return fail(Error::Generation(format!("cannot write {}: {e}", path.display())));
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}

fn cmd_check_gp(pointfile: &Path) -> ExitCode {
    let c = match load_configuration(pointfile) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let report = c.check_general_position();
    print!("{}", radon_link::document::general_position_json(&report));
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INVALID_INPUT)
    }
}
