use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, FromArgMatches, Parser, Subcommand};
use hurwitz::cli::{run, JobSpec};
use hurwitz::random::DEFAULT_SEED;

/// Hurwitz forms, degrees and polytopes with JSON input and output.
#[derive(Parser)]
#[command(name = "hurwitz", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
    /// Read the input document from this file instead of stdin.
    #[arg(long = "in", global = true)]
    input: Option<PathBuf>,
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Maximum number of S-pairs per Gröbner basis computation.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Seed for random charts and probe points.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Comma-separated integer weight vector for `initial-form`.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    weight: Option<Vec<i64>>,
}

#[derive(Subcommand)]
enum Command {
    /// Hurwitz degree from (p, g), a Hilbert polynomial or an ideal.
    Hdeg,
    /// Hilbert polynomial, dimension, degree and sectional genus of an ideal.
    Hilbert,
    /// Hurwitz form of a smooth quadric.
    Quadric,
    /// Adjugate form of a conic, numeric or symbolic.
    ConicAdjoint,
    /// Hurwitz form of a hypersurface via the discriminant.
    Hypersurface,
    /// Hurwitz form of a variety by elimination.
    EliminateHurwitz,
    /// Newton polytope of a Hurwitz form, or hull of weight points.
    Polytope,
    /// Weight-initial form of a Plücker polynomial.
    InitialForm,
    /// Hurwitz form of a coordinate arrangement from a simplicial complex.
    Arrangement,
    /// Simplicial complex of a squarefree monomial ideal.
    SrComplex,
    /// Hurwitz form of a reduced cycle.
    Cycle,
    /// Compare a family's limit Hurwitz form with its special fiber.
    FlatLimit,
    /// Check the tangency limit for the family f^q + eps g.
    KatzCheck,
    /// Circuits of the columns of a matrix.
    Circuits,
    /// Broken circuit complex of a matrix.
    Bcc,
    /// Ideal of the reciprocal linear space.
    ReciprocalIdeal,
    /// Degree, Hurwitz degree and initial monomial for generic reciprocal spaces.
    GenericReciprocal,
    /// Entropic discriminant of a reciprocal linear space.
    Entropic,
    /// Entropic discriminant with scaled columns.
    Varchenko,
    /// Expand a Plücker polynomial into Stiefel coordinates.
    StiefelExpand,
    /// Write a Stiefel polynomial in Plücker coordinates.
    Lift,
    /// Normal form modulo the Plücker relations.
    Straighten,
}

fn main() -> ExitCode {
    let matches = Args::command().get_matches();
    let command = matches.subcommand_name().expect("subcommand is required").to_string();
    let args = match Args::from_arg_matches(&matches) {
        Ok(a) => a,
        Err(e) => e.exit(),
    };
    let input = match &args.input {
        Some(path) => fs::read_to_string(path),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map(|_| s)
        }
    };
    let input = match input {
        Ok(s) => s,
        Err(e) => {
            eprintln!("hurwitz: cannot read input: {e}");
            return ExitCode::from(2);
        }
    };
    let spec = JobSpec {
        command,
        input,
        budget: args.budget,
        seed: args.seed,
        weight: args.weight,
    };
    let outcome = run(&spec);
    let written = match &args.out {
        Some(path) => fs::write(path, &outcome.output),
        None => io::stdout().write_all(outcome.output.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("hurwitz: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.exit_code as u8)
}
