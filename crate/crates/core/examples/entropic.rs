//! Entropic discriminants of reciprocal linear spaces.
//!
//! Run with `--surface` to also attempt the plane in P^4 under a raised
//! Gröbner budget.

use std::time::Instant;

use hurwitz::groebner::Budget;
use hurwitz::hurwitz::{hurwitz_elimination_with, EliminationOptions, Variety};
use hurwitz::reciprocal::{entropic_discriminant, reciprocal_ideal, FactorConvention, MatrixA};

fn main() -> hurwitz::Result<()> {
    let line = MatrixA::from_ints(&[&[1, 0, 1], &[0, 1, 1]])?;
    report(&line, 1, EliminationOptions::default())?;

    if std::env::args().any(|a| a == "--surface") {
        let plane = MatrixA::from_ints(&[&[1, 0, 0, 1, 1], &[0, 1, 0, 1, 0], &[0, 0, 1, 0, 1]])?;
        let opts = EliminationOptions {
            budget: Budget::default().scaled(4),
            attempts: 1,
            ..EliminationOptions::default()
        };
        report(&plane, 2, opts)?;
    }
    Ok(())
}

fn report(a: &MatrixA, d: usize, opts: EliminationOptions) -> hurwitz::Result<()> {
    let start = Instant::now();
    let x = Variety::new(reciprocal_ideal(a)?, d)?;
    let hu = hurwitz_elimination_with(&x, &opts)?;
    let expanded = hurwitz::grassmann::stiefel_expand(&hu.form, hurwitz::grassmann::Flavor::Primal)?;
    println!(
        "A = {:?}: Hurwitz form of degree {} with {} Stiefel terms ({:.1?})",
        a.rows().iter().map(|r| r.iter().map(|q| q.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        hu.hdeg,
        expanded.num_terms(),
        start.elapsed()
    );
    let e = entropic_discriminant(a, &hu.form, FactorConvention::Auto)?;
    println!("  removed factor {} ({} convention)", e.factor, e.convention);
    println!("  entropic discriminant: {}", e.poly);
    Ok(())
}
