//! The Hurwitz form of the quadric surface x0*x3 - x1*x2 and its expansion
//! into the 2x2x2 hyperdeterminant.

use hurwitz::grassmann::{pluecker_lift, stiefel_expand, Flavor};
use hurwitz::hurwitz::{hurwitz_quadric, quadric_matrix};
use hurwitz::poly::{Poly, Ring};

fn main() -> hurwitz::Result<()> {
    let ring = Ring::indexed("x", 4);
    let q = Poly::parse("x0*x3 - x1*x2", &ring)?;
    let hu = hurwitz_quadric(&quadric_matrix(&q)?)?;
    println!("Hurwitz form ({}): {}", hu.form.flavor().name(), hu.form.poly());

    let expanded = stiefel_expand(&hu.form, Flavor::Dual)?;
    println!("in the entries of a 2x4 matrix ({} terms):\n  {expanded}", expanded.num_terms());

    let back = pluecker_lift(&expanded, 2, 3, Flavor::Dual)?;
    println!("lifted back: {}", back.poly());
    Ok(())
}
