//! Hurwitz form of a general conic from the adjugate of its symmetric matrix.

use hurwitz::grassmann::dualize;
use hurwitz::hurwitz::conic_adjoint;
use hurwitz::poly::{Poly, Ring};

fn main() -> hurwitz::Result<()> {
    let ring = Ring::new(["a", "b", "c", "d", "e", "f"]);
    let entries = [["a", "b", "d"], ["b", "c", "e"], ["d", "e", "f"]];
    let m = entries
        .iter()
        .map(|row| row.iter().map(|s| Poly::parse(s, &ring)).collect())
        .collect::<hurwitz::Result<Vec<Vec<Poly>>>>()?;
    let hu = conic_adjoint(&m)?;
    println!("in hyperplane coordinates: {}", hu.form.poly());
    println!("in dual Plücker coordinates: {}", dualize(&hu.form).poly());
    Ok(())
}
