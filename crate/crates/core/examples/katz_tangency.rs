//! Limits of f^q + eps*g: the Hurwitz form tends to Hu(f)^{q^2} times the
//! Chow forms of f ∩ g raised to q - 1.

use hurwitz::hurwitz::{intersection_points, katz_limit_check, katz_rhs};
use hurwitz::poly::{Poly, Ring};

fn main() -> hurwitz::Result<()> {
    let ring = Ring::indexed("x", 3);
    let f = Poly::parse("x0", &ring)?;
    for g in ["x1*x2", "x1^2 - x0*x2 + 2*x2^2 - 3*x1*x2"] {
        let g = Poly::parse(g, &ring)?;
        let points = intersection_points(&f, &g)?;
        let rhs = katz_rhs(&f, &g, 2, Some(&points))?;
        println!(
            "g = {g}: {} intersection points, predicted limit {}, matches: {}",
            points.len(),
            rhs.poly(),
            katz_limit_check(&f, &g, 2)?
        );
    }
    Ok(())
}
