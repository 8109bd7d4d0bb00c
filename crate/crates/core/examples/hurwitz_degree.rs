//! Hurwitz degrees from degree and sectional genus, and from Hilbert polynomials.

use hurwitz::groebner::Ideal;
use hurwitz::hurwitz::{hdeg, Variety};
use hurwitz::poly::Ring;

fn main() -> hurwitz::Result<()> {
    for (p, g) in [(2, 0), (4, 0), (6, 3), (10, 6), (4912, 13569)] {
        println!("degree {p:>5}, genus {g:>5}: Hdeg = {}", hdeg(p, g)?);
    }

    let ring = Ring::indexed("x", 4);
    let cubic = Ideal::parse(&ring, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"])?;
    let x = Variety::new(cubic, 1)?;
    let h = x.hilbert()?;
    let (p, g) = x.degree_and_genus()?;
    println!(
        "twisted cubic: Hilbert polynomial {}, degree {p}, genus {g}, Hdeg {}",
        h.hilbert_polynomial,
        x.hdeg()?
    );
    Ok(())
}
