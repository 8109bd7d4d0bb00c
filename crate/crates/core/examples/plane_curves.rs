//! Hurwitz forms of plane curves: discriminant route against elimination.

use hurwitz::grassmann::{dualize, equal_up_to_scalar};
use hurwitz::groebner::Ideal;
use hurwitz::hurwitz::{hurwitz_elimination, hurwitz_hypersurface, HypersurfaceOptions, Variety};
use hurwitz::poly::{Poly, Ring};

fn main() -> hurwitz::Result<()> {
    let ring = Ring::indexed("x", 3);
    for curve in ["x0*x2 - x1^2", "x0^3 + x1^3 + x2^3", "x1^2*x2 - x0^3 - x0*x2^2"] {
        let f = Poly::parse(curve, &ring)?;
        let disc = hurwitz_hypersurface(&f, &HypersurfaceOptions::default())?;
        let elim = hurwitz_elimination(&Variety::new(Ideal::new(&ring, [f])?, 1)?)?;
        let agree = equal_up_to_scalar(&dualize(&disc.form), &elim.form)?;
        println!(
            "{curve}: Hdeg {} ({} terms), routes agree: {agree}",
            disc.hdeg,
            disc.form.poly().num_terms()
        );
    }
    Ok(())
}
