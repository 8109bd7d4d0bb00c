//! Limits of Hurwitz forms in degenerating families of plane curves.

use hurwitz::cycles::{chow_point, flat_limit_check, Component, ReducedCycle};
use hurwitz::grassmann::Grassmannian;
use hurwitz::hurwitz::{hurwitz_hypersurface, HypersurfaceOptions};
use hurwitz::poly::{int, Poly, Ring};

fn main() -> hurwitz::Result<()> {
    let ring = Ring::new(["x0", "x1", "x2", "eps"]);
    let plain = Ring::indexed("x", 3);
    let gr = Grassmannian::new(1, 2)?;

    let two_lines = ReducedCycle {
        gr,
        components: vec![Component::Linear, Component::Linear],
        intersections: vec![(chow_point(&[int(0), int(1), int(0)])?, 2)],
    };
    let family = Poly::parse("x0*x2 - eps*x1^2", &ring)?;
    let r = flat_limit_check(&family, "eps", &two_lines)?;
    println!("conic to two lines: limit {}, passed {}", r.limit.poly(), r.passed);

    let conic = hurwitz_hypersurface(&Poly::parse("x1*x2 - x0^2", &plain)?, &HypersurfaceOptions::default())?;
    let conic_and_line = ReducedCycle {
        gr,
        components: vec![Component::Form(conic.form), Component::Linear],
        intersections: vec![
            (chow_point(&[int(0), int(1), int(0)])?, 2),
            (chow_point(&[int(0), int(0), int(1)])?, 2),
        ],
    };
    let family = Poly::parse("x0*(x1*x2 - x0^2) + eps*(x0^3 + 2*x1^3 - x2^3 + x0*x1*x2)", &ring)?;
    let r = flat_limit_check(&family, "eps", &conic_and_line)?;
    println!(
        "cubic to conic plus line: degrees {} and {}, passed {}",
        r.limit_degree, r.expected_degree, r.passed
    );
    Ok(())
}
