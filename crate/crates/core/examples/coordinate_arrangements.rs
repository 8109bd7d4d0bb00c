//! Hurwitz forms of coordinate arrangements from simplicial complexes and
//! squarefree monomial ideals.

use hurwitz::cycles::{
    coordinate_arrangement_hurwitz, ridges_with_multiplicity, stanley_reisner_complex,
    SimplicialComplex,
};
use hurwitz::grassmann::Flavor;
use hurwitz::groebner::Ideal;
use hurwitz::poly::Ring;

fn main() -> hurwitz::Result<()> {
    for facets in [
        vec![vec![0, 1, 2], vec![1, 2, 4], vec![1, 3, 4], vec![2, 4, 5]],
        vec![vec![0, 1, 4], vec![0, 2, 4], vec![1, 3, 4], vec![2, 4, 5]],
    ] {
        let k = SimplicialComplex::new(5, facets)?;
        let shared = ridges_with_multiplicity(&k)?.into_iter().filter(|r| r.nu > 1).count();
        let hu = coordinate_arrangement_hurwitz(&k, Flavor::Primal)?;
        println!("{:?}: {shared} interior edges, {}", k.facets, hu.poly());
    }

    let ring = Ring::indexed("x", 12);
    let m = Ideal::parse(&ring, &["x2*x5*x8", "x3*x5*x8", "x3*x6*x8", "x3*x6*x9"])?;
    let k = stanley_reisner_complex(&m, 11)?;
    println!(
        "monomial ideal with {} facets: {}",
        k.facets.len(),
        coordinate_arrangement_hurwitz(&k, Flavor::Dual)?.poly()
    );
    Ok(())
}
