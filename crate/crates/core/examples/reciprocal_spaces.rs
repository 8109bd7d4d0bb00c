//! Circuits, broken circuit complexes and Hurwitz data of reciprocal linear spaces.

use hurwitz::cycles::coordinate_arrangement_hurwitz;
use hurwitz::grassmann::Flavor;
use hurwitz::groebner::{hilbert_polynomial, sectional_invariants};
use hurwitz::hurwitz::hdeg;
use hurwitz::reciprocal::{
    broken_circuit_complex, circuits, generic_reciprocal_invariants, reciprocal_ideal, MatrixA,
};

fn main() -> hurwitz::Result<()> {
    let a = MatrixA::from_ints(&[&[1, 0, 0, 1, 1], &[0, 1, 0, 1, 0], &[0, 0, 1, 0, 1]])?;
    let cs = circuits(&a);
    for c in &cs {
        println!("circuit {:?} with coefficients {:?}", c.support, c.coefficients);
    }
    let ideal = reciprocal_ideal(&a)?;
    for g in ideal.gens() {
        println!("  generator {g}");
    }
    let k = broken_circuit_complex(&a, &cs, &[0, 1, 2, 3, 4])?;
    println!("broken circuit complex {:?}", k.facets);
    println!("initial Hurwitz monomial {}", coordinate_arrangement_hurwitz(&k, Flavor::Primal)?.poly());

    let h = hilbert_polynomial(&ideal)?;
    let (p, g) = sectional_invariants(&h.hilbert_polynomial, h.dimension)?;
    println!("degree {p}, sectional genus {g}, Hdeg {}", hdeg(p, g)?);

    let generic = generic_reciprocal_invariants(2, 4)?;
    println!(
        "generic plane in P^4: degree {}, Hdeg {}, initial monomial {}",
        generic.p,
        generic.hdeg,
        generic.monomial.poly()
    );
    Ok(())
}
