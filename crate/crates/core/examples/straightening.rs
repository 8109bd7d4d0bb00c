//! Plücker relations, straightening and the primal/dual coordinate swap.

use hurwitz::grassmann::{dualize, pluecker_relations, straighten, Flavor, Grassmannian, PlueckerPoly};
use hurwitz::poly::Poly;

fn main() -> hurwitz::Result<()> {
    let rel = pluecker_relations(2, 3, Flavor::Primal)?;
    println!("lines in P^3: {}", rel.gens()[0]);

    let gr = Grassmannian::new(2, 4)?;
    let ring = gr.ring(Flavor::Primal);
    let f = PlueckerPoly::new(gr, Flavor::Primal, Poly::parse("p_0_3*p_1_2 + p_0_1*p_2_3", &ring)?)?;
    println!("{} straightens to {}", f.poly(), straighten(&f)?.poly());
    println!("in dual coordinates: {}", dualize(&f).poly());
    Ok(())
}
