//! Newton polytopes of Hurwitz forms and their weight-initial forms.

use hurwitz::hurwitz::{hurwitz_quadric, quadric_matrix};
use hurwitz::poly::{Poly, Ring};
use hurwitz::polytope::{hurwitz_polytope, initial_form, Polytope};

fn main() -> hurwitz::Result<()> {
    let ring = Ring::indexed("x", 4);
    let q = Poly::parse("x0*x3 - x1*x2", &ring)?;
    let hu = hurwitz_quadric(&quadric_matrix(&q)?)?;
    let p = hurwitz_polytope(&hu.form)?;
    println!("quadric surface: {}-dimensional, vertices {:?}", p.dim, p.vertices);
    for v in &p.vertices {
        if let Some(w) = p.normal_cone_point(v) {
            println!("  weight {w:?} selects {}", initial_form(&hu.form, &w)?.poly());
        }
    }

    let weights: Vec<Vec<i64>> = vec![
        vec![1, 6, 0, 0, 2, 3],
        vec![0, 6, 2, 1, 0, 3],
        vec![3, 0, 2, 1, 6, 0],
        vec![3, 2, 0, 0, 6, 1],
        vec![0, 2, 6, 3, 0, 1],
        vec![1, 0, 6, 3, 2, 0],
        vec![0, 4, 4, 0, 4, 0],
        vec![2, 2, 2, 0, 6, 0],
        vec![0, 6, 2, 0, 2, 2],
        vec![0, 2, 6, 2, 2, 0],
        vec![1, 6, 0, 1, 0, 4],
        vec![1, 0, 6, 4, 0, 1],
        vec![4, 0, 0, 1, 6, 1],
        vec![4, 0, 0, 4, 0, 4],
    ];
    let v = Polytope::from_points(&weights)?;
    println!(
        "Veronese surface weights: {}-dimensional with {} vertices",
        v.dim,
        v.vertices.len()
    );
    Ok(())
}
