use super::*;
use crate::grassmann::{straighten, Flavor, Grassmannian};

fn segre_hu() -> PlueckerPoly {
    let gr = Grassmannian::new(2, 3).unwrap();
    let ring = gr.ring(Flavor::Dual);
    let f = Poly::parse("q_0_3^2 + q_1_2^2 + 2*q_0_3*q_1_2 - 4*q_0_2*q_1_3", &ring).unwrap();
    straighten(&PlueckerPoly::new(gr, Flavor::Dual, f).unwrap()).unwrap()
}

#[test]
fn segre_weights_and_segment() {
    let f = segre_hu();
    let comps = weight_components(&f);
    let keys: Vec<Vec<i64>> = comps.keys().cloned().collect();
    assert_eq!(keys, vec![vec![0, 2, 2, 0], vec![1, 1, 1, 1], vec![2, 0, 0, 2]]);
    let total = comps
        .values()
        .fold(Poly::zero(f.ring()), |acc, c| &acc + c.poly());
    assert_eq!(&total, f.poly());

    let hp = hurwitz_polytope(&f).unwrap();
    assert_eq!(hp.vertices, vec![vec![0, 2, 2, 0], vec![2, 0, 0, 2]]);
    assert_eq!(hp.dim, 1);
    assert!(hp.contains(&[1, 1, 1, 1]));
    let chow = Polytope::from_points(&[vec![1, 0, 0, 1], vec![0, 1, 1, 0]]).unwrap();
    assert!(polytope_scale_compare(&hp, &chow, 2).unwrap());
    assert!(!polytope_scale_compare(&hp, &chow, 1).unwrap());
    assert!(polytope_scale_compare(&hp, &hp, 1).unwrap());
    let point = Polytope::from_points(&[vec![1, 1, 1, 1]]).unwrap();
    assert_eq!(point.dim, 0);
    assert!(!polytope_scale_compare(&hp, &point, 3).unwrap());
}

#[test]
fn initial_forms() {
    let f = segre_hu();
    let top = initial_form(&f, &[1, 0, 0, 1]).unwrap();
    assert_eq!(top.poly().num_terms(), 1);
    assert_eq!(weight_components(&top).keys().next().unwrap(), &vec![2, 0, 0, 2]);
    assert_eq!(initial_form(&f, &[0, 0, 0, 0]).unwrap(), f);
}

#[test]
fn square_vertices_and_cones() {
    let pts = vec![
        vec![0, 0],
        vec![2, 0],
        vec![0, 2],
        vec![2, 2],
        vec![1, 1],
        vec![1, 0],
    ];
    let p = Polytope::from_points(&pts).unwrap();
    assert_eq!(p.vertices, vec![vec![0, 0], vec![0, 2], vec![2, 0], vec![2, 2]]);
    assert_eq!(p.dim, 2);
    for v in &p.vertices {
        let w = p.normal_cone_point(v).unwrap();
        let score = |u: &Vec<i64>| u.iter().zip(&w).map(|(a, b)| a * b).sum::<i64>();
        assert!(p.vertices.iter().filter(|u| *u != v).all(|u| score(u) < score(v)));
    }
    assert!(p.normal_cone_point(&[1, 1]).is_none());
}
