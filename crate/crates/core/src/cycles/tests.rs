use super::*;
use crate::grassmann::stiefel_ring;
use crate::poly::{int, Ring};

fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    SimplicialComplex::new(n, facets.iter().map(|f| f.to_vec()).collect()).unwrap()
}

fn form(d: usize, n: usize, flavor: Flavor, s: &str) -> PlueckerPoly {
    let gr = Grassmannian::new(d, n).unwrap();
    PlueckerPoly::new(gr, flavor, Poly::parse(s, &gr.ring(flavor)).unwrap()).unwrap()
}

#[test]
fn ridge_counts() {
    let k = complex(5, &[&[0, 1, 2], &[1, 2, 4], &[1, 3, 4], &[2, 4, 5]]);
    let ridges = ridges_with_multiplicity(&k).unwrap();
    let doubles: Vec<Vec<usize>> = ridges.iter().filter(|r| r.nu == 2).map(|r| r.ridge.clone()).collect();
    assert_eq!(doubles, vec![vec![1, 2], vec![1, 4], vec![2, 4]]);
    assert!(ridges.iter().all(|r| r.nu <= 2));
    assert_eq!(ridges.len(), 9);

    let single = complex(2, &[&[0, 1, 2]]);
    let r = ridges_with_multiplicity(&single).unwrap();
    assert_eq!(r.len(), 3);
    assert!(r.iter().all(|x| x.nu == 1));

    let triangle = complex(2, &[&[0, 1], &[1, 2], &[0, 2]]);
    let r = ridges_with_multiplicity(&triangle).unwrap();
    assert_eq!(r.iter().map(|x| (x.ridge[0], x.nu)).collect::<Vec<_>>(), vec![(0, 2), (1, 2), (2, 2)]);

    let impure = complex(3, &[&[0, 1, 2], &[2, 3]]);
    assert!(matches!(ridges_with_multiplicity(&impure), Err(Error::NotPure)));
}

#[test]
fn triangulation_monomials() {
    let a = complex(5, &[&[0, 1, 2], &[1, 2, 4], &[1, 3, 4], &[2, 4, 5]]);
    let b = complex(5, &[&[0, 1, 4], &[0, 2, 4], &[1, 3, 4], &[2, 4, 5]]);
    assert_eq!(
        coordinate_arrangement_hurwitz(&a, Flavor::Primal).unwrap(),
        form(2, 5, Flavor::Primal, "p_1_2^2*p_1_4^2*p_2_4^2")
    );
    assert_eq!(
        coordinate_arrangement_hurwitz(&b, Flavor::Primal).unwrap(),
        form(2, 5, Flavor::Primal, "p_0_4^2*p_1_4^2*p_2_4^2")
    );
    let dual = coordinate_arrangement_hurwitz(&a, Flavor::Dual).unwrap();
    assert_eq!(dual.poly().num_terms(), 1);
    assert!(equal_up_to_scalar(&dual, &coordinate_arrangement_hurwitz(&a, Flavor::Primal).unwrap()).unwrap());
}

fn sr(gens: &[&str]) -> SimplicialComplex {
    let ring = Ring::indexed("x", 12);
    stanley_reisner_complex(&Ideal::parse(&ring, gens).unwrap(), 11).unwrap()
}

#[test]
fn determinantal_initial_ideals() {
    let k1 = sr(&["x2*x5*x8", "x3*x5*x8", "x3*x6*x8", "x3*x6*x9"]);
    assert!(k1.is_pure());
    assert_eq!(k1.dim().unwrap(), 9);
    assert_eq!(
        coordinate_arrangement_hurwitz(&k1, Flavor::Dual).unwrap(),
        form(
            9,
            11,
            Flavor::Dual,
            "q_2_3_5^2*q_2_3_8^2*q_3_5_8^2*q_3_5_6^2*q_3_6_8^2*q_3_8_9^2*q_5_6_8^2*q_6_8_9^2"
        )
    );
    let k2 = sr(&["x0*x6*x9", "x3*x4*x9", "x3*x6*x8", "x3*x6*x9"]);
    assert_eq!(
        coordinate_arrangement_hurwitz(&k2, Flavor::Dual).unwrap(),
        form(
            9,
            11,
            Flavor::Dual,
            "q_0_3_6^2*q_0_3_9^2*q_3_4_6^2*q_3_8_9^2*q_4_6_9^2*q_6_8_9^2*q_3_6_9^4"
        )
    );
}

#[test]
fn small_stanley_reisner_cases() {
    let ring = Ring::indexed("x", 2);
    let k = stanley_reisner_complex(&Ideal::parse(&ring, &["x0*x1"]).unwrap(), 1).unwrap();
    assert_eq!(k.facets, vec![vec![0], vec![1]]);
    assert!(matches!(
        stanley_reisner_complex(&Ideal::parse(&ring, &["x0^2"]).unwrap(), 1),
        Err(Error::NotSquarefree)
    ));
    let ring3 = Ring::indexed("x", 4);
    let impure = stanley_reisner_complex(&Ideal::parse(&ring3, &["x0*x1", "x0*x2"]).unwrap(), 3).unwrap();
    assert!(!impure.is_pure());
    let back = stanley_reisner_ideal(&impure).unwrap();
    assert_eq!(stanley_reisner_complex(&back, 3).unwrap(), impure);
}

fn two_lines() -> ReducedCycle {
    let gr = Grassmannian::new(1, 2).unwrap();
    ReducedCycle {
        gr,
        components: vec![Component::Linear, Component::Linear],
        intersections: vec![(chow_point(&[int(0), int(1), int(0)]).unwrap(), 2)],
    }
}

#[test]
fn two_lines_cycle() {
    assert_eq!(cycle_hurwitz(&two_lines()).unwrap(), form(1, 2, Flavor::Primal, "p_1^2"));
}

#[test]
fn degenerating_conic() {
    let ring = Ring::new(["x0", "x1", "x2", "eps"]);
    let family = Poly::parse("x0*x2 - eps*x1^2", &ring).unwrap();
    let report = flat_limit_check(&family, "eps", &two_lines()).unwrap();
    assert!(report.passed);
    assert_eq!(report.limit, form(1, 2, Flavor::Primal, "p_1^2"));
}

#[test]
fn smooth_conic_family_keeps_its_form() {
    let ring = Ring::new(["x0", "x1", "x2", "eps"]);
    let family = Poly::parse("x0*x2 - x1^2 + eps*x0^2", &ring).unwrap();
    let plain = Ring::indexed("x", 3);
    let conic = hurwitz_hypersurface(
        &Poly::parse("x0*x2 - x1^2", &plain).unwrap(),
        &HypersurfaceOptions::default(),
    )
    .unwrap();
    let spec = ReducedCycle {
        gr: Grassmannian::new(1, 2).unwrap(),
        components: vec![Component::Form(conic.form)],
        intersections: vec![],
    };
    assert!(flat_limit_check(&family, "eps", &spec).unwrap().passed);
}

#[test]
fn conic_plus_line() {
    let ring = Ring::new(["x0", "x1", "x2", "eps"]);
    let family = Poly::parse(
        "x0*(x1*x2 - x0^2) + eps*(x0^3 + 2*x1^3 - x2^3 + x0*x1*x2)",
        &ring,
    )
    .unwrap();
    let plain = Ring::indexed("x", 3);
    let conic = hurwitz_hypersurface(
        &Poly::parse("x1*x2 - x0^2", &plain).unwrap(),
        &HypersurfaceOptions::default(),
    )
    .unwrap();
    let spec = ReducedCycle {
        gr: Grassmannian::new(1, 2).unwrap(),
        components: vec![Component::Form(conic.form), Component::Linear],
        intersections: vec![
            (chow_point(&[int(0), int(1), int(0)]).unwrap(), 2),
            (chow_point(&[int(0), int(0), int(1)]).unwrap(), 2),
        ],
    };
    let report = flat_limit_check(&family, "eps", &spec).unwrap();
    assert_eq!(report.expected_degree, 6);
    assert!(report.passed, "{report:?}");
}

#[test]
fn nodal_cubic_limit_is_not_its_hurwitz_form() {
    let ring = Ring::new(["x0", "x1", "x2", "eps"]);
    let family = Poly::parse("x1^2*x2 - x0^2*x2 - x0^3 + eps*x2^3", &ring).unwrap();
    let plain = Ring::indexed("x", 3);
    let nodal = Poly::parse("x1^2*x2 - x0^2*x2 - x0^3", &plain).unwrap();
    // Lines through the node (0:0:1) make q_01 a double factor of the discriminant.
    let gr = Grassmannian::new(1, 2).unwrap();
    let sring = stiefel_ring(gr, Flavor::Dual);
    let node = Poly::parse("u0_0*u1_1 - u0_1*u1_0", &sring).unwrap();
    let opts = HypersurfaceOptions {
        factors: vec![node.clone(), node],
        ..Default::default()
    };
    let hu = hurwitz_hypersurface(&nodal, &opts).unwrap();
    assert_eq!(hu.hdeg, 4);
    let spec = ReducedCycle {
        gr,
        components: vec![Component::Form(hu.form)],
        intersections: vec![],
    };
    let report = flat_limit_check(&family, "eps", &spec).unwrap();
    assert!(!report.passed);
    assert_eq!((report.limit_degree, report.expected_degree), (6, 4));
}

#[test]
fn nonreduced_fiber_is_rejected() {
    let ring = Ring::new(["x0", "x1", "x2", "eps"]);
    let family = Poly::parse("x0^2 + eps*x1*x2", &ring).unwrap();
    assert!(matches!(
        flat_limit_check(&family, "eps", &two_lines()),
        Err(Error::NonreducedLimit(_))
    ));
}
