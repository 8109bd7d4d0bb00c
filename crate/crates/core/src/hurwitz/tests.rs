use super::*;
use crate::grassmann::{dualize, equal_up_to_scalar};
use crate::groebner::binomial_poly;
use crate::poly::{discriminant, int, rat, Rational};
use crate::random::Generic;

fn m(rows: &[&[i64]]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
}

fn random_symmetric(rng: &mut Generic, size: usize) -> Matrix {
    let mut a: Matrix = vec![vec![int(0); size]; size];
    for i in 0..size {
        for j in i..size {
            let v = rng.rational(9, 3);
            a[i][j] = v.clone();
            a[j][i] = v;
        }
    }
    a
}

fn dual_form(d: usize, n: usize, s: &str) -> PlueckerPoly {
    let gr = Grassmannian::new(d, n).unwrap();
    PlueckerPoly::new(gr, Flavor::Dual, Poly::parse(s, &gr.ring(Flavor::Dual)).unwrap()).unwrap()
}

fn primal_form(d: usize, n: usize, s: &str) -> PlueckerPoly {
    let gr = Grassmannian::new(d, n).unwrap();
    PlueckerPoly::new(gr, Flavor::Primal, Poly::parse(s, &gr.ring(Flavor::Primal)).unwrap())
        .unwrap()
}

#[test]
fn degree_formula() {
    assert_eq!(hdeg(10, 6).unwrap(), 30);
    assert_eq!(hdeg(4912, 13569).unwrap(), 36960);
    assert_eq!(hdeg(2, 0).unwrap(), 2);
    assert!(matches!(hdeg(1, 0), Err(Error::DegreeTooSmall(_))));
    for p in 2..8 {
        let g = (p - 1) * (p - 2) / 2;
        assert_eq!(hdeg(p, g).unwrap(), p * (p - 1));
    }
}

#[test]
fn degree_from_hilbert_polynomial() {
    let ring = Ring::new(["m"]);
    let square = binomial_poly(&ring, 1, 1).pow(2);
    let data = HilbertData::from_polynomial(square).unwrap();
    assert_eq!(hdeg_from_hilbert(&data).unwrap(), 2);
    let cubic = Poly::parse("3*m + 1", &ring).unwrap();
    let data = HilbertData::from_polynomial(cubic).unwrap();
    assert_eq!(hdeg_from_hilbert(&data).unwrap(), 4);
}

fn twisted_cubic() -> Variety {
    let ring = Ring::indexed("x", 4);
    let ideal = Ideal::parse(&ring, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]).unwrap();
    Variety::new(ideal, 1).unwrap()
}

#[test]
fn variety_invariants() {
    let x = twisted_cubic();
    assert_eq!(x.degree_and_genus().unwrap(), (3, 0));
    assert_eq!(x.hdeg().unwrap(), 4);
    assert_eq!(hdeg_from_hilbert(&x.hilbert().unwrap()).unwrap(), 4);
}

#[test]
fn quadric_closed_form() {
    let ring = Ring::indexed("x", 4);
    let f = Poly::parse("x0*x3 - x1*x2", &ring).unwrap();
    let a = quadric_matrix(&f).unwrap();
    let gr = Grassmannian::new(2, 3).unwrap();
    let raw = quadric_form_raw(&a, gr).unwrap();
    let expected = dual_form(
        2,
        3,
        "-1/4*q_0_3^2 - 1/4*q_1_2^2 + 1/2*q_0_2*q_1_3 + 1/2*q_0_1*q_2_3",
    );
    assert_eq!(raw, expected);
    let hu = hurwitz_quadric(&a).unwrap();
    assert_eq!(hu.hdeg, 2);
    let class = dual_form(2, 3, "q_0_3^2 + q_1_2^2 + 2*q_0_3*q_1_2 - 4*q_0_2*q_1_3");
    assert!(equal_up_to_scalar(&hu.form, &class).unwrap());
}

#[test]
fn quadric_errors() {
    assert!(matches!(
        hurwitz_quadric(&m(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]])),
        Err(Error::RankTooSmall(_))
    ));
    assert!(matches!(
        hurwitz_quadric(&m(&[&[1, 2, 0], &[0, 1, 0], &[0, 0, 1]])),
        Err(Error::NotSymmetric)
    ));
}

fn symbolic_conic() -> (Ring, Vec<Vec<Poly>>) {
    let ring = Ring::new(["m00", "m01", "m02", "m11", "m12", "m22"]);
    let v = |s: &str| Poly::var(&ring, s).unwrap();
    let entries = vec![
        vec![v("m00"), v("m01"), v("m02")],
        vec![v("m01"), v("m11"), v("m12")],
        vec![v("m02"), v("m12"), v("m22")],
    ];
    (ring, entries)
}

#[test]
fn symbolic_adjugate_entries() {
    let (ring, entries) = symbolic_conic();
    let adj = adjugate(&entries, &ring);
    let printed = [
        ["m11*m22 - m12^2", "m12*m02 - m01*m22", "m01*m12 - m11*m02"],
        ["m12*m02 - m01*m22", "m00*m22 - m02^2", "m01*m02 - m00*m12"],
        ["m01*m12 - m11*m02", "m01*m02 - m00*m12", "m00*m11 - m01^2"],
    ];
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(adj[i][j], Poly::parse(printed[i][j], &ring).unwrap());
        }
    }
    let hu = conic_adjoint(&entries).unwrap();
    assert_eq!(hu.hdeg, 2);
    assert_eq!(hu.form.params().len(), 6);
}

#[test]
fn diagonal_conic_adjoint() {
    let ring = Ring::new(["a", "b", "c"]);
    let v = |s: &str| Poly::var(&ring, s).unwrap();
    let z = Poly::zero(&ring);
    let entries = vec![
        vec![v("a"), z.clone(), z.clone()],
        vec![z.clone(), v("b"), z.clone()],
        vec![z.clone(), z, v("c")],
    ];
    let hu = conic_adjoint(&entries).unwrap();
    let gr = Grassmannian::new(1, 2).unwrap();
    let target = gr.ring_with_params(Flavor::Primal, ring.names());
    let expected = Poly::parse("b*c*p_0^2 + a*c*p_1^2 + a*b*p_2^2", &target).unwrap();
    assert_eq!(hu.form.poly(), &expected);
}

#[test]
fn conic_adjoint_matches_quadric_under_identification() {
    let mut rng = Generic::new(11);
    for _ in 0..5 {
        let a = random_symmetric(&mut rng, 3);
        if rank(&a) < 2 {
            continue;
        }
        let adj = conic_adjoint_rational(&a).unwrap();
        let quad = hurwitz_quadric(&a).unwrap();
        let gr = Grassmannian::new(1, 2).unwrap();
        let dual = gr.ring(Flavor::Dual);
        let images = ["q_1_2", "-q_0_2", "q_0_1"]
            .map(|s| Poly::parse(s, &dual).unwrap());
        let substituted = adj.form.poly().substitute_images(&images, &dual);
        assert!(substituted.equals_up_to_scalar(quad.form.poly()));
        assert!(equal_up_to_scalar(&adj.form, &quad.form).unwrap());
    }
}

#[test]
fn hypersurface_matches_quadric() {
    let ring = Ring::indexed("x", 4);
    let f = Poly::parse("x0*x3 - x1*x2", &ring).unwrap();
    let hu = hurwitz_hypersurface(&f, &HypersurfaceOptions::default()).unwrap();
    let quad = hurwitz_quadric(&quadric_matrix(&f).unwrap()).unwrap();
    assert_eq!(hu.hdeg, 2);
    assert!(equal_up_to_scalar(&hu.form, &quad.form).unwrap());
}

#[test]
fn symbolic_conic_discriminant_matches_adjoint() {
    let (params, entries) = symbolic_conic();
    let ring = Ring::indexed("x", 3).union(&params);
    let mut f = Poly::zero(&ring);
    for i in 0..3 {
        for j in 0..3 {
            let xi = Poly::var_at(&ring, i);
            let xj = Poly::var_at(&ring, j);
            f = &f + &(&entries[i][j].embed(&ring).unwrap() * &(&xi * &xj));
        }
    }
    let opts = HypersurfaceOptions::with_params(params.names().iter().cloned());
    let hu = hurwitz_hypersurface(&f, &opts).unwrap();
    let adj = conic_adjoint(&entries).unwrap();
    assert!(equal_up_to_scalar(&hu.form, &adj.form).unwrap());
}

#[test]
fn fermat_cubic_dual_curve() {
    let ring = Ring::indexed("x", 3);
    let f = Poly::parse("x0^3 + x1^3 + x2^3", &ring).unwrap();
    let hu = hurwitz_hypersurface(&f, &HypersurfaceOptions::default()).unwrap();
    assert_eq!(hu.hdeg, 6);
    let primal = dualize(&hu.form);
    // Tangent line at (1:-1:0) is x0 + x1 = 0.
    assert!(primal.evaluate(&[int(1), int(1), int(0)]).unwrap().is_zero());
    assert!(!primal.evaluate(&[int(1), int(2), int(5)]).unwrap().is_zero());
}

#[test]
fn smooth_plane_curves_have_degree_p_times_p_minus_one() {
    let ring = Ring::indexed("x", 3);
    let f = Poly::parse("x0^3 + 2*x1^3 - x2^3 + x0*x1*x2 - 3*x0^2*x2", &ring).unwrap();
    let hu = hurwitz_hypersurface(&f, &HypersurfaceOptions::default()).unwrap();
    assert_eq!(hu.hdeg, 6);
}

#[test]
fn singular_curve_uses_squarefree_part() {
    let ring = Ring::indexed("x", 3);
    let nodal = Poly::parse("x1^2*x2 - x0^2*x2 - x0^3", &ring).unwrap();
    assert!(!is_smooth_hypersurface(&nodal, &HypersurfaceOptions::default()).unwrap());
    let hu = hurwitz_hypersurface(&nodal, &HypersurfaceOptions::default()).unwrap();
    // Dual curve of degree 4 times the pencil of lines through the node.
    assert_eq!(hu.hdeg, 5);
}

#[test]
fn elimination_on_plane_conic() {
    let ring = Ring::indexed("x", 3);
    let f = Poly::parse("x0^2 + 2*x1^2 - 3*x2^2 + x0*x1", &ring).unwrap();
    let x = Variety::new(Ideal::new(&ring, [f.clone()]).unwrap(), 1).unwrap();
    let hu = hurwitz_elimination(&x).unwrap();
    let adj = conic_adjoint_rational(&quadric_matrix(&f).unwrap()).unwrap();
    assert_eq!(hu.provenance, Provenance::Elimination);
    assert!(equal_up_to_scalar(&hu.form, &adj.form).unwrap());
}

#[test]
fn elimination_on_quadric_surface() {
    let ring = Ring::indexed("x", 4);
    let f = Poly::parse("x0*x3 - x1*x2", &ring).unwrap();
    let x = Variety::new(Ideal::new(&ring, [f.clone()]).unwrap(), 2).unwrap();
    let hu = hurwitz_elimination(&x).unwrap();
    let quad = hurwitz_quadric(&quadric_matrix(&f).unwrap()).unwrap();
    assert!(equal_up_to_scalar(&hu.form, &quad.form).unwrap());
}

#[test]
fn elimination_on_twisted_cubic_is_cubic_discriminant() {
    let hu = hurwitz_elimination(&twisted_cubic()).unwrap();
    assert_eq!(hu.hdeg, 4);
    let ring = Ring::new(["p_0", "p_1", "p_2", "p_3", "s"]);
    let cubic = Poly::parse("p_0*s^3 + p_1*s^2 + p_2*s + p_3", &ring).unwrap();
    let disc = discriminant(&cubic, "s").unwrap();
    let gr = Grassmannian::new(1, 3).unwrap();
    let disc = PlueckerPoly::from_named(gr, Flavor::Primal, &disc.restrict_to_used()).unwrap();
    assert!(equal_up_to_scalar(&hu.form, &disc).unwrap());
}

#[test]
fn katz_line_and_two_lines() {
    let ring = Ring::indexed("x", 3);
    let f = Poly::parse("x0", &ring).unwrap();
    let g = Poly::parse("x1*x2", &ring).unwrap();
    let pts = intersection_points(&f, &g).unwrap();
    assert_eq!(pts, vec![vec![int(0), int(0), int(1)], vec![int(0), int(1), int(0)]]);
    let rhs = katz_rhs(&f, &g, 2, None).unwrap();
    assert_eq!(rhs, primal_form(1, 2, "p_1*p_2"));
    assert!(katz_limit_check(&f, &g, 2).unwrap());
    assert!(katz_limit_check(&f, &g, 1).unwrap());
}

#[test]
fn katz_line_and_random_conic() {
    let ring = Ring::indexed("x", 3);
    let f = Poly::parse("x0", &ring).unwrap();
    // Meets x0 = 0 in (0:1:2) and (0:3:-1).
    let g = Poly::parse("(2*x1 - x2)*(x1 + 3*x2) + x0*(5*x0 - 7*x1 + 4*x2)", &ring).unwrap();
    assert_eq!(intersection_points(&f, &g).unwrap().len(), 2);
    assert!(katz_limit_check(&f, &g, 2).unwrap());
}

#[test]
fn katz_degree_bookkeeping_for_conic_and_quartic() {
    let ring = Ring::indexed("x", 3);
    // Conic parametrized by (s^2 : t^2 : s t); g is four chords through rational points.
    let f = Poly::parse("x0*x1 - x2^2", &ring).unwrap();
    let point = |s: i64, t: i64| [s * s, t * t, s * t];
    let chord = |a: [i64; 3], b: [i64; 3]| {
        let c = [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ];
        (0..3).fold(Poly::zero(&ring), |acc, i| {
            &acc + &Poly::var_at(&ring, i).scale(&int(c[i]))
        })
    };
    let pairs = [((1, 0), (0, 1)), ((1, 1), (1, -1)), ((1, 2), (2, 1)), ((1, 3), (3, -1))];
    let g = pairs.iter().fold(Poly::one(&ring), |acc, &((a, b), (c, d))| {
        &acc * &chord(point(a, b), point(c, d))
    });
    let rhs = katz_rhs(&f, &g, 2, None).unwrap();
    assert_eq!(rhs.pluecker_degree(), Some(12));
    let (r, q) = (2u32, 2u32);
    let p = q * r;
    assert_eq!(r * (r - 1) * q + q * r * r * (q - 1), p * (p - 1));
}

#[test]
fn irrational_intersection_is_reported() {
    let ring = Ring::indexed("x", 3);
    let f = Poly::parse("x0", &ring).unwrap();
    let g = Poly::parse("x1^2 - 2*x2^2", &ring).unwrap();
    assert!(matches!(
        katz_rhs(&f, &g, 2, None),
        Err(Error::NonRationalIntersection(_))
    ));
    let pts: Vec<Vec<Rational>> = vec![vec![int(0), int(1), rat(1, 2)], vec![int(0), int(1), rat(-1, 2)]];
    assert!(katz_rhs(&f, &g, 2, Some(&pts)).is_ok());
}

fn katz_pair(ring: &Ring, r: u32, q: u32) -> (Poly, Poly) {
    let lin = |s: String| Poly::parse(&s, ring).unwrap();
    if r == 1 {
        let f = lin("x0".into());
        let g = (1..=q as i64).fold(Poly::one(ring), |acc, k| &acc * &lin(format!("x1 - {k}*x2")));
        (f.clone(), &g + &f.pow(q).scale(&int(3)))
    } else {
        // The conic (s^2 : t^2 : s t) meets x0 = k^2 x1 in two rational points.
        let f = lin("x0*x1 - x2^2".into());
        let g = (1..=(r * q) as i64).fold(Poly::one(ring), |acc, k| {
            &acc * &lin(format!("x0 - {}*x1", k * k))
        });
        (f, g)
    }
}

#[test]
fn katz_limits_for_small_families() {
    let ring = Ring::indexed("x", 3);
    for (r, q) in [(1, 3), (1, 4), (2, 2)] {
        let (f, g) = katz_pair(&ring, r, q);
        assert!(katz_limit_check(&f, &g, q).unwrap(), "r = {r}, q = {q}");
        let p = r * q;
        assert_eq!(katz_rhs(&f, &g, q, None).unwrap().pluecker_degree(), Some(p * (p - 1)));
    }
}
