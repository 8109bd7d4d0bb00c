use super::*;
use crate::poly::int;

fn ring(names: &[&str]) -> Ring {
    Ring::new(names.iter().copied())
}

fn p(s: &str, r: &Ring) -> Poly {
    Poly::parse(s, r).unwrap()
}

fn twisted_cubic() -> Ideal {
    let r = Ring::indexed("x", 4);
    Ideal::parse(&r, &["x0*x2-x1^2", "x0*x3-x1*x2", "x1*x3-x2^2"]).unwrap()
}

#[test]
fn lex_basis_eliminates_to_cusp_relation() {
    let r = ring(&["x", "y", "z"]);
    let i = Ideal::parse(&r, &["x^2-y", "x^3-z"]).unwrap();
    let gb = buchberger(&i, &MonomialOrder::Lex).unwrap();
    assert!(gb.basis().contains(&p("y^3-z^2", &r)));
}

#[test]
fn trivial_bases() {
    let r = ring(&["x", "y"]);
    let i = Ideal::parse(&r, &["x", "y"]).unwrap();
    for order in [MonomialOrder::Lex, MonomialOrder::Grevlex] {
        let gb = buchberger(&i, &order).unwrap();
        assert_eq!(gb.basis().len(), 2);
        assert!(gb.basis().contains(&p("x", &r)) && gb.basis().contains(&p("y", &r)));
    }
    let f = Ideal::parse(&r, &["6*x^2-4*y"]).unwrap();
    let gb = buchberger(&f, &MonomialOrder::Grevlex).unwrap();
    assert_eq!(gb.basis(), &[p("3*x^2-2*y", &r)]);
}

#[test]
fn normal_form_examples() {
    let r = ring(&["x", "y"]);
    let i = Ideal::parse(&r, &["x^2-y"]).unwrap();
    let gb = buchberger(&i, &MonomialOrder::Lex).unwrap();
    assert_eq!(normal_form(&p("x^3", &r), &gb).unwrap(), p("x*y", &r));
    assert_eq!(normal_form(&p("x^2-y", &r), &gb).unwrap(), Poly::zero(&r));
    assert_eq!(normal_form(&Poly::one(&r), &gb).unwrap(), Poly::one(&r));
    assert_eq!(normal_form(&p("3/2*x^4", &r), &gb).unwrap(), p("3/2*y^2", &r));
}

#[test]
fn elimination_examples() {
    let r = ring(&["t", "x", "y"]);
    let i = Ideal::parse(&r, &["x-t^2", "y-t^3"]).unwrap();
    let e = eliminate(&i, &["t".to_string()]).unwrap();
    assert_eq!(e.gens().len(), 1);
    let kept = ring(&["x", "y"]);
    assert!(e.gens()[0].equals_up_to_scalar(&p("y^2-x^3", &kept)));

    let i = Ideal::parse(&r, &["t*x-1", "t*y"]).unwrap();
    let e = eliminate(&i, &["t".to_string()]).unwrap();
    assert_eq!(e.gens(), &[p("y", &kept)]);

    let same = eliminate(&twisted_cubic(), &[]).unwrap();
    assert_eq!(same.gens().len(), 3);
}

#[test]
fn initial_ideal_examples() {
    let r = Ring::indexed("x", 4);
    let i = Ideal::parse(&r, &["x0*x3-x1*x2"]).unwrap();
    let init = initial_ideal(&i, &[0, 1, 1, 0]).unwrap();
    assert_eq!(init.ideal.gens(), &[p("x1*x2", &r)]);
    assert!(init.is_monomial && init.is_squarefree);
    let init = initial_ideal(&i, &[0, 0, 0, 0]).unwrap();
    assert!(init.ideal.gens()[0].equals_up_to_scalar(&p("x0*x3-x1*x2", &r)));
    assert!(!init.is_monomial);
}

#[test]
fn hilbert_examples() {
    let h = hilbert_polynomial(&twisted_cubic()).unwrap();
    let m = ring(&["m"]);
    assert_eq!(h.hilbert_polynomial, p("3*m+1", &m));
    assert_eq!((h.dimension, h.degree, h.sectional_genus), (1, 3, Some(0)));
    assert_eq!(hdeg_from_hilbert(&h).unwrap(), 4);

    let r = Ring::indexed("x", 4);
    let q = Ideal::parse(&r, &["x0*x3-x1*x2"]).unwrap();
    let h = hilbert_polynomial(&q).unwrap();
    assert_eq!(h.hilbert_polynomial, p("(m+1)^2", &m));
    assert_eq!((h.dimension, h.degree, h.sectional_genus), (2, 2, Some(0)));

    let zero = Ideal::new(&r, []).unwrap();
    let h = hilbert_polynomial(&zero).unwrap();
    assert_eq!(h.hilbert_polynomial, binomial_poly(&m, 3, 3));

    let bad = Ideal::parse(&r, &["x0-1"]).unwrap();
    assert_eq!(hilbert_polynomial(&bad), Err(Error::NotHomogeneous));
}

#[test]
fn sectional_examples() {
    let m = ring(&["m"]);
    let h = &(&binomial_poly(&m, 3, 3).scale(&int(6)) - &binomial_poly(&m, 4, 4).scale(&int(15)))
        + &binomial_poly(&m, 5, 5).scale(&int(10));
    assert_eq!(sectional_invariants(&h, 5).unwrap(), (10, 6));
    let data = HilbertData::from_polynomial(h).unwrap();
    assert_eq!(hdeg_from_hilbert(&data).unwrap(), 30);
    assert_eq!(sectional_invariants(&p("(m+1)^2", &m), 2).unwrap(), (2, 0));
    assert_eq!(sectional_invariants(&p("m+1", &m), 1).unwrap(), (1, 0));
    assert!(matches!(
        sectional_invariants(&p("m+1", &m), 2),
        Err(Error::DegreeMismatch(_))
    ));
}

#[test]
fn pair_budget_aborts_cleanly() {
    let r = Ring::indexed("x", 4);
    let i = Ideal::parse(&r, &["x0^3-x1*x2*x3", "x1^3-x0*x2^2", "x2^3+x3^3-x0*x1*x2"]).unwrap();
    let err = buchberger_with(&i, &MonomialOrder::Lex, &Budget::pairs(2)).unwrap_err();
    assert!(matches!(err, Error::ResourceLimit(_)));
}

fn maximal_minors_3x4() -> Ideal {
    let r = Ring::indexed("x", 12);
    let x = |row: usize, col: usize| Poly::var_at(&r, 4 * row + col);
    let minor = |c: [usize; 3]| {
        let m: Vec<Vec<Poly>> = (0..3)
            .map(|row| c.iter().map(|&col| x(row, col)).collect())
            .collect();
        crate::poly::poly_determinant(&m, &r)
    };
    Ideal::new(
        &r,
        [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]].map(minor),
    )
    .unwrap()
}

#[test]
fn determinantal_initial_ideal_from_weight() {
    let i = maximal_minors_3x4();
    let w: Vec<i64> = (0..12).map(|k| -((k / 4) * (k % 4)) as i64).collect();
    let init = initial_ideal(&i, &w).unwrap();
    let r = i.ring();
    let mut expected = vec![
        p("x2*x5*x8", r),
        p("x3*x5*x8", r),
        p("x3*x6*x8", r),
        p("x3*x6*x9", r),
    ];
    let mut got: Vec<Poly> = init.ideal.gens().iter().map(Poly::primitive).collect();
    expected.sort_by(|a, b| a.lead().cmp(&b.lead()));
    got.sort_by(|a, b| a.lead().cmp(&b.lead()));
    assert!(init.is_squarefree);
    assert_eq!(got, expected);
}

#[test]
fn determinantal_hilbert_data() {
    let h = hilbert_polynomial(&maximal_minors_3x4()).unwrap();
    assert_eq!((h.dimension, h.degree, h.sectional_genus), (9, 6, Some(3)));
    assert_eq!(hdeg_from_hilbert(&h).unwrap(), 16);
}
