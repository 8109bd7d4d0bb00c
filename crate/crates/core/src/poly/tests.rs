use std::collections::HashMap;

use super::*;

fn ring(names: &[&str]) -> Ring {
    Ring::new(names.iter().copied())
}

fn p(s: &str, r: &Ring) -> Poly {
    Poly::parse(s, r).unwrap()
}

#[test]
fn arithmetic_basics() {
    let r = ring(&["x", "y"]);
    assert_eq!(p("(x+y)*(x-y)", &r), p("x^2-y^2", &r));
    assert_eq!(p("x^2-y^2", &r).exact_divide(&p("x-y", &r)).unwrap(), p("x+y", &r));
    assert_eq!(
        p("x^2+1", &r).exact_divide(&p("x", &r)),
        Err(Error::InexactDivision)
    );
    let other = ring(&["x", "z"]);
    assert!(matches!(
        p("x", &r).try_add(&p("x", &other)),
        Err(Error::RingMismatch(_))
    ));
}

#[test]
fn display_and_parse_round_trip() {
    let r = ring(&["x0", "x1", "x2", "x3"]);
    let f = p("x0*x3 - 1/2*x1^2 + 3", &r);
    assert_eq!(f.to_string(), "-1/2*x1^2 + x0*x3 + 3");
    assert_eq!(Poly::parse(&f.to_string(), &r).unwrap(), f);
}

#[test]
fn content_and_primitive_conventions() {
    let r = ring(&["x", "y"]);
    let (s, g) = p("2/3*x + 4/3*y", &r).content_and_primitive().unwrap();
    assert_eq!(s, rat(2, 3));
    assert_eq!(g, p("x+2*y", &r));
    let (s, g) = p("-6*x^2", &r).content_and_primitive().unwrap();
    assert_eq!(s, int(-6));
    assert_eq!(g, p("x^2", &r));
    let r = ring(&["p0", "p1", "p2"]);
    let (s, g) = p("12*p0*p2 - p1^2", &r).content_and_primitive().unwrap();
    assert_eq!(s, int(-1));
    assert_eq!(g, p("p1^2 - 12*p0*p2", &r));
    assert_eq!(
        Poly::zero(&r).content_and_primitive(),
        Err(Error::ZeroPolynomial)
    );
}

#[test]
fn resultant_examples() {
    let r = ring(&["t", "a", "b", "c", "d", "p", "q"]);
    assert_eq!(resultant(&p("t^2-a", &r), &p("t-b", &r), "t").unwrap(), p("b^2-a", &r));
    assert_eq!(
        resultant(&p("a*t+b", &r), &p("c*t+d", &r), "t").unwrap(),
        p("a*d-b*c", &r)
    );
    assert_eq!(
        resultant(&p("t^3+p*t+q", &r), &p("3*t^2+p", &r), "t").unwrap(),
        p("4*p^3+27*q^2", &r)
    );
    assert!(matches!(
        resultant(&p("a", &r), &p("t", &r), "t"),
        Err(Error::DegenerateInput(_))
    ));
}

#[test]
fn discriminant_examples() {
    let r = ring(&["t", "a", "b", "c", "p", "q", "u", "v"]);
    assert_eq!(discriminant(&p("a*t^2+b*t+c", &r), "t").unwrap(), p("b^2-4*a*c", &r));
    assert_eq!(
        discriminant(&p("t^3+p*t+q", &r), "t").unwrap(),
        p("-4*p^3-27*q^2", &r)
    );
    assert_eq!(
        discriminant(&p("(t-u)*(t-v)", &r), "t").unwrap(),
        p("(u-v)^2", &r)
    );
    assert!(matches!(
        discriminant(&p("a*t+b", &r), "t"),
        Err(Error::DegenerateInput(_))
    ));
}

#[test]
fn discriminant_of_three_roots() {
    let r = ring(&["t", "u", "v", "w"]);
    let f = p("(t-u)*(t-v)*(t-w)", &r);
    assert_eq!(
        discriminant(&f, "t").unwrap(),
        p("((u-v)*(u-w)*(v-w))^2", &r)
    );
}

#[test]
fn product_identity_examples() {
    let r = ring(&["t", "a", "b", "c", "d", "e", "g", "u"]);
    assert!(discrim_product_identity(&p("t^2-1", &r), &p("t^2-4", &r), "t").unwrap());
    assert!(
        discrim_product_identity(&p("a*t^2+b*t+c", &r), &p("d*t^2+e*t+g", &r), "t").unwrap()
    );
    let f = p("t^2-u", &r);
    assert!(resultant(&f, &f, "t").unwrap().is_zero());
    assert!(discrim_product_identity(&f, &f, "t").unwrap());
}

#[test]
fn gcd_examples() {
    let r = ring(&["x", "y", "z", "w"]);
    assert_eq!(gcd(&p("x^2-y^2", &r), &p("x-y", &r)), p("x-y", &r));
    assert_eq!(gcd(&p("x^2", &r), &p("y^2", &r)), Poly::one(&r));
    let g = gcd(&p("(x+y)^2*z", &r), &p("(x+y)*w", &r));
    assert_eq!(g, p("x+y", &r));
    assert!(p("(x+y)^2*z", &r).exact_divide(&g).is_ok());
    assert_eq!(gcd(&p("6*x+4*y", &r), &Poly::zero(&r)), p("3*x+2*y", &r));
}

#[test]
fn squarefree_examples() {
    let r = ring(&["x", "y", "a", "b", "c"]);
    assert_eq!(
        squarefree_part(&p("(x-y)^2*(x+y)", &r)).unwrap(),
        p("(x-y)*(x+y)", &r)
    );
    assert_eq!(squarefree_part(&p("x^2*y^3", &r)).unwrap(), p("x*y", &r));
    assert_eq!(squarefree_part(&p("b^2-4*a*c", &r)).unwrap(), p("b^2-4*a*c", &r));
    assert_eq!(squarefree_part(&Poly::zero(&r)), Err(Error::ZeroPolynomial));
}

#[test]
fn substitution_examples() {
    let r = ring(&["x0", "x1", "x2", "x3"]);
    let mut names: Vec<String> = vec!["t".into()];
    for i in 0..4 {
        names.push(format!("u{i}"));
    }
    for i in 0..4 {
        names.push(format!("v{i}"));
    }
    let target = Ring::new(names);
    let f = p("x0*x3-x1*x2", &r);
    let bindings: HashMap<String, Poly> = (0..4)
        .map(|i| {
            (
                format!("x{i}"),
                p(&format!("u{i}+t*v{i}"), &target),
            )
        })
        .collect();
    let g = f.substitute(&bindings, &target).unwrap();
    let t = target.require("t").unwrap();
    let coeffs = g.coeffs_in(t);
    assert_eq!(coeffs.len(), 3);
    assert_eq!(coeffs[&0], p("u0*u3-u1*u2", &target));
    assert_eq!(coeffs[&1], p("u0*v3+v0*u3-u1*v2-v1*u2", &target));
    assert_eq!(coeffs[&2], p("v0*v3-v1*v2", &target));

    let xy = ring(&["x", "y"]);
    let h = p("x*y+y", &xy);
    assert_eq!(h.substitute(&HashMap::new(), &xy).unwrap(), h);
    let zero: HashMap<String, Poly> = [("x".to_string(), Poly::zero(&xy))].into();
    assert_eq!(h.substitute(&zero, &xy).unwrap(), p("y", &xy));
    let bad: HashMap<String, Poly> = [("z".to_string(), Poly::zero(&xy))].into();
    assert_eq!(
        h.substitute(&bad, &xy),
        Err(Error::UnknownVariable("z".into()))
    );
}

#[test]
fn rational_root_search() {
    let ring = Ring::new(["z"]);
    let f = Poly::parse("6*z^4 - 5*z^3 + z^2", &ring).unwrap();
    assert_eq!(rational_roots(&f).unwrap(), vec![int(0), rat(1, 3), rat(1, 2)]);
    let g = Poly::parse("z^2 - 2", &ring).unwrap();
    assert!(rational_roots(&g).unwrap().is_empty());
    let h = Poly::parse("(z + 4)^2*(7*z - 3)", &ring).unwrap();
    assert_eq!(rational_roots(&h).unwrap(), vec![int(-4), rat(3, 7)]);
}
