use super::{int, Monomial, Poly, Rational, Ring};
use crate::random::{Generic, DEFAULT_SEED};
use crate::error::{Error, Result};
use num_traits::One;

/// Greatest common divisor, normalized to primitive integer coefficients with
/// a positive leading coefficient. `gcd(f, 0)` is the primitive part of `f`.
pub fn gcd(f: &Poly, g: &Poly) -> Poly {
    assert_eq!(f.ring(), g.ring(), "ring mismatch in gcd");
    let raw = gcd_raw(f, g);
    raw.primitive()
}

fn gcd_raw(f: &Poly, g: &Poly) -> Poly {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    let ring = f.ring();
    if f.is_constant() || g.is_constant() {
        return Poly::one(ring);
    }
    if f.num_terms() == 1 || g.num_terms() == 1 {
        let m = f.monomial_content().gcd(&g.monomial_content());
        return Poly::monomial(ring, m, Rational::one());
    }
    let mf = f.monomial_content();
    let mg = g.monomial_content();
    if !mf.is_one() || !mg.is_one() {
        let common = mf.gcd(&mg);
        let f1 = f.exact_divide(&Poly::monomial(ring, mf, Rational::one())).unwrap();
        let g1 = g.exact_divide(&Poly::monomial(ring, mg, Rational::one())).unwrap();
        let rest = gcd_raw(&f1, &g1);
        return rest.mul_monomial(&common, &Rational::one());
    }
    for i in 0..ring.len() {
        match (f.involves(i), g.involves(i)) {
            (true, false) => return gcd_raw(&content_in(f, i), g),
            (false, true) => return gcd_raw(f, &content_in(g, i)),
            _ => {}
        }
    }
    if f.exact_divide(g).is_ok() {
        return g.clone();
    }
    if g.exact_divide(f).is_ok() {
        return f.clone();
    }
    let shared = f.used_vars();
    let x = *shared
        .iter()
        .min_by_key(|&&i| (f.degree_in(i).max(g.degree_in(i)), i))
        .unwrap();
    let cf = content_in(f, x);
    let cg = content_in(g, x);
    let c = gcd_raw(&cf, &cg);
    let pf = f.exact_divide(&cf).expect("content divides");
    let pg = g.exact_divide(&cg).expect("content divides");
    let (mut r0, mut r1) = if pf.degree_in(x) >= pg.degree_in(x) {
        (pf, pg)
    } else {
        (pg, pf)
    };
    loop {
        let r = pseudo_remainder(&r0, &r1, x);
        if r.is_zero() {
            break;
        }
        if r.degree_in(x) == 0 {
            return c;
        }
        r0 = r1;
        r1 = primitive_in(&r, x);
    }
    &c * &primitive_in(&r1, x)
}

/// Gcd of the coefficients of `f` viewed as a polynomial in variable `x`.
fn content_in(f: &Poly, x: usize) -> Poly {
    let mut coeffs: Vec<Poly> = f.coeffs_in(x).into_values().collect();
    coeffs.sort_by_key(Poly::num_terms);
    let mut acc = coeffs[0].clone();
    for c in &coeffs[1..] {
        if acc.is_constant() {
            break;
        }
        acc = gcd_raw(&acc, c);
    }
    if acc.is_constant() {
        Poly::one(f.ring())
    } else {
        acc.primitive()
    }
}

fn primitive_in(f: &Poly, x: usize) -> Poly {
    let c = content_in(f, x);
    f.exact_divide(&c).expect("content divides").primitive()
}

/// `lc(b)^k * a mod b` in variable `x` for a suitable `k`, with integer-content
/// stripping to curb coefficient growth.
fn pseudo_remainder(a: &Poly, b: &Poly, x: usize) -> Poly {
    let db = b.degree_in(x);
    let lb = b.lead_coeff_in(x);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(x) >= db {
        let dr = r.degree_in(x);
        let lr = r.lead_coeff_in(x);
        let mut shift = vec![0; r.ring().len()];
        shift[x] = dr - db;
        let s = lr.mul_monomial(&Monomial::new(shift), &Rational::one());
        r = &(&lb * &r) - &(&s * b);
        r = r.primitive();
    }
    r
}

/// Product of the distinct irreducible factors of `f`, normalized.
pub fn squarefree_part(f: &Poly) -> Result<Poly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(Poly::one(f.ring()));
    }
    if restriction_is_squarefree(f) {
        return Ok(f.primitive());
    }
    let mut g = f.clone();
    for i in f.used_vars() {
        g = gcd_raw(&g, &f.derivative(i));
        if g.is_constant() {
            return Ok(f.primitive());
        }
    }
    Ok(f.exact_divide(&g)?.primitive())
}

/// Restricts `f` to a pseudo-random affine line. If the restriction keeps the
/// full degree and is squarefree, so is `f`.
fn restriction_is_squarefree(f: &Poly) -> bool {
    let Some(deg) = f.total_degree() else {
        return false;
    };
    let line = Ring::new(["t"]);
    let t = Poly::var_at(&line, 0);
    let mut rng = Generic::new(DEFAULT_SEED);
    for _ in 0..2 {
        let images: Vec<Poly> = (0..f.ring().len())
            .map(|_| {
                let a = Poly::constant(&line, int(rng.int(50)));
                &a + &t.scale(&int(rng.nonzero_int(50)))
            })
            .collect();
        let h = f.substitute_images(&images, &line);
        if h.total_degree() == Some(deg) && gcd_raw(&h, &h.derivative(0)).is_constant() {
            return true;
        }
    }
    false
}
