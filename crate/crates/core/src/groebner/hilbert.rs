use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::{buchberger_with, Budget, Ideal, MonomialOrder};
use crate::error::{Error, Result};
use crate::poly::{int, Monomial, Poly, Rational, Ring};

/// Hilbert polynomial `h(m)` of a projective scheme with its invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub hilbert_polynomial: Poly,
    /// Projective dimension; `-1` for the empty scheme.
    pub dimension: i64,
    pub degree: i64,
    /// Sectional genus, defined when the dimension is at least one.
    pub sectional_genus: Option<i64>,
}

impl HilbertData {
    /// Builds the data from a Hilbert polynomial in the single variable `m`.
    pub fn from_polynomial(h: Poly) -> Result<HilbertData> {
        if h.ring().len() != 1 {
            return Err(Error::Validation(
                "Hilbert polynomial must be univariate".into(),
            ));
        }
        if h.is_zero() {
            return Ok(HilbertData {
                hilbert_polynomial: h,
                dimension: -1,
                degree: 0,
                sectional_genus: None,
            });
        }
        let d = h.degree_in(0) as i64;
        let lead = h.lead_coeff_in(0).constant_term();
        let p = lead * factorial(d as u32);
        let degree = to_i64(&p)?;
        let sectional_genus = if d >= 1 {
            Some(sectional_invariants(&h, d)?.1)
        } else {
            None
        };
        Ok(HilbertData {
            hilbert_polynomial: h,
            dimension: d,
            degree,
            sectional_genus,
        })
    }
}

fn factorial(k: u32) -> Rational {
    (1..=k as i64).fold(int(1), |acc, i| acc * int(i))
}

fn to_i64(q: &Rational) -> Result<i64> {
    if !q.is_integer() {
        return Err(Error::DegreeMismatch(format!("non-integral invariant {q}")));
    }
    q.to_integer()
        .to_i64()
        .ok_or_else(|| Error::DegreeMismatch(format!("invariant {q} out of range")))
}

/// `binom(m + shift, k)` as a polynomial in `m`.
pub fn binomial_poly(ring: &Ring, shift: i64, k: u32) -> Poly {
    let m = Poly::var_at(ring, 0);
    let mut acc = Poly::one(ring);
    for j in 0..k as i64 {
        acc = &acc * &(&m + &Poly::constant(ring, int(shift - j)));
    }
    acc.scale(&factorial(k).recip())
}

/// `Δh(m) = h(m) - h(m-1)`.
pub fn finite_difference(h: &Poly) -> Poly {
    let ring = h.ring();
    let shifted = &Poly::var_at(ring, 0) - &Poly::one(ring);
    h - &h.substitute_images(&[shifted], ring)
}

/// Applies `Δ` exactly `d - 1` times to reach `p·m + (1 - g)`; returns `(p, g)`.
pub fn sectional_invariants(h: &Poly, d: i64) -> Result<(i64, i64)> {
    let deg = if h.is_zero() { -1 } else { h.degree_in(0) as i64 };
    if d < 1 || deg != d {
        return Err(Error::DegreeMismatch(format!(
            "polynomial of degree {deg} given with dimension {d}"
        )));
    }
    let mut cur = h.clone();
    for _ in 0..d - 1 {
        cur = finite_difference(&cur);
    }
    let coeffs = cur.coeffs_in(0);
    let p = coeffs.get(&1).map(Poly::constant_term).unwrap_or_default();
    let b = coeffs.get(&0).map(Poly::constant_term).unwrap_or_default();
    Ok((to_i64(&p)?, to_i64(&(int(1) - b))?))
}

/// Twice the absolute value of `Δ^{d-1} h` at `m = -1`; equals `2p + 2g - 2`
/// for Cohen–Macaulay varieties.
pub fn hdeg_from_hilbert(data: &HilbertData) -> Result<i64> {
    if data.degree < 2 {
        return Err(Error::DegreeTooSmall(format!("degree {}", data.degree)));
    }
    if data.dimension < 1 {
        return Err(Error::DegreeMismatch("dimension must be positive".into()));
    }
    let mut cur = data.hilbert_polynomial.clone();
    for _ in 0..data.dimension - 1 {
        cur = finite_difference(&cur);
    }
    let v = cur.evaluate(&[int(-1)]);
    Ok(2 * to_i64(&v.abs())?)
}

pub fn hilbert_polynomial(ideal: &Ideal) -> Result<HilbertData> {
    hilbert_polynomial_with(ideal, &Budget::default())
}

pub fn hilbert_polynomial_with(ideal: &Ideal, budget: &Budget) -> Result<HilbertData> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let leads = if ideal.is_zero() {
        Vec::new()
    } else {
        buchberger_with(ideal, &MonomialOrder::Grevlex, budget)?.leading_monomials()
    };
    hilbert_from_monomials(&leads, ideal.ring().len())
}

/// Hilbert data of `K[x_0..x_{n-1}] / <monomials>`.
pub fn hilbert_from_monomials(monomials: &[Monomial], nvars: usize) -> Result<HilbertData> {
    let gens: Vec<Vec<u32>> = monomials.iter().map(|m| m.exps().to_vec()).collect();
    let mut num = numerator(gens);
    let mut dim = nvars as i64;
    if num.iter().all(|&c| c == 0) {
        dim = 0;
    }
    while dim > 0 && num.iter().sum::<i128>() == 0 {
        let mut q = Vec::with_capacity(num.len());
        let mut acc = 0i128;
        for &c in &num[..num.len() - 1] {
            acc += c;
            q.push(acc);
        }
        num = q;
        dim -= 1;
    }
    let ring = Ring::new(["m"]);
    let mut h = Poly::zero(&ring);
    if dim > 0 {
        for (i, &c) in num.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let b = binomial_poly(&ring, dim - 1 - i as i64, (dim - 1) as u32);
            h = &h + &b.scale(&Rational::from_integer(BigInt::from(c)));
        }
    }
    HilbertData::from_polynomial(h)
}

fn minimize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let divides = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x <= y);
    gens.sort_by_key(|g| g.iter().sum::<u32>());
    gens.dedup();
    let mut out: Vec<Vec<u32>> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    out
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    out
}

/// Numerator of the Hilbert series `N(t) / (1-t)^n` by pivoting on variable powers.
fn numerator(gens: Vec<Vec<u32>>) -> Vec<i128> {
    let gens = minimize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return vec![0];
    }
    let nv = gens[0].len();
    let counts: Vec<usize> = (0..nv)
        .map(|i| gens.iter().filter(|g| g[i] > 0).count())
        .collect();
    let (var, &most) = counts.iter().enumerate().max_by_key(|(i, c)| (**c, nv - i)).unwrap();
    if most <= 1 {
        let mut acc = vec![1i128];
        for g in &gens {
            let d = g.iter().sum::<u32>() as usize;
            let mut f = vec![0i128; d + 1];
            f[0] = 1;
            f[d] -= 1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    let e = gens
        .iter()
        .filter(|g| g[var] > 0)
        .map(|g| g[var])
        .min()
        .unwrap();
    let mut pivot = vec![0u32; nv];
    pivot[var] = e;
    let mut plus = gens.clone();
    plus.push(pivot);
    let colon: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[var] = h[var].saturating_sub(e);
            h
        })
        .collect();
    let mut shifted = vec![0i128; e as usize];
    shifted.extend(numerator(colon));
    poly_add(&numerator(plus), &shifted)
}
