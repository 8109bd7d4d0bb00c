use super::{Poly, Ring};
use crate::error::{Error, Result};

/// Sylvester matrix of `f` and `g` with respect to variable `var`; entries are
/// polynomials in the remaining variables (still over the full ring).
pub fn sylvester_matrix(f: &Poly, g: &Poly, var: usize) -> Result<Vec<Vec<Poly>>> {
    if f.ring() != g.ring() {
        return Err(Error::RingMismatch(format!("{:?} vs {:?}", f.ring(), g.ring())));
    }
    let m = f.degree_in(var) as usize;
    let n = g.degree_in(var) as usize;
    if f.is_zero() || g.is_zero() || m == 0 || n == 0 {
        return Err(Error::DegenerateInput(format!(
            "both polynomials need positive degree in `{}`",
            f.ring().name(var)
        )));
    }
    let ring = f.ring();
    let fc = f.coeffs_in(var);
    let gc = g.coeffs_in(var);
    let size = m + n;
    let zero = Poly::zero(ring);
    let mut rows = Vec::with_capacity(size);
    for k in 0..n {
        let mut row = vec![zero.clone(); size];
        for (&e, c) in &fc {
            row[k + m - e as usize] = c.clone();
        }
        rows.push(row);
    }
    for k in 0..m {
        let mut row = vec![zero.clone(); size];
        for (&e, c) in &gc {
            row[k + n - e as usize] = c.clone();
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Fraction-free (Bareiss) determinant of a square matrix of polynomials.
pub fn poly_determinant(matrix: &[Vec<Poly>], ring: &Ring) -> Poly {
    let n = matrix.len();
    if n == 0 {
        return Poly::one(ring);
    }
    let mut a: Vec<Vec<Poly>> = matrix.to_vec();
    let mut prev = Poly::one(ring);
    let mut negate = false;
    for k in 0..n {
        let pivot = (k..n)
            .filter(|&r| !a[r][k].is_zero())
            .min_by_key(|&r| a[r][k].num_terms());
        let Some(r) = pivot else {
            return Poly::zero(ring);
        };
        if r != k {
            a.swap(r, k);
            negate = !negate;
        }
        if k + 1 == n {
            break;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let t = &(&row[j] * &pivot_row[k]) - &(&lead * &pivot_row[j]);
                row[j] = if prev.is_one() {
                    t
                } else {
                    t.exact_divide(&prev).expect("Bareiss step divides exactly")
                };
            }
            row[k] = Poly::zero(ring);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `Res_var(f, g)`, the determinant of the Sylvester matrix.
pub fn resultant(f: &Poly, g: &Poly, var: &str) -> Result<Poly> {
    let i = f.ring().require(var)?;
    let s = sylvester_matrix(f, g, i)?;
    Ok(poly_determinant(&s, f.ring()))
}

/// Discriminant in `var`, normalized so that `a t^2 + b t + c` gives `b^2 - 4ac`.
pub fn discriminant(f: &Poly, var: &str) -> Result<Poly> {
    let i = f.ring().require(var)?;
    let n = f.degree_in(i);
    if n < 2 {
        return Err(Error::DegenerateInput(format!(
            "degree {n} in `{var}` is below 2"
        )));
    }
    let res = resultant(f, &f.derivative(i), var)?;
    let lc = f.lead_coeff_in(i);
    let d = res.exact_divide(&lc)?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

/// Checks `Disc(f1 f2) = Disc(f1) Disc(f2) Res(f1, f2)^2` exactly.
pub fn discrim_product_identity(f1: &Poly, f2: &Poly, var: &str) -> Result<bool> {
    let i = f1.ring().require(var)?;
    if f1.degree_in(i) < 2 || f2.degree_in(i) < 2 {
        return Err(Error::DegenerateInput(format!(
            "both factors need degree at least 2 in `{var}`"
        )));
    }
    let lhs = discriminant(&f1.try_mul(f2)?, var)?;
    let res = resultant(f1, f2, var)?;
    let rhs = &(&discriminant(f1, var)? * &discriminant(f2, var)?) * &res.pow(2);
    Ok(lhs == rhs)
}
