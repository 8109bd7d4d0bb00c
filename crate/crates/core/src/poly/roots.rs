use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{Poly, Rational};
use crate::error::{Error, Result};

const MAX_ROOT_SEARCH: u64 = 100_000_000_000_000;

/// Distinct rational roots of a polynomial in at most one variable, sorted.
pub fn rational_roots(f: &Poly) -> Result<Vec<Rational>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let used = f.used_vars();
    if used.len() > 1 {
        return Err(Error::Validation(format!("{f} is not univariate")));
    }
    let Some(&var) = used.first() else {
        return Ok(Vec::new());
    };
    let p = f.primitive();
    let deg = p.degree_in(var) as usize;
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    for (k, c) in p.coeffs_in(var) {
        coeffs[k as usize] = c.constant_term().to_integer();
    }
    let mut roots = Vec::new();
    let shift = coeffs.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        roots.push(Rational::zero());
        coeffs.drain(..shift);
    }
    if coeffs.len() > 1 {
        let nums = divisors(&coeffs[0])?;
        let dens = divisors(&coeffs[coeffs.len() - 1])?;
        for a in &nums {
            for b in &dens {
                if a.gcd(b) != 1u64 {
                    continue;
                }
                for sign in [1i64, -1] {
                    let x = Rational::new(BigInt::from(*a) * sign, BigInt::from(*b));
                    if horner(&coeffs, &x).is_zero() {
                        roots.push(x);
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

fn horner(coeffs: &[BigInt], x: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
}

fn divisors(n: &BigInt) -> Result<Vec<u64>> {
    let n = n
        .abs()
        .to_u64()
        .filter(|&v| v <= MAX_ROOT_SEARCH)
        .ok_or_else(|| Error::ResourceLimit(format!("rational root search on coefficient {n}")))?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}
