//! Reciprocal linear spaces: matroid circuits, broken circuit complexes,
//! generic degree formulas and the entropic discriminant.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cycles::SimplicialComplex;
use crate::error::{Error, Result};
use crate::grassmann::{dualize, Flavor, Grassmannian, PlueckerPoly};
use crate::groebner::Ideal;
use crate::linalg::{binomial, kernel, rank, subsets, Matrix};
use crate::poly::{poly_determinant, Monomial, Poly, Rational, Ring};

/// Full-rank `(d+1) × (n+1)` rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixA {
    rows: Matrix,
}

impl MatrixA {
    pub fn new(rows: Matrix) -> Result<MatrixA> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 || rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged or empty matrix".into()));
        }
        if rank(&rows) != rows.len() {
            return Err(Error::RankDeficient);
        }
        Ok(MatrixA { rows })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<MatrixA> {
        MatrixA::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> &Matrix {
        &self.rows
    }

    /// `d`, one less than the number of rows.
    pub fn d(&self) -> usize {
        self.rows.len() - 1
    }

    /// `n`, one less than the number of columns.
    pub fn n(&self) -> usize {
        self.rows[0].len() - 1
    }

    fn columns(&self, cols: &[usize]) -> Matrix {
        self.rows
            .iter()
            .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
            .collect()
    }
}

/// Minimal linearly dependent set of columns with its dependency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    pub support: Vec<usize>,
    /// Primitive integer coefficients, first entry positive.
    pub coefficients: Vec<BigInt>,
}

/// All circuits of the column matroid, ordered by size then support.
pub fn circuits(a: &MatrixA) -> Vec<Circuit> {
    let n = a.n();
    let mut out = Vec::new();
    for size in 1..=(a.d() + 2).min(n + 1) {
        for s in subsets(n + 1, size) {
            let sub = a.columns(&s);
            if rank(&sub) != size - 1 {
                continue;
            }
            let ker = kernel(&sub, size);
            let v = &ker[0];
            if v.iter().any(Zero::is_zero) {
                continue;
            }
            out.push(Circuit {
                support: s,
                coefficients: primitive_integer(v),
            });
        }
    }
    out
}

fn primitive_integer(v: &[Rational]) -> Vec<BigInt> {
    let den = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|q| (q * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

fn check_loops(cs: &[Circuit]) -> Result<()> {
    match cs.iter().find(|c| c.support.len() == 1) {
        Some(c) => Err(Error::LoopPresent(c.support[0])),
        None => Ok(()),
    }
}

/// Ideal of the reciprocal of the row space: one generator
/// `Σ_i λ_i ∏_{j ≠ i} x_j` per circuit.
pub fn reciprocal_ideal(a: &MatrixA) -> Result<Ideal> {
    let cs = circuits(a);
    check_loops(&cs)?;
    let ring = Ring::indexed("x", a.n() + 1);
    let gens = cs.iter().map(|c| {
        let mut g = Poly::zero(&ring);
        for (k, (&i, lam)) in c.support.iter().zip(&c.coefficients).enumerate() {
            let mut e = vec![0u32; ring.len()];
            for (l, &j) in c.support.iter().enumerate() {
                if l != k {
                    e[j] = 1;
                }
            }
            debug_assert_eq!(e[i], 0);
            g.add_term(Monomial::new(e), Rational::from_integer(lam.clone()));
        }
        g
    });
    Ideal::new(&ring, gens.collect::<Vec<_>>())
}

/// Facets of the broken circuit complex: bases avoiding every circuit minus
/// its first element under `ordering` (a permutation listing `0..=n` from
/// smallest to largest).
pub fn broken_circuit_complex(
    a: &MatrixA,
    cs: &[Circuit],
    ordering: &[usize],
) -> Result<SimplicialComplex> {
    let n = a.n();
    let mut position = vec![usize::MAX; n + 1];
    for (pos, &v) in ordering.iter().enumerate() {
        if v > n || position[v] != usize::MAX {
            return Err(Error::Validation(format!("{ordering:?} is not a permutation of 0..={n}")));
        }
        position[v] = pos;
    }
    if ordering.len() != n + 1 {
        return Err(Error::Validation(format!("{ordering:?} is not a permutation of 0..={n}")));
    }
    check_loops(cs)?;
    let broken: Vec<Vec<usize>> = cs
        .iter()
        .map(|c| {
            let least = *c.support.iter().min_by_key(|&&v| position[v]).unwrap();
            c.support.iter().copied().filter(|&v| v != least).collect()
        })
        .collect();
    let facets: Vec<Vec<usize>> = subsets(n + 1, a.d() + 1)
        .into_iter()
        .filter(|s| rank(&a.columns(s)) == s.len())
        .filter(|s| !broken.iter().any(|b| b.iter().all(|v| s.contains(v))))
        .collect();
    SimplicialComplex::new(n, facets)
}

/// Degree, Hurwitz degree and initial Hurwitz monomial of the reciprocal of a
/// generic `d`-dimensional row space in `P^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericReciprocal {
    pub p: u64,
    pub hdeg: u64,
    pub monomial: PlueckerPoly,
}

pub fn generic_reciprocal_invariants(d: usize, n: usize) -> Result<GenericReciprocal> {
    if d < 1 || d >= n {
        return Err(Error::ParameterRange(format!("need 1 <= d < n, got d={d}, n={n}")));
    }
    let (du, nu) = (d as u64, n as u64);
    let p = binomial(nu, du);
    let hdeg = 2 * binomial(nu, du - 1) * (nu - du);
    let gr = Grassmannian::new(d, n)?;
    let ring = gr.ring(Flavor::Primal);
    let sets = gr.index_sets(Flavor::Primal);
    let mut e = vec![0u32; ring.len()];
    for rest in subsets(n, d - 1) {
        let idx: Vec<usize> = std::iter::once(0).chain(rest.iter().map(|i| i + 1)).collect();
        let i = sets.iter().position(|s| *s == idx).expect("index set");
        e[i] += 2 * (n - d) as u32;
    }
    let monomial =
        PlueckerPoly::new(gr, Flavor::Primal, Poly::monomial(&ring, Monomial::new(e), Rational::one()))?;
    Ok(GenericReciprocal { p, hdeg, monomial })
}

/// Which monomial in `b` is divided out of the substituted Hurwitz form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorConvention {
    /// `(b_1 ⋯ b_{d-1})^{Hdeg}`.
    Proof,
    /// `(b_1 ⋯ b_d)^{Hdeg}`.
    Corollary,
    /// The largest monomial dividing the substitution.
    Content,
    /// Pick whichever of the above matches the monomial content.
    Auto,
}

impl FactorConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            FactorConvention::Proof => "proof",
            FactorConvention::Corollary => "corollary",
            FactorConvention::Content => "content",
            FactorConvention::Auto => "auto",
        }
    }

    pub fn parse(s: &str) -> Result<FactorConvention> {
        Ok(match s {
            "proof" => FactorConvention::Proof,
            "corollary" => FactorConvention::Corollary,
            "content" => FactorConvention::Content,
            "auto" => FactorConvention::Auto,
            _ => return Err(Error::Validation(format!("unknown factor convention `{s}`"))),
        })
    }
}

impl fmt::Display for FactorConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of [`entropic_discriminant`]: the normalized form in `b_0..b_d`,
/// the monomial that was removed and the convention it matched.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntropicDiscriminant {
    pub poly: Poly,
    pub factor: Poly,
    pub convention: FactorConvention,
}

/// The bidiagonal `d × (d+1)` matrix with rows `(…, b_k, -b_{k-1}, …)`.
pub fn bidiagonal(d: usize, ring: &Ring) -> Vec<Vec<Poly>> {
    (1..=d)
        .map(|k| {
            (0..=d)
                .map(|c| {
                    if c == k - 1 {
                        Poly::var_at(ring, k)
                    } else if c == k {
                        -Poly::var_at(ring, k - 1)
                    } else {
                        Poly::zero(ring)
                    }
                })
                .collect()
        })
        .collect()
}

pub fn entropic_discriminant(
    a: &MatrixA,
    hu: &PlueckerPoly,
    convention: FactorConvention,
) -> Result<EntropicDiscriminant> {
    let ones = vec![Rational::one(); a.n() + 1];
    substitute_bidiagonal(a, &ones, hu, convention)
}

/// [`entropic_discriminant`] with the columns of `A` scaled by `c`.
pub fn varchenko_variant(
    a: &MatrixA,
    c: &[Rational],
    hu: &PlueckerPoly,
    convention: FactorConvention,
) -> Result<EntropicDiscriminant> {
    if c.len() != a.n() + 1 {
        return Err(Error::DimensionMismatch(format!(
            "{} scales for {} columns",
            c.len(),
            a.n() + 1
        )));
    }
    if c.iter().any(Zero::is_zero) {
        return Err(Error::ZeroScale);
    }
    substitute_bidiagonal(a, c, hu, convention)
}

fn substitute_bidiagonal(
    a: &MatrixA,
    c: &[Rational],
    hu: &PlueckerPoly,
    convention: FactorConvention,
) -> Result<EntropicDiscriminant> {
    let (d, n) = (a.d(), a.n());
    let gr = Grassmannian::new(d, n)?;
    if hu.grassmannian() != gr {
        return Err(Error::GrassmannianMismatch(format!(
            "form on Gr({}, P^{}) for a {} x {} matrix",
            hu.grassmannian().d,
            hu.grassmannian().n,
            d + 1,
            n + 1
        )));
    }
    if !hu.params().is_empty() {
        return Err(Error::Validation("Hurwitz form may not carry parameters".into()));
    }
    let hu = match hu.flavor() {
        Flavor::Primal => hu.clone(),
        Flavor::Dual => dualize(hu),
    };
    let hdeg = hu.pluecker_degree().ok_or(Error::ZeroPolynomial)?;
    let ring = Ring::indexed("b", d + 1);
    let b = bidiagonal(d, &ring);
    let scaled: Vec<Vec<Poly>> = (0..=n)
        .map(|col| {
            (0..=d)
                .map(|r| Poly::constant(&ring, &a.rows[r][col] * &c[col]))
                .collect()
        })
        .collect();
    // (B · A · diag(c)) as d rows.
    let m: Vec<Vec<Poly>> = b
        .iter()
        .map(|brow| {
            (0..=n)
                .map(|col| {
                    brow.iter()
                        .zip(&scaled[col])
                        .fold(Poly::zero(&ring), |acc, (x, y)| &acc + &(x * y))
                })
                .collect()
        })
        .collect();
    let minors: Vec<Poly> = gr
        .index_sets(Flavor::Primal)
        .iter()
        .map(|cols| {
            let sub: Vec<Vec<Poly>> = m
                .iter()
                .map(|row| cols.iter().map(|&j| row[j].clone()).collect())
                .collect();
            poly_determinant(&sub, &ring)
        })
        .collect();
    let raw = hu.poly().substitute_images(&minors, &ring);
    if raw.is_zero() {
        return Err(Error::DegenerateInput("substitution vanishes identically".into()));
    }
    let power = |upto: usize| {
        let mut e = vec![0u32; d + 1];
        for x in e.iter_mut().take(upto + 1).skip(1) {
            *x = hdeg;
        }
        Monomial::new(e)
    };
    let proof = power(d.saturating_sub(1));
    let corollary = power(d);
    let content = raw.monomial_content();
    let (factor, used) = match convention {
        FactorConvention::Proof => (proof, FactorConvention::Proof),
        FactorConvention::Corollary => (corollary, FactorConvention::Corollary),
        FactorConvention::Content => (content, FactorConvention::Content),
        FactorConvention::Auto => {
            if content == proof {
                (proof, FactorConvention::Proof)
            } else if content == corollary {
                (corollary, FactorConvention::Corollary)
            } else {
                (content, FactorConvention::Content)
            }
        }
    };
    let factor = Poly::monomial(&ring, factor, Rational::one());
    let quotient = raw
        .exact_divide(&factor)
        .map_err(|_| Error::InexactFactor(format!("{factor} does not divide the substitution")))?;
    Ok(EntropicDiscriminant {
        poly: quotient.primitive(),
        factor,
        convention: used,
    })
}
