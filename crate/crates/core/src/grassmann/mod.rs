//! Plücker coordinates on the Grassmannian `Gr(d, P^n)` of codimension-`d`
//! subspaces of `P^n`.
//!
//! A subspace `L` is presented either as the kernel of a `d × (n+1)` matrix
//! (primal coordinates `p_I`, `|I| = d`) or as the row space of an
//! `(n+1-d) × (n+1)` matrix (dual coordinates `q_J`, `|J| = n+1-d`). Plücker
//! variables are named `p_0_2`, `q_1_3_4` and ordered lexicographically by
//! index tuple; any further ring variables are treated as parameters.

mod relations;
mod stiefel;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::subsets;
use crate::poly::{Monomial, Poly, Rational, Ring};

pub use relations::{plucker_gb, pluecker_relations, reduce_mod_relations, straighten, supported};
pub use stiefel::{
    maximal_minors, orthogonal_rows, pluecker_lift, pluecker_lift_exact, stiefel_expand,
    stiefel_minor, stiefel_ring, stiefel_var,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Primal,
    Dual,
}

impl Flavor {
    pub fn other(self) -> Flavor {
        match self {
            Flavor::Primal => Flavor::Dual,
            Flavor::Dual => Flavor::Primal,
        }
    }

    pub fn prefix(self) -> char {
        match self {
            Flavor::Primal => 'p',
            Flavor::Dual => 'q',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Primal => "primal",
            Flavor::Dual => "dual",
        }
    }

    pub fn parse(s: &str) -> Result<Flavor> {
        match s {
            "primal" => Ok(Flavor::Primal),
            "dual" => Ok(Flavor::Dual),
            _ => Err(Error::Validation(format!("unknown flavor `{s}`"))),
        }
    }
}

/// `Gr(d, P^n)`: subspaces of codimension `d` in `P^n`, `1 <= d <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Grassmannian {
    pub d: usize,
    pub n: usize,
}

impl Grassmannian {
    pub fn new(d: usize, n: usize) -> Result<Grassmannian> {
        if d < 1 || d > n {
            return Err(Error::ParameterRange(format!(
                "Gr(d, P^n) needs 1 <= d <= n, got d={d}, n={n}"
            )));
        }
        Ok(Grassmannian { d, n })
    }

    /// Number of indices of a Plücker variable of the given flavor.
    pub fn arity(&self, flavor: Flavor) -> usize {
        match flavor {
            Flavor::Primal => self.d,
            Flavor::Dual => self.n + 1 - self.d,
        }
    }

    pub fn index_sets(&self, flavor: Flavor) -> Vec<Vec<usize>> {
        subsets(self.n + 1, self.arity(flavor))
    }

    pub fn var_name(flavor: Flavor, indices: &[usize]) -> String {
        let mut s = String::new();
        s.push(flavor.prefix());
        for i in indices {
            s.push('_');
            s.push_str(&i.to_string());
        }
        s
    }

    pub fn ring(&self, flavor: Flavor) -> Ring {
        Ring::new(
            self.index_sets(flavor)
                .iter()
                .map(|i| Grassmannian::var_name(flavor, i)),
        )
    }

    /// Plücker variables followed by parameter names.
    pub fn ring_with_params(&self, flavor: Flavor, params: &[String]) -> Ring {
        self.ring(flavor).union(&Ring::new(params.iter().cloned()))
    }

    pub fn num_vars(&self, flavor: Flavor) -> usize {
        crate::linalg::binomial((self.n + 1) as u64, self.arity(flavor) as u64) as usize
    }

    /// Complement of an index set in `0..=n`.
    pub fn complement(&self, indices: &[usize]) -> Vec<usize> {
        (0..=self.n).filter(|i| !indices.contains(i)).collect()
    }
}

/// Parses `p_0_2` into its flavor and indices.
pub fn parse_var_name(name: &str) -> Option<(Flavor, Vec<usize>)> {
    let flavor = match name.chars().next()? {
        'p' => Flavor::Primal,
        'q' => Flavor::Dual,
        _ => return None,
    };
    let rest = &name[1..];
    if rest.is_empty() {
        return None;
    }
    let mut out = Vec::new();
    for part in rest.strip_prefix('_')?.split('_') {
        out.push(part.parse().ok()?);
    }
    Some((flavor, out))
}

/// Sign of the permutation given by concatenating `first` and `second`.
pub fn concat_sign(first: &[usize], second: &[usize]) -> i64 {
    let seq: Vec<usize> = first.iter().chain(second).copied().collect();
    permutation_sign(&seq)
}

/// Sign of a sequence of distinct integers relative to its sorted order.
pub fn permutation_sign(seq: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Polynomial in Plücker variables of one flavor, possibly with parameters.
#[derive(Clone, PartialEq, Eq)]
pub struct PlueckerPoly {
    gr: Grassmannian,
    flavor: Flavor,
    poly: Poly,
}

impl PlueckerPoly {
    /// Wraps `poly`, whose ring must start with the Plücker variables of
    /// `(gr, flavor)` in canonical order.
    pub fn new(gr: Grassmannian, flavor: Flavor, poly: Poly) -> Result<PlueckerPoly> {
        let count = gr.num_vars(flavor);
        let names = poly.ring().names();
        let sets = gr.index_sets(flavor);
        if names.len() < count
            || names[..count]
                .iter()
                .zip(&sets)
                .any(|(n, s)| *n != Grassmannian::var_name(flavor, s))
        {
            return Err(Error::GrassmannianMismatch(format!(
                "ring {:?} does not start with the {} coordinates of Gr({}, P^{})",
                poly.ring(),
                flavor.name(),
                gr.d,
                gr.n
            )));
        }
        if names[count..].iter().any(|n| parse_var_name(n).is_some()) {
            return Err(Error::GrassmannianMismatch(
                "parameter names collide with Plücker variable names".into(),
            ));
        }
        Ok(PlueckerPoly { gr, flavor, poly })
    }

    /// Re-expresses an arbitrary polynomial whose variables are Plücker
    /// variables of the given flavor (any subset, any order) and parameters.
    pub fn from_named(gr: Grassmannian, flavor: Flavor, poly: &Poly) -> Result<PlueckerPoly> {
        let mut params = Vec::new();
        for name in poly.ring().names() {
            match parse_var_name(name) {
                Some((f, idx)) => {
                    if f != flavor
                        || idx.len() != gr.arity(flavor)
                        || idx.windows(2).any(|w| w[0] >= w[1])
                        || idx.iter().any(|&i| i > gr.n)
                    {
                        return Err(Error::GrassmannianMismatch(format!(
                            "variable `{name}` is not a {} coordinate of Gr({}, P^{})",
                            flavor.name(),
                            gr.d,
                            gr.n
                        )));
                    }
                }
                None => params.push(name.clone()),
            }
        }
        let ring = gr.ring_with_params(flavor, &params);
        PlueckerPoly::new(gr, flavor, poly.embed(&ring)?)
    }

    pub fn zero(gr: Grassmannian, flavor: Flavor) -> PlueckerPoly {
        PlueckerPoly {
            gr,
            flavor,
            poly: Poly::zero(&gr.ring(flavor)),
        }
    }

    pub fn grassmannian(&self) -> Grassmannian {
        self.gr
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn ring(&self) -> &Ring {
        self.poly.ring()
    }

    pub fn num_pluecker_vars(&self) -> usize {
        self.gr.num_vars(self.flavor)
    }

    pub fn params(&self) -> Vec<String> {
        self.poly.ring().names()[self.num_pluecker_vars()..].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Plücker variable with possibly unsorted indices; the sorting sign is
    /// absorbed and repeated indices give zero.
    pub fn var(&self, indices: &[usize]) -> Poly {
        signed_var(self.ring(), self.flavor, indices)
    }

    /// Index set of the `i`-th Plücker variable.
    pub fn indices_of(&self, i: usize) -> Vec<usize> {
        parse_var_name(self.ring().name(i)).expect("Plücker variable").1
    }

    /// Degree in the Plücker variables (parameters ignored).
    pub fn pluecker_degree(&self) -> Option<u32> {
        let k = self.num_pluecker_vars();
        self.poly
            .terms()
            .map(|(m, _)| m.exps()[..k].iter().sum())
            .max()
    }

    pub fn multidegree(&self, m: &Monomial) -> Vec<i64> {
        let mut out = vec![0i64; self.gr.n + 1];
        for (i, &e) in m.exps()[..self.num_pluecker_vars()].iter().enumerate() {
            if e == 0 {
                continue;
            }
            for j in self.indices_of(i) {
                out[j] += e as i64;
            }
        }
        out
    }

    pub fn with_poly(&self, poly: Poly) -> PlueckerPoly {
        assert_eq!(poly.ring(), self.ring());
        PlueckerPoly {
            gr: self.gr,
            flavor: self.flavor,
            poly,
        }
    }

    /// Primitive integer coefficients, positive leading coefficient.
    pub fn normalized(&self) -> PlueckerPoly {
        self.with_poly(self.poly.primitive())
    }

    /// Groups terms by their parameter monomial; keys are parameter exponent
    /// vectors, values live in the pure Plücker ring.
    pub fn split_params(&self) -> BTreeMap<Vec<u32>, Poly> {
        let k = self.num_pluecker_vars();
        let pring = self.gr.ring(self.flavor);
        let mut out: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
        for (m, c) in self.poly.terms() {
            let key = m.exps()[k..].to_vec();
            let mono = Monomial::new(m.exps()[..k].to_vec());
            out.entry(key)
                .or_insert_with(|| Poly::zero(&pring))
                .add_term(mono, c.clone());
        }
        out
    }

    /// Inverse of [`split_params`](Self::split_params).
    pub fn join_params(&self, parts: &BTreeMap<Vec<u32>, Poly>) -> PlueckerPoly {
        let k = self.num_pluecker_vars();
        let ring = self.ring().clone();
        let mut out = Poly::zero(&ring);
        for (key, part) in parts {
            for (m, c) in part.terms() {
                let mut exps = m.exps()[..k].to_vec();
                exps.extend_from_slice(key);
                out.add_term(Monomial::new(exps), c.clone());
            }
        }
        self.with_poly(out)
    }

    /// Sets a parameter to a rational value, keeping the ring.
    pub fn specialize(&self, param: &str, value: &Rational) -> Result<PlueckerPoly> {
        let i = self.ring().require(param)?;
        Ok(self.with_poly(self.poly.specialize(i, value)))
    }

    /// Drops parameters that no longer occur.
    pub fn drop_unused_params(&self) -> PlueckerPoly {
        let k = self.num_pluecker_vars();
        let used: Vec<String> = self
            .params()
            .into_iter()
            .enumerate()
            .filter(|(j, _)| self.poly.involves(k + j))
            .map(|(_, n)| n)
            .collect();
        let ring = self.gr.ring_with_params(self.flavor, &used);
        self.with_ring(&ring)
    }

    fn with_ring(&self, ring: &Ring) -> PlueckerPoly {
        PlueckerPoly {
            gr: self.gr,
            flavor: self.flavor,
            poly: self.poly.embed(ring).expect("parameters preserved"),
        }
    }

    /// Evaluates at numeric Plücker coordinates (no parameters allowed).
    pub fn evaluate(&self, coords: &[Rational]) -> Result<Rational> {
        if !self.params().is_empty() {
            return Err(Error::Validation(
                "cannot evaluate a form with parameters".into(),
            ));
        }
        if coords.len() != self.num_pluecker_vars() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for {} variables",
                coords.len(),
                self.num_pluecker_vars()
            )));
        }
        Ok(self.poly.evaluate(coords))
    }
}

impl fmt::Debug for PlueckerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Gr({}, P^{}) {}: {}",
            self.gr.d,
            self.gr.n,
            self.flavor.name(),
            self.poly
        )
    }
}

impl fmt::Display for PlueckerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

fn signed_var(ring: &Ring, flavor: Flavor, indices: &[usize]) -> Poly {
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Poly::zero(ring);
    }
    let sign = permutation_sign(indices);
    let v = Poly::var(ring, &Grassmannian::var_name(flavor, &sorted)).expect("variable in ring");
    if sign < 0 {
        -v
    } else {
        v
    }
}

/// Multidegree in `Z^{n+1}` of a Plücker monomial.
pub fn multidegree(f: &PlueckerPoly, m: &Monomial) -> Vec<i64> {
    f.multidegree(m)
}

/// Swaps primal and dual coordinates: `p_I <-> sign(I, J) q_J` with `J` the
/// complement of `I` and the sign taken with the primal indices first in both
/// directions, which makes the map an exact involution.
pub fn dualize(f: &PlueckerPoly) -> PlueckerPoly {
    let gr = f.gr;
    let target = f.flavor.other();
    let params = f.params();
    let ring = gr.ring_with_params(target, &params);
    let k = f.num_pluecker_vars();
    let mut images: Vec<Poly> = Vec::with_capacity(ring.len());
    for i in 0..k {
        let idx = f.indices_of(i);
        let comp = gr.complement(&idx);
        let sign = match f.flavor {
            Flavor::Primal => concat_sign(&idx, &comp),
            Flavor::Dual => concat_sign(&comp, &idx),
        };
        let v = Poly::var(&ring, &Grassmannian::var_name(target, &comp)).unwrap();
        images.push(if sign < 0 { -v } else { v });
    }
    for name in &params {
        images.push(Poly::var(&ring, name).unwrap());
    }
    PlueckerPoly {
        gr,
        flavor: target,
        poly: f.poly.substitute_images(&images, &ring),
    }
}

/// Equality of classes modulo the Plücker relations up to a nonzero scalar.
pub fn equal_up_to_scalar(a: &PlueckerPoly, b: &PlueckerPoly) -> Result<bool> {
    if a.gr != b.gr {
        return Err(Error::GrassmannianMismatch(format!(
            "Gr({}, P^{}) vs Gr({}, P^{})",
            a.gr.d, a.gr.n, b.gr.d, b.gr.n
        )));
    }
    let b = if a.flavor != b.flavor {
        dualize(b)
    } else {
        b.clone()
    };
    let mut params = a.params();
    for p in b.params() {
        if !params.contains(&p) {
            params.push(p);
        }
    }
    let ring = a.gr.ring_with_params(a.flavor, &params);
    let a = a.with_ring(&ring);
    let b = b.with_ring(&ring);
    let sa = reduce_mod_relations(&a)?;
    let sb = reduce_mod_relations(&b)?;
    if sa.is_zero() || sb.is_zero() {
        return Ok(sa.is_zero() && sb.is_zero());
    }
    Ok(sa.poly.equals_up_to_scalar(&sb.poly))
}

/// Monomial `∏ var^exp` over the given index sets.
pub fn pluecker_monomial(
    gr: Grassmannian,
    flavor: Flavor,
    factors: &[(Vec<usize>, u32)],
) -> Result<PlueckerPoly> {
    let ring = gr.ring(flavor);
    let mut p = Poly::one(&ring);
    for (idx, e) in factors {
        if idx.len() != gr.arity(flavor) || idx.iter().any(|&i| i > gr.n) {
            return Err(Error::GrassmannianMismatch(format!(
                "index set {idx:?} is not a {} coordinate",
                flavor.name()
            )));
        }
        p = &p * &signed_var(&ring, flavor, idx).pow(*e);
    }
    PlueckerPoly::new(gr, flavor, p)
}
