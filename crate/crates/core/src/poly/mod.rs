//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`Poly`] carries its [`Ring`] (an ordered list of variable names) and a
//! map from [`Monomial`] to nonzero [`Rational`]. Terms are kept in graded
//! reverse lexicographic order; the canonical textual and JSON forms list
//! them from the largest monomial down.

mod gcd;
mod monomial;
mod parse;
mod rational;
mod resultant;
mod roots;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use gcd::{gcd, squarefree_part};
pub use monomial::Monomial;
pub use rational::{format_rational, int, parse_rational, rat, rational_gcd, Rational};
pub use roots::rational_roots;
pub use resultant::{
    discrim_product_identity, discriminant, poly_determinant, resultant, sylvester_matrix,
};

/// Ordered list of variable names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Arc<[String]>,
}

impl Ring {
    pub fn new<I, S>(names: I) -> Ring
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        debug_assert!(
            {
                let mut s = names.clone();
                s.sort();
                s.dedup();
                s.len() == names.len()
            },
            "duplicate variable names"
        );
        Ring {
            names: names.into(),
        }
    }

    /// `x0, …, x{n}` style ring.
    pub fn indexed(prefix: &str, count: usize) -> Ring {
        Ring::new((0..count).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// This ring's variables followed by those of `other` not already present.
    pub fn union(&self, other: &Ring) -> Ring {
        let mut names: Vec<String> = self.names.to_vec();
        for n in other.names.iter() {
            if !names.contains(n) {
                names.push(n.clone());
            }
        }
        Ring::new(names)
    }

    pub fn without(&self, drop: &[String]) -> Ring {
        Ring::new(self.names.iter().filter(|n| !drop.contains(n)).cloned())
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring{:?}", &self.names[..])
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(ring: &Ring) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Poly {
        Poly::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, c: Rational) -> Poly {
        let mut p = Poly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.len()), c);
        }
        p
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Poly> {
        Ok(Poly::var_at(ring, ring.require(name)?))
    }

    pub fn var_at(ring: &Ring, i: usize) -> Poly {
        Poly::monomial(ring, Monomial::var(ring.len(), i), Rational::one())
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Poly {
        assert_eq!(m.arity(), ring.len());
        let mut p = Poly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial, summing repeated monomials and dropping zeros.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Poly {
        let mut p = Poly::zero(ring);
        for (m, c) in terms {
            assert_eq!(m.arity(), ring.len(), "monomial arity differs from ring");
            p.add_term(m, c);
        }
        p
    }

    /// Parses an expression such as `"x0*x3 - 1/2*x1^2"` over `ring`.
    pub fn parse(src: &str, ring: &Ring) -> Result<Poly> {
        parse::parse(src, ring)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the grevlex-largest monomial down.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Rational)> {
        self.terms.into_iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.ring.len()))
    }

    /// Grevlex-leading term.
    pub fn lead(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(i)).max().unwrap_or(0)
    }

    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exp(i) > 0)
    }

    /// Indices of variables that actually occur.
    pub fn used_vars(&self) -> Vec<usize> {
        (0..self.ring.len()).filter(|&i| self.involves(i)).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Homogeneity with respect to the variables in `vars` only.
    pub fn is_homogeneous_in(&self, vars: &[usize]) -> bool {
        let deg = |m: &Monomial| vars.iter().map(|&i| m.exp(i)).sum::<u32>();
        let mut degs = self.terms.keys().map(deg);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "{:?} vs {:?}",
                self.ring, other.ring
            )))
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut result = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Quotient `q` with `self = q * divisor`, or `InexactDivision`.
    pub fn exact_divide(&self, divisor: &Poly) -> Result<Poly> {
        self.check_ring(divisor)?;
        let (lm, lc) = divisor.lead().ok_or(Error::ZeroPolynomial)?;
        if divisor.terms.len() == 1 {
            let mut q = Poly::zero(&self.ring);
            let inv = lc.recip();
            for (m, c) in &self.terms {
                let qm = lm.quotient_of(m).ok_or(Error::InexactDivision)?;
                q.terms.insert(qm, c * &inv);
            }
            return Ok(q);
        }
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        let rest: Vec<(Monomial, Rational)> = divisor
            .terms
            .iter()
            .rev()
            .skip(1)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        while let Some((m, c)) = rem.pop_last() {
            let qm = lm.quotient_of(&m).ok_or(Error::InexactDivision)?;
            let qc = c / lc;
            for (dm, dc) in &rest {
                let t = qm.mul(dm);
                let v = &qc * dc;
                use std::collections::btree_map::Entry;
                match rem.entry(t) {
                    Entry::Vacant(e) => {
                        e.insert(-v);
                    }
                    Entry::Occupied(mut e) => {
                        let s = e.get() - v;
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                }
            }
            quot.insert(qm, qc);
        }
        Ok(Poly {
            ring: self.ring.clone(),
            terms: quot,
        })
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.exact_divide(self).is_ok()
    }

    /// Splits `self = scale * g` with `g` having coprime integer coefficients
    /// and a positive grevlex-leading coefficient.
    pub fn content_and_primitive(&self) -> Result<(Rational, Poly)> {
        let (_, lc) = self.lead().ok_or(Error::ZeroPolynomial)?;
        let mut scale = rational_gcd(self.terms.values());
        if lc.is_negative() {
            scale = -scale;
        }
        let inv = scale.recip();
        Ok((scale, self.scale(&inv)))
    }

    /// Primitive part, or zero for the zero polynomial.
    pub fn primitive(&self) -> Poly {
        match self.content_and_primitive() {
            Ok((_, g)) => g,
            Err(_) => self.clone(),
        }
    }

    /// True when `self = c * other` for some nonzero rational `c`.
    pub fn equals_up_to_scalar(&self, other: &Poly) -> bool {
        if self.ring != other.ring || self.terms.len() != other.terms.len() {
            return false;
        }
        if self.is_zero() {
            return true;
        }
        let (m, a) = self.lead().unwrap();
        let b = other.coefficient(m);
        if b.is_zero() {
            return false;
        }
        let ratio = &b / a;
        self.terms
            .iter()
            .all(|(m, c)| other.coefficient(m) == c * &ratio)
    }

    pub fn derivative(&self, i: usize) -> Poly {
        let mut p = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[i] -= 1;
            p.terms
                .insert(Monomial::new(exps), c * Rational::from_integer(e.into()));
        }
        p
    }

    /// Coefficients of `self` viewed as a univariate polynomial in variable `i`;
    /// the returned polynomials live in the same ring and do not involve `i`.
    pub fn coeffs_in(&self, i: usize) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(i);
            let mut exps = m.exps().to_vec();
            exps[i] = 0;
            out.entry(e)
                .or_insert_with(|| Poly::zero(&self.ring))
                .terms
                .insert(Monomial::new(exps), c.clone());
        }
        out
    }

    pub fn lead_coeff_in(&self, i: usize) -> Poly {
        self.coeffs_in(i)
            .into_iter()
            .next_back()
            .map(|(_, c)| c)
            .unwrap_or_else(|| Poly::zero(&self.ring))
    }

    /// Componentwise minimum of all exponent vectors.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(self.ring.len()),
            Some(first) => it.fold(first.clone(), |acc, m| acc.gcd(m)),
        }
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    pub fn embed(&self, target: &Ring) -> Result<Poly> {
        if *target == self.ring {
            return Ok(self.clone());
        }
        let map: Vec<Option<usize>> = self
            .ring
            .names()
            .iter()
            .map(|n| target.index_of(n))
            .collect();
        let mut p = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.len()];
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let j = map[i].ok_or_else(|| Error::UnknownVariable(self.ring.name(i).into()))?;
                exps[j] = e;
            }
            p.terms.insert(Monomial::new(exps), c.clone());
        }
        Ok(p)
    }

    /// Simultaneous substitution `name -> image`; unbound variables map to the
    /// variable of the same name in `target`.
    pub fn substitute(&self, bindings: &HashMap<String, Poly>, target: &Ring) -> Result<Poly> {
        for (name, img) in bindings {
            self.ring.require(name)?;
            if img.ring != *target {
                return Err(Error::RingMismatch(format!(
                    "image of `{name}` lives in {:?}, expected {:?}",
                    img.ring, target
                )));
            }
        }
        let mut images = Vec::with_capacity(self.ring.len());
        for i in 0..self.ring.len() {
            let name = self.ring.name(i);
            let img = match bindings.get(name) {
                Some(p) => Some(p.clone()),
                None if self.involves(i) => Some(Poly::var(target, name)?),
                None => None,
            };
            images.push(img);
        }
        let images: Vec<Poly> = images
            .into_iter()
            .map(|p| p.unwrap_or_else(|| Poly::zero(target)))
            .collect();
        Ok(self.substitute_images(&images, target))
    }

    /// Substitution by position: variable `i` becomes `images[i]`.
    pub fn substitute_images(&self, images: &[Poly], target: &Ring) -> Poly {
        let mut cache: Vec<Vec<Poly>> = images
            .iter()
            .map(|p| vec![Poly::one(target), p.clone()])
            .collect();
        let mut out: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut prod = Poly::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let powers = &mut cache[i];
                while powers.len() <= e as usize {
                    let next = powers.last().unwrap() * &images[i];
                    powers.push(next);
                }
                prod = &prod * &powers[e as usize];
                if prod.is_zero() {
                    break;
                }
            }
            for (k, v) in prod.terms {
                merge(&mut out, k, v);
            }
        }
        Poly {
            ring: target.clone(),
            terms: out,
        }
    }

    /// Sets variable `i` to a rational value, keeping the ring.
    pub fn specialize(&self, i: usize, value: &Rational) -> Poly {
        let mut out = Poly::zero(&self.ring);
        let mut powers = vec![Rational::one()];
        for (m, c) in &self.terms {
            let e = m.exp(i) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut exps = m.exps().to_vec();
            exps[i] = 0;
            out.add_term(Monomial::new(exps), c * &powers[e]);
        }
        out
    }

    /// Evaluates at a full point.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.len());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Drops variables that do not occur, keeping the order of the rest.
    pub fn restrict_to_used(&self) -> Poly {
        let used = self.used_vars();
        let ring = Ring::new(used.iter().map(|&i| self.ring.name(i).to_string()));
        self.embed(&ring).expect("used variables survive")
    }
}

fn merge(out: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    use std::collections::btree_map::Entry;
    match out.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get() + c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.ring, rhs.ring, "ring mismatch in addition");
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut terms = big.terms.clone();
        for (m, c) in &small.terms {
            merge(&mut terms, m.clone(), c.clone());
        }
        Poly {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.ring, rhs.ring, "ring mismatch in subtraction");
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            merge(&mut terms, m.clone(), -c.clone());
        }
        Poly {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.ring, rhs.ring, "ring mismatch in multiplication");
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.ring);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Poly {
            ring: self.ring.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: &Poly) -> Poly {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(format_rational(&abs));
            }
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.ring.name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests;
