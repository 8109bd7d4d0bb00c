//! Gröbner bases over the rationals: normal forms, elimination, weight-initial
//! ideals and Hilbert polynomials.

mod engine;
mod hilbert;

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, Rational, Ring};

pub(crate) use engine::IPoly;
pub use hilbert::{
    binomial_poly, finite_difference, hdeg_from_hilbert, hilbert_from_monomials,
    hilbert_polynomial, hilbert_polynomial_with, sectional_invariants, HilbertData,
};

/// Monomial order. Weight orders break ties by grevlex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    Weight(Vec<i64>),
}

impl MonomialOrder {
    /// Sort key whose lexicographic comparison realizes the order. Keys are
    /// additive: `key(a*b) = key(a) + key(b)`.
    pub fn key(&self, e: &[u32]) -> Vec<i64> {
        let deg: i64 = e.iter().map(|&x| x as i64).sum();
        match self {
            MonomialOrder::Lex => e.iter().map(|&x| x as i64).collect(),
            MonomialOrder::Grevlex => std::iter::once(deg)
                .chain(e.iter().rev().map(|&x| -(x as i64)))
                .collect(),
            MonomialOrder::Weight(w) => {
                let wd: i64 = e.iter().zip(w).map(|(&x, &wi)| x as i64 * wi).sum();
                [wd, deg]
                    .into_iter()
                    .chain(e.iter().rev().map(|&x| -(x as i64)))
                    .collect()
            }
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => a.cmp(b),
            _ => self.key(a.exps()).cmp(&self.key(b.exps())),
        }
    }

    /// Leading term of `f` under this order.
    pub fn leading(&self, f: &Poly) -> Option<(Monomial, Rational)> {
        f.terms()
            .max_by(|(a, _), (b, _)| self.cmp(a, b))
            .map(|(m, c)| (m.clone(), c.clone()))
    }

    fn check_arity(&self, n: usize) -> Result<()> {
        match self {
            MonomialOrder::Weight(w) if w.len() != n => Err(Error::Validation(format!(
                "weight vector has length {}, ring has {n} variables",
                w.len()
            ))),
            _ => Ok(()),
        }
    }

    /// Order used internally: negative weights are shifted by a multiple of
    /// the all-ones vector, which leaves the comparison of equal-degree
    /// monomials unchanged.
    fn well_ordered(&self) -> MonomialOrder {
        match self {
            MonomialOrder::Weight(w) => {
                let min = w.iter().copied().min().unwrap_or(0);
                if min < 0 {
                    MonomialOrder::Weight(w.iter().map(|x| x - min).collect())
                } else {
                    self.clone()
                }
            }
            _ => self.clone(),
        }
    }

    fn has_negative_weight(&self) -> bool {
        matches!(self, MonomialOrder::Weight(w) if w.iter().any(|&x| x < 0))
    }
}

/// Limits for a single Gröbner computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_pairs: usize,
    pub max_reductions: usize,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            max_pairs: 50_000,
            max_reductions: 20_000_000,
        }
    }
}

impl Budget {
    pub fn pairs(max_pairs: usize) -> Budget {
        Budget {
            max_pairs,
            ..Budget::default()
        }
    }

    /// Budget scaled by `factor`, used for stretch computations.
    pub fn scaled(&self, factor: usize) -> Budget {
        Budget {
            max_pairs: self.max_pairs.saturating_mul(factor),
            max_reductions: self.max_reductions.saturating_mul(factor),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Poly>,
}

impl Ideal {
    pub fn new(ring: &Ring, gens: impl IntoIterator<Item = Poly>) -> Result<Ideal> {
        let mut out = Vec::new();
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch(format!(
                    "generator over {:?}, ideal over {:?}",
                    g.ring(),
                    ring
                )));
            }
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
        })
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Ideal> {
        let polys = gens
            .iter()
            .map(|s| Poly::parse(s, ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Poly::is_homogeneous)
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.num_terms() == 1)
    }

    pub fn is_squarefree_monomial(&self) -> bool {
        self.is_monomial()
            && self
                .gens
                .iter()
                .all(|g| g.lead().map(|(m, _)| m.is_squarefree()).unwrap_or(true))
    }

    pub fn with_generator(&self, g: Poly) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.push(g);
        Ideal::new(&self.ring, gens)
    }

    /// Re-expresses every generator in `ring`, matching variables by name.
    pub fn embed(&self, ring: &Ring) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.embed(ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }
}

/// Reduced Gröbner basis with primitive integer generators, sorted by
/// increasing leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    basis: Vec<Poly>,
    internal: Vec<IPoly>,
    internal_order: MonomialOrder,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.order == other.order && self.basis == other.basis
    }
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.internal.iter().map(|p| p.lead().mono.clone()).collect()
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }

    /// True when the affine zero set is at most the origin, i.e. every
    /// variable has a pure power among the leading monomials.
    pub fn has_trivial_affine_cone(&self) -> bool {
        let leads = self.leading_monomials();
        (0..self.ring.len()).all(|i| {
            leads
                .iter()
                .any(|m| m.exp(i) > 0 && m.support().len() == 1)
        })
    }

    pub fn ideal(&self) -> Ideal {
        Ideal {
            ring: self.ring.clone(),
            gens: self.basis.clone(),
        }
    }
}

pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(ideal, order, &Budget::default())
}

pub fn buchberger_with(
    ideal: &Ideal,
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    order.check_arity(ideal.ring.len())?;
    if order.has_negative_weight() && !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let internal_order = order.well_ordered();
    let input: Vec<IPoly> = ideal
        .gens
        .iter()
        .map(|g| IPoly::from_poly(g, &internal_order).1)
        .collect();
    let internal = engine::buchberger(input, &internal_order, budget)?;
    let basis = internal.iter().map(|p| p.to_poly(&ideal.ring)).collect();
    Ok(GroebnerBasis {
        ring: ideal.ring.clone(),
        order: order.clone(),
        basis,
        internal,
        internal_order,
    })
}

/// Remainder of `f` under full division by `g`; zero iff `f` lies in the ideal.
pub fn normal_form(f: &Poly, g: &GroebnerBasis) -> Result<Poly> {
    if f.ring() != &g.ring {
        return Err(Error::RingMismatch(format!(
            "{:?} vs {:?}",
            f.ring(),
            g.ring
        )));
    }
    if f.is_zero() {
        return Ok(f.clone());
    }
    let (scale, fi) = IPoly::from_poly(f, &g.internal_order);
    let reducer = engine::Reducer::new(g.internal.iter());
    let mut steps = Budget::default().max_reductions;
    let (r, mult) = reducer.reduce(&fi, &mut steps)?;
    let factor = scale / Rational::from_integer(mult);
    Ok(r.to_poly(&g.ring).scale(&factor))
}

/// Generators of `I ∩ K[remaining variables]`, expressed over the smaller ring.
pub fn eliminate(ideal: &Ideal, drop: &[String]) -> Result<Ideal> {
    eliminate_with(ideal, drop, &Budget::default())
}

pub fn eliminate_with(ideal: &Ideal, drop: &[String], budget: &Budget) -> Result<Ideal> {
    let ring = ideal.ring();
    let mut w = vec![0i64; ring.len()];
    for name in drop {
        w[ring.require(name)?] = 1;
    }
    let order = if drop.is_empty() {
        MonomialOrder::Grevlex
    } else {
        MonomialOrder::Weight(w.clone())
    };
    let gb = buchberger_with(ideal, &order, budget)?;
    let kept = ring.without(drop);
    let gens = gb
        .basis()
        .iter()
        .filter(|g| (0..ring.len()).all(|i| w[i] == 0 || !g.involves(i)))
        .map(|g| g.embed(&kept))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&kept, gens)
}

/// Result of [`initial_ideal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialIdeal {
    pub ideal: Ideal,
    pub is_monomial: bool,
    pub is_squarefree: bool,
}

/// Terms of `f` with maximal `w`-weight.
pub fn initial_form(f: &Poly, w: &[i64]) -> Poly {
    let weight = |m: &Monomial| m.dot(w);
    let Some(best) = f.terms().map(|(m, _)| weight(m)).max() else {
        return f.clone();
    };
    Poly::from_terms(
        f.ring(),
        f.terms()
            .filter(|(m, _)| weight(m) == best)
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

/// `in_w(I)`: initial forms (maximal weight) of a Gröbner basis for the
/// weight order with grevlex tiebreak.
pub fn initial_ideal(ideal: &Ideal, w: &[i64]) -> Result<InitialIdeal> {
    initial_ideal_with(ideal, w, &Budget::default())
}

pub fn initial_ideal_with(ideal: &Ideal, w: &[i64], budget: &Budget) -> Result<InitialIdeal> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let order = MonomialOrder::Weight(w.to_vec());
    let gb = buchberger_with(ideal, &order, budget)?;
    let gens: Vec<Poly> = gb.basis().iter().map(|g| initial_form(g, w)).collect();
    let ideal = Ideal::new(ideal.ring(), gens)?;
    Ok(InitialIdeal {
        is_monomial: ideal.is_monomial(),
        is_squarefree: ideal.is_squarefree_monomial(),
        ideal,
    })
}

#[cfg(test)]
mod tests;
