use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::stiefel::{stiefel_minor, stiefel_ring};
use super::{Flavor, Grassmannian, PlueckerPoly};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, normal_form, GroebnerBasis, Ideal, MonomialOrder};
use crate::linalg::{binomial, kernel, Matrix};
use crate::poly::{Monomial, Poly, Rational};

/// Largest number of Plücker variables for which relations are computed.
pub const MAX_RELATION_VARS: u64 = 20;

type Cache = Mutex<HashMap<(usize, usize, Flavor), Option<Arc<GroebnerBasis>>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Whether straightening is available: the relation ideal is zero (one index
/// or all but one), or there are at most [`MAX_RELATION_VARS`] variables.
pub fn supported(gr: Grassmannian, flavor: Flavor) -> bool {
    let k = gr.arity(flavor);
    k <= 1 || k >= gr.n || binomial((gr.n + 1) as u64, k as u64) <= MAX_RELATION_VARS
}

fn has_no_relations(gr: Grassmannian, flavor: Flavor) -> bool {
    let k = gr.arity(flavor);
    k <= 1 || k >= gr.n
}

/// Quadratic relations among the maximal minors of a generic Stiefel matrix,
/// found as the kernel of the minor map in each multidegree.
pub fn pluecker_relations(d: usize, n: usize, flavor: Flavor) -> Result<Ideal> {
    let gr = Grassmannian::new(d, n)?;
    let ring = gr.ring(flavor);
    if has_no_relations(gr, flavor) {
        return Ideal::new(&ring, []);
    }
    if !supported(gr, flavor) {
        return Err(Error::ResourceLimit(format!(
            "Plücker relations for Gr({d}, P^{n}) exceed {MAX_RELATION_VARS} variables"
        )));
    }
    let sets = gr.index_sets(flavor);
    let sring = stiefel_ring(gr, flavor);
    let minors: Vec<Poly> = sets
        .iter()
        .map(|s| stiefel_minor(&sring, flavor, gr.arity(flavor), s))
        .collect();
    let mut groups: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
    for a in 0..sets.len() {
        for b in a..sets.len() {
            let mut key: Vec<usize> = sets[a].iter().chain(&sets[b]).copied().collect();
            key.sort_unstable();
            groups.entry(key).or_default().push((a, b));
        }
    }
    let mut gens = Vec::new();
    for pairs in groups.values().filter(|g| g.len() > 1) {
        let products: Vec<Poly> = pairs.iter().map(|&(a, b)| &minors[a] * &minors[b]).collect();
        let mut rows: BTreeMap<Monomial, usize> = BTreeMap::new();
        for p in &products {
            for (m, _) in p.terms() {
                let next = rows.len();
                rows.entry(m.clone()).or_insert(next);
            }
        }
        let mut mat: Matrix = vec![vec![Rational::default(); products.len()]; rows.len()];
        for (j, p) in products.iter().enumerate() {
            for (m, c) in p.terms() {
                mat[rows[m]][j] = c.clone();
            }
        }
        for v in kernel(&mat, products.len()) {
            let mut rel = Poly::zero(&ring);
            for (j, c) in v.iter().enumerate() {
                let (a, b) = pairs[j];
                let m = Monomial::var(ring.len(), a).mul(&Monomial::var(ring.len(), b));
                rel.add_term(m, c.clone());
            }
            gens.push(rel.primitive());
        }
    }
    Ideal::new(&ring, gens)
}

/// Cached grevlex Gröbner basis of the Plücker relations; `None` when the
/// relation ideal is zero.
pub fn plucker_gb(gr: Grassmannian, flavor: Flavor) -> Result<Option<Arc<GroebnerBasis>>> {
    let key = (gr.arity(flavor), gr.n + 1, flavor);
    if let Some(hit) = cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let ideal = pluecker_relations(gr.d, gr.n, flavor)?;
    let value = if ideal.is_zero() {
        None
    } else {
        Some(Arc::new(buchberger(&ideal, &MonomialOrder::Grevlex)?))
    };
    cache().lock().unwrap().insert(key, value.clone());
    Ok(value)
}

/// Normal form modulo the Plücker relations, without rescaling.
pub fn reduce_mod_relations(f: &PlueckerPoly) -> Result<PlueckerPoly> {
    let Some(gb) = plucker_gb(f.grassmannian(), f.flavor())? else {
        return Ok(f.clone());
    };
    let mut parts = f.split_params();
    for part in parts.values_mut() {
        *part = normal_form(part, &gb)?;
    }
    Ok(f.join_params(&parts))
}

/// Canonical representative: normal form modulo the relations, then primitive
/// integer coefficients with a positive leading coefficient.
pub fn straighten(f: &PlueckerPoly) -> Result<PlueckerPoly> {
    Ok(reduce_mod_relations(f)?.normalized())
}
