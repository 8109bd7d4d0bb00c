use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::relations::plucker_gb;
use super::{dualize, Flavor, Grassmannian, PlueckerPoly};
use crate::error::{Error, Result};
use crate::linalg::{kernel, solve_many, subsets, Matrix};
use crate::poly::{poly_determinant, Monomial, Poly, Rational, Ring};

/// Name of the Stiefel entry in row `r`, column `c`: `a{r}_{c}` for the
/// kernel presentation, `u{r}_{c}` for the row presentation.
pub fn stiefel_var(flavor: Flavor, r: usize, c: usize) -> String {
    match flavor {
        Flavor::Primal => format!("a{r}_{c}"),
        Flavor::Dual => format!("u{r}_{c}"),
    }
}

fn parse_stiefel(flavor: Flavor, name: &str) -> Option<(usize, usize)> {
    let prefix = match flavor {
        Flavor::Primal => 'a',
        Flavor::Dual => 'u',
    };
    let rest = name.strip_prefix(prefix)?;
    let (r, c) = rest.split_once('_')?;
    Some((r.parse().ok()?, c.parse().ok()?))
}

/// Ring of all Stiefel entries, row-major.
pub fn stiefel_ring(gr: Grassmannian, flavor: Flavor) -> Ring {
    let rows = gr.arity(flavor);
    Ring::new(
        (0..rows).flat_map(|r| (0..=gr.n).map(move |c| stiefel_var(flavor, r, c))),
    )
}

/// Maximal minor on columns `cols` of the symbolic `k`-row Stiefel matrix.
pub fn stiefel_minor(ring: &Ring, flavor: Flavor, k: usize, cols: &[usize]) -> Poly {
    let m: Vec<Vec<Poly>> = (0..k)
        .map(|r| {
            cols.iter()
                .map(|&c| Poly::var(ring, &stiefel_var(flavor, r, c)).expect("Stiefel entry"))
                .collect()
        })
        .collect();
    poly_determinant(&m, ring)
}

/// Substitutes every Plücker variable by the corresponding maximal minor of a
/// symbolic Stiefel matrix of the `target` flavor (dualizing first if needed).
pub fn stiefel_expand(f: &PlueckerPoly, target: Flavor) -> Result<Poly> {
    let g = if target == f.flavor() {
        f.clone()
    } else {
        dualize(f)
    };
    let gr = g.grassmannian();
    let params = g.params();
    let ring = stiefel_ring(gr, target).union(&Ring::new(params.iter().cloned()));
    let k = gr.arity(target);
    let mut images: Vec<Poly> = gr
        .index_sets(target)
        .iter()
        .map(|s| stiefel_minor(&ring, target, k, s))
        .collect();
    for p in &params {
        images.push(Poly::var(&ring, p)?);
    }
    Ok(g.poly().substitute_images(&images, &ring))
}

/// Expresses a polynomial in Stiefel entries through Plücker coordinates and
/// returns its straightened (normalized) representative.
pub fn pluecker_lift(f: &Poly, d: usize, n: usize, flavor: Flavor) -> Result<PlueckerPoly> {
    Ok(pluecker_lift_exact(f, d, n, flavor)?.normalized())
}

/// Like [`pluecker_lift`] but keeps the exact scale: the result expands back
/// to `f` on the nose.
pub fn pluecker_lift_exact(f: &Poly, d: usize, n: usize, flavor: Flavor) -> Result<PlueckerPoly> {
    let gr = Grassmannian::new(d, n)?;
    let k = gr.arity(flavor);
    let mut params = Vec::new();
    for name in f.ring().names() {
        match parse_stiefel(flavor, name) {
            Some((r, c)) if r < k && c <= n => {}
            Some(_) => {
                return Err(Error::GrassmannianMismatch(format!(
                    "Stiefel entry `{name}` outside the {k} x {} matrix",
                    n + 1
                )))
            }
            None => params.push(name.clone()),
        }
    }
    let sring = stiefel_ring(gr, flavor);
    let ns = sring.len();
    let full = sring.union(&Ring::new(params.iter().cloned()));
    let f = f.embed(&full)?;
    let out_ring = gr.ring_with_params(flavor, &params);
    if f.is_zero() {
        return PlueckerPoly::new(gr, flavor, Poly::zero(&out_ring));
    }

    // Split by column degree; each part must be homogeneous of the same degree in every row.
    let row_of = |v: usize| v / (n + 1);
    let col_of = |v: usize| v % (n + 1);
    let mut degree: Option<u32> = None;
    let mut parts: BTreeMap<Vec<u32>, BTreeMap<Vec<u32>, Vec<(Monomial, Rational)>>> =
        BTreeMap::new();
    for (m, c) in f.terms() {
        let e = m.exps();
        let mut rows = vec![0u32; k];
        let mut cols = vec![0u32; n + 1];
        for (v, &x) in e[..ns].iter().enumerate() {
            rows[row_of(v)] += x;
            cols[col_of(v)] += x;
        }
        if rows.iter().any(|&r| r != rows[0]) || degree.is_some_and(|dg| dg != rows[0]) {
            return Err(Error::NotLiftable(
                "not homogeneous of a common degree in every row".into(),
            ));
        }
        degree = Some(rows[0]);
        let smono = Monomial::new(e[..ns].to_vec());
        parts
            .entry(cols)
            .or_default()
            .entry(e[ns..].to_vec())
            .or_default()
            .push((smono, c.clone()));
    }
    let deg = degree.unwrap_or(0);

    let gb = plucker_gb(gr, flavor)?;
    let leads: Vec<Monomial> = gb.as_ref().map(|g| g.leading_monomials()).unwrap_or_default();
    let sets = gr.index_sets(flavor);
    let minors: Vec<Poly> = sets
        .iter()
        .map(|s| stiefel_minor(&sring, flavor, k, s))
        .collect();
    let mut powers: HashMap<(usize, u32), Poly> = HashMap::new();

    let mut out = Poly::zero(&out_ring);
    for (mu, rhs) in &parts {
        let candidates: Vec<Vec<u32>> = monomials_with_multidegree(&sets, deg, mu)
            .into_iter()
            .filter(|e| {
                let m = Monomial::new(e.clone());
                !leads.iter().any(|l| l.divides(&m))
            })
            .collect();
        if candidates.is_empty() {
            return Err(Error::NotLiftable(format!(
                "no Plücker monomial has column degree {mu:?}"
            )));
        }
        let expansions: Vec<Poly> = candidates
            .iter()
            .map(|e| {
                let mut acc = Poly::one(&sring);
                for (v, &x) in e.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    let pw = powers
                        .entry((v, x))
                        .or_insert_with(|| minors[v].pow(x))
                        .clone();
                    acc = &acc * &pw;
                }
                acc
            })
            .collect();
        let mut rows: BTreeMap<Monomial, usize> = BTreeMap::new();
        for p in &expansions {
            for (m, _) in p.terms() {
                let next = rows.len();
                rows.entry(m.clone()).or_insert(next);
            }
        }
        for terms in rhs.values() {
            for (m, _) in terms {
                if !rows.contains_key(m) {
                    return Err(Error::NotLiftable(format!(
                        "Stiefel monomial {m:?} is not in the span of Plücker monomials"
                    )));
                }
            }
        }
        let keys: Vec<&Vec<u32>> = rhs.keys().collect();
        let mut mat: Matrix = vec![vec![Rational::zero(); candidates.len()]; rows.len()];
        for (j, p) in expansions.iter().enumerate() {
            for (m, c) in p.terms() {
                mat[rows[m]][j] = c.clone();
            }
        }
        let mut b: Matrix = vec![vec![Rational::zero(); keys.len()]; rows.len()];
        for (kk, key) in keys.iter().enumerate() {
            for (m, c) in &rhs[*key] {
                b[rows[m]][kk] = c.clone();
            }
        }
        let sol = solve_many(&mat, candidates.len(), &b).ok_or_else(|| {
            Error::NotLiftable(format!("inconsistent system in column degree {mu:?}"))
        })?;
        for (kk, key) in keys.iter().enumerate() {
            for (j, e) in candidates.iter().enumerate() {
                let c = &sol[kk][j];
                if c.is_zero() {
                    continue;
                }
                let mut exps = e.clone();
                exps.extend_from_slice(key);
                out.add_term(Monomial::new(exps), c.clone());
            }
        }
    }
    PlueckerPoly::new(gr, flavor, out)
}

/// Exponent vectors over the Plücker variables of total degree `deg` whose
/// multidegree equals `mu`.
fn monomials_with_multidegree(sets: &[Vec<usize>], deg: u32, mu: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; sets.len()];
    let mut rem = mu.to_vec();
    fn go(
        i: usize,
        left: u32,
        sets: &[Vec<usize>],
        rem: &mut Vec<u32>,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if left == 0 {
            if rem.iter().all(|&r| r == 0) {
                out.push(cur.clone());
            }
            return;
        }
        if i == sets.len() {
            return;
        }
        let max = sets[i].iter().map(|&j| rem[j]).min().unwrap_or(0).min(left);
        for e in (0..=max).rev() {
            for &j in &sets[i] {
                rem[j] -= e;
            }
            cur[i] = e;
            go(i + 1, left - e, sets, rem, cur, out);
            for &j in &sets[i] {
                rem[j] += e;
            }
        }
        cur[i] = 0;
    }
    go(0, deg, sets, &mut rem, &mut cur, &mut out);
    out
}

/// Maximal minors of a `k × (n+1)` rational matrix, indexed by increasing
/// column sets in lexicographic order.
pub fn maximal_minors(m: &Matrix) -> Vec<Rational> {
    let k = m.len();
    let cols = m.first().map_or(0, Vec::len);
    subsets(cols, k)
        .iter()
        .map(|s| {
            let sub: Matrix = m
                .iter()
                .map(|row| s.iter().map(|&c| row[c].clone()).collect())
                .collect();
            crate::linalg::determinant(&sub)
        })
        .collect()
}

/// Rows spanning `{x : m x = 0}`: turns a row presentation of a subspace into
/// a kernel presentation and vice versa.
pub fn orthogonal_rows(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    kernel(m, cols)
}
