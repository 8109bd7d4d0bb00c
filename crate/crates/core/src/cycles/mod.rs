//! Hurwitz forms of reduced cycles and of coordinate subspace arrangements,
//! Stanley–Reisner complexes, and flat-limit checks for degenerating families.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::grassmann::{dualize, equal_up_to_scalar, straighten, Flavor, Grassmannian, PlueckerPoly};
use crate::groebner::Ideal;
use crate::hurwitz::{hurwitz_hypersurface, HypersurfaceOptions};
use crate::linalg::subsets;
use crate::poly::{squarefree_part, Monomial, Poly, Rational};

/// Simplicial complex on the vertices `0..=n`, stored by its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Sorts facets, rejects malformed or nested ones.
    pub fn new(n: usize, facets: Vec<Vec<usize>>) -> Result<SimplicialComplex> {
        let mut facets = facets;
        for f in &facets {
            if f.windows(2).any(|w| w[0] >= w[1]) || f.iter().any(|&v| v > n) {
                return Err(Error::Validation(format!(
                    "facet {f:?} is not an increasing subset of 0..={n}"
                )));
            }
        }
        facets.sort();
        facets.dedup();
        for (i, a) in facets.iter().enumerate() {
            for (j, b) in facets.iter().enumerate() {
                if i != j && is_subset(a, b) {
                    return Err(Error::Validation(format!("facet {a:?} lies in {b:?}")));
                }
            }
        }
        Ok(SimplicialComplex { n, facets })
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Dimension of a pure complex.
    pub fn dim(&self) -> Result<usize> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        self.facets
            .first()
            .map(|f| f.len().saturating_sub(1))
            .ok_or_else(|| Error::DegenerateInput("complex without facets".into()))
    }

    pub fn contains_face(&self, s: &[usize]) -> bool {
        self.facets.iter().any(|f| is_subset(s, f))
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

/// A codimension-one face and the number of facets containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RidgeMultiplicity {
    pub ridge: Vec<usize>,
    pub nu: u32,
}

pub fn ridges_with_multiplicity(k: &SimplicialComplex) -> Result<Vec<RidgeMultiplicity>> {
    k.dim()?;
    let mut counts: BTreeMap<Vec<usize>, u32> = BTreeMap::new();
    for f in &k.facets {
        for skip in 0..f.len() {
            let ridge: Vec<usize> = f
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect();
            *counts.entry(ridge).or_default() += 1;
        }
    }
    Ok(counts
        .into_iter()
        .map(|(ridge, nu)| RidgeMultiplicity { ridge, nu })
        .collect())
}

/// `∏_Z p_Z^{2ν(Z)-2}` over the ridges of a pure `d`-dimensional complex, in
/// the coordinates of `Gr(d, P^n)` of the requested flavor.
pub fn coordinate_arrangement_hurwitz(
    k: &SimplicialComplex,
    flavor: Flavor,
) -> Result<PlueckerPoly> {
    let d = k.dim()?;
    let gr = Grassmannian::new(d, k.n)?;
    let ring = gr.ring(Flavor::Primal);
    let mut exps = vec![0u32; ring.len()];
    let sets = gr.index_sets(Flavor::Primal);
    for r in ridges_with_multiplicity(k)? {
        if r.nu >= 2 {
            let i = sets.iter().position(|s| *s == r.ridge).expect("ridge index");
            exps[i] += 2 * r.nu - 2;
        }
    }
    let primal = PlueckerPoly::new(
        gr,
        Flavor::Primal,
        Poly::monomial(&ring, Monomial::new(exps), Rational::from_integer(1.into())),
    )?;
    Ok(match flavor {
        Flavor::Primal => primal,
        Flavor::Dual => dualize(&primal).normalized(),
    })
}

/// Facets of the complex whose non-faces are generated by the supports of the
/// squarefree monomial generators of `m`: complements of the minimal vertex
/// covers of those supports. Purity is not enforced; see [`SimplicialComplex::is_pure`].
pub fn stanley_reisner_complex(m: &Ideal, n: usize) -> Result<SimplicialComplex> {
    if m.ring().len() != n + 1 {
        return Err(Error::DimensionMismatch(format!(
            "ideal in {} variables for vertices 0..={n}",
            m.ring().len()
        )));
    }
    if !m.is_squarefree_monomial() {
        return Err(Error::NotSquarefree);
    }
    let edges: Vec<Vec<usize>> = m
        .gens()
        .iter()
        .map(|g| g.lead().expect("nonzero generator").0.support())
        .collect();
    if edges.iter().any(Vec::is_empty) {
        return Err(Error::DegenerateInput("unit ideal".into()));
    }
    let covers = minimal_transversals(&edges);
    let facets = covers
        .into_iter()
        .map(|c| (0..=n).filter(|v| !c.contains(v)).collect())
        .collect();
    SimplicialComplex::new(n, facets)
}

fn minimal_transversals(edges: &[Vec<usize>]) -> Vec<Vec<usize>> {
    fn go(edges: &[Vec<usize>], chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        match edges.iter().find(|e| !e.iter().any(|v| chosen.contains(v))) {
            None => {
                let mut c = chosen.clone();
                c.sort_unstable();
                out.push(c);
            }
            Some(e) => {
                for &v in e {
                    chosen.push(v);
                    go(edges, chosen, out);
                    chosen.pop();
                }
            }
        }
    }
    let mut all = Vec::new();
    go(edges, &mut Vec::new(), &mut all);
    all.sort_by_key(|c| (c.len(), c.clone()));
    all.dedup();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for c in all {
        if !out.iter().any(|m| is_subset(m, &c)) {
            out.push(c);
        }
    }
    out.sort();
    out
}

/// Minimal non-faces of `k`, as squarefree monomials in `x0..x_n`.
pub fn stanley_reisner_ideal(k: &SimplicialComplex) -> Result<Ideal> {
    let ring = crate::poly::Ring::indexed("x", k.n + 1);
    let top = k.facets.iter().map(Vec::len).max().unwrap_or(0);
    let mut gens = Vec::new();
    for size in 1..=(top + 1).min(k.n + 1) {
        for s in subsets(k.n + 1, size) {
            if k.contains_face(&s) {
                continue;
            }
            let minimal = (0..s.len()).all(|skip| {
                let sub: Vec<usize> = s
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                k.contains_face(&sub)
            });
            if minimal {
                let mut e = vec![0u32; k.n + 1];
                for &v in &s {
                    e[v] = 1;
                }
                gens.push(Poly::monomial(
                    &ring,
                    Monomial::new(e),
                    Rational::from_integer(1.into()),
                ));
            }
        }
    }
    Ideal::new(&ring, gens)
}

/// One irreducible component of a reduced cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    /// A linear space, whose Hurwitz form is the constant 1.
    Linear,
    Form(PlueckerPoly),
}

/// `Y = Σ Y_i` together with the codimension-one strata `Z_j` (given by their
/// Chow forms) and multiplicities `ν_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedCycle {
    pub gr: Grassmannian,
    pub components: Vec<Component>,
    pub intersections: Vec<(PlueckerPoly, u32)>,
}

/// Chow form `u_0 p_0 + ... + u_n p_n` of a point, on hyperplanes of `P^n`.
pub fn chow_point(u: &[Rational]) -> Result<PlueckerPoly> {
    if u.len() < 2 || u.iter().all(Zero::is_zero) {
        return Err(Error::DegenerateInput("point needs a nonzero coordinate".into()));
    }
    let gr = Grassmannian::new(1, u.len() - 1)?;
    let ring = gr.ring(Flavor::Primal);
    let f = u.iter().enumerate().fold(Poly::zero(&ring), |acc, (i, c)| {
        &acc + &Poly::var_at(&ring, i).scale(c)
    });
    PlueckerPoly::new(gr, Flavor::Primal, f)
}

/// `∏ Hu_{Y_i} · ∏ Ch_{Z_j}^{2ν_j - 2}`, straightened, in primal coordinates.
pub fn cycle_hurwitz(y: &ReducedCycle) -> Result<PlueckerPoly> {
    let ring = y.gr.ring(Flavor::Primal);
    let as_primal = |f: &PlueckerPoly| -> Result<Poly> {
        if f.grassmannian() != y.gr {
            return Err(Error::GrassmannianMismatch(format!(
                "form on Gr({}, P^{}) in a cycle on Gr({}, P^{})",
                f.grassmannian().d,
                f.grassmannian().n,
                y.gr.d,
                y.gr.n
            )));
        }
        if !f.params().is_empty() {
            return Err(Error::Validation("cycle forms may not carry parameters".into()));
        }
        Ok(match f.flavor() {
            Flavor::Primal => f.poly().clone(),
            Flavor::Dual => dualize(f).into_poly(),
        })
    };
    let mut out = Poly::one(&ring);
    for c in &y.components {
        if let Component::Form(f) = c {
            out = &out * &as_primal(f)?;
        }
    }
    for (ch, nu) in &y.intersections {
        if *nu < 1 {
            return Err(Error::ParameterRange("multiplicity must be positive".into()));
        }
        out = &out * &as_primal(ch)?.pow(2 * nu - 2);
    }
    straighten(&PlueckerPoly::new(y.gr, Flavor::Primal, out)?)
}

/// Outcome of [`flat_limit_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatLimitReport {
    pub passed: bool,
    /// Hurwitz form of the family at `ε = 0` after removing the ε-content.
    pub limit: PlueckerPoly,
    pub expected: PlueckerPoly,
    pub limit_degree: u32,
    pub expected_degree: u32,
}

/// Compares the `ε → 0` limit of the Hurwitz forms of the hypersurfaces
/// `V(family)` with the Hurwitz form of the declared reduced special fiber.
pub fn flat_limit_check(family: &Poly, eps: &str, spec: &ReducedCycle) -> Result<FlatLimitReport> {
    let e = family.ring().require(eps)?;
    let fiber = family.specialize(e, &Rational::zero());
    if fiber.is_zero() {
        return Err(Error::DegenerateInput("special fiber is zero".into()));
    }
    if squarefree_part(&fiber)?.total_degree() != fiber.total_degree() {
        return Err(Error::NonreducedLimit(format!("{fiber} is not squarefree")));
    }
    let hu = hurwitz_hypersurface(family, &HypersurfaceOptions::with_params([eps]))?;
    let limit = if hu.form.params().is_empty() {
        hu.form.clone()
    } else {
        hu.form.specialize(eps, &Rational::zero())?.drop_unused_params()
    };
    let limit = straighten(&dualize(&limit))?;
    let expected = cycle_hurwitz(spec)?;
    let limit_degree = limit.pluecker_degree().unwrap_or(0);
    let expected_degree = expected.pluecker_degree().unwrap_or(0);
    let passed = limit_degree == expected_degree && equal_up_to_scalar(&limit, &expected)?;
    Ok(FlatLimitReport {
        passed,
        limit,
        expected,
        limit_degree,
        expected_degree,
    })
}

#[cfg(test)]
mod tests;
