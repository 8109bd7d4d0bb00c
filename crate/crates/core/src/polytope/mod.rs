//! Weight decompositions of Plücker forms and lattice polytopes with exact
//! vertex enumeration.

mod lp;

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::grassmann::PlueckerPoly;
use crate::linalg::{rank, Matrix};
use crate::poly::{int, Poly, Rational};

pub use lp::feasible_point;

/// Lattice polytope given by its sorted, irredundant vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    pub ambient: usize,
    pub vertices: Vec<Vec<i64>>,
    pub dim: usize,
}

impl Polytope {
    /// Convex hull of a point cloud.
    pub fn from_points(points: &[Vec<i64>]) -> Result<Polytope> {
        let Some(first) = points.first() else {
            return Err(Error::DegenerateInput("empty point set".into()));
        };
        let ambient = first.len();
        if points.iter().any(|p| p.len() != ambient) {
            return Err(Error::DimensionMismatch("points of different lengths".into()));
        }
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        let vertices: Vec<Vec<i64>> = (0..pts.len())
            .filter(|&i| {
                let others: Vec<&Vec<i64>> =
                    pts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p).collect();
                !in_hull(&others, &pts[i])
            })
            .map(|i| pts[i].clone())
            .collect();
        let dim = affine_dim(&vertices);
        Ok(Polytope {
            ambient,
            vertices,
            dim,
        })
    }

    /// Whether `x` lies in the polytope.
    pub fn contains(&self, x: &[i64]) -> bool {
        let refs: Vec<&Vec<i64>> = self.vertices.iter().collect();
        in_hull(&refs, x)
    }

    /// An integer weight in the open normal cone of `vertex`: strictly larger
    /// on `vertex` than on every other vertex.
    pub fn normal_cone_point(&self, vertex: &[i64]) -> Option<Vec<i64>> {
        if !self.vertices.iter().any(|v| v == vertex) {
            return None;
        }
        let others: Vec<&Vec<i64>> = self.vertices.iter().filter(|v| *v != vertex).collect();
        if others.is_empty() {
            return Some(vec![0; self.ambient]);
        }
        // Variables: w⁺, w⁻ (each of length ambient), then one slack per other vertex.
        let k = self.ambient;
        let cols = 2 * k + others.len();
        let mut a: Matrix = Vec::with_capacity(others.len());
        for (r, u) in others.iter().enumerate() {
            let mut row = vec![Rational::zero(); cols];
            for i in 0..k {
                let diff = int(vertex[i] - u[i]);
                row[i] = diff.clone();
                row[k + i] = -diff;
            }
            row[2 * k + r] = int(-1);
            a.push(row);
        }
        let b = vec![Rational::one(); others.len()];
        let x = feasible_point(&a, &b)?;
        let w: Vec<Rational> = (0..k).map(|i| &x[i] - &x[k + i]).collect();
        let den = w
            .iter()
            .fold(num_bigint::BigInt::one(), |acc, q| acc.lcm(q.denom()));
        w.iter()
            .map(|q| (q * Rational::from_integer(den.clone())).to_integer().to_i64())
            .collect()
    }
}

fn in_hull(points: &[&Vec<i64>], x: &[i64]) -> bool {
    if points.is_empty() {
        return false;
    }
    let k = x.len();
    let mut a: Matrix = (0..k)
        .map(|i| points.iter().map(|p| int(p[i])).collect())
        .collect();
    a.push(vec![Rational::one(); points.len()]);
    let mut b: Vec<Rational> = x.iter().map(|&v| int(v)).collect();
    b.push(Rational::one());
    feasible_point(&a, &b).is_some()
}

fn affine_dim(points: &[Vec<i64>]) -> usize {
    let Some(base) = points.first() else {
        return 0;
    };
    let diffs: Matrix = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| int(a - b)).collect())
        .collect();
    if diffs.is_empty() {
        0
    } else {
        rank(&diffs)
    }
}

/// Terms of `f` grouped by multidegree; the parts sum back to `f`.
pub fn weight_components(f: &PlueckerPoly) -> BTreeMap<Vec<i64>, PlueckerPoly> {
    let mut out: BTreeMap<Vec<i64>, Poly> = BTreeMap::new();
    for (m, c) in f.poly().terms() {
        out.entry(f.multidegree(m))
            .or_insert_with(|| Poly::zero(f.ring()))
            .add_term(m.clone(), c.clone());
    }
    out.into_iter().map(|(w, p)| (w, f.with_poly(p))).collect()
}

/// Weight polytope: convex hull of the multidegrees of the terms.
pub fn hurwitz_polytope(f: &PlueckerPoly) -> Result<Polytope> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let weights: Vec<Vec<i64>> = weight_components(f).into_keys().collect();
    Polytope::from_points(&weights)
}

/// Sub-sum of the terms whose multidegree maximizes `w · deg`.
pub fn initial_form(f: &PlueckerPoly, w: &[i64]) -> Result<PlueckerPoly> {
    if w.len() != f.grassmannian().n + 1 {
        return Err(Error::DimensionMismatch(format!(
            "weight of length {} for P^{}",
            w.len(),
            f.grassmannian().n
        )));
    }
    let comps = weight_components(f);
    let score = |d: &Vec<i64>| d.iter().zip(w).map(|(a, b)| a * b).sum::<i64>();
    let Some(best) = comps.keys().map(score).max() else {
        return Ok(f.clone());
    };
    let mut out = Poly::zero(f.ring());
    for (d, part) in &comps {
        if score(d) == best {
            out = &out + part.poly();
        }
    }
    Ok(f.with_poly(out))
}

/// Whether `p` is a lattice translate of `k · q`.
pub fn polytope_scale_compare(p: &Polytope, q: &Polytope, k: i64) -> Result<bool> {
    if p.ambient != q.ambient {
        return Err(Error::DimensionMismatch(format!(
            "ambient {} vs {}",
            p.ambient, q.ambient
        )));
    }
    if p.vertices.len() != q.vertices.len() || p.vertices.is_empty() {
        return Ok(false);
    }
    let mut scaled: Vec<Vec<i64>> = q
        .vertices
        .iter()
        .map(|v| v.iter().map(|x| x * k).collect())
        .collect();
    scaled.sort();
    let shift: Vec<i64> = p.vertices[0]
        .iter()
        .zip(&scaled[0])
        .map(|(a, b)| a - b)
        .collect();
    Ok(p
        .vertices
        .iter()
        .zip(&scaled)
        .all(|(a, b)| a.iter().zip(b).zip(&shift).all(|((x, y), s)| x - y == *s)))
}

#[cfg(test)]
mod tests;
