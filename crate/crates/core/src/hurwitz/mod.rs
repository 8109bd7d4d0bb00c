//! Hurwitz forms: degree formulas, the closed form for quadrics, the
//! discriminant algorithm for hypersurfaces, elimination for general
//! varieties, and limits of degenerating plane curves.

mod elimination;
mod hypersurface;
mod katz;

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::grassmann::{straighten, Flavor, Grassmannian, PlueckerPoly};
use crate::groebner::{hilbert_polynomial, sectional_invariants, HilbertData, Ideal};
use crate::linalg::{poly_minor, rank, subsets, Matrix};
use crate::poly::{Poly, Ring};

pub use crate::groebner::hdeg_from_hilbert;
pub use elimination::{hurwitz_elimination, hurwitz_elimination_with, EliminationOptions};
pub use hypersurface::{hurwitz_hypersurface, is_smooth_hypersurface, HypersurfaceOptions};
pub use katz::{intersection_points, katz_limit_check, katz_rhs};

/// Which algorithm produced a [`HurwitzForm`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Quadric,
    ConicAdjoint,
    Hypersurface,
    Elimination,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Quadric => "quadric",
            Provenance::ConicAdjoint => "conic-adjoint",
            Provenance::Hypersurface => "hypersurface-discriminant",
            Provenance::Elimination => "elimination",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A straightened, normalized Hurwitz form with its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzForm {
    pub form: PlueckerPoly,
    pub hdeg: u32,
    pub provenance: Provenance,
}

impl HurwitzForm {
    pub fn new(form: &PlueckerPoly, provenance: Provenance) -> Result<HurwitzForm> {
        let form = straighten(form)?;
        let hdeg = form.pluecker_degree().ok_or(Error::ZeroPolynomial)?;
        Ok(HurwitzForm {
            form,
            hdeg,
            provenance,
        })
    }
}

/// Projective variety `X ⊂ P^n` given by a homogeneous ideal and its dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variety {
    pub ideal: Ideal,
    pub dim: usize,
    /// Degree and sectional genus, if known in advance.
    pub invariants: Option<(i64, i64)>,
}

impl Variety {
    pub fn new(ideal: Ideal, dim: usize) -> Result<Variety> {
        if dim == 0 {
            return Err(Error::ParameterRange("dimension must be at least 1".into()));
        }
        if !ideal.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        if dim + 1 >= ideal.ring().len() {
            return Err(Error::DimensionMismatch(format!(
                "dimension {dim} in P^{}",
                ideal.ring().len().saturating_sub(1)
            )));
        }
        Ok(Variety {
            ideal,
            dim,
            invariants: None,
        })
    }

    pub fn with_invariants(mut self, p: i64, g: i64) -> Variety {
        self.invariants = Some((p, g));
        self
    }

    pub fn ambient_dim(&self) -> usize {
        self.ideal.ring().len() - 1
    }

    pub fn hilbert(&self) -> Result<HilbertData> {
        let h = hilbert_polynomial(&self.ideal)?;
        if h.dimension != self.dim as i64 {
            return Err(Error::DimensionMismatch(format!(
                "declared dimension {} but the Hilbert polynomial has degree {}",
                self.dim, h.dimension
            )));
        }
        Ok(h)
    }

    /// Degree and sectional genus, computed from the Hilbert polynomial unless supplied.
    pub fn degree_and_genus(&self) -> Result<(i64, i64)> {
        if let Some(pg) = self.invariants {
            return Ok(pg);
        }
        let h = self.hilbert()?;
        sectional_invariants(&h.hilbert_polynomial, h.dimension)
    }

    pub fn hdeg(&self) -> Result<i64> {
        let (p, g) = self.degree_and_genus()?;
        hdeg(p, g)
    }
}

/// Degree `2p + 2g - 2` of the Hurwitz form of a variety of degree `p` and
/// sectional genus `g`.
pub fn hdeg(p: i64, g: i64) -> Result<i64> {
    if p < 2 {
        return Err(Error::DegreeTooSmall(format!("degree {p}")));
    }
    Ok(2 * p + 2 * g - 2)
}

fn check_symmetric(m: &Matrix) -> Result<usize> {
    let size = m.len();
    if size == 0 || m.iter().any(|row| row.len() != size) {
        return Err(Error::DimensionMismatch("matrix must be square".into()));
    }
    for i in 0..size {
        for j in 0..i {
            if m[i][j] != m[j][i] {
                return Err(Error::NotSymmetric);
            }
        }
    }
    Ok(size)
}

/// Symmetric matrix of the quadratic form `f`, so that `f = x^T M x`.
pub fn quadric_matrix(f: &Poly) -> Result<Matrix> {
    if !f.is_homogeneous() || f.total_degree() != Some(2) {
        return Err(Error::DegreeMismatch(format!("{f} is not a quadratic form")));
    }
    let n = f.ring().len();
    let mut m: Matrix = vec![vec![Zero::zero(); n]; n];
    for (mono, c) in f.terms() {
        let s = mono.support();
        if s.len() == 1 {
            m[s[0]][s[0]] = c.clone();
        } else {
            let half = c / crate::poly::int(2);
            m[s[0]][s[1]] = half.clone();
            m[s[1]][s[0]] = half;
        }
    }
    Ok(m)
}

/// Second exterior power: rows and columns indexed by increasing pairs,
/// entry `((i,j),(k,l)) = M_ik M_jl - M_il M_jk`.
pub fn exterior_square(m: &Matrix) -> Matrix {
    let pairs = subsets(m.len(), 2);
    pairs
        .iter()
        .map(|a| {
            pairs
                .iter()
                .map(|b| {
                    let (i, j, k, l) = (a[0], a[1], b[0], b[1]);
                    &m[i][k] * &m[j][l] - &m[i][l] * &m[j][k]
                })
                .collect()
        })
        .collect()
}

/// Hurwitz form of the quadric `x^T M x = 0`: the quadratic form of `∧²M` in
/// the dual coordinates `q_ij`.
pub fn hurwitz_quadric(m: &Matrix) -> Result<HurwitzForm> {
    let size = check_symmetric(m)?;
    if size < 3 {
        return Err(Error::DimensionMismatch(format!(
            "quadric in P^{} has no Hurwitz form",
            size - 1
        )));
    }
    if rank(m) < 2 {
        return Err(Error::RankTooSmall("rank below 2".into()));
    }
    let gr = Grassmannian::new(size - 2, size - 1)?;
    let raw = quadric_form_raw(m, gr)?;
    HurwitzForm::new(&raw, Provenance::Quadric)
}

/// Unstraightened `Q (∧²M) Q^T` in the dual coordinates.
pub fn quadric_form_raw(m: &Matrix, gr: Grassmannian) -> Result<PlueckerPoly> {
    let w = exterior_square(m);
    let ring = gr.ring(Flavor::Dual);
    let mut f = Poly::zero(&ring);
    let vars: Vec<Poly> = (0..ring.len()).map(|i| Poly::var_at(&ring, i)).collect();
    for (a, row) in w.iter().enumerate() {
        for (b, c) in row.iter().enumerate() {
            if !c.is_zero() {
                f = &f + &(&vars[a] * &vars[b]).scale(c);
            }
        }
    }
    PlueckerPoly::new(gr, Flavor::Dual, f)
}

/// Classical adjugate (transposed cofactor matrix) of a square polynomial matrix.
pub fn adjugate(m: &[Vec<Poly>], ring: &Ring) -> Vec<Vec<Poly>> {
    let n = m.len();
    let others = |skip: usize| (0..n).filter(|&i| i != skip).collect::<Vec<_>>();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let minor = poly_minor(m, &others(j), &others(i), ring);
                    if (i + j) % 2 == 1 {
                        -minor
                    } else {
                        minor
                    }
                })
                .collect()
        })
        .collect()
}

/// Hurwitz form of a plane conic as the quadratic form of the adjugate in
/// `p_0, p_1, p_2`. Entries may involve parameters.
pub fn conic_adjoint(m: &[Vec<Poly>]) -> Result<HurwitzForm> {
    if m.len() != 3 || m.iter().any(|row| row.len() != 3) {
        return Err(Error::DimensionMismatch("conic matrix must be 3 x 3".into()));
    }
    let pring = m[0][0].ring().clone();
    for i in 0..3 {
        for j in 0..3 {
            if m[i][j].ring() != &pring {
                return Err(Error::RingMismatch("matrix entries over different rings".into()));
            }
            if m[i][j] != m[j][i] {
                return Err(Error::NotSymmetric);
            }
        }
    }
    let adj = adjugate(m, &pring);
    let gr = Grassmannian::new(1, 2)?;
    let ring = gr.ring_with_params(Flavor::Primal, pring.names());
    let mut f = Poly::zero(&ring);
    for i in 0..3 {
        for j in 0..3 {
            let entry = adj[i][j].embed(&ring)?;
            f = &f + &(&entry * &(&Poly::var_at(&ring, i) * &Poly::var_at(&ring, j)));
        }
    }
    if f.is_zero() {
        return Err(Error::RankTooSmall("adjugate vanishes".into()));
    }
    let form = PlueckerPoly::new(gr, Flavor::Primal, f)?.drop_unused_params();
    HurwitzForm::new(&form, Provenance::ConicAdjoint)
}

/// [`conic_adjoint`] for a rational matrix.
pub fn conic_adjoint_rational(m: &Matrix) -> Result<HurwitzForm> {
    if check_symmetric(m)? != 3 {
        return Err(Error::DimensionMismatch("conic matrix must be 3 x 3".into()));
    }
    let ring = Ring::new(Vec::<String>::new());
    let entries: Vec<Vec<Poly>> = m
        .iter()
        .map(|row| row.iter().map(|c| Poly::constant(&ring, c.clone())).collect())
        .collect();
    conic_adjoint(&entries)
}

#[cfg(test)]
mod tests;
