use super::{HurwitzForm, Provenance, Variety};
use crate::error::{Error, Result};
use crate::grassmann::{pluecker_lift_exact, stiefel_ring, stiefel_var, Flavor, Grassmannian};
use crate::groebner::{eliminate_with, Budget, Ideal};
use crate::linalg::{poly_minor, subsets};
use crate::poly::{gcd, int, squarefree_part, Poly};
use crate::random::{Generic, DEFAULT_SEED};

#[derive(Clone, Debug)]
pub struct EliminationOptions {
    pub budget: Budget,
    pub seed: u64,
    /// Number of random affine charts tried before giving up.
    pub attempts: usize,
}

impl Default for EliminationOptions {
    fn default() -> Self {
        EliminationOptions {
            budget: Budget::default(),
            seed: DEFAULT_SEED,
            attempts: 3,
        }
    }
}

pub fn hurwitz_elimination(x: &Variety) -> Result<HurwitzForm> {
    hurwitz_elimination_with(x, &EliminationOptions::default())
}

/// Hurwitz form by elimination: a codimension-`d` subspace `ker A` is tangent
/// to `X` at `x` iff `x ∈ X`, `A x = 0` and the stacked matrix `[Jac(x); A]`
/// has rank below `n`. The point `x` is eliminated in a random affine chart.
pub fn hurwitz_elimination_with(x: &Variety, opts: &EliminationOptions) -> Result<HurwitzForm> {
    let xring = x.ideal.ring().clone();
    let n = x.ambient_dim();
    let d = x.dim;
    let gr = Grassmannian::new(d, n)?;
    let sring = stiefel_ring(gr, Flavor::Primal);
    if xring.names().iter().any(|v| sring.index_of(v).is_some()) {
        return Err(Error::Validation(
            "coordinate names collide with Stiefel entries".into(),
        ));
    }
    let ring = xring.union(&sring);
    let xs: Vec<Poly> = (0..=n).map(|i| Poly::var_at(&ring, i)).collect();
    let gens: Vec<Poly> = x
        .ideal
        .gens()
        .iter()
        .map(|g| g.embed(&ring))
        .collect::<Result<_>>()?;
    if gens.iter().all(|g| g.total_degree() <= Some(1)) {
        return Err(Error::DegreeTooSmall("linear space".into()));
    }

    let mut rows: Vec<Vec<Poly>> = gens
        .iter()
        .map(|g| (0..=n).map(|i| g.derivative(i)).collect())
        .collect();
    let mut incidence = gens.clone();
    for r in 0..d {
        let row: Vec<Poly> = (0..=n)
            .map(|c| Poly::var(&ring, &stiefel_var(Flavor::Primal, r, c)).unwrap())
            .collect();
        let lin = row
            .iter()
            .zip(&xs)
            .fold(Poly::zero(&ring), |acc, (a, xv)| &acc + &(a * xv));
        incidence.push(lin);
        rows.push(row);
    }
    let col_sets = subsets(n + 1, n);
    for rs in subsets(rows.len(), n) {
        for cs in &col_sets {
            let minor = poly_minor(&rows, &rs, cs, &ring);
            if !minor.is_zero() {
                incidence.push(minor);
            }
        }
    }

    let drop: Vec<String> = xring.names().to_vec();
    let mut rng = Generic::new(opts.seed);
    let mut last = Error::NotHypersurface("no attempt made".into());
    for _ in 0..opts.attempts.max(1) {
        let chart = xs.iter().fold(Poly::constant(&ring, int(-1)), |acc, xv| {
            &acc + &xv.scale(&int(rng.nonzero_int(9)))
        });
        let mut all = incidence.clone();
        all.push(chart);
        let elim = eliminate_with(&Ideal::new(&ring, all)?, &drop, &opts.budget)?;
        let g = elim
            .gens()
            .iter()
            .fold(Poly::zero(elim.ring()), |acc, h| gcd(&acc, h));
        if g.is_zero() || g.is_constant() {
            last = Error::NotHypersurface(format!(
                "eliminant has {} generators without common factor",
                elim.gens().len()
            ));
            continue;
        }
        let h = squarefree_part(&g)?.embed(&sring)?;
        let form = pluecker_lift_exact(&h, d, n, Flavor::Primal)?;
        return HurwitzForm::new(&form, Provenance::Elimination);
    }
    Err(last)
}
