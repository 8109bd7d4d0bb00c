use std::collections::BTreeMap;

use super::{HurwitzForm, Provenance};
use crate::error::{Error, Result};
use crate::grassmann::{
    pluecker_lift_exact, stiefel_ring, stiefel_var, Flavor, Grassmannian, PlueckerPoly,
};
use crate::groebner::{buchberger_with, Budget, Ideal, MonomialOrder};
use crate::poly::{discriminant, gcd, squarefree_part, Monomial, Poly, Ring};
use crate::random::{Generic, DEFAULT_SEED};

/// Knobs for [`hurwitz_hypersurface`].
#[derive(Clone, Debug)]
pub struct HypersurfaceOptions {
    /// Variables treated as parameters rather than coordinates.
    pub params: Vec<String>,
    /// Known extraneous factors of the discriminant (in the `u{r}_{c}` Stiefel
    /// entries) to divide out, one entry per multiplicity. When empty, singular
    /// inputs fall back to the squarefree part.
    pub factors: Vec<Poly>,
    pub budget: Budget,
    pub seed: u64,
}

impl Default for HypersurfaceOptions {
    fn default() -> Self {
        HypersurfaceOptions {
            params: Vec::new(),
            factors: Vec::new(),
            budget: Budget::default(),
            seed: DEFAULT_SEED,
        }
    }
}

impl HypersurfaceOptions {
    pub fn with_params<S: Into<String>>(params: impl IntoIterator<Item = S>) -> Self {
        HypersurfaceOptions {
            params: params.into_iter().map(Into::into).collect(),
            ..Default::default()
        }
    }
}

/// Whether `V(f)` has no singular points, checked on a random specialization
/// of the parameters.
pub fn is_smooth_hypersurface(f: &Poly, opts: &HypersurfaceOptions) -> Result<bool> {
    let (coords, _) = split_vars(f, &opts.params)?;
    let mut g = f.clone();
    let mut rng = Generic::new(opts.seed);
    for p in &opts.params {
        let i = f.ring().require(p)?;
        g = g.specialize(i, &rng.nonzero_rational(50, 7));
    }
    let cring = Ring::new(coords.iter().map(|&i| f.ring().name(i).to_string()));
    let g = g.embed(&cring)?;
    let jac: Vec<Poly> = (0..cring.len()).map(|i| g.derivative(i)).collect();
    let gb = buchberger_with(&Ideal::new(&cring, jac)?, &MonomialOrder::Grevlex, &opts.budget)?;
    Ok(gb.has_trivial_affine_cone())
}

fn split_vars(f: &Poly, params: &[String]) -> Result<(Vec<usize>, Vec<usize>)> {
    for p in params {
        f.ring().require(p)?;
    }
    let (par, coords): (Vec<usize>, Vec<usize>) =
        (0..f.ring().len()).partition(|&i| params.iter().any(|p| p == f.ring().name(i)));
    Ok((coords, par))
}

/// Hurwitz form of the hypersurface `V(f)`: the discriminant of `t ↦ f(u + t v)`
/// with extraneous factors removed, expressed in dual coordinates `q_ij`.
pub fn hurwitz_hypersurface(f: &Poly, opts: &HypersurfaceOptions) -> Result<HurwitzForm> {
    let (coords, par) = split_vars(f, &opts.params)?;
    if coords.len() < 3 {
        return Err(Error::DimensionMismatch(
            "a hypersurface needs at least three coordinates".into(),
        ));
    }
    if !f.is_homogeneous_in(&coords) {
        return Err(Error::NotHomogeneous);
    }
    let p = f
        .terms()
        .map(|(m, _)| coords.iter().map(|&i| m.exp(i)).sum::<u32>())
        .next()
        .unwrap_or(0);
    if p < 2 {
        return Err(Error::DegreeTooSmall(format!("degree {p}")));
    }
    let n = coords.len() - 1;
    let gr = Grassmannian::new(n - 1, n)?;
    let params: Vec<String> = par.iter().map(|&i| f.ring().name(i).to_string()).collect();
    let smooth = is_smooth_hypersurface(f, opts)?;
    if n == 2 && smooth {
        let form = plane_curve_chart(f, &coords, &par, &params, p * (p - 1))?;
        return HurwitzForm::new(&form.drop_unused_params(), Provenance::Hypersurface);
    }
    let sring = stiefel_ring(gr, Flavor::Dual);
    let base = sring.union(&Ring::new(params.iter().cloned()));
    let t = fresh_name(&base, "t");
    let work = base.union(&Ring::new([t.clone()]));
    let tv = Poly::var(&work, &t)?;

    let mut images = vec![Poly::zero(&work); f.ring().len()];
    for (c, &i) in coords.iter().enumerate() {
        let u = Poly::var(&work, &stiefel_var(Flavor::Dual, 0, c))?;
        let v = Poly::var(&work, &stiefel_var(Flavor::Dual, 1, c))?;
        images[i] = &u + &(&tv * &v);
    }
    for &i in &par {
        images[i] = Poly::var(&work, f.ring().name(i))?;
    }
    let line = f.substitute_images(&images, &work);
    let disc = discriminant(&line, &t)?;
    if disc.is_zero() {
        return Err(Error::NotSquarefree);
    }
    let mut disc = remove_param_content(&disc.embed(&base)?, sring.len()).primitive();

    if !smooth {
        if opts.factors.is_empty() {
            disc = squarefree_part(&disc)?;
        } else {
            for factor in &opts.factors {
                let factor = factor.embed(&base)?;
                disc = disc
                    .exact_divide(&factor)
                    .map_err(|_| Error::InexactFactor(format!("{factor} does not divide")))?;
            }
        }
    }
    let form = pluecker_lift_exact(&disc, n - 1, n, Flavor::Dual)?;
    HurwitzForm::new(&form.drop_unused_params(), Provenance::Hypersurface)
}

/// Smooth plane curves: evaluates the discriminant on the chart of lines
/// spanned by `(1, 0, X)` and `(0, 1, Y)`, where `q_01 = 1, q_02 = Y, q_12 = -X`,
/// and homogenizes to the known degree.
fn plane_curve_chart(
    f: &Poly,
    coords: &[usize],
    par: &[usize],
    params: &[String],
    degree: u32,
) -> Result<PlueckerPoly> {
    let pring = Ring::new(params.iter().cloned());
    let mut names = vec![fresh_name(&pring, "X")];
    let with_x = pring.union(&Ring::new(names.clone()));
    names.push(fresh_name(&with_x, "Y"));
    let base = Ring::new(names.clone()).union(&pring);
    let t = fresh_name(&base, "t");
    let work = base.union(&Ring::new([t.clone()]));
    let xv = Poly::var_at(&work, 0);
    let yv = Poly::var_at(&work, 1);
    let tv = Poly::var(&work, &t)?;
    let mut images = vec![Poly::zero(&work); f.ring().len()];
    images[coords[0]] = Poly::one(&work);
    images[coords[1]] = tv.clone();
    images[coords[2]] = &xv + &(&tv * &yv);
    for &i in par {
        images[i] = Poly::var(&work, f.ring().name(i))?;
    }
    let line = f.substitute_images(&images, &work);
    let disc = discriminant(&line, &t)?;
    if disc.is_zero() {
        return Err(Error::NotSquarefree);
    }
    let disc = remove_param_content(&disc.embed(&base)?, 2).primitive();

    let gr = Grassmannian::new(1, 2)?;
    let out_ring = gr.ring_with_params(Flavor::Dual, params);
    let mut out = Poly::zero(&out_ring);
    for (m, c) in disc.terms() {
        let e = m.exps();
        let (a, b) = (e[0], e[1]);
        if a + b > degree {
            return Err(Error::DegreeMismatch(format!(
                "chart term of degree {} exceeds {degree}",
                a + b
            )));
        }
        let mut exps = vec![degree - a - b, b, a];
        exps.extend_from_slice(&e[2..]);
        let c = if a % 2 == 1 { -c.clone() } else { c.clone() };
        out.add_term(Monomial::new(exps), c);
    }
    PlueckerPoly::new(gr, Flavor::Dual, out)
}

fn fresh_name(ring: &Ring, stem: &str) -> String {
    let mut name = stem.to_string();
    while ring.index_of(&name).is_some() {
        name.push('_');
    }
    name
}

/// Divides out the gcd of the coefficients, viewed as polynomials in the
/// variables after the first `k`.
pub(crate) fn remove_param_content(f: &Poly, k: usize) -> Poly {
    if f.ring().len() == k || f.is_zero() {
        return f.clone();
    }
    let ring = f.ring();
    let mut groups: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
    for (m, c) in f.terms() {
        let mut rest = m.exps().to_vec();
        let key = rest[..k].to_vec();
        rest[..k].iter_mut().for_each(|e| *e = 0);
        groups
            .entry(key)
            .or_insert_with(|| Poly::zero(ring))
            .add_term(Monomial::new(rest), c.clone());
    }
    let content = groups
        .values()
        .fold(Poly::zero(ring), |acc, g| gcd(&acc, g));
    if content.is_constant() {
        return f.clone();
    }
    f.exact_divide(&content).expect("content divides")
}
