use num_traits::{One, Zero};

use super::{hurwitz_hypersurface, HypersurfaceOptions};
use crate::error::{Error, Result};
use crate::grassmann::{dualize, equal_up_to_scalar, Flavor, Grassmannian, PlueckerPoly};
use crate::groebner::{buchberger, Ideal, MonomialOrder};
use crate::poly::{rational_roots, squarefree_part, Poly, Rational, Ring};

/// Rational points of `V(f, g)` in the projective plane, each scaled so its
/// first nonzero coordinate is 1, in lexicographic order.
pub fn intersection_points(f: &Poly, g: &Poly) -> Result<Vec<Vec<Rational>>> {
    let ring = f.ring();
    if ring.len() != 3 || g.ring() != ring {
        return Err(Error::DimensionMismatch("need two ternary forms".into()));
    }
    let mut out = Vec::new();
    for k in 0..3 {
        let mut fixed = vec![None; 3];
        for slot in fixed.iter_mut().take(k) {
            *slot = Some(Rational::zero());
        }
        fixed[k] = Some(Rational::one());
        let polys: Vec<Poly> = [f, g].iter().map(|h| fix(h, &fixed)).collect();
        solve(ring, polys, fixed, &mut out)?;
    }
    out.sort();
    Ok(out)
}

fn fix(h: &Poly, fixed: &[Option<Rational>]) -> Poly {
    fixed
        .iter()
        .enumerate()
        .fold(h.clone(), |acc, (i, v)| match v {
            Some(v) => acc.specialize(i, v),
            None => acc,
        })
}

fn solve(
    ring: &Ring,
    polys: Vec<Poly>,
    fixed: Vec<Option<Rational>>,
    out: &mut Vec<Vec<Rational>>,
) -> Result<()> {
    let polys: Vec<Poly> = polys.into_iter().filter(|p| !p.is_zero()).collect();
    if polys.iter().any(Poly::is_constant) {
        return Ok(());
    }
    let Some(var) = (0..fixed.len()).rev().find(|&i| fixed[i].is_none()) else {
        out.push(fixed.into_iter().map(Option::unwrap).collect());
        return Ok(());
    };
    if polys.is_empty() {
        return Err(Error::DegenerateInput("curves share a component".into()));
    }
    let gb = buchberger(&Ideal::new(ring, polys.clone())?, &MonomialOrder::Lex)?;
    if gb.is_unit() {
        return Ok(());
    }
    let Some(eliminant) = gb.basis().iter().find(|b| b.used_vars() == [var]) else {
        return Err(Error::DegenerateInput("curves share a component".into()));
    };
    let roots = rational_roots(eliminant)?;
    let sq = squarefree_part(eliminant)?;
    if sq.degree_in(var) as usize != roots.len() {
        return Err(Error::NonRationalIntersection(format!(
            "{eliminant} has irrational roots"
        )));
    }
    for r in roots {
        let mut next = fixed.clone();
        next[var] = Some(r.clone());
        let sub: Vec<Poly> = gb.basis().iter().map(|b| b.specialize(var, &r)).collect();
        solve(ring, sub, next, out)?;
    }
    Ok(())
}

/// `(Hu_{V(f)})^q · ∏_{u ∈ V(f,g)} (u_0 p_0 + u_1 p_1 + u_2 p_2)^{q-1}` in the
/// primal coordinates of lines in the plane. Points are computed when not given.
pub fn katz_rhs(
    f: &Poly,
    g: &Poly,
    q: u32,
    points: Option<&[Vec<Rational>]>,
) -> Result<PlueckerPoly> {
    if q == 0 {
        return Err(Error::ParameterRange("q must be positive".into()));
    }
    let r = homogeneous_degree(f)?;
    let p = homogeneous_degree(g)?;
    if p != q * r {
        return Err(Error::DegreeMismatch(format!(
            "deg g = {p} but q·deg f = {}",
            q * r
        )));
    }
    let computed;
    let points = match points {
        Some(pts) => pts,
        None => {
            computed = intersection_points(f, g)?;
            &computed[..]
        }
    };
    if points.len() != (r * p) as usize {
        return Err(Error::DegenerateInput(format!(
            "expected {} distinct intersection points, found {}",
            r * p,
            points.len()
        )));
    }
    let gr = Grassmannian::new(1, 2)?;
    let ring = gr.ring(Flavor::Primal);
    let base = if r == 1 {
        Poly::one(&ring)
    } else {
        let hu = hurwitz_hypersurface(f, &HypersurfaceOptions::default())?;
        dualize(&hu.form).into_poly()
    };
    let mut out = base.pow(q);
    for u in points {
        if u.len() != 3 {
            return Err(Error::DimensionMismatch("points need three coordinates".into()));
        }
        let ch = (0..3).fold(Poly::zero(&ring), |acc, i| {
            &acc + &Poly::var_at(&ring, i).scale(&u[i])
        });
        out = &out * &ch.pow(q - 1);
    }
    if out.total_degree() != Some(p * (p - 1)) {
        return Err(Error::DegreeMismatch(format!(
            "product has degree {:?}, expected {}",
            out.total_degree(),
            p * (p - 1)
        )));
    }
    PlueckerPoly::new(gr, Flavor::Primal, out)
}

fn homogeneous_degree(f: &Poly) -> Result<u32> {
    if f.is_zero() || !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Ok(f.total_degree().unwrap_or(0))
}

/// Compares the `ε → 0` limit of the Hurwitz form of `V(f^q + ε g)`, with the
/// ε-content removed, against [`katz_rhs`].
pub fn katz_limit_check(f: &Poly, g: &Poly, q: u32) -> Result<bool> {
    if q == 1 {
        return Ok(true);
    }
    let rhs = katz_rhs(f, g, q, None)?;
    let mut eps = "eps".to_string();
    while f.ring().index_of(&eps).is_some() {
        eps.push('_');
    }
    let ring = f.ring().union(&Ring::new([eps.clone()]));
    let family = &f.embed(&ring)?.pow(q) + &(&Poly::var(&ring, &eps)? * &g.embed(&ring)?);
    let hu = hurwitz_hypersurface(&family, &HypersurfaceOptions::with_params([eps.clone()]))?;
    let limit = if hu.form.params().contains(&eps) {
        hu.form.specialize(&eps, &Rational::zero())?.drop_unused_params()
    } else {
        hu.form.clone()
    };
    if limit.is_zero() {
        return Ok(false);
    }
    equal_up_to_scalar(&rhs, &limit)
}
