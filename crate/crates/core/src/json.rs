//! JSON interchange formats for polynomials, ideals, Plücker forms, polytopes,
//! complexes and matrices.

use serde::{Deserialize, Serialize};

use crate::cycles::SimplicialComplex;
use crate::error::{Error, Result};
use crate::grassmann::{Flavor, Grassmannian, PlueckerPoly};
use crate::groebner::{Ideal, MonomialOrder};
use crate::hurwitz::HurwitzForm;
use crate::linalg::Matrix;
use crate::poly::{format_rational, parse_rational, Monomial, Poly, Rational, Ring};
use crate::polytope::Polytope;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn from_poly(f: &Poly) -> PolyJson {
        PolyJson {
            vars: f.ring().names().to_vec(),
            terms: f
                .terms()
                .map(|(m, c)| TermJson {
                    c: format_rational(c),
                    e: m.exps().to_vec(),
                })
                .collect(),
        }
    }

    pub fn to_poly(&self) -> Result<Poly> {
        let mut seen = std::collections::BTreeSet::new();
        if let Some(dup) = self.vars.iter().find(|v| !seen.insert(v.as_str())) {
            return Err(Error::Validation(format!("duplicate variable `{dup}`")));
        }
        let ring = Ring::new(self.vars.iter().cloned());
        let mut f = Poly::zero(&ring);
        for t in &self.terms {
            if t.e.len() != ring.len() {
                return Err(Error::Validation(format!(
                    "exponent vector {:?} has length {} for {} variables",
                    t.e,
                    t.e.len(),
                    ring.len()
                )));
            }
            f.add_term(Monomial::new(t.e.clone()), parse_rational(&t.c)?);
        }
        Ok(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub vars: Vec<String>,
    pub gens: Vec<PolyJson>,
}

impl IdealJson {
    pub fn from_ideal(i: &Ideal) -> IdealJson {
        IdealJson {
            vars: i.ring().names().to_vec(),
            gens: i.gens().iter().map(PolyJson::from_poly).collect(),
        }
    }

    /// Generators may list their own variables; each is embedded into `vars`.
    pub fn to_ideal(&self) -> Result<Ideal> {
        let ring = Ring::new(self.vars.iter().cloned());
        let gens = self
            .gens
            .iter()
            .map(|g| g.to_poly()?.embed(&ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&ring, gens)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub w: Vec<i64>,
}

impl OrderJson {
    pub fn to_order(&self) -> Result<MonomialOrder> {
        match self.kind.as_str() {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" => Ok(MonomialOrder::Grevlex),
            "weight" => Ok(MonomialOrder::Weight(self.w.clone())),
            k => Err(Error::Validation(format!("unknown monomial order `{k}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlueckerJson {
    pub d: usize,
    pub n: usize,
    pub flavor: String,
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl PlueckerJson {
    pub fn from_form(f: &PlueckerPoly) -> PlueckerJson {
        let p = PolyJson::from_poly(f.poly());
        let gr = f.grassmannian();
        PlueckerJson {
            d: gr.d,
            n: gr.n,
            flavor: f.flavor().name().to_string(),
            vars: p.vars,
            terms: p.terms,
        }
    }

    pub fn to_form(&self) -> Result<PlueckerPoly> {
        let gr = Grassmannian::new(self.d, self.n)?;
        let flavor = Flavor::parse(&self.flavor)?;
        let poly = PolyJson {
            vars: self.vars.clone(),
            terms: self.terms.clone(),
        }
        .to_poly()?;
        PlueckerPoly::from_named(gr, flavor, &poly)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HurwitzJson {
    pub hurwitz: PlueckerJson,
    pub hdeg: u32,
    pub provenance: String,
}

impl HurwitzJson {
    pub fn from_form(h: &HurwitzForm) -> HurwitzJson {
        HurwitzJson {
            hurwitz: PlueckerJson::from_form(&h.form),
            hdeg: h.hdeg,
            provenance: h.provenance.as_str().to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub ambient: usize,
    pub vertices: Vec<Vec<i64>>,
    pub dim: usize,
}

impl PolytopeJson {
    pub fn from_polytope(p: &Polytope) -> PolytopeJson {
        PolytopeJson {
            ambient: p.ambient,
            vertices: p.vertices.clone(),
            dim: p.dim,
        }
    }

    /// Rebuilds the polytope from its points, recomputing vertices and dimension.
    pub fn to_polytope(&self) -> Result<Polytope> {
        if self.vertices.iter().any(|v| v.len() != self.ambient) {
            return Err(Error::Validation(format!(
                "vertices must have {} coordinates",
                self.ambient
            )));
        }
        Polytope::from_points(&self.vertices)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

impl ComplexJson {
    pub fn from_complex(k: &SimplicialComplex) -> ComplexJson {
        ComplexJson {
            n: k.n,
            facets: k.facets.clone(),
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::new(self.n, self.facets.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &Matrix) -> MatrixJson {
        MatrixJson {
            rows: m
                .iter()
                .map(|r| r.iter().map(format_rational).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        let m: Matrix = self
            .rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect())
            .collect::<Result<_>>()?;
        let cols = m.first().map_or(0, Vec::len);
        if m.is_empty() || cols == 0 || m.iter().any(|r| r.len() != cols) {
            return Err(Error::Validation("matrix must be non-empty and rectangular".into()));
        }
        Ok(m)
    }
}

pub fn rationals(values: &[String]) -> Result<Vec<Rational>> {
    values.iter().map(|s| parse_rational(s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_round_trip_keeps_canonical_order() {
        let ring = Ring::indexed("x", 3);
        let f = Poly::parse("x0^2 - 3/2*x1*x2 + x2^2 + 7", &ring).unwrap();
        let j = PolyJson::from_poly(&f);
        assert_eq!(j.terms[0].e, vec![2, 0, 0]);
        assert_eq!(j.terms[1].c, "-3/2");
        let text = serde_json::to_string(&j).unwrap();
        let back: PolyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_poly().unwrap(), f);
        assert_eq!(serde_json::to_string(&PolyJson::from_poly(&back.to_poly().unwrap())).unwrap(), text);
    }

    #[test]
    fn malformed_inputs() {
        let bad = PolyJson {
            vars: vec!["x".into(), "x".into()],
            terms: vec![],
        };
        assert!(matches!(bad.to_poly(), Err(Error::Validation(_))));
        let short = PolyJson {
            vars: vec!["x".into(), "y".into()],
            terms: vec![TermJson { c: "1".into(), e: vec![1] }],
        };
        assert!(matches!(short.to_poly(), Err(Error::Validation(_))));
        let m = MatrixJson {
            rows: vec![vec!["1".into()], vec!["1".into(), "2".into()]],
        };
        assert!(m.to_matrix().is_err());
    }

    #[test]
    fn pluecker_form_accepts_any_variable_order() {
        let j = PlueckerJson {
            d: 1,
            n: 2,
            flavor: "primal".into(),
            vars: vec!["p_2".into(), "p_0".into()],
            terms: vec![TermJson { c: "1".into(), e: vec![1, 1] }],
        };
        let f = j.to_form().unwrap();
        assert_eq!(f.poly().to_string(), "p_0*p_2");
        assert_eq!(PlueckerJson::from_form(&f).vars, vec!["p_0", "p_1", "p_2"]);
    }
}
