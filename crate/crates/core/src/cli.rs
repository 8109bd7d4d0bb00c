//! Batch job runner behind the `hurwitz` binary: one subcommand, one JSON
//! document in, one JSON document out.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cycles::{
    chow_point, coordinate_arrangement_hurwitz, cycle_hurwitz, flat_limit_check,
    stanley_reisner_complex, Component, ReducedCycle,
};
use crate::error::{Error, Result};
use crate::grassmann::{pluecker_lift, stiefel_expand, straighten, Flavor, Grassmannian};
use crate::groebner::{hdeg_from_hilbert, hilbert_polynomial_with, Budget, HilbertData};
use crate::hurwitz::{
    conic_adjoint, conic_adjoint_rational, hdeg, hurwitz_elimination_with, hurwitz_hypersurface,
    hurwitz_quadric, katz_limit_check, katz_rhs, quadric_matrix, EliminationOptions,
    HurwitzForm, HypersurfaceOptions, Variety,
};
use crate::json::{
    rationals, ComplexJson, HurwitzJson, IdealJson, MatrixJson, PlueckerJson, PolyJson,
    PolytopeJson,
};
use crate::poly::{Poly, Ring};
use crate::polytope::{hurwitz_polytope, initial_form, Polytope};
use crate::random::DEFAULT_SEED;
use crate::reciprocal::{
    broken_circuit_complex, circuits, entropic_discriminant, generic_reciprocal_invariants,
    reciprocal_ideal, varchenko_variant, FactorConvention, MatrixA,
};

pub const COMMANDS: &[&str] = &[
    "hdeg",
    "hilbert",
    "quadric",
    "conic-adjoint",
    "hypersurface",
    "eliminate-hurwitz",
    "polytope",
    "initial-form",
    "arrangement",
    "sr-complex",
    "cycle",
    "flat-limit",
    "katz-check",
    "circuits",
    "bcc",
    "reciprocal-ideal",
    "generic-reciprocal",
    "entropic",
    "varchenko",
    "stiefel-expand",
    "lift",
    "straighten",
];

/// A single job: subcommand, raw JSON input and run controls.
#[derive(Clone, Debug)]
pub struct JobSpec {
    pub command: String,
    pub input: String,
    /// Maximum number of S-pairs per Gröbner computation.
    pub budget: Option<usize>,
    pub seed: u64,
    /// Weight vector for `initial-form`, overriding the input document.
    pub weight: Option<Vec<i64>>,
}

impl JobSpec {
    pub fn new(command: &str, input: &str) -> JobSpec {
        JobSpec {
            command: command.to_string(),
            input: input.to_string(),
            budget: None,
            seed: DEFAULT_SEED,
            weight: None,
        }
    }

    fn budget(&self) -> Budget {
        match self.budget {
            Some(pairs) => Budget::pairs(pairs),
            None => Budget::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Validation(_) => 2,
        Error::ResourceLimit(_) => 3,
        _ => 1,
    }
}

/// Runs a job; failures become `{"error": name, "message": text}`.
pub fn run(spec: &JobSpec) -> Outcome {
    let (value, exit_code) = match dispatch(spec) {
        Ok(v) => (v, 0),
        Err(e) => (
            json!({ "error": e.name(), "message": e.to_string() }),
            exit_code(&e),
        ),
    };
    let mut output = serde_json::to_string_pretty(&value).expect("JSON values serialize");
    output.push('\n');
    Outcome { output, exit_code }
}

fn parse<T: DeserializeOwned>(input: &Value) -> Result<T> {
    T::deserialize(input).map_err(|e| Error::Validation(e.to_string()))
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("output types serialize")
}

fn hurwitz_value(h: &HurwitzForm) -> Value {
    to_value(&HurwitzJson::from_form(h))
}

fn dispatch(spec: &JobSpec) -> Result<Value> {
    let input: Value =
        serde_json::from_str(&spec.input).map_err(|e| Error::Validation(e.to_string()))?;
    match spec.command.as_str() {
        "hdeg" => cmd_hdeg(&input, spec),
        "hilbert" => {
            let ideal = parse::<IdealJson>(&input)?.to_ideal()?;
            Ok(hilbert_value(&hilbert_polynomial_with(&ideal, &spec.budget())?))
        }
        "quadric" => cmd_quadric(&input),
        "conic-adjoint" => cmd_conic_adjoint(&input),
        "hypersurface" => cmd_hypersurface(&input, spec),
        "eliminate-hurwitz" => {
            let x = parse_variety(&input)?;
            Ok(hurwitz_value(&hurwitz_elimination_with(&x, &elimination_options(spec))?))
        }
        "polytope" => cmd_polytope(&input),
        "initial-form" => cmd_initial_form(&input, spec),
        "arrangement" => cmd_arrangement(&input),
        "sr-complex" => cmd_sr_complex(&input),
        "cycle" => {
            let c = parse::<CycleJson>(&input)?.to_cycle()?;
            let f = cycle_hurwitz(&c)?;
            Ok(json!({
                "hurwitz": to_value(&PlueckerJson::from_form(&f)),
                "hdeg": f.pluecker_degree().unwrap_or(0),
            }))
        }
        "flat-limit" => cmd_flat_limit(&input),
        "katz-check" => cmd_katz(&input),
        "circuits" => cmd_circuits(&input),
        "bcc" => cmd_bcc(&input),
        "reciprocal-ideal" => {
            let a = parse_matrix_a(&input)?;
            Ok(to_value(&IdealJson::from_ideal(&reciprocal_ideal(&a)?)))
        }
        "generic-reciprocal" => {
            let p: DimsInput = parse(&input)?;
            let g = generic_reciprocal_invariants(p.d, p.n)?;
            Ok(json!({
                "p": g.p,
                "hdeg": g.hdeg,
                "monomial": to_value(&PlueckerJson::from_form(&g.monomial)),
            }))
        }
        "entropic" | "varchenko" => cmd_entropic(&input, spec),
        "stiefel-expand" => {
            let p: ExpandInput = parse(&input)?;
            let target = Flavor::parse(p.target.as_deref().unwrap_or("primal"))?;
            Ok(to_value(&PolyJson::from_poly(&stiefel_expand(&p.form.to_form()?, target)?)))
        }
        "lift" => {
            let p: LiftInput = parse(&input)?;
            let f = pluecker_lift(&p.poly.to_poly()?, p.d, p.n, Flavor::parse(&p.flavor)?)?;
            Ok(to_value(&PlueckerJson::from_form(&f)))
        }
        "straighten" => {
            let f = parse::<PlueckerJson>(&input)?.to_form()?;
            Ok(to_value(&PlueckerJson::from_form(&straighten(&f)?)))
        }
        other => Err(Error::Validation(format!("unknown subcommand `{other}`"))),
    }
}

fn elimination_options(spec: &JobSpec) -> EliminationOptions {
    EliminationOptions {
        budget: spec.budget(),
        seed: spec.seed,
        ..EliminationOptions::default()
    }
}

fn hilbert_value(h: &HilbertData) -> Value {
    json!({
        "hilbert_polynomial": to_value(&PolyJson::from_poly(&h.hilbert_polynomial)),
        "dimension": h.dimension,
        "degree": h.degree,
        "sectional_genus": h.sectional_genus,
    })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum HdegInput {
    Invariants { p: i64, g: i64 },
    Hilbert { hilbert: PolyJson },
    Variety { ideal: IdealJson },
}

fn cmd_hdeg(input: &Value, spec: &JobSpec) -> Result<Value> {
    let value = match parse::<HdegInput>(input)? {
        HdegInput::Invariants { p, g } => hdeg(p, g)?,
        HdegInput::Hilbert { hilbert } => {
            hdeg_from_hilbert(&HilbertData::from_polynomial(hilbert.to_poly()?)?)?
        }
        HdegInput::Variety { ideal } => {
            let h = hilbert_polynomial_with(&ideal.to_ideal()?, &spec.budget())?;
            hdeg_from_hilbert(&h)?
        }
    };
    Ok(json!({ "hdeg": value }))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum QuadricData {
    Matrix(MatrixJson),
    Poly(PolyJson),
}

#[derive(Deserialize)]
struct QuadricInput {
    quadric: QuadricData,
}

fn cmd_quadric(input: &Value) -> Result<Value> {
    let m = match parse::<QuadricInput>(input)?.quadric {
        QuadricData::Matrix(m) => m.to_matrix()?,
        QuadricData::Poly(p) => quadric_matrix(&p.to_poly()?)?,
    };
    Ok(hurwitz_value(&hurwitz_quadric(&m)?))
}

/// Rows of rationals, or of polynomial strings over `vars`.
#[derive(Deserialize)]
struct ConicInput {
    rows: Vec<Vec<String>>,
    #[serde(default)]
    vars: Option<Vec<String>>,
}

fn cmd_conic_adjoint(input: &Value) -> Result<Value> {
    let c: ConicInput = parse(input)?;
    let h = match c.vars {
        None => conic_adjoint_rational(&MatrixJson { rows: c.rows }.to_matrix()?)?,
        Some(vars) => {
            let ring = Ring::new(vars);
            let m = c
                .rows
                .iter()
                .map(|r| r.iter().map(|s| Poly::parse(s, &ring)).collect())
                .collect::<Result<Vec<Vec<Poly>>>>()?;
            conic_adjoint(&m)?
        }
    };
    Ok(hurwitz_value(&h))
}

#[derive(Deserialize)]
struct HypersurfaceInput {
    hypersurface: PolyJson,
    #[serde(default)]
    params: Vec<String>,
    #[serde(default)]
    factors: Vec<PolyJson>,
}

fn cmd_hypersurface(input: &Value, spec: &JobSpec) -> Result<Value> {
    let h: HypersurfaceInput = parse(input)?;
    let opts = HypersurfaceOptions {
        params: h.params,
        factors: h.factors.iter().map(PolyJson::to_poly).collect::<Result<_>>()?,
        budget: spec.budget(),
        seed: spec.seed,
    };
    Ok(hurwitz_value(&hurwitz_hypersurface(&h.hypersurface.to_poly()?, &opts)?))
}

#[derive(Deserialize)]
struct VarietyInput {
    ideal: IdealJson,
    dim: usize,
}

fn parse_variety(input: &Value) -> Result<Variety> {
    let v: VarietyInput = parse(input)?;
    Variety::new(v.ideal.to_ideal()?, v.dim)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PolytopeInput {
    Form { hurwitz: PlueckerJson },
    Points { points: Vec<Vec<i64>> },
}

fn cmd_polytope(input: &Value) -> Result<Value> {
    let p = match parse::<PolytopeInput>(input)? {
        PolytopeInput::Form { hurwitz } => hurwitz_polytope(&hurwitz.to_form()?)?,
        PolytopeInput::Points { points } => Polytope::from_points(&points)?,
    };
    Ok(to_value(&PolytopeJson::from_polytope(&p)))
}

#[derive(Deserialize)]
struct InitialFormInput {
    form: PlueckerJson,
    #[serde(default)]
    w: Option<Vec<i64>>,
}

fn cmd_initial_form(input: &Value, spec: &JobSpec) -> Result<Value> {
    let p: InitialFormInput = parse(input)?;
    let w = spec
        .weight
        .clone()
        .or(p.w)
        .ok_or_else(|| Error::Validation("a weight vector is required".into()))?;
    let f = initial_form(&p.form.to_form()?, &w)?;
    Ok(to_value(&PlueckerJson::from_form(&f)))
}

#[derive(Deserialize)]
struct ArrangementInput {
    n: usize,
    facets: Vec<Vec<usize>>,
    #[serde(default)]
    flavor: Option<String>,
}

fn cmd_arrangement(input: &Value) -> Result<Value> {
    let a: ArrangementInput = parse(input)?;
    let k = ComplexJson {
        n: a.n,
        facets: a.facets,
    }
    .to_complex()?;
    let flavor = Flavor::parse(a.flavor.as_deref().unwrap_or("dual"))?;
    let f = coordinate_arrangement_hurwitz(&k, flavor)?;
    Ok(to_value(&PlueckerJson::from_form(&f)))
}

fn cmd_sr_complex(input: &Value) -> Result<Value> {
    let ideal = parse::<IdealJson>(input)?.to_ideal()?;
    let n = ideal.ring().len().saturating_sub(1);
    let k = stanley_reisner_complex(&ideal, n)?;
    Ok(to_value(&ComplexJson::from_complex(&k)))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ComponentJson {
    Linear { linear: bool },
    Form(PlueckerJson),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum StratumJson {
    Point { point: Vec<String>, nu: u32 },
    Form { chow: PlueckerJson, nu: u32 },
}

#[derive(Deserialize)]
struct CycleJson {
    d: usize,
    n: usize,
    components: Vec<ComponentJson>,
    #[serde(default)]
    intersections: Vec<StratumJson>,
}

impl CycleJson {
    fn to_cycle(&self) -> Result<ReducedCycle> {
        let gr = Grassmannian::new(self.d, self.n)?;
        let components = self
            .components
            .iter()
            .map(|c| match c {
                ComponentJson::Linear { linear: true } => Ok(Component::Linear),
                ComponentJson::Linear { linear: false } => {
                    Err(Error::Validation("`linear` must be true".into()))
                }
                ComponentJson::Form(f) => Ok(Component::Form(f.to_form()?)),
            })
            .collect::<Result<_>>()?;
        let intersections = self
            .intersections
            .iter()
            .map(|s| match s {
                StratumJson::Point { point, nu } => Ok((chow_point(&rationals(point)?)?, *nu)),
                StratumJson::Form { chow, nu } => Ok((chow.to_form()?, *nu)),
            })
            .collect::<Result<_>>()?;
        Ok(ReducedCycle {
            gr,
            components,
            intersections,
        })
    }
}

#[derive(Deserialize)]
struct FlatLimitInput {
    family: PolyJson,
    eps: String,
    special: CycleJson,
}

fn cmd_flat_limit(input: &Value) -> Result<Value> {
    let f: FlatLimitInput = parse(input)?;
    let r = flat_limit_check(&f.family.to_poly()?, &f.eps, &f.special.to_cycle()?)?;
    Ok(json!({
        "passed": r.passed,
        "limit": to_value(&PlueckerJson::from_form(&r.limit)),
        "expected": to_value(&PlueckerJson::from_form(&r.expected)),
        "limit_degree": r.limit_degree,
        "expected_degree": r.expected_degree,
    }))
}

#[derive(Deserialize)]
struct KatzInput {
    f: PolyJson,
    g: PolyJson,
    q: u32,
}

fn cmd_katz(input: &Value) -> Result<Value> {
    let k: KatzInput = parse(input)?;
    let (f, g) = (k.f.to_poly()?, k.g.to_poly()?);
    let rhs = katz_rhs(&f, &g, k.q, None)?;
    let passed = katz_limit_check(&f, &g, k.q)?;
    Ok(json!({
        "passed": passed,
        "rhs": to_value(&PlueckerJson::from_form(&rhs)),
    }))
}

fn parse_matrix_a(input: &Value) -> Result<MatrixA> {
    let m: MatrixJson = parse(input)?;
    MatrixA::new(m.to_matrix()?)
}

fn cmd_circuits(input: &Value) -> Result<Value> {
    let a = parse_matrix_a(input)?;
    let list: Vec<Value> = circuits(&a)
        .iter()
        .map(|c| {
            json!({
                "support": c.support,
                "coefficients": c.coefficients.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(json!({ "circuits": list }))
}

#[derive(Deserialize)]
struct BccInput {
    rows: Vec<Vec<String>>,
    #[serde(default)]
    ordering: Option<Vec<usize>>,
}

fn cmd_bcc(input: &Value) -> Result<Value> {
    let b: BccInput = parse(input)?;
    let a = MatrixA::new(MatrixJson { rows: b.rows }.to_matrix()?)?;
    let ordering = b.ordering.unwrap_or_else(|| (0..=a.n()).collect());
    let k = broken_circuit_complex(&a, &circuits(&a), &ordering)?;
    Ok(to_value(&ComplexJson::from_complex(&k)))
}

#[derive(Deserialize)]
struct DimsInput {
    d: usize,
    n: usize,
}

#[derive(Deserialize)]
struct EntropicInput {
    rows: Vec<Vec<String>>,
    #[serde(default)]
    hurwitz: Option<PlueckerJson>,
    #[serde(default)]
    c: Option<Vec<String>>,
    #[serde(default)]
    convention: Option<String>,
}

fn cmd_entropic(input: &Value, spec: &JobSpec) -> Result<Value> {
    let e: EntropicInput = parse(input)?;
    let a = MatrixA::new(MatrixJson { rows: e.rows }.to_matrix()?)?;
    let convention = FactorConvention::parse(e.convention.as_deref().unwrap_or("auto"))?;
    let hu = match e.hurwitz {
        Some(h) => h.to_form()?,
        None => {
            let x = Variety::new(reciprocal_ideal(&a)?, a.d())?;
            hurwitz_elimination_with(&x, &elimination_options(spec))?.form
        }
    };
    let result = match (spec.command.as_str(), e.c) {
        ("varchenko", Some(c)) => varchenko_variant(&a, &rationals(&c)?, &hu, convention)?,
        ("varchenko", None) => {
            return Err(Error::Validation("`varchenko` needs column scales `c`".into()))
        }
        (_, Some(_)) => {
            return Err(Error::Validation("column scales belong to `varchenko`".into()))
        }
        (_, None) => entropic_discriminant(&a, &hu, convention)?,
    };
    Ok(json!({
        "discriminant": to_value(&PolyJson::from_poly(&result.poly)),
        "factor": to_value(&PolyJson::from_poly(&result.factor)),
        "convention": result.convention.as_str(),
    }))
}

#[derive(Deserialize)]
struct ExpandInput {
    form: PlueckerJson,
    #[serde(default)]
    target: Option<String>,
}

#[derive(Deserialize)]
struct LiftInput {
    poly: PolyJson,
    d: usize,
    n: usize,
    flavor: String,
}
