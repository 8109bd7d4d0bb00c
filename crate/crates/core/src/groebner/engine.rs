//! Fraction-free Buchberger kernel on integer-coefficient term vectors.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Budget, MonomialOrder};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, Rational, Ring};

pub(crate) type Key = Vec<i64>;

#[derive(Clone, Debug)]
pub(crate) struct Term {
    pub key: Key,
    pub mono: Monomial,
    pub c: BigInt,
}

/// Integer polynomial with terms sorted by decreasing order key.
#[derive(Clone, Debug, Default)]
pub(crate) struct IPoly {
    pub terms: Vec<Term>,
}

fn add_keys(a: &[i64], b: &[i64]) -> Key {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn divmask(m: &Monomial) -> u64 {
    m.exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |acc, (i, _)| acc | (1u64 << (i % 64)))
}

impl IPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Term {
        &self.terms[0]
    }

    /// Integer form of `f` together with the scale `s` such that `f = s * result`.
    pub fn from_poly(f: &Poly, order: &MonomialOrder) -> (Rational, IPoly) {
        if f.is_zero() {
            return (Rational::one(), IPoly::default());
        }
        let (scale, prim) = f.content_and_primitive().expect("nonzero");
        let mut terms: Vec<Term> = prim
            .terms()
            .map(|(m, c)| Term {
                key: order.key(m.exps()),
                mono: m.clone(),
                c: c.numer().clone(),
            })
            .collect();
        terms.sort_by(|a, b| b.key.cmp(&a.key));
        (scale, IPoly { terms })
    }

    pub fn to_poly(&self, ring: &Ring) -> Poly {
        Poly::from_terms(
            ring,
            self.terms
                .iter()
                .map(|t| (t.mono.clone(), Rational::from_integer(t.c.clone()))),
        )
    }

    /// Divides out the integer content and makes the leading coefficient positive.
    pub fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for t in &self.terms {
            g = g.gcd(&t.c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].c.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for t in &mut self.terms {
                t.c = &t.c / &g;
            }
        }
    }

    fn from_map(map: BTreeMap<Key, (Monomial, BigInt)>) -> IPoly {
        IPoly {
            terms: map
                .into_iter()
                .rev()
                .map(|(key, (mono, c))| Term { key, mono, c })
                .collect(),
        }
    }
}

fn accumulate(map: &mut BTreeMap<Key, (Monomial, BigInt)>, key: Key, mono: Monomial, c: BigInt) {
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert((mono, c));
        }
        Entry::Occupied(mut o) => {
            o.get_mut().1 += c;
            if o.get().1.is_zero() {
                o.remove();
            }
        }
    }
}

/// Reducer over a fixed set of divisors.
pub(crate) struct Reducer<'a> {
    divisors: Vec<(&'a IPoly, u64)>,
}

impl<'a> Reducer<'a> {
    pub fn new(polys: impl IntoIterator<Item = &'a IPoly>) -> Reducer<'a> {
        Reducer {
            divisors: polys
                .into_iter()
                .filter(|p| !p.is_zero())
                .map(|p| (p, divmask(&p.lead().mono)))
                .collect(),
        }
    }

    fn find(&self, m: &Monomial) -> Option<&'a IPoly> {
        let mask = divmask(m);
        self.divisors
            .iter()
            .find(|(p, dm)| dm & !mask == 0 && p.lead().mono.divides(m))
            .map(|(p, _)| *p)
    }

    /// Full reduction. Returns `(r, mult)` with `mult * f ≡ r` modulo the divisors.
    pub fn reduce(&self, f: &IPoly, budget: &mut usize) -> Result<(IPoly, BigInt)> {
        let mut work: BTreeMap<Key, (Monomial, BigInt)> = f
            .terms
            .iter()
            .map(|t| (t.key.clone(), (t.mono.clone(), t.c.clone())))
            .collect();
        let mut mult = BigInt::one();
        let mut rem: Vec<(Term, BigInt)> = Vec::new();
        while let Some((key, (mono, c))) = work.pop_last() {
            let Some(g) = self.find(&mono) else {
                rem.push((Term { key, mono, c }, mult.clone()));
                continue;
            };
            if *budget == 0 {
                return Err(Error::ResourceLimit("reduction step budget exhausted".into()));
            }
            *budget -= 1;
            let lead = g.lead();
            let q = lead.mono.quotient_of(&mono).expect("divisor found");
            let qkey: Key = key.iter().zip(&lead.key).map(|(a, b)| a - b).collect();
            let gg = c.gcd(&lead.c);
            let fa = &lead.c / &gg;
            let fb = &c / &gg;
            if !fa.is_one() {
                for (_, v) in work.values_mut() {
                    *v *= &fa;
                }
                mult *= &fa;
            }
            for t in &g.terms[1..] {
                accumulate(
                    &mut work,
                    add_keys(&qkey, &t.key),
                    q.mul(&t.mono),
                    -(&fb * &t.c),
                );
            }
        }
        let terms = rem
            .into_iter()
            .map(|(mut t, m)| {
                if m != mult {
                    t.c *= &mult / &m;
                }
                t
            })
            .collect();
        Ok((IPoly { terms }, mult))
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn spoly(f: &IPoly, g: &IPoly, lcm: &Monomial, order: &MonomialOrder) -> IPoly {
    let (lf, lg) = (f.lead(), g.lead());
    let qf = lf.mono.quotient_of(lcm).unwrap();
    let qg = lg.mono.quotient_of(lcm).unwrap();
    let kf = order.key(qf.exps());
    let kg = order.key(qg.exps());
    let gg = lf.c.gcd(&lg.c);
    let cf = &lg.c / &gg;
    let cg = &lf.c / &gg;
    let mut map = BTreeMap::new();
    for t in &f.terms[1..] {
        accumulate(&mut map, add_keys(&kf, &t.key), qf.mul(&t.mono), &cf * &t.c);
    }
    for t in &g.terms[1..] {
        accumulate(&mut map, add_keys(&kg, &t.key), qg.mul(&t.mono), -(&cg * &t.c));
    }
    IPoly::from_map(map)
}

/// Reduced Gröbner basis of the given integer polynomials.
pub(crate) fn buchberger(
    input: Vec<IPoly>,
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<Vec<IPoly>> {
    let mut polys: Vec<IPoly> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut steps = budget.max_reductions;
    let mut input: Vec<IPoly> = input.into_iter().filter(|p| !p.is_zero()).collect();
    input.sort_by(|a, b| a.lead().key.cmp(&b.lead().key));
    for f in input {
        let reducer = Reducer::new(active.iter().map(|&k| &polys[k]));
        let (mut h, _) = reducer.reduce(&f, &mut steps)?;
        if h.is_zero() {
            continue;
        }
        h.make_primitive();
        polys.push(h);
        update(&polys, &mut active, &mut pairs, polys.len() - 1);
    }
    let mut processed = 0usize;
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                (pa.lcm.degree(), pa.i, pa.j).cmp(&(pb.lcm.degree(), pb.i, pb.j))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::ResourceLimit(format!(
                "S-pair budget of {} exhausted",
                budget.max_pairs
            )));
        }
        let s = spoly(&polys[pair.i], &polys[pair.j], &pair.lcm, order);
        let reducer = Reducer::new(active.iter().map(|&k| &polys[k]));
        let (mut h, _) = reducer.reduce(&s, &mut steps)?;
        if h.is_zero() {
            continue;
        }
        h.make_primitive();
        if h.lead().mono.is_one() {
            return Ok(vec![h]);
        }
        polys.push(h);
        update(&polys, &mut active, &mut pairs, polys.len() - 1);
    }
    interreduce(active.iter().map(|&k| polys[k].clone()).collect(), &mut steps)
}

fn update(polys: &[IPoly], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let lh = polys[h].lead().mono.clone();
    let mut c: Vec<(usize, Monomial)> = active
        .iter()
        .map(|&g| (g, lh.lcm(&polys[g].lead().mono)))
        .collect();
    let mut d: Vec<(usize, Monomial)> = Vec::new();
    while !c.is_empty() {
        let (g1, l1) = c.remove(0);
        let coprime = lh.is_coprime(&polys[g1].lead().mono);
        if coprime
            || (!c.iter().any(|(_, l2)| l2.divides(&l1)) && !d.iter().any(|(_, l2)| l2.divides(&l1)))
        {
            d.push((g1, l1));
        }
    }
    pairs.retain(|p| {
        !(lh.divides(&p.lcm)
            && lh.lcm(&polys[p.i].lead().mono) != p.lcm
            && lh.lcm(&polys[p.j].lead().mono) != p.lcm)
    });
    for (g, l) in d {
        if !lh.is_coprime(&polys[g].lead().mono) {
            pairs.push(Pair { i: g, j: h, lcm: l });
        }
    }
    active.retain(|&g| !lh.divides(&polys[g].lead().mono));
    active.push(h);
}

/// Minimalizes and tail-reduces, then sorts by increasing leading monomial.
pub(crate) fn interreduce(mut g: Vec<IPoly>, steps: &mut usize) -> Result<Vec<IPoly>> {
    g.retain(|p| !p.is_zero());
    g.sort_by(|a, b| a.lead().key.cmp(&b.lead().key));
    let mut minimal: Vec<IPoly> = Vec::new();
    for p in g {
        if !minimal.iter().any(|q| q.lead().mono.divides(&p.lead().mono)) {
            minimal.retain(|q| !p.lead().mono.divides(&q.lead().mono));
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others = Reducer::new(
            minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, p)| p),
        );
        let (mut r, _) = others.reduce(&minimal[k], steps)?;
        r.make_primitive();
        out.push(r);
    }
    out.sort_by(|a, b| a.lead().key.cmp(&b.lead().key));
    Ok(out)
}
