//! Buchberger's algorithm and the ideal operations built on it.
//!
//! The implementation keeps basis elements monic, prunes critical pairs
//! with the product and chain criteria, and selects pairs by the sugar
//! strategy. On top of the basis computation sit full normal forms,
//! ideal membership, ideal intersection (via a fresh elimination
//! variable), and ideal quotient by a single polynomial.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use num::{BigRational, One};

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, Ring, RingRc, VarName};

/// A reduced Gröbner basis together with the order it was computed under.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: RingRc,
    order: MonomialOrder,
    gens: Vec<Polynomial>,
    lts: Vec<Monomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRc {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// The (monic, autoreduced) basis elements, sorted by decreasing
    /// leading term.
    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Fully reduces `p`: every term of the result is divisible by no
    /// leading term of the basis.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        reduce_full(p, &self.gens, &self.lts, self.order)
    }

    /// Ideal membership test.
    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }
}

/// Fully reduces `p` against monic generators with cached leading terms.
fn reduce_full(
    p: &Polynomial,
    gens: &[Polynomial],
    lts: &[Monomial],
    order: MonomialOrder,
) -> Polynomial {
    let mut work = p.clone();
    let mut remainder: Vec<(Monomial, BigRational)> = Vec::new();
    let one = Polynomial::one(p.ring());
    while !work.is_zero() {
        let (lt, lc) = {
            let (m, c) = work.leading(order).expect("nonzero polynomial has a lead");
            (m.clone(), c.clone())
        };
        let mut reduced = false;
        for (i, basis_lt) in lts.iter().enumerate() {
            if let Some(q) = lt.try_div(basis_lt) {
                work.sub_mul_term(&lc, &q, &gens[i]);
                reduced = true;
                break;
            }
        }
        if !reduced {
            // Move the irreducible term out of the working polynomial.
            work.sub_mul_term(&lc, &lt, &one);
            remainder.push((lt, lc));
        }
    }
    Polynomial::from_terms(p.ring(), remainder).expect("remainder terms share the ring")
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct PairEntry {
    sugar: u64,
    lcm_degree: u64,
    lcm: Monomial,
    i: usize,
    j: usize,
}

struct Engine {
    ring: RingRc,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    lts: Vec<Monomial>,
    sugars: Vec<u64>,
    heap: BinaryHeap<Reverse<PairEntry>>,
    pending: BTreeSet<(usize, usize)>,
}

impl Engine {
    fn new(ring: RingRc, order: MonomialOrder) -> Self {
        Engine {
            ring,
            order,
            basis: Vec::new(),
            lts: Vec::new(),
            sugars: Vec::new(),
            heap: BinaryHeap::new(),
            pending: BTreeSet::new(),
        }
    }

    /// Adds a nonzero polynomial (made monic) to the basis; when
    /// `make_pairs` is set, queues critical pairs against all earlier
    /// elements.
    fn add_poly(&mut self, p: Polynomial, sugar: u64, make_pairs: bool) {
        debug_assert!(!p.is_zero());
        let monic = p.make_monic(self.order);
        let lt = monic
            .leading(self.order)
            .expect("nonzero polynomial has a lead")
            .0
            .clone();
        self.basis.push(monic);
        self.lts.push(lt);
        self.sugars.push(sugar);
        if make_pairs {
            self.add_pairs(self.basis.len() - 1);
        }
    }

    fn add_pairs(&mut self, m: usize) {
        for i in 0..m {
            let lcm = self.lts[i].lcm(&self.lts[m]);
            // Product criterion: coprime leading terms reduce to zero.
            if lcm == self.lts[i].mul(&self.lts[m]) {
                continue;
            }
            let lcm_degree = lcm.degree();
            let sugar_i = self.sugars[i] + lcm.try_div(&self.lts[i]).unwrap().degree();
            let sugar_j = self.sugars[m] + lcm.try_div(&self.lts[m]).unwrap().degree();
            self.heap.push(Reverse(PairEntry {
                sugar: sugar_i.max(sugar_j),
                lcm_degree,
                lcm,
                i,
                j: m,
            }));
            self.pending.insert((i, m));
        }
    }

    /// True when a third element lets the chain criterion discard (i, j).
    fn chain_criterion(&self, i: usize, j: usize, lcm: &Monomial) -> bool {
        for k in 0..self.basis.len() {
            if k == i || k == j {
                continue;
            }
            if !self.lts[k].divides(lcm) {
                continue;
            }
            let ik = (i.min(k), i.max(k));
            let jk = (j.min(k), j.max(k));
            if !self.pending.contains(&ik) && !self.pending.contains(&jk) {
                return true;
            }
        }
        false
    }

    fn s_polynomial(&self, i: usize, j: usize, lcm: &Monomial) -> Polynomial {
        let qi = lcm.try_div(&self.lts[i]).expect("lcm divisible by lt");
        let qj = lcm.try_div(&self.lts[j]).expect("lcm divisible by lt");
        let mut s = self.basis[i].mul_monomial(&qi);
        s.sub_mul_term(&BigRational::one(), &qj, &self.basis[j]);
        s
    }

    fn run(&mut self) {
        while let Some(Reverse(entry)) = self.heap.pop() {
            self.pending.remove(&(entry.i, entry.j));
            if self.chain_criterion(entry.i, entry.j, &entry.lcm) {
                continue;
            }
            let s = self.s_polynomial(entry.i, entry.j, &entry.lcm);
            let reduced = reduce_full(&s, &self.basis, &self.lts, self.order);
            if !reduced.is_zero() {
                self.add_poly(reduced, entry.sugar, true);
            }
        }
    }

    /// Minimizes and autoreduces the basis, returning it sorted by
    /// decreasing leading term.
    fn finish(self) -> GroebnerBasis {
        let order = self.order;
        let mut indices: Vec<usize> = (0..self.basis.len()).collect();
        indices.sort_by(|&a, &b| order.cmp(&self.lts[a], &self.lts[b]));
        let mut kept: Vec<Polynomial> = Vec::new();
        let mut kept_lts: Vec<Monomial> = Vec::new();
        for idx in indices {
            if kept_lts.iter().any(|lt| lt.divides(&self.lts[idx])) {
                continue;
            }
            kept.push(self.basis[idx].clone());
            kept_lts.push(self.lts[idx].clone());
        }
        // Autoreduce: rewrite each element against the others until stable.
        loop {
            let mut changed = false;
            for i in 0..kept.len() {
                let others: Vec<Polynomial> = kept
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, g)| g.clone())
                    .collect();
                let other_lts: Vec<Monomial> = kept_lts
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, lt)| lt.clone())
                    .collect();
                let reduced = reduce_full(&kept[i], &others, &other_lts, order);
                if reduced != kept[i] {
                    // Minimality of leading terms guarantees the lead survives.
                    kept[i] = reduced.make_monic(order);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let mut paired: Vec<(Monomial, Polynomial)> =
            kept_lts.into_iter().zip(kept).collect();
        paired.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        let (lts, gens): (Vec<_>, Vec<_>) = paired.into_iter().unzip();
        GroebnerBasis {
            ring: self.ring,
            order,
            gens,
            lts,
        }
    }
}

fn check_common_ring(ring: &RingRc, gens: &[Polynomial]) -> Result<()> {
    for g in gens {
        if g.ring() != ring {
            return Err(Error::Domain(
                "generators must all lie in the same ring".into(),
            ));
        }
    }
    Ok(())
}

/// Computes a reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(
    ring: &RingRc,
    gens: &[Polynomial],
    order: MonomialOrder,
) -> Result<GroebnerBasis> {
    check_common_ring(ring, gens)?;
    let mut engine = Engine::new(ring.clone(), order);
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let sugar = g.total_degree().unwrap_or(0);
        engine.add_poly(g.clone(), sugar, true);
    }
    engine.run();
    Ok(engine.finish())
}

/// Extends an existing basis with extra generators, skipping the
/// pairs internal to the seed, which are already confluent.
pub fn buchberger_extend(seed: &GroebnerBasis, extra: &[Polynomial]) -> Result<GroebnerBasis> {
    check_common_ring(&seed.ring, extra)?;
    let mut engine = Engine::new(seed.ring.clone(), seed.order);
    for g in &seed.gens {
        let sugar = g.total_degree().unwrap_or(0);
        engine.add_poly(g.clone(), sugar, false);
    }
    for g in extra {
        // Pre-reduce against the seed so redundant extras vanish early.
        let reduced = reduce_full(g, &engine.basis, &engine.lts, engine.order);
        if reduced.is_zero() {
            continue;
        }
        let sugar = reduced.total_degree().unwrap_or(0);
        engine.add_poly(reduced, sugar, true);
    }
    engine.run();
    Ok(engine.finish())
}

/// Exact polynomial division: returns `p / d` when the division leaves
/// no remainder, `None` otherwise.
pub fn exact_div(p: &Polynomial, d: &Polynomial) -> Option<Polynomial> {
    if d.is_zero() {
        return None;
    }
    if p.is_zero() {
        return Some(Polynomial::zero(p.ring()));
    }
    let order = MonomialOrder::DegRevLex;
    let (dlt, dlc) = {
        let (m, c) = d.leading(order).expect("nonzero divisor");
        (m.clone(), c.clone())
    };
    let mut work = p.clone();
    let mut quotient: Vec<(Monomial, BigRational)> = Vec::new();
    while !work.is_zero() {
        let (lt, lc) = {
            let (m, c) = work.leading(order).expect("nonzero polynomial");
            (m.clone(), c.clone())
        };
        let qm = lt.try_div(&dlt)?;
        let qc = lc / &dlc;
        work.sub_mul_term(&qc, &qm, d);
        quotient.push((qm, qc));
    }
    Some(Polynomial::from_terms(p.ring(), quotient).expect("quotient terms share the ring"))
}

/// Builds a fresh elimination ring with one new variable in front of
/// the existing ones, plus embeddings of the given polynomials.
fn elimination_extension(
    ring: &RingRc,
    polys: &[&Polynomial],
) -> Result<(RingRc, Vec<Polynomial>)> {
    let mut fresh = "w".to_string();
    let mut counter = 0u32;
    while ring.var_index(&fresh).is_some() {
        fresh = format!("w{counter}");
        counter += 1;
    }
    let mut vars = vec![VarName::plain(fresh)];
    vars.extend(ring.vars().iter().cloned());
    let extended = Ring::new(vars)?;
    let embedded = polys
        .iter()
        .map(|p| {
            Polynomial::from_terms(
                &extended,
                p.terms().map(|(m, c)| {
                    let mut exps = Vec::with_capacity(m.num_vars() + 1);
                    exps.push(0u32);
                    exps.extend_from_slice(m.exponents());
                    (Monomial::from_exponents(exps), c.clone())
                }),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((extended, embedded))
}

/// Intersection of two ideals, via `I ∩ J = (w·I + (1-w)·J) ∩ k[x]`.
///
/// The returned generators form a reduced degrevlex Gröbner basis of
/// the intersection.
pub fn ideal_intersection(
    ring: &RingRc,
    a: &[Polynomial],
    b: &[Polynomial],
) -> Result<Vec<Polynomial>> {
    check_common_ring(ring, a)?;
    check_common_ring(ring, b)?;
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let all: Vec<&Polynomial> = a.iter().chain(b.iter()).collect();
    let (extended, embedded) = elimination_extension(ring, &all)?;
    let w = Polynomial::variable(&extended, 0);
    let mut gens = Vec::with_capacity(all.len());
    for (k, e) in embedded.iter().enumerate() {
        if k < a.len() {
            gens.push(&w * e);
        } else {
            gens.push(e - &(&w * e));
        }
    }
    let gb = buchberger(&extended, &gens, MonomialOrder::Elimination(1))?;
    let mut intersection = Vec::new();
    for g in gb.generators() {
        if g.terms().all(|(m, _)| m.exponent(0) == 0) {
            let stripped = Polynomial::from_terms(
                ring,
                g.terms().map(|(m, c)| {
                    (
                        Monomial::from_exponents(m.exponents()[1..].to_vec()),
                        c.clone(),
                    )
                }),
            )?;
            intersection.push(stripped);
        }
    }
    let reduced = buchberger(ring, &intersection, MonomialOrder::DegRevLex)?;
    Ok(reduced.generators().to_vec())
}

/// The ideal quotient `(I : f)`, computed as `(I ∩ (f)) / f`.
pub fn ideal_quotient(
    ring: &RingRc,
    i_gens: &[Polynomial],
    f: &Polynomial,
) -> Result<Vec<Polynomial>> {
    if f.is_zero() {
        return Err(Error::Domain("ideal quotient by zero".into()));
    }
    let intersection = ideal_intersection(ring, i_gens, std::slice::from_ref(f))?;
    let mut quotients = Vec::with_capacity(intersection.len());
    for g in &intersection {
        match exact_div(g, f) {
            Some(q) => quotients.push(q),
            None => {
                return Err(Error::Internal(
                    "intersection with a principal ideal produced a non-multiple".into(),
                ));
            }
        }
    }
    let reduced = buchberger(ring, &quotients, MonomialOrder::DegRevLex)?;
    Ok(reduced.generators().to_vec())
}
