//! Multivariate polynomials over the exact rationals.
//!
//! A [`Ring`] fixes an ordered list of named variables; a [`Polynomial`]
//! stores a sparse map from exponent vectors to nonzero rational
//! coefficients. Monomial comparisons are not baked into the storage:
//! the comparison order is chosen per operation through
//! [`MonomialOrder`], which is what the Gröbner layer needs to run the
//! same polynomials through degree-compatible and elimination orders.

pub mod text;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{BigRational, One, Zero};

use crate::error::{Error, Result};

/// A variable name: a base identifier plus an optional superscript.
///
/// Superscripts are rendered in parentheses — `Z1^(2)` — and are part of
/// the variable's identity, not an exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarName {
    pub base: String,
    pub superscript: Option<u32>,
}

impl VarName {
    pub fn plain(base: impl Into<String>) -> Self {
        VarName {
            base: base.into(),
            superscript: None,
        }
    }

    pub fn superscripted(base: impl Into<String>, superscript: u32) -> Self {
        VarName {
            base: base.into(),
            superscript: Some(superscript),
        }
    }
}

impl fmt::Display for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.superscript {
            None => write!(f, "{}", self.base),
            Some(s) => write!(f, "{}^({})", self.base, s),
        }
    }
}

/// A polynomial ring over the rationals with a fixed variable list.
#[derive(Debug)]
pub struct Ring {
    vars: Vec<VarName>,
    index: BTreeMap<String, usize>,
}

/// Shared handle to a ring; polynomials hold one of these.
pub type RingRc = Arc<Ring>;

impl Ring {
    /// Builds a ring, rejecting duplicate variable names.
    pub fn new(vars: Vec<VarName>) -> Result<RingRc> {
        let mut index = BTreeMap::new();
        for (i, v) in vars.iter().enumerate() {
            if index.insert(v.to_string(), i).is_some() {
                return Err(Error::Domain(format!("duplicate variable name {v}")));
            }
        }
        Ok(Arc::new(Ring { vars, index }))
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[VarName] {
        &self.vars
    }

    pub fn var(&self, i: usize) -> &VarName {
        &self.vars[i]
    }

    /// Index of the variable whose display form is `name`.
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
    }
}

impl Eq for Ring {}

fn same_ring(a: &RingRc, b: &RingRc) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// An exponent vector; the ring it belongs to is tracked by the
/// enclosing polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn variable(num_vars: usize, index: usize) -> Self {
        assert!(index < num_vars, "variable index out of range");
        let mut exps = vec![0; num_vars];
        exps[index] = 1;
        Monomial(exps)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise quotient, if `other` divides `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.0.len(), other.0.len());
        let mut exps = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial(exps))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial(self.0.iter().map(|&x| x * e).collect())
    }
}

/// Term orders understood by the Gröbner machinery.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Degree first, ties broken reverse-lexicographically. The default.
    DegRevLex,
    /// Pure lexicographic order on the variable list.
    Lex,
    /// Block order eliminating the first `k` variables: degrevlex on the
    /// leading block, ties broken by degrevlex on the remainder.
    Elimination(usize),
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // In the last differing position, the smaller exponent wins.
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.0.len(), b.0.len());
        match self {
            MonomialOrder::DegRevLex => degrevlex(&a.0, &b.0),
            MonomialOrder::Lex => {
                for (x, y) in a.0.iter().zip(&b.0) {
                    if x != y {
                        return x.cmp(y);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Elimination(k) => {
                let k = *k;
                match degrevlex(&a.0[..k], &b.0[..k]) {
                    Ordering::Equal => degrevlex(&a.0[k..], &b.0[k..]),
                    other => other,
                }
            }
        }
    }
}

/// A sparse polynomial with rational coefficients.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: RingRc,
    terms: BTreeMap<Monomial, BigRational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &RingRc) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &RingRc, value: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Monomial::one(ring.num_vars()), value);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn one(ring: &RingRc) -> Self {
        Polynomial::constant(ring, BigRational::one())
    }

    pub fn variable(ring: &RingRc, index: usize) -> Self {
        Polynomial::from_monomial(ring, Monomial::variable(ring.num_vars(), index))
    }

    pub fn from_monomial(ring: &RingRc, m: Monomial) -> Self {
        assert_eq!(m.num_vars(), ring.num_vars(), "monomial/ring mismatch");
        let mut terms = BTreeMap::new();
        terms.insert(m, BigRational::one());
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, summing
    /// repeats and dropping zeros.
    pub fn from_terms<I>(ring: &RingRc, iter: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut terms: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m, c) in iter {
            if m.num_vars() != ring.num_vars() {
                return Err(Error::Domain(
                    "monomial exponent count does not match ring".into(),
                ));
            }
            let entry = terms.entry(m).or_insert_with(BigRational::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Polynomial {
            ring: ring.clone(),
            terms,
        })
    }

    pub fn ring(&self) -> &RingRc {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Largest monomial under `order`, with its coefficient.
    pub fn leading(&self, order: MonomialOrder) -> Option<(&Monomial, &BigRational)> {
        self.terms
            .iter()
            .max_by(|(m, _), (n, _)| order.cmp(m, n))
    }

    /// Degree of the highest-degree term, or `None` for zero.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, q)| (m.clone(), q * c)).collect(),
        }
    }

    /// Divides through by the leading coefficient under `order`.
    pub fn make_monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// In-place `self -= c * m * g`; the workhorse of polynomial reduction.
    pub(crate) fn sub_mul_term(&mut self, c: &BigRational, m: &Monomial, g: &Polynomial) {
        debug_assert!(same_ring(&self.ring, &g.ring));
        for (gm, gc) in &g.terms {
            let key = m.mul(gm);
            let delta = c * gc;
            match self.terms.get_mut(&key) {
                Some(existing) => {
                    *existing -= delta;
                    if existing.is_zero() {
                        self.terms.remove(&key);
                    }
                }
                None => {
                    self.terms.insert(key, -delta);
                }
            }
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies every term by a fixed monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Substitutes an image polynomial for every variable that actually
    /// occurs; variables mapped to `None` must not appear.
    pub fn substitute(
        &self,
        target: &RingRc,
        images: &[Option<Polynomial>],
    ) -> Result<Polynomial> {
        if images.len() != self.ring.num_vars() {
            return Err(Error::Domain(
                "substitution needs one image slot per variable".into(),
            ));
        }
        for image in images.iter().flatten() {
            if !same_ring(&image.ring, target) {
                return Err(Error::Domain(
                    "substitution image lies in the wrong ring".into(),
                ));
            }
        }
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut factor = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match &images[i] {
                    Some(img) => factor = &factor * &img.pow(e),
                    None => {
                        return Err(Error::MissingAssignment(self.ring.var(i).to_string()));
                    }
                }
            }
            acc = &acc + &factor;
        }
        Ok(acc)
    }

    /// Applies a permutation of the ring's variables: exponent `i` of
    /// each monomial moves to slot `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Result<Polynomial> {
        let n = self.ring.num_vars();
        if perm.len() != n {
            return Err(Error::Domain("permutation length mismatch".into()));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::Domain("not a permutation".into()));
            }
            seen[p] = true;
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; n];
                for (i, &e) in m.exponents().iter().enumerate() {
                    exps[perm[i]] = e;
                }
                (Monomial(exps), c.clone())
            })
            .collect::<Vec<_>>();
        Polynomial::from_terms(&self.ring, terms)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch in +");
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let entry = terms.entry(m.clone()).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch in -");
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let entry = terms.entry(m.clone()).or_insert_with(BigRational::zero);
            *entry -= c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch in *");
        let mut terms: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                let key = m.mul(n);
                let entry = terms.entry(key).or_insert_with(BigRational::zero);
                *entry += c * d;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            text::format_polynomial(self, MonomialOrder::DegRevLex)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n).unwrap()
    }

    fn xy_ring() -> RingRc {
        Ring::new(vec![VarName::plain("x"), VarName::plain("y")]).unwrap()
    }

    #[test]
    fn ring_rejects_duplicates() {
        assert!(Ring::new(vec![VarName::plain("x"), VarName::plain("x")]).is_err());
        // Same base, different superscripts are distinct names.
        assert!(Ring::new(vec![
            VarName::superscripted("Z1", 1),
            VarName::superscripted("Z1", 2)
        ])
        .is_ok());
    }

    #[test]
    fn arithmetic_basics() {
        let ring = xy_ring();
        let x = Polynomial::variable(&ring, 0);
        let y = Polynomial::variable(&ring, 1);
        let p = &(&x + &y) * &(&x - &y);
        let expected = &(&x * &x) - &(&y * &y);
        assert_eq!(p, expected);
        assert!((&p - &expected).is_zero());
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.total_degree(), Some(2));
    }

    #[test]
    fn pow_and_scale() {
        let ring = xy_ring();
        let x = Polynomial::variable(&ring, 0);
        let y = Polynomial::variable(&ring, 1);
        let p = (&x + &y).pow(3);
        assert_eq!(p.num_terms(), 4);
        let m = Monomial::from_exponents(vec![2, 1]);
        assert_eq!(p.coefficient(&m), q(3));
        assert_eq!(p.scale(&q(2)).coefficient(&m), q(6));
    }

    #[test]
    fn degrevlex_vs_lex() {
        // x*z vs y^2 in three variables: degrevlex prefers y^2... no:
        // both degree 2; last differing exponent is z, where x*z has more,
        // so y^2 is larger under degrevlex. Under lex, x*z wins.
        let xz = Monomial::from_exponents(vec![1, 0, 1]);
        let yy = Monomial::from_exponents(vec![0, 2, 0]);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&yy, &xz), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.cmp(&xz, &yy), Ordering::Greater);
        // Degree dominates in degrevlex.
        let x3 = Monomial::from_exponents(vec![3, 0, 0]);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&x3, &yy), Ordering::Greater);
    }

    #[test]
    fn elimination_order_blocks() {
        // First variable heavier than any power of the rest.
        let order = MonomialOrder::Elimination(1);
        let t = Monomial::from_exponents(vec![1, 0, 0]);
        let xy5 = Monomial::from_exponents(vec![0, 5, 5]);
        assert_eq!(order.cmp(&t, &xy5), Ordering::Greater);
        // Without the first block, falls back to degrevlex on the rest.
        let a = Monomial::from_exponents(vec![0, 2, 0]);
        let b = Monomial::from_exponents(vec![0, 1, 1]);
        assert_eq!(order.cmp(&a, &b), Ordering::Greater);
    }

    #[test]
    fn leading_term_depends_on_order() {
        let ring = Ring::new(vec![
            VarName::plain("x"),
            VarName::plain("y"),
            VarName::plain("z"),
        ])
        .unwrap();
        let x = Polynomial::variable(&ring, 0);
        let z = Polynomial::variable(&ring, 2);
        let y = Polynomial::variable(&ring, 1);
        let p = &(&x * &z) + &(&y * &y);
        let (lt_drl, _) = p.leading(MonomialOrder::DegRevLex).unwrap();
        assert_eq!(lt_drl.exponents(), &[0, 2, 0]);
        let (lt_lex, _) = p.leading(MonomialOrder::Lex).unwrap();
        assert_eq!(lt_lex.exponents(), &[1, 0, 1]);
    }

    #[test]
    fn substitution() {
        let ring = xy_ring();
        let target = Ring::new(vec![VarName::plain("t")]).unwrap();
        let x = Polynomial::variable(&ring, 0);
        let y = Polynomial::variable(&ring, 1);
        let p = &(&x * &x) - &y; // x^2 - y
        let t = Polynomial::variable(&target, 0);
        let t2 = &t * &t;
        let images = vec![Some(t), Some(t2)];
        let out = p.substitute(&target, &images).unwrap();
        assert!(out.is_zero());

        // A missing image for a used variable is an error.
        let partial = vec![Some(Polynomial::variable(&target, 0)), None];
        assert!(matches!(
            p.substitute(&target, &partial),
            Err(crate::Error::MissingAssignment(_))
        ));
        // ...but unused variables may be unassigned.
        let x_only = &x * &x;
        assert!(x_only.substitute(&target, &partial).is_ok());
    }

    #[test]
    fn permutation() {
        let ring = xy_ring();
        let x = Polynomial::variable(&ring, 0);
        let y = Polynomial::variable(&ring, 1);
        let p = &(&x * &x) + &y; // x^2 + y
        let swapped = p.permute_vars(&[1, 0]).unwrap();
        let expected = &(&y * &y) + &x;
        assert_eq!(swapped, expected);
        assert!(p.permute_vars(&[0, 0]).is_err());
        assert!(p.permute_vars(&[0]).is_err());
    }

    #[test]
    fn sub_mul_term_matches_operators() {
        let ring = xy_ring();
        let x = Polynomial::variable(&ring, 0);
        let y = Polynomial::variable(&ring, 1);
        let g = &(&x * &x) - &(&y * &y);
        let mut p = (&x + &y).pow(3);
        let expected = &p - &(&Polynomial::constant(&ring, q(2)) * &(&y * &g));
        let m = Monomial::from_exponents(vec![0, 1]);
        p.sub_mul_term(&q(2), &m, &g);
        assert_eq!(p, expected);
    }
}
