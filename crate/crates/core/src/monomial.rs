//! Laurent monomials in two variables, the invariant semigroup of a
//! cyclic group action, and finitely generated monomial modules.
//!
//! The group `Z/r` acts on `k[x, y]` by `x -> eps x`, `y -> eps^a y`
//! for a primitive r-th root of unity `eps`. A monomial `x^c y^d` is
//! invariant exactly when `c + a d = 0 (mod r)`; those exponent pairs
//! form a sub-semigroup of `N^2` and everything downstream (invariant
//! ring, special modules, homomorphisms) lives inside its fraction
//! lattice, so monomials here carry possibly negative exponents.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::validate_params;

/// A monomial `x^xexp * y^yexp` with integer (possibly negative) exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentMonomial {
    pub xexp: i64,
    pub yexp: i64,
}

impl LaurentMonomial {
    pub const fn new(xexp: i64, yexp: i64) -> Self {
        LaurentMonomial { xexp, yexp }
    }

    pub const fn one() -> Self {
        LaurentMonomial { xexp: 0, yexp: 0 }
    }

    /// Total degree `xexp + yexp`.
    pub fn degree(&self) -> i64 {
        self.xexp + self.yexp
    }

    /// True when both exponents are nonnegative, i.e. the monomial is
    /// an honest element of `k[x, y]`.
    pub fn is_polynomial(&self) -> bool {
        self.xexp >= 0 && self.yexp >= 0
    }

    /// True when `self - other` has nonnegative exponents.
    pub fn divisible_by(&self, other: &LaurentMonomial) -> bool {
        self.xexp >= other.xexp && self.yexp >= other.yexp
    }
}

impl Add for LaurentMonomial {
    type Output = LaurentMonomial;
    fn add(self, rhs: LaurentMonomial) -> LaurentMonomial {
        LaurentMonomial::new(self.xexp + rhs.xexp, self.yexp + rhs.yexp)
    }
}

impl Sub for LaurentMonomial {
    type Output = LaurentMonomial;
    fn sub(self, rhs: LaurentMonomial) -> LaurentMonomial {
        LaurentMonomial::new(self.xexp - rhs.xexp, self.yexp - rhs.yexp)
    }
}

impl fmt::Display for LaurentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.xexp == 0 && self.yexp == 0 {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        match self.xexp {
            0 => {}
            1 => parts.push("x".to_string()),
            e => parts.push(format!("x^{e}")),
        }
        match self.yexp {
            0 => {}
            1 => parts.push("y".to_string()),
            e => parts.push(format!("y^{e}")),
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// Sorts monomials by decreasing x-exponent, then increasing y-exponent.
///
/// Generator lists throughout the crate use this order so that the pure
/// x-power comes first and the pure y-power last.
pub fn generator_order(a: &LaurentMonomial, b: &LaurentMonomial) -> Ordering {
    b.xexp.cmp(&a.xexp).then(a.yexp.cmp(&b.yexp))
}

/// The semigroup of invariant exponent pairs for the `1/r (1, a)` action.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvariantSemigroup {
    r: i64,
    a: i64,
}

impl InvariantSemigroup {
    pub fn new(r: i64, a: i64) -> Result<Self> {
        validate_params(r, a)?;
        Ok(InvariantSemigroup { r, a })
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    /// Character weight of a monomial: `xexp + a * yexp` mod `r`,
    /// normalized to `0..r`.
    pub fn weight(&self, m: &LaurentMonomial) -> i64 {
        (m.xexp + self.a * m.yexp).rem_euclid(self.r)
    }

    /// True if the monomial is a polynomial invariant of the action.
    pub fn contains(&self, m: &LaurentMonomial) -> bool {
        m.is_polynomial() && self.weight(m) == 0
    }
}

/// Minimal generating set of the invariant semigroup, found by brute
/// force: every invariant monomial has exponents below `r` or is a
/// product of smaller ones, so scanning the `(r+1) x (r+1)` box and
/// discarding sums of two nonzero members is exhaustive.
pub fn minimal_semigroup_generators(r: i64, a: i64) -> Result<Vec<LaurentMonomial>> {
    let sg = InvariantSemigroup::new(r, a)?;
    let mut members = Vec::new();
    for c in 0..=r {
        for d in 0..=r {
            let m = LaurentMonomial::new(c, d);
            if !(c == 0 && d == 0) && sg.contains(&m) {
                members.push(m);
            }
        }
    }
    let mut minimal: Vec<LaurentMonomial> = members
        .iter()
        .filter(|m| {
            !members
                .iter()
                .any(|g| *g != **m && m.divisible_by(g) && sg.contains(&(**m - *g)))
        })
        .copied()
        .collect();
    minimal.sort_by(generator_order);
    Ok(minimal)
}

/// A monomial module: the span, over the invariant ring, of finitely
/// many Laurent monomials of a common character weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialModule {
    semigroup: InvariantSemigroup,
    generators: Vec<LaurentMonomial>,
}

impl MonomialModule {
    /// Builds a module from generators, which must be nonempty and share
    /// a single character weight.
    pub fn new(semigroup: InvariantSemigroup, mut generators: Vec<LaurentMonomial>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Domain("module needs at least one generator".into()));
        }
        let w = semigroup.weight(&generators[0]);
        if generators.iter().any(|g| semigroup.weight(g) != w) {
            return Err(Error::Domain(
                "module generators must share a character weight".into(),
            ));
        }
        generators.sort_by(generator_order);
        generators.dedup();
        Ok(MonomialModule {
            semigroup,
            generators,
        })
    }

    /// The rank-one free module generated by `1`.
    pub fn trivial(semigroup: InvariantSemigroup) -> Self {
        MonomialModule {
            semigroup,
            generators: vec![LaurentMonomial::one()],
        }
    }

    pub fn semigroup(&self) -> &InvariantSemigroup {
        &self.semigroup
    }

    /// Generators, sorted by decreasing x-exponent.
    pub fn generators(&self) -> &[LaurentMonomial] {
        &self.generators
    }

    /// Common character weight of all generators.
    pub fn weight(&self) -> i64 {
        self.semigroup.weight(&self.generators[0])
    }

    /// Total degrees of the generators, in generator order.
    pub fn generator_degrees(&self) -> Vec<i64> {
        self.generators.iter().map(|g| g.degree()).collect()
    }

    /// Membership test: `m` lies in the module iff some generator
    /// divides it with invariant quotient.
    pub fn contains(&self, m: &LaurentMonomial) -> bool {
        self.generators
            .iter()
            .any(|g| m.divisible_by(g) && self.semigroup.contains(&(*m - *g)))
    }

    /// Translates the module so the componentwise minimum of the
    /// generators is the origin; returns the normalized module together
    /// with the shift that was subtracted.
    pub fn normalize_with_shift(&self) -> Result<(MonomialModule, LaurentMonomial)> {
        let shift = LaurentMonomial::new(
            self.generators.iter().map(|g| g.xexp).min().unwrap(),
            self.generators.iter().map(|g| g.yexp).min().unwrap(),
        );
        let generators: Vec<LaurentMonomial> =
            self.generators.iter().map(|g| *g - shift).collect();
        if generators.iter().any(|g| !g.is_polynomial()) {
            return Err(Error::Internal(
                "normalized module has a negative exponent".into(),
            ));
        }
        let module = MonomialModule::new(self.semigroup, generators)?;
        Ok((module, shift))
    }
}

impl fmt::Display for MonomialModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(x: i64, y: i64) -> LaurentMonomial {
        LaurentMonomial::new(x, y)
    }

    #[test]
    fn semigroup_generators_12_7() {
        let gens = minimal_semigroup_generators(12, 7).unwrap();
        assert_eq!(gens, vec![m(12, 0), m(5, 1), m(3, 3), m(1, 5), m(0, 12)]);
    }

    #[test]
    fn semigroup_generators_r_1() {
        // 1/r (1,1): invariants are generated by all monomials of degree r.
        let gens = minimal_semigroup_generators(4, 1).unwrap();
        assert_eq!(gens, vec![m(4, 0), m(3, 1), m(2, 2), m(1, 3), m(0, 4)]);
    }

    #[test]
    fn semigroup_generators_2_1() {
        let gens = minimal_semigroup_generators(2, 1).unwrap();
        assert_eq!(gens, vec![m(2, 0), m(1, 1), m(0, 2)]);
    }

    #[test]
    fn weight_and_membership() {
        let sg = InvariantSemigroup::new(12, 7).unwrap();
        assert_eq!(sg.weight(&m(5, 1)), 0);
        assert_eq!(sg.weight(&m(1, 0)), 1);
        assert_eq!(sg.weight(&m(0, 1)), 7);
        assert!(sg.contains(&m(5, 1)));
        assert!(sg.contains(&m(8, 4))); // (5,1)+(3,3)
        assert!(!sg.contains(&m(-12, 0)));
        assert!(!sg.contains(&m(4, 1)));
    }

    #[test]
    fn module_membership_and_normalization() {
        let sg = InvariantSemigroup::new(12, 7).unwrap();
        let module = MonomialModule::new(sg, vec![m(7, 0), m(0, 1)]).unwrap();
        // Generator order puts the higher x-power first.
        assert_eq!(module.generators(), &[m(7, 0), m(0, 1)]);
        assert_eq!(module.weight(), 7);
        assert!(module.contains(&m(19, 0))); // x^7 * x^12
        assert!(module.contains(&m(5, 2))); // y * x^5 y
        assert!(!module.contains(&m(6, 0)));

        let shifted = MonomialModule::new(sg, vec![m(9, 3), m(2, 4)]).unwrap();
        let (normalized, shift) = shifted.normalize_with_shift().unwrap();
        assert_eq!(shift, m(2, 3));
        assert_eq!(normalized.generators(), &[m(7, 0), m(0, 1)]);
    }

    #[test]
    fn mixed_weight_generators_rejected() {
        let sg = InvariantSemigroup::new(12, 7).unwrap();
        assert!(MonomialModule::new(sg, vec![m(1, 0), m(0, 1)]).is_err());
        assert!(MonomialModule::new(sg, vec![]).is_err());
    }

    fn coprime_pairs(max_r: i64) -> impl Strategy<Value = (i64, i64)> {
        (2..=max_r)
            .prop_flat_map(|r| (Just(r), 1..r))
            .prop_filter("coprime", |&(r, a)| num::integer::gcd(r, a) == 1)
    }

    proptest! {
        #[test]
        fn oracle_generators_are_minimal((r, a) in coprime_pairs(24)) {
            let sg = InvariantSemigroup::new(r, a).unwrap();
            let gens = minimal_semigroup_generators(r, a).unwrap();
            // Every generator is invariant and no generator is a product
            // of two others.
            for g in &gens {
                prop_assert!(sg.contains(g));
                for h in &gens {
                    if g != h {
                        prop_assert!(!(g.divisible_by(h) && sg.contains(&(*g - *h))));
                    }
                }
            }
            // Pure powers x^r and y^r must always appear.
            prop_assert!(gens.contains(&LaurentMonomial::new(r, 0)));
            prop_assert!(gens.contains(&LaurentMonomial::new(0, r)));
        }

        #[test]
        fn semigroup_closed_under_addition((r, a) in coprime_pairs(24)) {
            let sg = InvariantSemigroup::new(r, a).unwrap();
            let gens = minimal_semigroup_generators(r, a).unwrap();
            for g in &gens {
                for h in &gens {
                    prop_assert!(sg.contains(&(*g + *h)));
                }
            }
        }
    }
}
