//! The special monomial modules of a cyclic quotient singularity and
//! their classification up to isomorphism.
//!
//! Each raw module is either the free module `(1)` or a two-generator
//! module `(Z_i, Z_{i+1}^k)` built from consecutive ring generators.
//! Distinct raw modules can be isomorphic: `(Z_i, Z_{i+1}^{last})`
//! agrees with `(Z_{i+1}, Z_{i+2})` up to a monomial shift, and the
//! classes these identifications carve out are the vertices of the
//! quiver. Every nontrivial class normalizes to the axis form
//! `(x^s, y^t)`, which is what the homomorphism search works with.

use std::fmt;

use crate::error::{Error, Result};
use crate::invariant_ring::RingPresentation;
use crate::monomial::{InvariantSemigroup, LaurentMonomial, MonomialModule};
use crate::polyring::Monomial;
use crate::util::Dsu;

/// Name of a raw special module in terms of the ring generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialRep {
    /// The free module `(1)`.
    Trivial,
    /// The module `(Z_i, Z_{i+1}^k)`.
    Pair { i: usize, k: i64 },
}

impl fmt::Display for SpecialRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialRep::Trivial => write!(f, "(1)"),
            SpecialRep::Pair { i, k: 1 } => write!(f, "(Z{}, Z{})", i, i + 1),
            SpecialRep::Pair { i, k } => write!(f, "(Z{}, Z{}^{})", i, i + 1, k),
        }
    }
}

/// Enumerates the raw special modules in canonical order: the trivial
/// module first, then `(Z_i, Z_{i+1}^k)` with `i` ascending and, for
/// each interior `i`, the exponent `k` running to one below the dual
/// entry; the final pair `(Z_l, Z_{l+1})` closes the list.
pub fn raw_special_modules(
    presentation: &RingPresentation,
) -> Result<Vec<(SpecialRep, MonomialModule)>> {
    let realizations = presentation.realizations.as_ref().ok_or_else(|| {
        Error::Domain("special modules need a monomial realization".into())
    })?;
    let semigroup = InvariantSemigroup::new(presentation.r, presentation.a)?;
    let l = presentation.interior_count();
    let mut raw = vec![(
        SpecialRep::Trivial,
        MonomialModule::trivial(semigroup),
    )];
    for i in 0..=l {
        let k_max = if i < l {
            presentation.dual_entries[i] - 1
        } else {
            1
        };
        for k in 1..=k_max {
            let gi = realizations[i];
            let gnext = realizations[i + 1];
            let second = LaurentMonomial::new(k * gnext.xexp, k * gnext.yexp);
            let module = MonomialModule::new(semigroup, vec![gi, second])?;
            raw.push((SpecialRep::Pair { i, k }, module));
        }
    }
    Ok(raw)
}

/// An isomorphism class of special modules.
#[derive(Debug, Clone)]
pub struct SpecialModuleClass {
    /// Position in the class list; class 0 is the trivial module.
    pub class_id: usize,
    /// All raw modules in the class, in enumeration order; the first is
    /// the canonical representative.
    pub representatives: Vec<SpecialRep>,
    /// The common normalized (axis) form of every representative.
    pub normalized: MonomialModule,
    /// Shift from the normalized form back to the canonical
    /// representative: `canonical = normalized + rep_shift`.
    pub rep_shift: LaurentMonomial,
    /// Canonical representative's generators as monomials in the ring
    /// variables, aligned with the normalized generators.
    pub rep_generators: Vec<Monomial>,
    /// Total degrees of the normalized generators.
    pub degrees: Vec<i64>,
}

impl SpecialModuleClass {
    pub fn name(&self) -> String {
        format!("M{}", self.class_id)
    }
}

/// Writes a raw representative as monomials in the ring variables.
fn rep_monomials(presentation: &RingPresentation, rep: &SpecialRep) -> Vec<Monomial> {
    let n = presentation.ring.num_vars();
    match rep {
        SpecialRep::Trivial => vec![Monomial::one(n)],
        SpecialRep::Pair { i, k } => {
            let first = Monomial::variable(n, *i);
            let mut exps = vec![0u32; n];
            exps[i + 1] = *k as u32;
            vec![first, Monomial::from_exponents(exps)]
        }
    }
}

/// Groups the raw special modules into isomorphism classes.
///
/// Adjacent raw modules are identified through the relation
/// `(Z_i, Z_{i+1}^{entry-1}) ~ (Z_{i+1}, Z_{i+2})`; classes are ordered
/// by first appearance, the trivial module coming first. The expected
/// class count (one more than the length of the primal continued
/// fraction) and the agreement of normalized forms inside each class
/// are both verified.
pub fn module_classes(presentation: &RingPresentation) -> Result<Vec<SpecialModuleClass>> {
    let raw = raw_special_modules(presentation)?;
    let index_of = |rep: &SpecialRep| -> Option<usize> {
        raw.iter().position(|(r, _)| r == rep)
    };
    let mut dsu = Dsu::new(raw.len());
    let l = presentation.interior_count();
    for i in 0..l {
        let left = SpecialRep::Pair {
            i,
            k: presentation.dual_entries[i] - 1,
        };
        let right = SpecialRep::Pair { i: i + 1, k: 1 };
        let (li, ri) = match (index_of(&left), index_of(&right)) {
            (Some(li), Some(ri)) => (li, ri),
            _ => {
                return Err(Error::Internal(
                    "identification edge refers to a missing raw module".into(),
                ));
            }
        };
        dsu.union(li, ri);
    }

    let mut classes: Vec<SpecialModuleClass> = Vec::new();
    let mut root_to_class: Vec<Option<usize>> = vec![None; raw.len()];
    for (idx, (rep, module)) in raw.iter().enumerate() {
        let root = dsu.find(idx);
        match root_to_class[root] {
            Some(class_id) => {
                let class = &mut classes[class_id];
                class.representatives.push(*rep);
                let (normalized, _) = module.normalize_with_shift()?;
                if normalized != class.normalized {
                    return Err(Error::Internal(format!(
                        "representative {rep} does not normalize to its class form"
                    )));
                }
            }
            None => {
                let class_id = classes.len();
                root_to_class[root] = Some(class_id);
                let (normalized, rep_shift) = module.normalize_with_shift()?;
                let degrees = normalized.generator_degrees();
                classes.push(SpecialModuleClass {
                    class_id,
                    representatives: vec![*rep],
                    normalized,
                    rep_shift,
                    rep_generators: rep_monomials(presentation, rep),
                    degrees,
                });
            }
        }
    }

    let primal_len = crate::numtheory::hj_expand(presentation.r, presentation.a)?
        .entries
        .len();
    if classes.len() != primal_len + 1 {
        return Err(Error::Internal(format!(
            "expected {} module classes, found {}",
            primal_len + 1,
            classes.len()
        )));
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariant_ring::ring_presentation;

    fn m(x: i64, y: i64) -> LaurentMonomial {
        LaurentMonomial::new(x, y)
    }

    #[test]
    fn raw_enumeration_12_7() {
        let pres = ring_presentation(12, 7).unwrap();
        let raw = raw_special_modules(&pres).unwrap();
        let reps: Vec<SpecialRep> = raw.iter().map(|(r, _)| *r).collect();
        assert_eq!(
            reps,
            vec![
                SpecialRep::Trivial,
                SpecialRep::Pair { i: 0, k: 1 },
                SpecialRep::Pair { i: 0, k: 2 },
                SpecialRep::Pair { i: 1, k: 1 },
                SpecialRep::Pair { i: 2, k: 1 },
                SpecialRep::Pair { i: 2, k: 2 },
                SpecialRep::Pair { i: 3, k: 1 },
            ]
        );
    }

    #[test]
    fn classes_12_7() {
        let pres = ring_presentation(12, 7).unwrap();
        let classes = module_classes(&pres).unwrap();
        assert_eq!(classes.len(), 4);

        let normalized: Vec<Vec<LaurentMonomial>> = classes
            .iter()
            .map(|c| c.normalized.generators().to_vec())
            .collect();
        assert_eq!(normalized[0], vec![m(0, 0)]);
        assert_eq!(normalized[1], vec![m(7, 0), m(0, 1)]);
        assert_eq!(normalized[2], vec![m(2, 0), m(0, 2)]);
        assert_eq!(normalized[3], vec![m(1, 0), m(0, 7)]);

        // Canonical representatives and their cohort.
        assert_eq!(classes[2].representatives.len(), 3);
        assert_eq!(
            classes[2].representatives[0],
            SpecialRep::Pair { i: 0, k: 2 }
        );
        assert_eq!(classes[3].representatives.len(), 2);
        assert_eq!(
            classes[3].representatives[0],
            SpecialRep::Pair { i: 2, k: 2 }
        );

        // Shifts place the normalized form back on the canonical rep.
        assert_eq!(classes[2].rep_shift, m(10, 0));
        assert_eq!(classes[3].rep_shift, m(2, 3));

        // Ring-variable forms of the canonical reps.
        assert_eq!(classes[2].rep_generators[0].exponents(), &[1, 0, 0, 0, 0]);
        assert_eq!(classes[2].rep_generators[1].exponents(), &[0, 2, 0, 0, 0]);
        assert_eq!(classes[0].degrees, vec![0]);
        assert_eq!(classes[2].degrees, vec![2, 2]);
    }

    #[test]
    fn classes_2_1() {
        let pres = ring_presentation(2, 1).unwrap();
        let classes = module_classes(&pres).unwrap();
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[1].normalized.generators(), &[m(1, 0), m(0, 1)]);
        assert_eq!(classes[1].representatives.len(), 2);
    }

    #[test]
    fn class_count_matches_primal_length() {
        for r in 2..=20i64 {
            for a in 1..r {
                if num::integer::gcd(r, a) == 1 {
                    let pres = ring_presentation(r, a).unwrap();
                    // module_classes checks the count internally.
                    let classes = module_classes(&pres).unwrap();
                    assert!(!classes.is_empty(), "r={r} a={a}");
                    // Every nontrivial class is in axis form.
                    for class in &classes[1..] {
                        let gens = class.normalized.generators();
                        assert_eq!(gens.len(), 2, "r={r} a={a}");
                        assert_eq!(gens[0].yexp, 0);
                        assert_eq!(gens[1].xexp, 0);
                        assert!(gens[0].xexp >= 1 && gens[0].xexp < r);
                        assert!(gens[1].yexp >= 1 && gens[1].yexp < r);
                    }
                }
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(SpecialRep::Trivial.to_string(), "(1)");
        assert_eq!(
            SpecialRep::Pair { i: 2, k: 1 }.to_string(),
            "(Z2, Z3)"
        );
        assert_eq!(
            SpecialRep::Pair { i: 0, k: 2 }.to_string(),
            "(Z0, Z1^2)"
        );
    }
}
