//! Hirzebruch–Jung continued fractions and the numerical invariants
//! derived from them.
//!
//! The expansion of `r/a` with all entries at least 2 controls every
//! later construction: the dual expansion drives the generator
//! recursion for the invariant ring, and the sum of `(entry - 1)` over
//! the dual gives the dimension of the versal deformation space of the
//! singularity.

use num::{BigInt, BigRational, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Checks that `1/r (1, a)` describes a cyclic quotient singularity.
pub(crate) fn validate_params(r: i64, a: i64) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidParameters {
            r,
            a,
            reason: "group order r must be at least 2".into(),
        });
    }
    if a <= 0 || a >= r {
        return Err(Error::InvalidParameters {
            r,
            a,
            reason: "weight a must satisfy 0 < a < r".into(),
        });
    }
    if gcd(r, a) != 1 {
        return Err(Error::InvalidParameters {
            r,
            a,
            reason: "r and a must be coprime".into(),
        });
    }
    Ok(())
}

fn gcd(mut x: i64, mut y: i64) -> i64 {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x.abs()
}

/// A Hirzebruch–Jung continued fraction `r/a = [e1, ..., ek]` where
/// `[e1, ..., ek] = e1 - 1/(e2 - 1/(... - 1/ek))` and every entry is >= 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HJFraction {
    /// The numerator `r`.
    pub numerator: i64,
    /// The denominator `a`.
    pub denominator: i64,
    /// The expansion entries, each at least 2.
    pub entries: Vec<i64>,
}

impl HJFraction {
    /// Evaluates the continued fraction back to an exact rational.
    pub fn evaluate(&self) -> BigRational {
        let mut value = BigRational::zero();
        for &entry in self.entries.iter().rev() {
            // value := entry - 1/value, treating the first step as value := entry.
            if value.is_zero() {
                value = BigRational::from(BigInt::from(entry));
            } else {
                value = BigRational::from(BigInt::from(entry)) - value.recip();
            }
        }
        value
    }
}

/// Expands `r/a` as a Hirzebruch–Jung continued fraction.
pub fn hj_expand(r: i64, a: i64) -> Result<HJFraction> {
    validate_params(r, a)?;
    let mut entries = Vec::new();
    let (mut num, mut den) = (r, a);
    while den > 0 {
        // Ceiling division: the HJ algorithm rounds up at every step.
        let q = (num + den - 1) / den;
        entries.push(q);
        (num, den) = (den, q * den - num);
    }
    Ok(HJFraction {
        numerator: r,
        denominator: a,
        entries,
    })
}

/// Expands the dual fraction `r/(r-a)`.
pub fn hj_dual(r: i64, a: i64) -> Result<HJFraction> {
    validate_params(r, a)?;
    hj_expand(r, r - a)
}

/// Dimension of the versal deformation space: the sum of `(entry - 1)`
/// over the dual expansion of `r/(r-a)`.
pub fn versal_dimension(r: i64, a: i64) -> Result<i64> {
    let dual = hj_dual(r, a)?;
    Ok(dual.entries.iter().map(|&b| b - 1).sum())
}

/// Every valid input pair `(r, a)` with `r` up to the given limit.
pub fn coprime_pairs(max_r: i64) -> Vec<(i64, i64)> {
    let mut pairs = Vec::new();
    for r in 2..=max_r {
        for a in 1..r {
            if gcd(r, a) == 1 {
                pairs.push((r, a));
            }
        }
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;
    use proptest::prelude::*;

    #[test]
    fn expand_12_7() {
        let f = hj_expand(12, 7).unwrap();
        assert_eq!(f.entries, vec![2, 4, 2]);
    }

    #[test]
    fn expand_dual_12_7() {
        let f = hj_dual(12, 7).unwrap();
        assert_eq!(f.entries, vec![3, 2, 3]);
        assert_eq!(f.denominator, 5);
    }

    #[test]
    fn expand_small_cases() {
        assert_eq!(hj_expand(2, 1).unwrap().entries, vec![2]);
        assert_eq!(hj_expand(5, 1).unwrap().entries, vec![5]);
        assert_eq!(hj_expand(5, 3).unwrap().entries, vec![2, 3]);
        assert_eq!(hj_expand(7, 4).unwrap().entries, vec![2, 4]);
        assert_eq!(hj_expand(5, 2).unwrap().entries, vec![3, 2]);
    }

    #[test]
    fn versal_dimension_examples() {
        // dual of 12/7 is [3,2,3]: (3-1)+(2-1)+(3-1) = 5.
        assert_eq!(versal_dimension(12, 7).unwrap(), 5);
        // dual of r/1 is r/(r-1) = [2,...,2] (r-1 twos): dimension r-1.
        assert_eq!(versal_dimension(6, 1).unwrap(), 5);
        assert_eq!(versal_dimension(2, 1).unwrap(), 1);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(hj_expand(1, 1).is_err());
        assert!(hj_expand(4, 2).is_err());
        assert!(hj_expand(5, 0).is_err());
        assert!(hj_expand(5, 5).is_err());
        assert!(hj_expand(5, 7).is_err());
        assert!(hj_expand(-3, 1).is_err());
    }

    fn coprime_pairs(max_r: i64) -> impl Strategy<Value = (i64, i64)> {
        (2..=max_r)
            .prop_flat_map(|r| (Just(r), 1..r))
            .prop_filter("coprime", |&(r, a)| {
                num::integer::gcd(r, a) == 1
            })
    }

    proptest! {
        #[test]
        fn evaluate_recovers_fraction((r, a) in coprime_pairs(60)) {
            let f = hj_expand(r, a).unwrap();
            let expected = BigRational::new(
                BigInt::from_i64(r).unwrap(),
                BigInt::from_i64(a).unwrap(),
            );
            prop_assert_eq!(f.evaluate(), expected);
        }

        #[test]
        fn entries_at_least_two((r, a) in coprime_pairs(60)) {
            let f = hj_expand(r, a).unwrap();
            prop_assert!(f.entries.iter().all(|&e| e >= 2));
        }

        #[test]
        fn dual_sum_matches((r, a) in coprime_pairs(60)) {
            // Both expansions carry the same versal dimension count.
            let f = hj_expand(r, a).unwrap();
            let d = hj_dual(r, a).unwrap();
            let from_primal: i64 = f.entries.iter().map(|&e| e - 1).sum();
            let from_dual: i64 = d.entries.iter().map(|&e| e - 1).sum();
            prop_assert_eq!(from_primal, from_dual);
        }

        #[test]
        fn length_identity((r, a) in coprime_pairs(60)) {
            // Combined length of both expansions exceeds the versal dimension by one.
            let f = hj_expand(r, a).unwrap();
            let d = hj_dual(r, a).unwrap();
            let dim: i64 = d.entries.iter().map(|&e| e - 1).sum();
            prop_assert_eq!(f.entries.len() as i64 + d.entries.len() as i64, dim + 1);
        }
    }
}
