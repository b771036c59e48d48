//! Generators and relations of the invariant ring of a cyclic quotient
//! singularity.
//!
//! The minimal generators `Z_0, ..., Z_{l+1}` realize as monomials
//! `x^{c_e} y^{d_e}`, produced by a two-term recursion driven by the
//! dual continued fraction. The recursion is cheap but subtle, so its
//! output is always checked against the brute-force semigroup
//! enumeration before anything else is built on it. The relations are
//! the `l(l+1)/2` binomials indexed by pairs `0 <= i < j <= l`, each
//! vanishing identically under the monomial realization.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{minimal_semigroup_generators, LaurentMonomial};
use crate::numtheory::{hj_dual, validate_params};
use crate::polyring::{text, Monomial, MonomialOrder, Polynomial, Ring, RingRc, VarName};

/// The ring `k[x, y]` that invariants realize in.
pub fn xy_ring() -> RingRc {
    Ring::new(vec![VarName::plain("x"), VarName::plain("y")])
        .expect("x, y are distinct names")
}

/// Minimal generators of the invariant ring as exponent pairs, in
/// decreasing x-exponent order: `(r, 0)` first, `(0, r)` last.
///
/// Computed by the dual-fraction recursion and cross-checked against
/// the independent brute-force enumeration; a mismatch is reported as
/// an internal error rather than silently trusted.
pub fn ring_generators(r: i64, a: i64) -> Result<Vec<LaurentMonomial>> {
    validate_params(r, a)?;
    let dual = hj_dual(r, a)?;
    let b = &dual.entries;
    let mut gens = vec![
        LaurentMonomial::new(r, 0),
        LaurentMonomial::new(r - a, 1),
    ];
    for (e, &be) in b.iter().enumerate() {
        // gens[e+1] is the current generator, gens[e] the previous one.
        let cur = gens[e + 1];
        let prev = gens[e];
        gens.push(LaurentMonomial::new(
            be * cur.xexp - prev.xexp,
            be * cur.yexp - prev.yexp,
        ));
    }
    let oracle = minimal_semigroup_generators(r, a)?;
    if gens != oracle {
        return Err(Error::Internal(format!(
            "generator recursion disagrees with enumeration for r={r}, a={a}"
        )));
    }
    Ok(gens)
}

/// A presentation of a ring by named variables and relations.
///
/// For the invariant ring itself, `realizations` carries the monomial
/// realization of each variable and `gradings` its total degree; the
/// deformed presentation has neither.
#[derive(Debug, Clone)]
pub struct RingPresentation {
    pub r: i64,
    pub a: i64,
    /// Variables `Z_0, ..., Z_{l+1}` (deformed: their superscripted copies).
    pub ring: RingRc,
    /// Monomial realization of each variable, when the ring is graded
    /// by monomials in `x, y`.
    pub realizations: Option<Vec<LaurentMonomial>>,
    pub relations: Vec<Polynomial>,
    /// Total degree of each variable under the realization.
    pub gradings: Option<Vec<i64>>,
    /// Dual continued fraction entries `b_1, ..., b_l`.
    pub dual_entries: Vec<i64>,
}

#[derive(Serialize)]
struct VariableJson {
    name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    xexp: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    yexp: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    degree: Option<i64>,
}

impl RingPresentation {
    /// Number of interior generators `l`; the variable count is `l + 2`
    /// for the undeformed presentation.
    pub fn interior_count(&self) -> usize {
        self.dual_entries.len()
    }

    /// Checks that substituting the monomial realization for every
    /// variable kills every relation.
    pub fn verify_substitution_zero(&self) -> Result<()> {
        let realizations = self.realizations.as_ref().ok_or_else(|| {
            Error::Domain("presentation has no monomial realization".into())
        })?;
        let xy = xy_ring();
        let images: Vec<Option<Polynomial>> = realizations
            .iter()
            .map(|m| {
                if !m.is_polynomial() {
                    return Err(Error::Internal(
                        "realization with negative exponent".into(),
                    ));
                }
                Ok(Some(Polynomial::from_monomial(
                    &xy,
                    Monomial::from_exponents(vec![m.xexp as u32, m.yexp as u32]),
                )))
            })
            .collect::<Result<_>>()?;
        for rel in &self.relations {
            let image = rel.substitute(&xy, &images)?;
            if !image.is_zero() {
                return Err(Error::Verification(format!(
                    "relation {rel} does not vanish under the monomial realization"
                )));
            }
        }
        Ok(())
    }

    /// Weighted degree of a monomial under the grading, if every term
    /// of the presentation is graded.
    pub fn weighted_degree(&self, m: &Monomial) -> Option<i64> {
        let gradings = self.gradings.as_ref()?;
        Some(
            m.exponents()
                .iter()
                .zip(gradings)
                .map(|(&e, &g)| e as i64 * g)
                .sum(),
        )
    }

    /// True when every relation is homogeneous for the grading.
    pub fn relations_homogeneous(&self) -> bool {
        self.relations.iter().all(|rel| {
            let mut degrees = rel
                .terms()
                .map(|(m, _)| self.weighted_degree(m));
            match degrees.next() {
                None => true,
                Some(first) => first.is_some() && degrees.all(|d| d == first),
            }
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("invariant ring of 1/{} (1, {})\n", self.r, self.a));
        out.push_str("variables:\n");
        for (i, v) in self.ring.vars().iter().enumerate() {
            match &self.realizations {
                Some(real) => {
                    let g = real[i];
                    out.push_str(&format!(
                        "  {} = {} (degree {})\n",
                        v,
                        g,
                        g.degree()
                    ));
                }
                None => out.push_str(&format!("  {v}\n")),
            }
        }
        out.push_str("relations:\n");
        for rel in &self.relations {
            // Lex puts the Z_i * Z_{j+1} term first in every relation.
            out.push_str(&format!(
                "  {}\n",
                text::format_polynomial(rel, MonomialOrder::Lex)
            ));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let variables: Vec<VariableJson> = self
            .ring
            .vars()
            .iter()
            .enumerate()
            .map(|(i, v)| VariableJson {
                name: v.to_string(),
                xexp: self.realizations.as_ref().map(|r| r[i].xexp),
                yexp: self.realizations.as_ref().map(|r| r[i].yexp),
                degree: self.gradings.as_ref().map(|g| g[i]),
            })
            .collect();
        let relations: Vec<String> = self
            .relations
            .iter()
            .map(|r| text::format_polynomial(r, MonomialOrder::Lex))
            .collect();
        serde_json::json!({
            "r": self.r,
            "a": self.a,
            "deformed": self.realizations.is_none(),
            "variables": variables,
            "relations": relations,
        })
    }
}

/// The relation indexed by `0 <= i < j <= l`:
/// `Z_i Z_{j+1} - Z_{i+1} (prod_{b = i+1}^{j} Z_b^{entry_b - 2}) Z_j`.
fn relation(ring: &RingRc, i: usize, j: usize, dual_entries: &[i64]) -> Result<Polynomial> {
    let n = ring.num_vars();
    let mut first = vec![0u32; n];
    first[i] += 1;
    first[j + 1] += 1;
    let mut second = vec![0u32; n];
    second[i + 1] += 1;
    second[j] += 1;
    for beta in (i + 1)..=j {
        let e = dual_entries[beta - 1];
        if e < 2 {
            return Err(Error::Internal("dual entry below 2".into()));
        }
        second[beta] += (e - 2) as u32;
    }
    let lhs = Polynomial::from_monomial(ring, Monomial::from_exponents(first));
    let rhs = Polynomial::from_monomial(ring, Monomial::from_exponents(second));
    Ok(&lhs - &rhs)
}

/// Builds the full graded presentation of the invariant ring.
pub fn ring_presentation(r: i64, a: i64) -> Result<RingPresentation> {
    let generators = ring_generators(r, a)?;
    let dual = hj_dual(r, a)?;
    let l = dual.entries.len();
    let vars: Vec<VarName> = (0..generators.len())
        .map(|e| VarName::plain(format!("Z{e}")))
        .collect();
    let ring = Ring::new(vars)?;
    let mut relations = Vec::new();
    for i in 0..l {
        for j in (i + 1)..=l {
            relations.push(relation(&ring, i, j, &dual.entries)?);
        }
    }
    if relations.len() != l * (l + 1) / 2 {
        return Err(Error::Internal("relation count mismatch".into()));
    }
    let gradings: Vec<i64> = generators.iter().map(|g| g.degree()).collect();
    let presentation = RingPresentation {
        r,
        a,
        ring,
        realizations: Some(generators),
        relations,
        gradings: Some(gradings),
        dual_entries: dual.entries,
    };
    presentation.verify_substitution_zero()?;
    if !presentation.relations_homogeneous() {
        return Err(Error::Internal(
            "presentation relations are not homogeneous".into(),
        ));
    }
    Ok(presentation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::text::parse_polynomial;

    fn m(x: i64, y: i64) -> LaurentMonomial {
        LaurentMonomial::new(x, y)
    }

    #[test]
    fn generators_12_7() {
        let gens = ring_generators(12, 7).unwrap();
        assert_eq!(gens, vec![m(12, 0), m(5, 1), m(3, 3), m(1, 5), m(0, 12)]);
    }

    #[test]
    fn generators_match_oracle_broadly() {
        for r in 2..=24i64 {
            for a in 1..r {
                if num::integer::gcd(r, a) == 1 {
                    // ring_generators gates itself against the oracle.
                    let gens = ring_generators(r, a).unwrap();
                    assert_eq!(gens.first(), Some(&m(r, 0)));
                    assert_eq!(gens.last(), Some(&m(0, r)));
                }
            }
        }
    }

    #[test]
    fn presentation_12_7() {
        let pres = ring_presentation(12, 7).unwrap();
        assert_eq!(pres.ring.num_vars(), 5);
        assert_eq!(pres.relations.len(), 6);
        assert_eq!(pres.gradings, Some(vec![12, 6, 6, 6, 12]));

        let first = parse_polynomial(&pres.ring, "Z0*Z2 - Z1^3").unwrap();
        assert!(
            pres.relations.contains(&first) || pres.relations.contains(&-&first),
            "expected Z0*Z2 - Z1^3 among the relations"
        );
        assert!(pres.relations_homogeneous());
        pres.verify_substitution_zero().unwrap();
    }

    #[test]
    fn presentation_r_1_gives_minors() {
        // For a = 1 every dual entry is 2, so the relations are exactly
        // the 2x2 minors of the [Z0..Z3; Z1..Z4] matrix.
        let pres = ring_presentation(4, 1).unwrap();
        assert_eq!(pres.relations.len(), 6);
        for i in 0..3usize {
            for j in (i + 1)..=3 {
                let minor = parse_polynomial(
                    &pres.ring,
                    &format!("Z{i}*Z{} - Z{}*Z{j}", j + 1, i + 1),
                )
                .unwrap();
                assert!(
                    pres.relations.contains(&minor),
                    "missing minor for ({i}, {j})"
                );
            }
        }
    }

    #[test]
    fn substitution_zero_across_range() {
        for r in 2..=16i64 {
            for a in 1..r {
                if num::integer::gcd(r, a) == 1 {
                    let pres = ring_presentation(r, a).unwrap();
                    pres.verify_substitution_zero().unwrap();
                    assert!(pres.relations_homogeneous(), "r={r} a={a}");
                }
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(ring_presentation(6, 4).is_err());
        assert!(ring_generators(1, 1).is_err());
    }

    #[test]
    fn json_shape() {
        let pres = ring_presentation(2, 1).unwrap();
        let v = pres.to_json();
        assert_eq!(v["r"], 2);
        assert_eq!(v["deformed"], false);
        assert_eq!(v["variables"].as_array().unwrap().len(), 3);
        assert_eq!(v["variables"][0]["name"], "Z0");
        assert_eq!(v["variables"][0]["xexp"], 2);
        assert_eq!(v["relations"].as_array().unwrap().len(), 1);
        assert_eq!(v["relations"][0], "Z0*Z2 - Z1^2");
    }
}
