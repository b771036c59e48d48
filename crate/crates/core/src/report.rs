//! Named pass/fail verification reports over the whole pipeline.
//!
//! [`verify_pair`] re-derives every published identity for a single
//! parameter pair `(r, a)` and records each one as an independent named
//! check instead of failing fast, so a regression in one layer never
//! masks the state of the others. The fixture checks in
//! [`crate::fixtures`] produce the same report type.

use std::fmt;

use num::BigRational;
use serde::{Deserialize, Serialize};

use crate::deformation::{
    deformed_modules, deformed_ring, specialize_central_fiber, verify_weyl_fixed,
};
use crate::error::Result;
use crate::invariant_ring::{ring_generators, ring_presentation};
use crate::monomial::minimal_semigroup_generators;
use crate::numtheory::{hj_expand, versal_dimension};
use crate::quiver::{quiver_data, QuiverOptions};
use crate::specials::module_classes;

/// Outcome of one named verification check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    /// What was verified on success, or what went wrong on failure.
    pub detail: String,
}

/// A bundle of checks; passes only if every member passes.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckReport>,
}

impl VerifyReport {
    /// True when every check passed.
    pub fn is_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Records one check outcome; `Ok` detail passes, `Err` detail fails.
    pub fn record(&mut self, name: &str, outcome: std::result::Result<String, String>) {
        let (passed, detail) = match outcome {
            Ok(detail) => (true, detail),
            Err(detail) => (false, detail),
        };
        self.checks.push(CheckReport {
            name: name.to_string(),
            passed,
            detail,
        });
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            let tag = if check.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} {}: {}", check.name, check.detail)?;
        }
        let summary = if self.is_pass() { "pass" } else { "FAIL" };
        write!(
            f,
            "{summary} ({}/{} checks)",
            self.checks.iter().filter(|c| c.passed).count(),
            self.checks.len()
        )
    }
}

/// The exact rational `num/den`.
fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Runs the full invariant suite for one parameter pair.
///
/// Errors only on invalid `(r, a)`; every verification failure is
/// reported as a failing check instead.
pub fn verify_pair(r: i64, a: i64) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    let expansion = hj_expand(r, a)?;
    let dual = hj_expand(r, r - a)?;
    let dim = versal_dimension(r, a)?;

    report.record("continued-fraction-identities", {
        let lengths = expansion.entries.len() + dual.entries.len() == (dim as usize) + 1;
        if expansion.evaluate() == ratio(r, a) && dual.evaluate() == ratio(r, r - a) && lengths {
            Ok(format!(
                "{:?} / dual {:?} / dim {dim}",
                expansion.entries, dual.entries
            ))
        } else {
            Err(format!(
                "expansion {:?} or dual {:?} fails the evaluation or length identity (dim {dim})",
                expansion.entries, dual.entries
            ))
        }
    });

    report.record("generator-oracle", {
        let recursion = ring_generators(r, a)?;
        let oracle = minimal_semigroup_generators(r, a)?;
        if recursion == oracle {
            Ok(format!("{} minimal generators agree", oracle.len()))
        } else {
            Err(format!("recursion {recursion:?} differs from oracle {oracle:?}"))
        }
    });

    let presentation = ring_presentation(r, a)?;

    report.record(
        "relation-substitution-zero",
        match presentation.verify_substitution_zero() {
            Ok(()) => Ok(format!(
                "all {} relations vanish on the monomial realization",
                presentation.relations.len()
            )),
            Err(e) => Err(e.to_string()),
        },
    );

    report.record("relation-count-homogeneity", {
        let l = presentation.interior_count() as i64;
        let expected = (l * (l + 1) / 2) as usize;
        if presentation.relations.len() != expected {
            Err(format!(
                "expected {expected} relations, found {}",
                presentation.relations.len()
            ))
        } else if !presentation.relations_homogeneous() {
            Err("a relation is not homogeneous for the grading".to_string())
        } else {
            Ok(format!("{expected} homogeneous relations"))
        }
    });

    let classes = module_classes(&presentation)?;

    report.record("module-class-count", {
        let expected = expansion.entries.len() + 1;
        if classes.len() == expected {
            Ok(format!("{} isomorphism classes", classes.len()))
        } else {
            Err(format!(
                "expected {expected} classes, found {}",
                classes.len()
            ))
        }
    });

    report.record("arrow-well-definedness", {
        let options = QuiverOptions {
            hom_bound: None,
            path_bound: Some(0),
        };
        match quiver_data(r, a, &options) {
            Ok(data) => {
                let mut offenders = Vec::new();
                for arrow in &data.arrows {
                    let src = &classes[arrow.src].normalized;
                    let dst = &classes[arrow.dst].normalized;
                    for g in src.generators() {
                        if !dst.contains(&(*g + arrow.label)) {
                            offenders.push(format!(
                                "{} does not map {g} into M{}",
                                arrow.label, arrow.dst
                            ));
                        }
                    }
                }
                if offenders.is_empty() {
                    Ok(format!("{} arrows map generators correctly", data.arrows.len()))
                } else {
                    Err(offenders.join("; "))
                }
            }
            Err(e) => Err(e.to_string()),
        }
    });

    let dr = deformed_ring(r, a)?;

    report.record("deformed-variable-count", {
        let undeformed = presentation.ring.num_vars();
        let excess = dr.num_vars() as i64 - undeformed as i64;
        if excess == dim {
            Ok(format!(
                "{} deformed variables exceed {undeformed} by the versal dimension {dim}",
                dr.num_vars()
            ))
        } else {
            Err(format!("variable excess {excess} differs from versal dimension {dim}"))
        }
    });

    report.record(
        "central-fiber-specialization",
        match specialize_central_fiber(&dr) {
            Ok(p) => Ok(format!(
                "specialized relations reproduce all {} undeformed relations",
                p.relations.len()
            )),
            Err(e) => Err(e.to_string()),
        },
    );

    report.record("weyl-invariance", match verify_weyl_fixed(&dr) {
        Ok(()) => Ok(format!(
            "all relations literally fixed by {}",
            dr.weyl_text()
        )),
        Err(e) => Err(e.to_string()),
    });

    report.record("deformed-modules-specialize", {
        match deformed_modules(r, a) {
            Ok(modules) => {
                if modules.len() == classes.len() {
                    Ok(format!(
                        "{} deformed modules specialize to their classes",
                        modules.len()
                    ))
                } else {
                    Err(format!(
                        "expected {} deformed modules, found {}",
                        classes.len(),
                        modules.len()
                    ))
                }
            }
            Err(e) => Err(e.to_string()),
        }
    });

    Ok(report)
}
