//! Golden quiver fixtures beyond the cyclic family, with full
//! Gröbner-backed verification.
//!
//! Two hand-transcribed examples live in text files under `fixtures/` at
//! the repository root: the D_{5,2} dihedral-type singularity and a
//! non-quotient rational singularity whose resolution contracts a -4
//! curve. Each file records a presentation of the singularity, its
//! special modules, the labelled quiver of irreducible maps between
//! them, and the same data for a deformed family together with the
//! specialization back to the central fiber.
//!
//! [`verify_fixture`] checks every claim the data makes: stated label
//! equalities cross-multiply into the relation ideal, every arrow maps
//! the source module into the target module modulo the ideal, and the
//! specialization carries deformed relations into the undeformed ideal.
//! All checks run in the polynomial ring over exact rationals.

use std::collections::BTreeMap;

use num::{BigRational, One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, buchberger_extend, GroebnerBasis};
use crate::polyring::text::{format_polynomial, parse_polynomial};
use crate::polyring::{MonomialOrder, Polynomial, Ring, RingRc, VarName};
use crate::report::VerifyReport;

const D5_2_TEXT: &str = include_str!("../../../fixtures/d5_2.txt");
const NONQUOTIENT_TEXT: &str = include_str!("../../../fixtures/nonquotient_minus4.txt");

/// Names accepted by [`load_fixture`].
pub fn fixture_names() -> &'static [&'static str] {
    &["D5_2", "nonquotient_minus4"]
}

/// One displayed form `num/den` of an arrow label; `inc` is `1/1`.
#[derive(Debug, Clone)]
pub struct FixtureForm {
    pub num: Polynomial,
    pub den: Polynomial,
    /// The form exactly as written in the fixture file.
    pub text: String,
}

/// A labelled irreducible map between two fixture modules. The first
/// form is the master label; the rest are stated alternative forms.
#[derive(Debug, Clone)]
pub struct FixtureArrow {
    pub src: usize,
    pub dst: usize,
    pub forms: Vec<FixtureForm>,
}

impl FixtureArrow {
    /// The full label, joining all stated forms with `=`.
    pub fn label(&self) -> String {
        let texts: Vec<&str> = self.forms.iter().map(|f| f.text.as_str()).collect();
        texts.join(" = ")
    }
}

/// A module vertex: the first generating set is canonical, the rest are
/// stated alternative presentations kept for display.
#[derive(Debug, Clone)]
pub struct FixtureModule {
    pub name: String,
    pub reps: Vec<Vec<Polynomial>>,
}

impl FixtureModule {
    /// The canonical generating set.
    pub fn canonical(&self) -> &[Polynomial] {
        &self.reps[0]
    }
}

/// Loop annotations at one vertex of the deformed quiver.
#[derive(Debug, Clone)]
pub struct FixtureLoop {
    pub vertex: usize,
    pub labels: Vec<Polynomial>,
    pub texts: Vec<String>,
}

/// One half (undeformed or deformed) of a golden fixture.
#[derive(Debug, Clone)]
pub struct FixtureSide {
    pub ring: RingRc,
    pub relations: Vec<Polynomial>,
    pub modules: Vec<FixtureModule>,
    pub arrows: Vec<FixtureArrow>,
    pub loops: Vec<FixtureLoop>,
}

impl FixtureSide {
    /// Total number of loop labels across all vertices.
    pub fn loop_count(&self) -> usize {
        self.loops.iter().map(|l| l.labels.len()).sum()
    }
}

/// Hand-transcribed quiver data for one example singularity, with its
/// deformed family and the specialization between them.
#[derive(Debug, Clone)]
pub struct GoldenFixture {
    pub name: String,
    /// Value substituted for the `lambda` parameter, when the fixture
    /// declares one.
    pub lambda: Option<BigRational>,
    pub undeformed: FixtureSide,
    pub deformed: FixtureSide,
    /// Image in the undeformed ring of each deformed variable.
    pub specialization_images: Vec<Polynomial>,
    /// The specialization pairs exactly as written.
    pub specialization: Vec<(String, String)>,
}

impl GoldenFixture {
    /// One-line shape summary.
    pub fn summary(&self) -> String {
        format!(
            "fixture {}: {} vertices, {} arrows; deformed: {} arrows, {} loops",
            self.name,
            self.undeformed.modules.len(),
            self.undeformed.arrows.len(),
            self.deformed.arrows.len(),
            self.deformed.loop_count()
        )
    }
}

/// Loads a named fixture, using the default parameter value 2 where the
/// fixture declares a `lambda`.
pub fn load_fixture(name: &str) -> Result<GoldenFixture> {
    match name {
        "D5_2" => load_fixture_from_str(D5_2_TEXT, None),
        "nonquotient_minus4" => load_fixture_from_str(NONQUOTIENT_TEXT, None),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

/// Loads a named fixture with an explicit `lambda`; the fixture must
/// declare the parameter, and 0 and 1 are inadmissible.
pub fn load_fixture_with_lambda(name: &str, lambda: BigRational) -> Result<GoldenFixture> {
    match name {
        "D5_2" => load_fixture_from_str(D5_2_TEXT, Some(lambda)),
        "nonquotient_minus4" => load_fixture_from_str(NONQUOTIENT_TEXT, Some(lambda)),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

const SECTIONS: &[&str] = &[
    "name",
    "parameters",
    "variables",
    "relations",
    "modules",
    "arrows",
    "deformed.variables",
    "deformed.relations",
    "deformed.modules",
    "deformed.arrows",
    "deformed.loops",
    "specialization",
];

/// Splits fixture text into its sections; `#` lines are comments.
fn split_sections(text: &str) -> Result<BTreeMap<String, Vec<String>>> {
    let mut sections: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut current: Option<String> = None;
    for (index, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(header) = line.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let header = header.trim().to_string();
            if !SECTIONS.contains(&header.as_str()) {
                return Err(Error::Parse(format!(
                    "line {}: unknown section [{header}]",
                    index + 1
                )));
            }
            if sections.contains_key(&header) {
                return Err(Error::Parse(format!(
                    "line {}: duplicate section [{header}]",
                    index + 1
                )));
            }
            sections.insert(header.clone(), Vec::new());
            current = Some(header);
        } else if let Some(name) = &current {
            sections.get_mut(name).expect("section exists").push(line.to_string());
        } else {
            return Err(Error::Parse(format!(
                "line {}: content before any section header",
                index + 1
            )));
        }
    }
    Ok(sections)
}

/// Splits at top-level occurrences of `sep`, respecting parentheses.
fn split_top_level(text: &str, sep: char) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut part = String::new();
    for ch in text.chars() {
        match ch {
            '(' => {
                depth += 1;
                part.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                part.push(ch);
            }
            c if c == sep && depth == 0 => {
                parts.push(part.trim().to_string());
                part = String::new();
            }
            c => part.push(c),
        }
    }
    parts.push(part.trim().to_string());
    parts
}

/// Parses polynomials written over the ring variables plus the declared
/// parameters, substituting fixed values for the parameters.
struct SideParser {
    ring: RingRc,
    parse_ring: RingRc,
    images: Vec<Option<Polynomial>>,
}

impl SideParser {
    fn new(var_names: &[String], params: &[(String, BigRational)]) -> Result<Self> {
        let vars: Vec<VarName> = var_names.iter().map(VarName::plain).collect();
        let ring = Ring::new(vars.clone())?;
        let mut all = vars;
        all.extend(params.iter().map(|(n, _)| VarName::plain(n)));
        let parse_ring = Ring::new(all)?;
        let mut images: Vec<Option<Polynomial>> = (0..var_names.len())
            .map(|i| Some(Polynomial::variable(&ring, i)))
            .collect();
        for (_, value) in params {
            images.push(Some(Polynomial::constant(&ring, value.clone())));
        }
        Ok(SideParser {
            ring,
            parse_ring,
            images,
        })
    }

    fn poly(&self, text: &str) -> Result<Polynomial> {
        let raw = parse_polynomial(&self.parse_ring, text)?;
        raw.substitute(&self.ring, &self.images)
    }

    fn form(&self, text: &str) -> Result<FixtureForm> {
        if text == "inc" {
            return Ok(FixtureForm {
                num: Polynomial::one(&self.ring),
                den: Polynomial::one(&self.ring),
                text: text.to_string(),
            });
        }
        let parts = split_top_level(text, '/');
        let (num, den) = match parts.as_slice() {
            [num] => (self.poly(num)?, Polynomial::one(&self.ring)),
            [num, den] => (self.poly(num)?, self.poly(den)?),
            _ => {
                return Err(Error::Parse(format!(
                    "label form {text:?} has more than one division"
                )))
            }
        };
        if den.is_zero() {
            return Err(Error::Parse(format!("label form {text:?} divides by zero")));
        }
        Ok(FixtureForm {
            num,
            den,
            text: text.to_string(),
        })
    }
}

fn parse_side(
    sections: &BTreeMap<String, Vec<String>>,
    prefix: &str,
    params: &[(String, BigRational)],
) -> Result<FixtureSide> {
    let section = |name: &str| -> Result<&Vec<String>> {
        let key = if prefix.is_empty() {
            name.to_string()
        } else {
            format!("{prefix}.{name}")
        };
        sections
            .get(&key)
            .ok_or_else(|| Error::Parse(format!("missing section [{key}]")))
    };

    let var_names: Vec<String> = section("variables")?
        .iter()
        .flat_map(|line| line.split_whitespace())
        .map(str::to_string)
        .collect();
    let parser = SideParser::new(&var_names, params)?;

    let relations = section("relations")?
        .iter()
        .map(|line| parser.poly(line))
        .collect::<Result<Vec<_>>>()?;

    let mut modules = Vec::new();
    let mut index_of: BTreeMap<String, usize> = BTreeMap::new();
    for line in section("modules")? {
        let (name, reps_text) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("module line {line:?} lacks '='")))?;
        let name = name.trim().to_string();
        let mut reps = Vec::new();
        for rep in split_top_level(reps_text, '|') {
            let inner = rep
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| {
                    Error::Parse(format!("module presentation {rep:?} is not parenthesized"))
                })?;
            let gens = split_top_level(inner, ',')
                .iter()
                .map(|g| parser.poly(g))
                .collect::<Result<Vec<_>>>()?;
            reps.push(gens);
        }
        if reps.is_empty() || reps[0].is_empty() {
            return Err(Error::Parse(format!("module {name} has no generators")));
        }
        if index_of.insert(name.clone(), modules.len()).is_some() {
            return Err(Error::Parse(format!("duplicate module name {name}")));
        }
        modules.push(FixtureModule { name, reps });
    }

    let vertex = |name: &str| -> Result<usize> {
        index_of
            .get(name.trim())
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown module name {name:?}")))
    };

    let mut arrows = Vec::new();
    for line in section("arrows")? {
        let (src, rest) = line
            .split_once(" -> ")
            .ok_or_else(|| Error::Parse(format!("arrow line {line:?} lacks ' -> '")))?;
        let (dst, label) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("arrow line {line:?} lacks ':'")))?;
        let forms = split_top_level(label, '=')
            .iter()
            .map(|form| parser.form(form))
            .collect::<Result<Vec<_>>>()?;
        arrows.push(FixtureArrow {
            src: vertex(src)?,
            dst: vertex(dst)?,
            forms,
        });
    }

    let mut loops = Vec::new();
    let loops_key = if prefix.is_empty() {
        "loops".to_string()
    } else {
        format!("{prefix}.loops")
    };
    if let Some(lines) = sections.get(&loops_key) {
        for line in lines {
            let (name, labels_text) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("loop line {line:?} lacks ':'")))?;
            let texts: Vec<String> = split_top_level(labels_text, ',');
            let labels = texts
                .iter()
                .map(|t| parser.poly(t))
                .collect::<Result<Vec<_>>>()?;
            loops.push(FixtureLoop {
                vertex: vertex(name)?,
                labels,
                texts,
            });
        }
    }

    Ok(FixtureSide {
        ring: parser.ring,
        relations,
        modules,
        arrows,
        loops,
    })
}

/// Parses fixture text, substituting `lambda` when declared. Passing a
/// value for a fixture that declares no parameter is an error, as are
/// the inadmissible values 0 and 1.
pub fn load_fixture_from_str(
    text: &str,
    lambda: Option<BigRational>,
) -> Result<GoldenFixture> {
    let sections = split_sections(text)?;
    let name = sections
        .get("name")
        .and_then(|lines| lines.first())
        .ok_or_else(|| Error::Parse("missing [name] section".into()))?
        .clone();

    let declared: Vec<String> = sections
        .get("parameters")
        .map(|lines| {
            lines
                .iter()
                .flat_map(|line| line.split_whitespace())
                .map(str::to_string)
                .collect()
        })
        .unwrap_or_default();
    if lambda.is_some() && declared.is_empty() {
        return Err(Error::Domain(format!(
            "fixture {name} declares no parameters, so lambda cannot be set"
        )));
    }
    let value = match &lambda {
        Some(v) => {
            if v.is_zero() || v.is_one() {
                return Err(Error::Domain(format!(
                    "lambda = {v} is inadmissible; any rational outside {{0, 1}} works"
                )));
            }
            v.clone()
        }
        None => BigRational::from_integer(2.into()),
    };
    let params: Vec<(String, BigRational)> = declared
        .iter()
        .map(|p| (p.clone(), value.clone()))
        .collect();
    let lambda = if declared.is_empty() { None } else { Some(value) };

    let undeformed = parse_side(&sections, "", &params)?;
    let deformed = parse_side(&sections, "deformed", &params)?;

    let mut mapped: BTreeMap<String, String> = BTreeMap::new();
    let mut specialization = Vec::new();
    for line in sections
        .get("specialization")
        .ok_or_else(|| Error::Parse("missing [specialization] section".into()))?
    {
        let (from, to) = line
            .split_once(" -> ")
            .ok_or_else(|| Error::Parse(format!("specialization line {line:?} lacks ' -> '")))?;
        mapped.insert(from.trim().to_string(), to.trim().to_string());
        specialization.push((from.trim().to_string(), to.trim().to_string()));
    }
    let specialization_images = deformed
        .ring
        .vars()
        .iter()
        .map(|v| {
            let source = v.to_string();
            let target = mapped.get(&source).unwrap_or(&source);
            let index = undeformed.ring.var_index(target).ok_or_else(|| {
                Error::Parse(format!(
                    "specialization sends {source} to {target}, which is not an undeformed variable"
                ))
            })?;
            Ok(Polynomial::variable(&undeformed.ring, index))
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(GoldenFixture {
        name,
        lambda,
        undeformed,
        deformed,
        specialization_images,
        specialization,
    })
}

/// Ideal-membership engine for one fixture side, with cached extensions
/// of the relation Gröbner basis by `den * (target generators)`.
struct SideEngine<'a> {
    side: &'a FixtureSide,
    gb: &'a GroebnerBasis,
    extended: BTreeMap<(usize, String), GroebnerBasis>,
}

impl<'a> SideEngine<'a> {
    fn new(side: &'a FixtureSide, gb: &'a GroebnerBasis) -> Self {
        SideEngine {
            side,
            gb,
            extended: BTreeMap::new(),
        }
    }

    /// Checks that `num/den` maps every canonical generator of `src`
    /// into the module generated by `dst` modulo the relations; failures
    /// are appended with the given context label.
    fn check_map(
        &mut self,
        src: usize,
        dst: usize,
        num: &Polynomial,
        den: &Polynomial,
        context: &str,
        failures: &mut Vec<String>,
    ) {
        if self.gb.contains(den) {
            failures.push(format!("{context}: denominator lies in the relation ideal"));
            return;
        }
        let key = (dst, format_polynomial(den, MonomialOrder::DegRevLex));
        if !self.extended.contains_key(&key) {
            let extra: Vec<Polynomial> = self.side.modules[dst]
                .canonical()
                .iter()
                .map(|g| den * g)
                .collect();
            match buchberger_extend(self.gb, &extra) {
                Ok(basis) => {
                    self.extended.insert(key.clone(), basis);
                }
                Err(e) => {
                    failures.push(format!("{context}: {e}"));
                    return;
                }
            }
        }
        let basis = &self.extended[&key];
        for g in self.side.modules[src].canonical() {
            if !basis.contains(&(num * g)) {
                failures.push(format!(
                    "{context}: does not map source generator {} into {}",
                    format_polynomial(g, MonomialOrder::DegRevLex),
                    self.side.modules[dst].name
                ));
            }
        }
    }
}

fn arrow_context(side: &FixtureSide, arrow: &FixtureArrow) -> String {
    format!(
        "{} -> {} : {}",
        side.modules[arrow.src].name,
        side.modules[arrow.dst].name,
        arrow.label()
    )
}

/// Runs the label-identity and well-definedness checks for one side.
fn verify_side(report: &mut VerifyReport, tag: &str, side: &FixtureSide, gb: &GroebnerBasis) {
    let mut failures = Vec::new();
    let mut pairs = 0usize;
    for arrow in &side.arrows {
        let master = &arrow.forms[0];
        for other in &arrow.forms[1..] {
            pairs += 1;
            let cross = &(&master.num * &other.den) - &(&other.num * &master.den);
            if !gb.contains(&cross) {
                failures.push(format!(
                    "{}: {} and {} differ modulo the relations",
                    arrow_context(side, arrow),
                    master.text,
                    other.text
                ));
            }
        }
    }
    report.record(
        &format!("label-identities ({tag})"),
        if failures.is_empty() {
            Ok(format!("{pairs} cross-multiplied identities reduce to 0"))
        } else {
            Err(failures.join("; "))
        },
    );

    let mut failures = Vec::new();
    let mut engine = SideEngine::new(side, gb);
    for arrow in &side.arrows {
        let context = arrow_context(side, arrow);
        let master = &arrow.forms[0];
        engine.check_map(
            arrow.src,
            arrow.dst,
            &master.num,
            &master.den,
            &context,
            &mut failures,
        );
    }
    let one = Polynomial::one(&side.ring);
    for lp in &side.loops {
        for (label, text) in lp.labels.iter().zip(&lp.texts) {
            let context = format!("loop {text} at {}", side.modules[lp.vertex].name);
            engine.check_map(lp.vertex, lp.vertex, label, &one, &context, &mut failures);
        }
    }
    report.record(
        &format!("arrow-well-definedness ({tag})"),
        if failures.is_empty() {
            Ok(format!(
                "{} arrows and {} loops map generators into their targets",
                side.arrows.len(),
                side.loop_count()
            ))
        } else {
            Err(failures.join("; "))
        },
    );
}

/// Verifies every claim a fixture makes; failures are report entries,
/// never errors.
pub fn verify_fixture(fixture: &GoldenFixture) -> VerifyReport {
    let mut report = VerifyReport::default();
    let order = MonomialOrder::DegRevLex;
    let gb_und = buchberger(&fixture.undeformed.ring, &fixture.undeformed.relations, order);
    let gb_def = buchberger(&fixture.deformed.ring, &fixture.deformed.relations, order);

    match &gb_und {
        Ok(gb) => verify_side(&mut report, "undeformed", &fixture.undeformed, gb),
        Err(e) => report.record("label-identities (undeformed)", Err(e.to_string())),
    }
    match &gb_def {
        Ok(gb) => verify_side(&mut report, "deformed", &fixture.deformed, gb),
        Err(e) => report.record("label-identities (deformed)", Err(e.to_string())),
    }

    report.record("specialization", {
        match &gb_und {
            Ok(gb) => {
                let images: Vec<Option<Polynomial>> = fixture
                    .specialization_images
                    .iter()
                    .map(|p| Some(p.clone()))
                    .collect();
                let mut failures = Vec::new();
                for rel in &fixture.deformed.relations {
                    match rel.substitute(&fixture.undeformed.ring, &images) {
                        Ok(image) => {
                            if !gb.contains(&image) {
                                failures.push(format!(
                                    "{} specializes outside the undeformed ideal",
                                    format_polynomial(rel, MonomialOrder::Lex)
                                ));
                            }
                        }
                        Err(e) => failures.push(e.to_string()),
                    }
                }
                if failures.is_empty() {
                    Ok(format!(
                        "all {} deformed relations specialize into the undeformed ideal",
                        fixture.deformed.relations.len()
                    ))
                } else {
                    Err(failures.join("; "))
                }
            }
            Err(e) => Err(e.to_string()),
        }
    });

    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d5_2_loads_with_expected_shape() {
        let f = load_fixture("D5_2").unwrap();
        assert_eq!(f.name, "D5_2");
        assert_eq!(f.lambda, None);
        let names: Vec<&str> = f
            .undeformed
            .modules
            .iter()
            .map(|m| m.name.as_str())
            .collect();
        assert_eq!(names, ["M0", "M+", "M-", "M1", "M2"]);
        assert_eq!(f.undeformed.arrows.len(), 12);
        assert_eq!(f.deformed.arrows.len(), 12);
        assert_eq!(f.deformed.loop_count(), 18);
        assert!(f.undeformed.loops.is_empty());
        assert_eq!(f.undeformed.modules[3].reps.len(), 3);
        assert_eq!(f.deformed.ring.num_vars(), 12);
        let gens: Vec<String> = f.undeformed.modules[1]
            .canonical()
            .iter()
            .map(|g| format_polynomial(g, MonomialOrder::Lex))
            .collect();
        assert_eq!(gens, ["X2", "t"]);
    }

    #[test]
    fn nonquotient_loads_with_default_lambda() {
        let f = load_fixture("nonquotient_minus4").unwrap();
        assert_eq!(f.lambda, Some(BigRational::from_integer(2.into())));
        assert_eq!(f.undeformed.modules.len(), 6);
        assert_eq!(f.undeformed.arrows.len(), 16);
        assert_eq!(f.deformed.arrows.len(), 16);
        assert_eq!(f.deformed.loop_count(), 32);
        let expected =
            parse_polynomial(&f.undeformed.ring, "X4 - 2*Y4 - t^2").unwrap();
        assert!(f.undeformed.relations.contains(&expected));
        let lifted =
            parse_polynomial(&f.deformed.ring, "X4 - 2*Y4 - t4*t4'").unwrap();
        assert!(f.deformed.relations.contains(&lifted));
    }

    #[test]
    fn lambda_override_reaches_the_relations() {
        let third = BigRational::new(1.into(), 3.into());
        let f = load_fixture_with_lambda("nonquotient_minus4", third.clone()).unwrap();
        let head = parse_polynomial(&f.undeformed.ring, "X4 - t^2").unwrap();
        let tail = parse_polynomial(&f.undeformed.ring, "Y4").unwrap();
        let expected = &head - &tail.scale(&third);
        assert!(f.undeformed.relations.contains(&expected));
    }

    #[test]
    fn inadmissible_lambda_is_rejected() {
        for v in [0, 1] {
            let err = load_fixture_with_lambda(
                "nonquotient_minus4",
                BigRational::from_integer(v.into()),
            )
            .unwrap_err();
            assert!(matches!(err, Error::Domain(_)), "{err}");
        }
        let err = load_fixture_with_lambda("D5_2", BigRational::from_integer(5.into()))
            .unwrap_err();
        assert!(matches!(err, Error::Domain(_)), "{err}");
    }

    #[test]
    fn unknown_fixture_is_rejected() {
        let err = load_fixture("E8").unwrap_err();
        assert!(matches!(err, Error::UnknownFixture(_)), "{err}");
    }

    #[test]
    fn verify_d5_2_passes_every_check() {
        let f = load_fixture("D5_2").unwrap();
        let report = verify_fixture(&f);
        assert!(report.is_pass(), "{report}");
        let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(
            names,
            [
                "label-identities (undeformed)",
                "arrow-well-definedness (undeformed)",
                "label-identities (deformed)",
                "arrow-well-definedness (deformed)",
                "specialization",
            ]
        );
    }

    #[test]
    fn verify_nonquotient_passes_every_check() {
        let f = load_fixture("nonquotient_minus4").unwrap();
        let report = verify_fixture(&f);
        assert!(report.is_pass(), "{report}");
    }

    const TINY: &str = "\n[name]\ntiny\n\n[variables]\nt X Y\n\n[relations]\nX*Y - t^2\n\n[modules]\nM0 = (1)\nM1 = (X, t)\n\n[arrows]\nM0 -> M1 : t\nM1 -> M0 : inc\nM1 -> M0 : Y/t = t/X\n\n[deformed.variables]\ns s' X Y\n\n[deformed.relations]\nX*Y - s*s'\n\n[deformed.modules]\nM0' = (1)\nM1' = (X, s)\n\n[deformed.arrows]\nM0' -> M1' : s\nM1' -> M0' : inc\nM1' -> M0' : Y/s = s'/X\n\n[specialization]\ns -> t\ns' -> t\n";

    #[test]
    fn tiny_fixture_verifies() {
        let f = load_fixture_from_str(TINY, None).unwrap();
        assert_eq!(f.summary(), "fixture tiny: 2 vertices, 3 arrows; deformed: 3 arrows, 0 loops");
        let report = verify_fixture(&f);
        assert!(report.is_pass(), "{report}");
    }

    #[test]
    fn verify_flags_a_false_label_identity() {
        let broken = TINY.replace("Y/t = t/X", "Y/t = t/Y");
        let f = load_fixture_from_str(&broken, None).unwrap();
        let report = verify_fixture(&f);
        assert!(!report.is_pass());
        let failing: Vec<&CheckReport> =
            report.checks.iter().filter(|c| !c.passed).collect();
        assert!(failing
            .iter()
            .any(|c| c.name == "label-identities (undeformed)" && c.detail.contains("M1 -> M0")));
    }

    #[test]
    fn verify_flags_an_ill_defined_arrow() {
        let broken = TINY.replace("M0 -> M1 : t\n", "M0 -> M1 : Y\n");
        let f = load_fixture_from_str(&broken, None).unwrap();
        let report = verify_fixture(&f);
        assert!(!report.is_pass());
        let failing: Vec<&CheckReport> =
            report.checks.iter().filter(|c| !c.passed).collect();
        assert!(failing.iter().any(|c| {
            c.name == "arrow-well-definedness (undeformed)" && c.detail.contains("M0 -> M1 : Y")
        }));
    }

    #[test]
    fn verify_flags_a_broken_specialization() {
        let broken = TINY.replace("X*Y - s*s'", "X*Y - s*s' + s");
        let f = load_fixture_from_str(&broken, None).unwrap();
        let report = verify_fixture(&f);
        let check = report
            .checks
            .iter()
            .find(|c| c.name == "specialization")
            .unwrap();
        assert!(!check.passed);
        assert!(check.detail.contains("specializes outside"));
    }

    #[test]
    fn malformed_fixture_text_is_a_parse_error() {
        for (broken, what) in [
            (TINY.replace("M0 -> M1 : t", "M0 => M1 : t"), "arrow separator"),
            (TINY.replace("[specialization]", "[special]"), "section name"),
            (TINY.replace("M1 = (X, t)", "M1 = X, t"), "module parens"),
        ] {
            let err = load_fixture_from_str(&broken, None).unwrap_err();
            assert!(matches!(err, Error::Parse(_)), "{what}: {err}");
        }
    }

    use crate::report::CheckReport;
}
