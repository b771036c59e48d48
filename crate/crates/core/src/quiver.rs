//! The reconstruction algebra as a quiver with relations.
//!
//! Vertices are the special module classes, arrows are the minimal
//! generators of the Hom spaces that admit no factorization through a
//! third module, and relations are coincidences between the monomial
//! evaluations of parallel arrow paths. Arrow labels are carried both
//! as Laurent monomials in `x, y` and as ratios of ring generators.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariant_ring::{ring_presentation, RingPresentation};
use crate::monomial::{generator_order, LaurentMonomial, MonomialModule};
use crate::polyring::text::monomial_text;
use crate::polyring::{Monomial, RingRc};
use crate::specials::{module_classes, SpecialModuleClass};
use crate::util::Dsu;

/// True when multiplication by `f` maps `src` into `dst`.
pub fn is_hom(src: &MonomialModule, dst: &MonomialModule, f: &LaurentMonomial) -> bool {
    src.generators().iter().all(|g| dst.contains(&(*g + *f)))
}

/// All minimal generators of `Hom(src, dst)` as a module over the
/// invariant ring.
///
/// Every Hom element has nonnegative exponents (a normalized source has
/// a generator on each axis), and any element with `xexp >= r + max
/// x-exponent of dst` splits off the semigroup member `(r, 0)` (same in
/// `y`), so the search box below contains every minimal generator and
/// every element needed to witness minimality.
pub fn hom_minimal_generators(src: &MonomialModule, dst: &MonomialModule) -> Vec<LaurentMonomial> {
    let r = src.semigroup().r();
    let xmax = r + dst.generators().iter().map(|g| g.xexp).max().unwrap_or(0);
    let ymax = r + dst.generators().iter().map(|g| g.yexp).max().unwrap_or(0);
    let mut elements = Vec::new();
    for xexp in 0..=xmax {
        for yexp in 0..=ymax {
            let f = LaurentMonomial::new(xexp, yexp);
            if is_hom(src, dst, &f) {
                elements.push(f);
            }
        }
    }
    let semigroup = *src.semigroup();
    let mut minimal: Vec<LaurentMonomial> = elements
        .iter()
        .filter(|f| {
            !elements
                .iter()
                .any(|g| *g != **f && semigroup.contains(&(**f - *g)))
        })
        .copied()
        .collect();
    minimal.sort_by(|a, b| a.degree().cmp(&b.degree()).then(generator_order(a, b)));
    minimal
}

/// Minimal Hom generators of total degree at most `bound`, sorted by
/// degree. An empty result means no low-degree maps, not an error.
pub fn hom_generators(
    src: &MonomialModule,
    dst: &MonomialModule,
    bound: i64,
) -> Vec<LaurentMonomial> {
    hom_minimal_generators(src, dst)
        .into_iter()
        .filter(|f| f.degree() <= bound)
        .collect()
}

/// An arrow label written as a ratio of monomials in ring generators,
/// e.g. `Z_4 / Z_3^2`. The identity ratio renders as `inc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZFraction {
    pub num: Monomial,
    pub den: Monomial,
}

impl ZFraction {
    pub(crate) fn identity(num_vars: usize) -> Self {
        ZFraction {
            num: Monomial::one(num_vars),
            den: Monomial::one(num_vars),
        }
    }

    pub(crate) fn polynomial(num: Monomial) -> Self {
        let den = Monomial::one(num.num_vars());
        ZFraction { num, den }
    }

    /// Cancels common variable powers between numerator and denominator.
    pub(crate) fn reduced(num: &Monomial, den: &Monomial) -> Self {
        let shared: Vec<u32> = num
            .exponents()
            .iter()
            .zip(den.exponents())
            .map(|(a, b)| *a.min(b))
            .collect();
        let common = Monomial::from_exponents(shared);
        ZFraction {
            num: num.try_div(&common).expect("gcd divides numerator"),
            den: den.try_div(&common).expect("gcd divides denominator"),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Renders the fraction; multi-variable denominators are
    /// parenthesized (`Z4^(1)/(Z3^(1)*Z3^(2))`).
    pub fn text(&self, ring: &RingRc) -> String {
        if self.is_identity() {
            return "inc".to_string();
        }
        if self.den.is_one() {
            return monomial_text(ring, &self.num);
        }
        let num = monomial_text(ring, &self.num);
        let den = monomial_text(ring, &self.den);
        let den_vars = self.den.exponents().iter().filter(|e| **e > 0).count();
        if den_vars > 1 {
            format!("{num}/({den})")
        } else {
            format!("{num}/{den}")
        }
    }
}

/// Realizes a monomial in ring generators as a Laurent monomial.
fn realize_monomial(presentation: &RingPresentation, m: &Monomial) -> Result<LaurentMonomial> {
    let realizations = presentation.realizations.as_ref().ok_or_else(|| {
        Error::Internal("monomial realization requested in an ungraded ring".into())
    })?;
    let mut out = LaurentMonomial::one();
    for (e, exp) in m.exponents().iter().enumerate() {
        out.xexp += realizations[e].xexp * i64::from(*exp);
        out.yexp += realizations[e].yexp * i64::from(*exp);
    }
    Ok(out)
}

/// Writes an invariant monomial as a product of ring generators.
///
/// Depth-first search over generators in ring order, trying the largest
/// multiplicity first; the first decomposition found is the canonical
/// one. Returns None when the monomial is not invariant.
pub fn decompose(presentation: &RingPresentation, target: &LaurentMonomial) -> Option<Monomial> {
    let realizations = presentation.realizations.as_ref()?;
    if !target.is_polynomial() {
        return None;
    }
    let n = realizations.len();
    let mut exps = vec![0u32; n];
    fn search(
        gens: &[LaurentMonomial],
        e: usize,
        remaining: LaurentMonomial,
        exps: &mut Vec<u32>,
    ) -> bool {
        if remaining == LaurentMonomial::one() {
            return true;
        }
        if e == gens.len() {
            return false;
        }
        let g = gens[e];
        let mut max_mult = i64::MAX;
        if g.xexp > 0 {
            max_mult = max_mult.min(remaining.xexp / g.xexp);
        }
        if g.yexp > 0 {
            max_mult = max_mult.min(remaining.yexp / g.yexp);
        }
        for k in (0..=max_mult).rev() {
            exps[e] = k as u32;
            let rest = LaurentMonomial::new(remaining.xexp - k * g.xexp, remaining.yexp - k * g.yexp);
            if search(gens, e + 1, rest, exps) {
                return true;
            }
        }
        exps[e] = 0;
        false
    }
    if search(realizations, 0, *target, &mut exps) {
        Some(Monomial::from_exponents(exps))
    } else {
        None
    }
}

/// Computes the generator-ratio forms of an arrow label.
///
/// The label `f` maps normalized modules; conjugating by the shifts of
/// the canonical representatives gives the map `mu` between the
/// representatives themselves. When `mu` is invariant the label is the
/// single polynomial form; otherwise each representative generator `g`
/// contributes the form `decompose(realize(g) + mu) / g`, reduced.
fn zform_list(
    presentation: &RingPresentation,
    src: &SpecialModuleClass,
    dst: &SpecialModuleClass,
    f: &LaurentMonomial,
) -> Result<Vec<ZFraction>> {
    let n = presentation.ring.num_vars();
    let mu = *f - src.rep_shift + dst.rep_shift;
    if mu == LaurentMonomial::one() {
        return Ok(vec![ZFraction::identity(n)]);
    }
    if mu.is_polynomial() {
        let num = decompose(presentation, &mu).ok_or_else(|| {
            Error::Internal(format!("invariant label {mu} admits no generator product"))
        })?;
        return Ok(vec![ZFraction::polynomial(num)]);
    }
    let mut forms = Vec::new();
    for gen in &src.rep_generators {
        let image = realize_monomial(presentation, gen)? + mu;
        let num = decompose(presentation, &image).ok_or_else(|| {
            Error::Internal(format!(
                "arrow image {image} of a representative generator is not a generator product"
            ))
        })?;
        let form = ZFraction::reduced(&num, gen);
        if !forms.contains(&form) {
            forms.push(form);
        }
    }
    Ok(forms)
}

/// Proof that a Hom generator is composite: it factors through the
/// module class `mid` as `outer . inner` with both factors of positive
/// degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationWitness {
    pub mid: usize,
    /// Map from the source into `mid`.
    pub inner: LaurentMonomial,
    /// Map from `mid` into the target.
    pub outer: LaurentMonomial,
}

/// A minimal Hom generator that was excluded from the arrow set, with
/// the factorization that excludes it.
#[derive(Debug, Clone)]
pub struct ExcludedHom {
    pub src: usize,
    pub dst: usize,
    pub label: LaurentMonomial,
    pub witness: FactorizationWitness,
}

/// An arrow of the computed quiver.
#[derive(Debug, Clone)]
pub struct MonoArrow {
    pub src: usize,
    pub dst: usize,
    /// Action on the normalized modules.
    pub label: LaurentMonomial,
    pub degree: i64,
    /// Generator-ratio forms of the label, in source-generator order.
    pub zforms: Vec<ZFraction>,
}

impl MonoArrow {
    /// All ratio forms joined with ` = `; `inc` for the inclusion.
    pub fn zlabel(&self, ring: &RingRc) -> String {
        self.zforms
            .iter()
            .map(|z| z.text(ring))
            .collect::<Vec<_>>()
            .join(" = ")
    }
}

/// Searches for a positive-degree factorization of `f` through any
/// module class, scanning intermediates and exponent splits in a fixed
/// order so the witness is deterministic.
fn find_factorization(
    classes: &[SpecialModuleClass],
    src: usize,
    dst: usize,
    f: &LaurentMonomial,
) -> Option<FactorizationWitness> {
    for (mid, class) in classes.iter().enumerate() {
        for xexp in 0..=f.xexp {
            for yexp in 0..=f.yexp {
                let inner = LaurentMonomial::new(xexp, yexp);
                let outer = *f - inner;
                if inner.degree() == 0 || outer.degree() == 0 {
                    continue;
                }
                if is_hom(&classes[src].normalized, &class.normalized, &inner)
                    && is_hom(&class.normalized, &classes[dst].normalized, &outer)
                {
                    return Some(FactorizationWitness { mid, inner, outer });
                }
            }
        }
    }
    None
}

/// The arrows of the quiver together with the composite generators that
/// were excluded.
#[derive(Debug, Clone)]
pub struct ArrowSet {
    pub arrows: Vec<MonoArrow>,
    pub excluded: Vec<ExcludedHom>,
}

/// Computes the arrows between all ordered pairs of module classes
/// (loops included in the search; they only survive when irreducible).
///
/// A candidate becomes an arrow when it admits no positive-degree
/// factorization through any class. For distinct classes the candidates
/// are the module-minimal Hom generators (anything else splits off a
/// positive-degree endomorphism). The endomorphisms of a normalized
/// module are exactly the invariant semigroup — verified here, aborting
/// otherwise — so loop candidates are the semigroup's minimal
/// generators: any other endomorphism is a sum of two and factors
/// trivially. An irreducible candidate of degree above `hom_bound`
/// aborts with a bound-exhausted error rather than silently dropping an
/// arrow; composite generators above the bound are harmless and are
/// still excluded with a witness.
pub fn compute_arrows(
    presentation: &RingPresentation,
    classes: &[SpecialModuleClass],
    hom_bound: i64,
) -> Result<ArrowSet> {
    let semigroup_generators =
        crate::monomial::minimal_semigroup_generators(presentation.r, presentation.a)?;
    let mut arrows = Vec::new();
    let mut excluded = Vec::new();
    for (src, sclass) in classes.iter().enumerate() {
        for (dst, dclass) in classes.iter().enumerate() {
            let candidates = if src == dst {
                let minimal = hom_minimal_generators(&sclass.normalized, &dclass.normalized);
                if minimal != [LaurentMonomial::one()] {
                    return Err(Error::Internal(format!(
                        "endomorphisms of {} exceed the invariant semigroup: {minimal:?}",
                        sclass.name()
                    )));
                }
                semigroup_generators.clone()
            } else {
                hom_minimal_generators(&sclass.normalized, &dclass.normalized)
            };
            for f in candidates {
                if f.degree() == 0 {
                    return Err(Error::Internal(format!(
                        "degree-zero map {f} from {} to {}",
                        sclass.name(),
                        dclass.name()
                    )));
                }
                match find_factorization(classes, src, dst, &f) {
                    Some(witness) => excluded.push(ExcludedHom {
                        src,
                        dst,
                        label: f,
                        witness,
                    }),
                    None => {
                        if f.degree() > hom_bound {
                            return Err(Error::BoundExhausted {
                                bound: hom_bound,
                                context: format!(
                                    "listing arrows: irreducible map {f} from {} to {} has degree {}",
                                    sclass.name(),
                                    dclass.name(),
                                    f.degree()
                                ),
                            });
                        }
                        let zforms = zform_list(presentation, sclass, dclass, &f)?;
                        arrows.push(MonoArrow {
                            src,
                            dst,
                            label: f,
                            degree: f.degree(),
                            zforms,
                        });
                    }
                }
            }
        }
    }
    arrows.sort_by(|p, q| {
        p.src
            .cmp(&q.src)
            .then(p.dst.cmp(&q.dst))
            .then(p.degree.cmp(&q.degree))
            .then(generator_order(&p.label, &q.label))
    });
    Ok(ArrowSet { arrows, excluded })
}

/// A binomial relation between two parallel paths, each a sequence of
/// arrow indices in traversal order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRelation {
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
    pub degree: i64,
}

pub(crate) struct PathRecord {
    pub(crate) seq: Vec<usize>,
    pub(crate) src: usize,
    pub(crate) dst: usize,
    pub(crate) eval: LaurentMonomial,
}

/// Enumerates all directed paths of total degree at most `bound`.
pub(crate) fn enumerate_paths(
    arrows: &[MonoArrow],
    num_vertices: usize,
    bound: i64,
) -> Vec<PathRecord> {
    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); num_vertices];
    for (id, arrow) in arrows.iter().enumerate() {
        outgoing[arrow.src].push(id);
    }
    let mut paths = Vec::new();
    fn extend(
        arrows: &[MonoArrow],
        outgoing: &[Vec<usize>],
        src: usize,
        at: usize,
        seq: &mut Vec<usize>,
        eval: LaurentMonomial,
        remaining: i64,
        paths: &mut Vec<PathRecord>,
    ) {
        for &id in &outgoing[at] {
            let arrow = &arrows[id];
            if arrow.degree > remaining {
                continue;
            }
            seq.push(id);
            let eval = eval + arrow.label;
            paths.push(PathRecord {
                seq: seq.clone(),
                src,
                dst: arrow.dst,
                eval,
            });
            extend(
                arrows,
                outgoing,
                src,
                arrow.dst,
                seq,
                eval,
                remaining - arrow.degree,
                paths,
            );
            seq.pop();
        }
    }
    for v in 0..num_vertices {
        let mut seq = Vec::new();
        extend(
            arrows,
            &outgoing,
            v,
            v,
            &mut seq,
            LaurentMonomial::one(),
            bound,
            &mut paths,
        );
    }
    paths
}

/// Extracts a minimal set of binomial path relations from evaluation
/// coincidences up to path degree `bound`.
///
/// Parallel paths with equal evaluation form a group; within a group,
/// paths already identified by rewriting along previously emitted
/// relations are merged, and one spanning relation per remaining
/// component is emitted. Groups are processed in increasing degree, so
/// every lower-degree consequence is available as a rewrite rule.
pub fn path_relations(
    arrows: &[MonoArrow],
    num_vertices: usize,
    bound: i64,
) -> Vec<PathRelation> {
    if bound <= 0 {
        return Vec::new();
    }
    let paths = enumerate_paths(arrows, num_vertices, bound);
    let mut groups: BTreeMap<(i64, usize, usize, i64, i64), Vec<usize>> = BTreeMap::new();
    for (idx, p) in paths.iter().enumerate() {
        let key = (p.eval.degree(), p.src, p.dst, p.eval.xexp, p.eval.yexp);
        groups.entry(key).or_default().push(idx);
    }
    let mut emitted: Vec<PathRelation> = Vec::new();
    let mut usable = 0;
    let mut current_degree = i64::MIN;
    for ((degree, ..), members) in groups {
        if members.len() < 2 {
            continue;
        }
        // A relation rewrites only strictly longer (higher-degree)
        // paths, so same-degree emissions never apply to this group;
        // groups arrive in ascending degree, making the cutoff monotone.
        if degree > current_degree {
            usable = emitted.len();
            current_degree = degree;
        }
        let index_of: BTreeMap<&[usize], usize> = members
            .iter()
            .enumerate()
            .map(|(local, &idx)| (paths[idx].seq.as_slice(), local))
            .collect();
        let mut dsu = Dsu::new(members.len());
        for (local, &idx) in members.iter().enumerate() {
            let seq = &paths[idx].seq;
            for relation in &emitted[..usable] {
                for (from, to) in [
                    (&relation.lhs, &relation.rhs),
                    (&relation.rhs, &relation.lhs),
                ] {
                    if from.len() > seq.len() {
                        continue;
                    }
                    for start in 0..=(seq.len() - from.len()) {
                        if &seq[start..start + from.len()] != from.as_slice() {
                            continue;
                        }
                        let mut rewritten = Vec::with_capacity(seq.len() - from.len() + to.len());
                        rewritten.extend_from_slice(&seq[..start]);
                        rewritten.extend_from_slice(to);
                        rewritten.extend_from_slice(&seq[start + from.len()..]);
                        if let Some(&other) = index_of.get(rewritten.as_slice()) {
                            dsu.union(local, other);
                        }
                    }
                }
            }
        }
        let mut components: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for local in 0..members.len() {
            components.entry(dsu.find(local)).or_default().push(local);
        }
        let path_order = |&a: &usize, &b: &usize| {
            let pa = &paths[members[a]].seq;
            let pb = &paths[members[b]].seq;
            pa.len().cmp(&pb.len()).then_with(|| pa.cmp(pb))
        };
        let mut reps: Vec<usize> = components
            .values()
            .map(|component| *component.iter().min_by(|a, b| path_order(a, b)).unwrap())
            .collect();
        reps.sort_by(path_order);
        for rep in reps.iter().skip(1) {
            emitted.push(PathRelation {
                lhs: paths[members[reps[0]]].seq.clone(),
                rhs: paths[members[*rep]].seq.clone(),
                degree,
            });
        }
    }
    emitted
}

/// Everything computed for a quiver, in computational (not display)
/// form; the deformation layer builds on this.
#[derive(Debug, Clone)]
pub struct QuiverData {
    pub presentation: RingPresentation,
    pub classes: Vec<SpecialModuleClass>,
    pub arrows: Vec<MonoArrow>,
    pub excluded: Vec<ExcludedHom>,
    pub relations: Vec<PathRelation>,
}

/// Search bounds for quiver computation; `None` selects the defaults
/// `2r` (Hom degree) and `3r` (path degree). A path bound of zero skips
/// relation extraction.
#[derive(Debug, Clone, Copy, Default)]
pub struct QuiverOptions {
    pub hom_bound: Option<i64>,
    pub path_bound: Option<i64>,
}

impl QuiverOptions {
    pub(crate) fn resolve(&self, r: i64) -> (i64, i64) {
        (
            self.hom_bound.unwrap_or(2 * r),
            self.path_bound.unwrap_or(3 * r),
        )
    }
}

/// Computes the full quiver data for `1/r (1, a)`.
pub fn quiver_data(r: i64, a: i64, options: &QuiverOptions) -> Result<QuiverData> {
    let presentation = ring_presentation(r, a)?;
    let classes = module_classes(&presentation)?;
    let (hom_bound, path_bound) = options.resolve(r);
    let ArrowSet { arrows, excluded } = compute_arrows(&presentation, &classes, hom_bound)?;
    let relations = path_relations(&arrows, classes.len(), path_bound);
    Ok(QuiverData {
        presentation,
        classes,
        arrows,
        excluded,
        relations,
    })
}

/// A vertex of the serialized quiver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverVertex {
    pub name: String,
    /// Normalized module, e.g. `(x^7, y)`.
    pub module: String,
    /// Symbolic representatives, e.g. `(Z0, Z1^2)`.
    pub representatives: Vec<String>,
    /// Exponent pairs of the normalized generators.
    pub generators: Vec<(i64, i64)>,
    /// Total degrees of the normalized generators.
    pub degrees: Vec<i64>,
}

/// An arrow of the serialized quiver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverArrow {
    pub src: usize,
    pub dst: usize,
    /// Monomial action on normalized modules (`x^3*y`).
    pub label: String,
    /// Generator-ratio label (`Z1/Z0 = Z2/Z1^2`, or `inc`).
    pub zlabel: String,
    pub degree: i64,
}

/// A quiver with relations in display/serialization form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverPresentation {
    pub r: Option<i64>,
    pub a: Option<i64>,
    pub fixture: Option<String>,
    pub deformed: bool,
    pub vertices: Vec<QuiverVertex>,
    pub arrows: Vec<QuiverArrow>,
    pub relations: Vec<PathRelation>,
    pub min_relation_degree: Option<i64>,
}

impl QuiverPresentation {
    /// Arrow multiplicities per ordered vertex pair.
    pub fn adjacency(&self) -> BTreeMap<(usize, usize), usize> {
        let mut counts = BTreeMap::new();
        for arrow in &self.arrows {
            *counts.entry((arrow.src, arrow.dst)).or_insert(0) += 1;
        }
        counts
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("quiver serialization cannot fail")
    }

    /// Graphviz rendering: one node per vertex, one edge per arrow
    /// labelled `zlabel (deg d)`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n    rankdir=LR;\n");
        for (i, vertex) in self.vertices.iter().enumerate() {
            out.push_str(&format!(
                "    v{i} [label=\"{} = {}\"];\n",
                vertex.name, vertex.module
            ));
        }
        for arrow in &self.arrows {
            out.push_str(&format!(
                "    v{} -> v{} [label=\"{} (deg {})\"];\n",
                arrow.src, arrow.dst, arrow.zlabel, arrow.degree
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match (&self.fixture, self.r, self.a) {
            (Some(name), ..) => out.push_str(&format!("quiver of fixture {name}")),
            (None, Some(r), Some(a)) => out.push_str(&format!("quiver of 1/{r}(1,{a})")),
            _ => out.push_str("quiver"),
        }
        if self.deformed {
            out.push_str(" (deformed)");
        }
        out.push('\n');
        out.push_str("vertices:\n");
        for vertex in &self.vertices {
            out.push_str(&format!("  {} = {}", vertex.name, vertex.module));
            if vertex.representatives.len() > 1 {
                out.push_str(&format!("  [{}]", vertex.representatives.join(" ~ ")));
            }
            out.push('\n');
        }
        out.push_str("arrows:\n");
        for (id, arrow) in self.arrows.iter().enumerate() {
            out.push_str(&format!(
                "  a{id}: {} -> {}  {}  (deg {})\n",
                self.vertices[arrow.src].name, self.vertices[arrow.dst].name, arrow.zlabel, arrow.degree
            ));
        }
        if let Some(degree) = self.min_relation_degree {
            out.push_str(&format!(
                "relations ({}; minimal degree {degree}):\n",
                self.relations.len()
            ));
            for relation in &self.relations {
                let side = |seq: &[usize]| {
                    seq.iter()
                        .map(|id| format!("a{id}"))
                        .collect::<Vec<_>>()
                        .join("*")
                };
                out.push_str(&format!(
                    "  {} = {}  (deg {})\n",
                    side(&relation.lhs),
                    side(&relation.rhs),
                    relation.degree
                ));
            }
        } else {
            out.push_str("relations: none\n");
        }
        out
    }
}

/// Converts computed quiver data to its display form.
pub fn presentation_from_data(data: &QuiverData, deformed: bool) -> QuiverPresentation {
    let ring = &data.presentation.ring;
    let vertices = data
        .classes
        .iter()
        .map(|class| QuiverVertex {
            name: class.name(),
            module: class.normalized.to_string(),
            representatives: class.representatives.iter().map(|r| r.to_string()).collect(),
            generators: class
                .normalized
                .generators()
                .iter()
                .map(|g| (g.xexp, g.yexp))
                .collect(),
            degrees: class.degrees.clone(),
        })
        .collect();
    let arrows = data
        .arrows
        .iter()
        .map(|arrow| QuiverArrow {
            src: arrow.src,
            dst: arrow.dst,
            label: arrow.label.to_string(),
            zlabel: arrow.zlabel(ring),
            degree: arrow.degree,
        })
        .collect();
    QuiverPresentation {
        r: Some(data.presentation.r),
        a: Some(data.presentation.a),
        fixture: None,
        deformed,
        vertices,
        arrows,
        relations: data.relations.clone(),
        min_relation_degree: data.relations.iter().map(|rel| rel.degree).min(),
    }
}

/// Computes the quiver with relations of the reconstruction algebra of
/// `1/r (1, a)`.
pub fn quiver_presentation(r: i64, a: i64, options: &QuiverOptions) -> Result<QuiverPresentation> {
    let data = quiver_data(r, a, options)?;
    Ok(presentation_from_data(&data, false))
}
