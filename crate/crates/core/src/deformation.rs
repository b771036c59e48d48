//! Artin-component deformation of the invariant ring: each interior
//! generator `Z_e` splits into `b_e` copies `Z_e^(1), ..., Z_e^(b_e)`
//! and the quasi-determinantal relations survive with superscripts
//! distributed across the matrix slots. The module builds the deformed
//! presentation with its Weyl symmetry, lifts the special modules and
//! the quiver arrows, and re-derives the path relations — all fraction
//! identities certified by normal forms modulo the relation ideal.

use std::collections::BTreeMap;

use serde_json::json;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, buchberger_extend, GroebnerBasis};
use crate::invariant_ring::{ring_presentation, RingPresentation};
use crate::numtheory::versal_dimension;
use crate::polyring::text::{format_polynomial, monomial_text};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, Ring, RingRc, VarName};
use crate::quiver::{
    enumerate_paths, quiver_data, MonoArrow, PathRelation, QuiverArrow, QuiverData,
    QuiverOptions, QuiverPresentation, QuiverVertex, ZFraction,
};
use crate::specials::{module_classes, SpecialModuleClass, SpecialRep};
use crate::util::Dsu;

/// The deformed presentation: variables `Z_e^(j)` for `1 <= j <= m_e`
/// with `m_0 = m_{l+1} = 1` and `m_e = b_e` in between, one relation
/// per quasi-determinantal pair, and the Weyl factors that permute
/// copies of a common generator. Deformed rings carry no grading;
/// degree bookkeeping stays with the undeformed side.
#[derive(Debug, Clone)]
pub struct DeformedRing {
    pub r: i64,
    pub a: i64,
    pub ring: RingRc,
    pub relations: Vec<Polynomial>,
    /// Copy count `m_e` of each undeformed generator.
    pub multiplicities: Vec<i64>,
    /// `var_of[e][j-1]` is the ring index of `Z_e^(j)`.
    pub var_of: Vec<Vec<usize>>,
    /// Undeformed generator index of each ring variable.
    pub base_of: Vec<usize>,
    /// Dual continued fraction entries `b_1, ..., b_l`.
    pub dual_entries: Vec<i64>,
    /// Weyl factors: the variable indices each symmetric group permutes.
    pub weyl_factors: Vec<Vec<usize>>,
}

/// A Weyl generator: an adjacent transposition of two copies, stored
/// as a full permutation of the ring's variables.
#[derive(Debug, Clone)]
pub struct WeylGenerator {
    pub swap: (usize, usize),
    pub perm: Vec<usize>,
}

impl DeformedRing {
    pub fn num_vars(&self) -> usize {
        self.ring.num_vars()
    }

    /// Adjacent transpositions generating the Weyl group; factors with
    /// fewer than two elements contribute none.
    pub fn weyl_generators(&self) -> Vec<WeylGenerator> {
        let n = self.num_vars();
        let mut gens = Vec::new();
        for factor in &self.weyl_factors {
            for pair in factor.windows(2) {
                let mut perm: Vec<usize> = (0..n).collect();
                perm[pair[0]] = pair[1];
                perm[pair[1]] = pair[0];
                gens.push(WeylGenerator {
                    swap: (pair[0], pair[1]),
                    perm,
                });
            }
        }
        gens
    }

    /// Renders the Weyl group, e.g. `S2 x S1 x S2`.
    pub fn weyl_text(&self) -> String {
        self.weyl_factors
            .iter()
            .map(|factor| format!("S{}", factor.len().max(1)))
            .collect::<Vec<_>>()
            .join(" x ")
    }

    /// Substitution images realizing `Z_e^(j) -> Z_e`.
    pub fn specialization_images(&self, target: &RingRc) -> Vec<Option<Polynomial>> {
        self.base_of
            .iter()
            .map(|&e| {
                Some(Polynomial::from_monomial(
                    target,
                    Monomial::variable(target.num_vars(), e),
                ))
            })
            .collect()
    }

    /// Applies the central-fiber substitution to one polynomial.
    pub fn specialize(&self, p: &Polynomial, target: &RingRc) -> Result<Polynomial> {
        p.substitute(target, &self.specialization_images(target))
    }

    /// Drops superscripts from a monomial, landing in the undeformed
    /// variable list.
    pub fn specialize_monomial(&self, m: &Monomial) -> Monomial {
        let mut exps = vec![0u32; self.multiplicities.len()];
        for (i, &e) in m.exponents().iter().enumerate() {
            exps[self.base_of[i]] += e;
        }
        Monomial::from_exponents(exps)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "deformed ring of 1/{} (1, {})\n",
            self.r, self.a
        ));
        let vars: Vec<String> = self.ring.vars().iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("variables: {}\n", vars.join(", ")));
        out.push_str(&format!("weyl group: {}\n", self.weyl_text()));
        out.push_str("relations:\n");
        for rel in &self.relations {
            out.push_str(&format!(
                "  {}\n",
                format_polynomial(rel, MonomialOrder::Lex)
            ));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "r": self.r,
            "a": self.a,
            "deformed": true,
            "variables": self.ring.vars().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "multiplicities": self.multiplicities,
            "weyl": self.weyl_text(),
            "relations": self.relations.iter()
                .map(|p| format_polynomial(p, MonomialOrder::Lex))
                .collect::<Vec<_>>(),
        })
    }
}

/// Builds the deformed ring of `1/r (1, a)`.
pub fn deformed_ring(r: i64, a: i64) -> Result<DeformedRing> {
    let undeformed = ring_presentation(r, a)?;
    let dual = undeformed.dual_entries.clone();
    let l = dual.len();
    let mut multiplicities = vec![1i64; l + 2];
    for e in 1..=l {
        multiplicities[e] = dual[e - 1];
    }
    let mut names = Vec::new();
    let mut var_of: Vec<Vec<usize>> = vec![Vec::new(); l + 2];
    let mut base_of = Vec::new();
    for (e, &m) in multiplicities.iter().enumerate() {
        for j in 1..=m {
            var_of[e].push(names.len());
            base_of.push(e);
            names.push(VarName::superscripted(format!("Z{e}"), j as u32));
        }
    }
    let ring = Ring::new(names)?;
    let n = ring.num_vars();

    // Column e of the deformed matrix has top entry Z_e^(m_e) and
    // bottom entry Z_{e+1}^(1); the relation for 0 <= i < j <= l is
    // top_i bottom_j - bottom_i (interior copies between them) top_j.
    let mut relations = Vec::new();
    for i in 0..l {
        for j in (i + 1)..=l {
            let mut first = vec![0u32; n];
            first[var_of[i][multiplicities[i] as usize - 1]] += 1;
            first[var_of[j + 1][0]] += 1;
            let mut second = vec![0u32; n];
            second[var_of[i + 1][0]] += 1;
            second[var_of[j][multiplicities[j] as usize - 1]] += 1;
            for beta in (i + 1)..=j {
                for m in 2..multiplicities[beta] {
                    second[var_of[beta][m as usize - 1]] += 1;
                }
            }
            let lhs = Polynomial::from_monomial(&ring, Monomial::from_exponents(first));
            let rhs = Polynomial::from_monomial(&ring, Monomial::from_exponents(second));
            relations.push(&lhs - &rhs);
        }
    }

    let excess = n as i64 - (l as i64 + 2);
    if excess != versal_dimension(r, a)? {
        return Err(Error::Internal(
            "deformed variable excess disagrees with the versal dimension".into(),
        ));
    }

    // Weyl factors: the first symmetric group also moves Z_1^(1), the
    // last also moves Z_l^(b_l); for l = 1 both roles fall on the lone
    // factor, which then acts on every copy except the top-row Z_1^(b_1).
    let mut weyl_factors = Vec::new();
    if l == 1 {
        let b1 = multiplicities[1] as usize;
        weyl_factors.push(var_of[1][..b1 - 1].to_vec());
    } else {
        for e in 1..=l {
            let b = multiplicities[e] as usize;
            let factor = if e == 1 {
                var_of[1][..b - 1].to_vec()
            } else if e == l {
                var_of[l][1..].to_vec()
            } else {
                var_of[e][1..b - 1].to_vec()
            };
            weyl_factors.push(factor);
        }
    }

    Ok(DeformedRing {
        r,
        a,
        ring,
        relations,
        multiplicities,
        var_of,
        base_of,
        dual_entries: dual,
        weyl_factors,
    })
}

/// Adjacent transpositions generating the Weyl group of `1/r (1, a)`.
pub fn weyl_generators(r: i64, a: i64) -> Result<Vec<WeylGenerator>> {
    Ok(deformed_ring(r, a)?.weyl_generators())
}

/// Checks that every relation is literally fixed by every Weyl
/// generator — the arbiter for the factor bookkeeping.
pub fn verify_weyl_fixed(dr: &DeformedRing) -> Result<()> {
    for generator in dr.weyl_generators() {
        for rel in &dr.relations {
            let image = rel.permute_vars(&generator.perm)?;
            if image != *rel {
                return Err(Error::Verification(format!(
                    "relation {} moves under the transposition ({} {})",
                    format_polynomial(rel, MonomialOrder::Lex),
                    dr.ring.var(generator.swap.0),
                    dr.ring.var(generator.swap.1),
                )));
            }
        }
    }
    Ok(())
}

/// Applies `Z_e^(j) -> Z_e` to every relation and checks the image
/// against the undeformed presentation: every image must be an
/// undeformed relation up to sign, and every undeformed relation must
/// be hit. Returns the undeformed presentation.
pub fn specialize_central_fiber(dr: &DeformedRing) -> Result<RingPresentation> {
    let undeformed = ring_presentation(dr.r, dr.a)?;
    let zero = Polynomial::zero(&undeformed.ring);
    let mut hit = vec![false; undeformed.relations.len()];
    for rel in &dr.relations {
        let image = dr.specialize(rel, &undeformed.ring)?;
        let negated = &zero - &image;
        let position = undeformed
            .relations
            .iter()
            .position(|u| *u == image || *u == negated);
        match position {
            Some(idx) => hit[idx] = true,
            None => {
                return Err(Error::Verification(format!(
                    "specialized relation {} is not an undeformed relation",
                    format_polynomial(&image, MonomialOrder::Lex)
                )));
            }
        }
    }
    if let Some(idx) = hit.iter().position(|h| !h) {
        return Err(Error::Verification(format!(
            "undeformed relation {} is not hit by the specialization",
            format_polynomial(&undeformed.relations[idx], MonomialOrder::Lex)
        )));
    }
    Ok(undeformed)
}

/// A lifted special module: one monomial-ideal presentation per
/// undeformed representative, canonical first. `(Z_i, Z_{i+1}^k)`
/// lifts to `(Z_i^(m_i), Z_{i+1}^(1) ... Z_{i+1}^(k))`.
#[derive(Debug, Clone)]
pub struct DeformedModule {
    pub class_id: usize,
    /// Generators of each lift, aligned with the class representatives.
    pub lifts: Vec<Vec<Monomial>>,
}

impl DeformedModule {
    pub fn name(&self) -> String {
        format!("M{}'", self.class_id)
    }

    pub fn canonical(&self) -> &[Monomial] {
        &self.lifts[0]
    }

    pub fn lift_text(&self, ring: &RingRc, which: usize) -> String {
        let gens: Vec<String> = self.lifts[which]
            .iter()
            .map(|g| monomial_text(ring, g))
            .collect();
        format!("({})", gens.join(", "))
    }
}

fn lift_rep(dr: &DeformedRing, rep: &SpecialRep) -> Vec<Monomial> {
    let n = dr.num_vars();
    match rep {
        SpecialRep::Trivial => vec![Monomial::one(n)],
        SpecialRep::Pair { i, k } => {
            let top = Monomial::variable(n, dr.var_of[*i][dr.multiplicities[*i] as usize - 1]);
            let mut run = Monomial::one(n);
            for j in 1..=*k {
                run = run.mul(&Monomial::variable(n, dr.var_of[i + 1][j as usize - 1]));
            }
            vec![top, run]
        }
    }
}

fn undeformed_rep_monomials(num_vars: usize, rep: &SpecialRep) -> Vec<Monomial> {
    match rep {
        SpecialRep::Trivial => vec![Monomial::one(num_vars)],
        SpecialRep::Pair { i, k } => vec![
            Monomial::variable(num_vars, *i),
            Monomial::variable(num_vars, i + 1).pow(*k as u32),
        ],
    }
}

/// Lifts every representative of every class, checking that each lift
/// specializes back to its undeformed presentation.
pub fn lift_modules(
    dr: &DeformedRing,
    classes: &[SpecialModuleClass],
) -> Result<Vec<DeformedModule>> {
    let undeformed_vars = dr.multiplicities.len();
    let mut out = Vec::new();
    for class in classes {
        let mut lifts = Vec::new();
        for rep in &class.representatives {
            let lift = lift_rep(dr, rep);
            let expected = undeformed_rep_monomials(undeformed_vars, rep);
            let specialized: Vec<Monomial> =
                lift.iter().map(|g| dr.specialize_monomial(g)).collect();
            if specialized != expected {
                return Err(Error::Internal(format!(
                    "lift of {rep} does not specialize to its representative"
                )));
            }
            lifts.push(lift);
        }
        out.push(DeformedModule {
            class_id: class.class_id,
            lifts,
        });
    }
    Ok(out)
}

/// Lifted special modules of `1/r (1, a)`, indexed like the classes.
pub fn deformed_modules(r: i64, a: i64) -> Result<Vec<DeformedModule>> {
    let undeformed = ring_presentation(r, a)?;
    let classes = module_classes(&undeformed)?;
    let dr = deformed_ring(r, a)?;
    lift_modules(&dr, &classes)
}

/// A lifted arrow: the undeformed forms rewritten in deformed
/// variables. The first form is certified as a module map by ideal
/// membership; the rest cross-multiply to it modulo the relations.
#[derive(Debug, Clone)]
pub struct DeformedArrow {
    pub src: usize,
    pub dst: usize,
    /// Degree inherited from the undeformed arrow.
    pub degree: i64,
    pub forms: Vec<ZFraction>,
}

impl DeformedArrow {
    /// All forms joined with ` = `; `inc` for the inclusion.
    pub fn label(&self, ring: &RingRc) -> String {
        self.forms
            .iter()
            .map(|f| f.text(ring))
            .collect::<Vec<_>>()
            .join(" = ")
    }
}

/// Enumerates size-`count` multisets of superscripts `1..=m` in
/// ascending lexicographic order.
fn superscript_multisets(m: i64, count: u32) -> Vec<Vec<i64>> {
    fn extend(m: i64, remaining: u32, floor: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for j in floor..=m {
            prefix.push(j);
            extend(m, remaining - 1, j, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(m, count, 1, &mut Vec::new(), &mut out);
    out
}

/// All deformed monomials specializing to the given undeformed
/// monomial, in increasing variable-multiset order.
fn footprint_candidates(dr: &DeformedRing, target: &Monomial) -> Vec<Monomial> {
    let n = dr.num_vars();
    let mut candidates = vec![Monomial::one(n)];
    for (e, &count) in target.exponents().iter().enumerate() {
        if count == 0 {
            continue;
        }
        let choices = superscript_multisets(dr.multiplicities[e], count);
        let mut grown = Vec::with_capacity(candidates.len() * choices.len());
        for base in &candidates {
            for multiset in &choices {
                let mut exps = base.exponents().to_vec();
                for &j in multiset {
                    exps[dr.var_of[e][j as usize - 1]] += 1;
                }
                grown.push(Monomial::from_exponents(exps));
            }
        }
        candidates = grown;
    }
    candidates
}

struct LiftEngine<'a> {
    dr: &'a DeformedRing,
    undeformed_ring: &'a RingRc,
    modules: &'a [DeformedModule],
    gb: &'a GroebnerBasis,
    certification_bases: BTreeMap<(usize, Monomial), GroebnerBasis>,
}

impl<'a> LiftEngine<'a> {
    /// Is multiplication by `num/den` a well-defined map from the
    /// source lift into the target lift? Ideal membership: `num * g`
    /// must lie in `(den * target generators) + relations` for every
    /// source generator `g`.
    fn certify(&mut self, src: usize, dst: usize, num: &Monomial, den: &Monomial) -> Result<bool> {
        let den_poly = Polynomial::from_monomial(&self.dr.ring, den.clone());
        if self.gb.contains(&den_poly) {
            return Ok(false);
        }
        let key = (dst, den.clone());
        if !self.certification_bases.contains_key(&key) {
            let extra: Vec<Polynomial> = self.modules[dst]
                .canonical()
                .iter()
                .map(|g| Polynomial::from_monomial(&self.dr.ring, den.mul(g)))
                .collect();
            let basis = buchberger_extend(self.gb, &extra)?;
            self.certification_bases.insert(key.clone(), basis);
        }
        let basis = &self.certification_bases[&key];
        for g in self.modules[src].canonical() {
            let product = Polynomial::from_monomial(&self.dr.ring, num.mul(g));
            if !basis.contains(&product) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `a` and `b` present the same fraction modulo the relations:
    /// cross-multiply and reduce.
    fn fractions_agree(&self, a: &ZFraction, b: &ZFraction) -> bool {
        if a.num == b.num && a.den == b.den {
            return true;
        }
        let lhs = Polynomial::from_monomial(&self.dr.ring, a.num.mul(&b.den));
        let rhs = Polynomial::from_monomial(&self.dr.ring, b.num.mul(&a.den));
        self.gb.contains(&(&lhs - &rhs))
    }

    fn lift_arrow(&mut self, arrow: &MonoArrow) -> Result<DeformedArrow> {
        let exhausted = |forms: &MonoArrow| Error::LiftExhausted {
            arrow: format!(
                "M{} -> M{} : {}",
                forms.src,
                forms.dst,
                forms.zlabel(self.undeformed_ring)
            ),
        };
        let master = &arrow.zforms[0];
        let mut lifted_master = None;
        'master: for num in footprint_candidates(self.dr, &master.num) {
            for den in footprint_candidates(self.dr, &master.den) {
                if self.certify(arrow.src, arrow.dst, &num, &den)? {
                    lifted_master = Some(ZFraction::reduced(&num, &den));
                    break 'master;
                }
            }
        }
        let Some(lifted_master) = lifted_master else {
            return Err(exhausted(arrow));
        };
        let mut forms = vec![lifted_master.clone()];
        for form in &arrow.zforms[1..] {
            let mut lifted = None;
            'form: for num in footprint_candidates(self.dr, &form.num) {
                for den in footprint_candidates(self.dr, &form.den) {
                    let den_poly = Polynomial::from_monomial(&self.dr.ring, den.clone());
                    if self.gb.contains(&den_poly) {
                        continue;
                    }
                    let candidate = ZFraction::reduced(&num, &den);
                    if self.fractions_agree(&candidate, &lifted_master) {
                        lifted = Some(candidate);
                        break 'form;
                    }
                }
            }
            forms.push(lifted.ok_or_else(|| exhausted(arrow))?);
        }
        Ok(DeformedArrow {
            src: arrow.src,
            dst: arrow.dst,
            degree: arrow.degree,
            forms,
        })
    }
}

/// Lifts every undeformed arrow, preserving order.
pub fn lift_arrows(
    dr: &DeformedRing,
    undeformed: &QuiverData,
    modules: &[DeformedModule],
    gb: &GroebnerBasis,
) -> Result<Vec<DeformedArrow>> {
    let mut engine = LiftEngine {
        dr,
        undeformed_ring: &undeformed.presentation.ring,
        modules,
        gb,
        certification_bases: BTreeMap::new(),
    };
    undeformed
        .arrows
        .iter()
        .map(|arrow| engine.lift_arrow(arrow))
        .collect()
}

fn path_fraction(lifted: &[DeformedArrow], seq: &[usize], num_vars: usize) -> ZFraction {
    let mut num = Monomial::one(num_vars);
    let mut den = Monomial::one(num_vars);
    for &id in seq {
        num = num.mul(&lifted[id].forms[0].num);
        den = den.mul(&lifted[id].forms[0].den);
    }
    ZFraction::reduced(&num, &den)
}

/// Parallel-path coincidences between lifted arrows. Paths are grouped
/// by endpoints, inherited degree, and undeformed evaluation — a sound
/// prefilter, since deformed equality implies equality after
/// specializing — then bucketed by cross-multiplied normal forms.
/// Emission mirrors the undeformed extraction: rewrite closure by
/// lower-degree relations, then one spanning link per leftover
/// component.
pub fn deformed_path_relations(
    undeformed_arrows: &[MonoArrow],
    lifted: &[DeformedArrow],
    num_vertices: usize,
    bound: i64,
    gb: &GroebnerBasis,
) -> Vec<PathRelation> {
    if bound <= 0 {
        return Vec::new();
    }
    let ring = gb.ring();
    let n = ring.num_vars();
    let paths = enumerate_paths(undeformed_arrows, num_vertices, bound);
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
        if degree > current_degree {
            usable = emitted.len();
            current_degree = degree;
        }
        // Bucket members into genuine equality classes: identical
        // reduced fractions short-circuit; otherwise cross-multiply
        // against each bucket leader and reduce.
        let fractions: Vec<ZFraction> = members
            .iter()
            .map(|&idx| path_fraction(lifted, &paths[idx].seq, n))
            .collect();
        let mut leaders: Vec<usize> = Vec::new();
        let mut buckets: Vec<Vec<usize>> = Vec::new();
        for local in 0..members.len() {
            let mut placed = false;
            for (b, &leader) in leaders.iter().enumerate() {
                let lead = &fractions[leader];
                let here = &fractions[local];
                let agree = (lead.num == here.num && lead.den == here.den) || {
                    let lhs = Polynomial::from_monomial(ring, here.num.mul(&lead.den));
                    let rhs = Polynomial::from_monomial(ring, lead.num.mul(&here.den));
                    gb.contains(&(&lhs - &rhs))
                };
                if agree {
                    buckets[b].push(local);
                    placed = true;
                    break;
                }
            }
            if !placed {
                leaders.push(local);
                buckets.push(vec![local]);
            }
        }
        for bucket in buckets {
            if bucket.len() < 2 {
                continue;
            }
            let index_of: BTreeMap<&[usize], usize> = bucket
                .iter()
                .enumerate()
                .map(|(pos, &local)| (paths[members[local]].seq.as_slice(), pos))
                .collect();
            let mut dsu = Dsu::new(bucket.len());
            for (pos, &local) in bucket.iter().enumerate() {
                let seq = &paths[members[local]].seq;
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
                            let mut rewritten =
                                Vec::with_capacity(seq.len() - from.len() + to.len());
                            rewritten.extend_from_slice(&seq[..start]);
                            rewritten.extend_from_slice(to);
                            rewritten.extend_from_slice(&seq[start + from.len()..]);
                            if let Some(&other) = index_of.get(rewritten.as_slice()) {
                                dsu.union(pos, other);
                            }
                        }
                    }
                }
            }
            let mut components: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for pos in 0..bucket.len() {
                components.entry(dsu.find(pos)).or_default().push(pos);
            }
            let path_order = |&a: &usize, &b: &usize| {
                let pa = &paths[members[bucket[a]]].seq;
                let pb = &paths[members[bucket[b]]].seq;
                pa.len().cmp(&pb.len()).then_with(|| pa.cmp(pb))
            };
            let mut reps: Vec<usize> = components
                .values()
                .map(|component| *component.iter().min_by(|a, b| path_order(a, b)).unwrap())
                .collect();
            reps.sort_by(path_order);
            for rep in reps.iter().skip(1) {
                emitted.push(PathRelation {
                    lhs: paths[members[bucket[reps[0]]]].seq.clone(),
                    rhs: paths[members[bucket[*rep]]].seq.clone(),
                    degree,
                });
            }
        }
    }
    emitted
}

/// Everything computed for a deformed quiver.
#[derive(Debug, Clone)]
pub struct DeformedQuiverData {
    pub ring: DeformedRing,
    pub undeformed: QuiverData,
    pub modules: Vec<DeformedModule>,
    pub arrows: Vec<DeformedArrow>,
    pub relations: Vec<PathRelation>,
}

/// Computes the deformed quiver of `1/r (1, a)`: lifted vertices,
/// certified lifted arrows, and re-extracted path relations.
pub fn deformed_quiver_data(r: i64, a: i64, options: &QuiverOptions) -> Result<DeformedQuiverData> {
    let undeformed_options = QuiverOptions {
        hom_bound: options.hom_bound,
        path_bound: Some(0),
    };
    let undeformed = quiver_data(r, a, &undeformed_options)?;
    let dr = deformed_ring(r, a)?;
    verify_weyl_fixed(&dr)?;
    let modules = lift_modules(&dr, &undeformed.classes)?;
    let gb = buchberger(&dr.ring, &dr.relations, MonomialOrder::DegRevLex)?;
    let arrows = lift_arrows(&dr, &undeformed, &modules, &gb)?;
    let (_, path_bound) = options.resolve(r);
    let relations = deformed_path_relations(
        &undeformed.arrows,
        &arrows,
        undeformed.classes.len(),
        path_bound,
        &gb,
    );
    Ok(DeformedQuiverData {
        ring: dr,
        undeformed,
        modules,
        arrows,
        relations,
    })
}

/// Display form of a deformed quiver. Vertex generator exponents and
/// degrees describe the undeformed class each vertex specializes to.
pub fn deformed_presentation_from_data(data: &DeformedQuiverData) -> QuiverPresentation {
    let ring = &data.ring.ring;
    let vertices = data
        .modules
        .iter()
        .zip(&data.undeformed.classes)
        .map(|(module, class)| QuiverVertex {
            name: module.name(),
            module: module.lift_text(ring, 0),
            representatives: (0..module.lifts.len())
                .map(|which| module.lift_text(ring, which))
                .collect(),
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
            label: arrow.forms[0].text(ring),
            zlabel: arrow.label(ring),
            degree: arrow.degree,
        })
        .collect();
    QuiverPresentation {
        r: Some(data.ring.r),
        a: Some(data.ring.a),
        fixture: None,
        deformed: true,
        vertices,
        arrows,
        relations: data.relations.clone(),
        min_relation_degree: data.relations.iter().map(|rel| rel.degree).min(),
    }
}

/// The deformed quiver of `1/r (1, a)` in display form.
pub fn deformed_quiver(r: i64, a: i64, options: &QuiverOptions) -> Result<QuiverPresentation> {
    let data = deformed_quiver_data(r, a, options)?;
    Ok(deformed_presentation_from_data(&data))
}
