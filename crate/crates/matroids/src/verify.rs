//! Brute-force, per-theorem verification suites.
//!
//! Each suite pairs an instance generator with a checker that recomputes
//! the claimed property through a route independent of the library path it
//! validates (rank arithmetic instead of basis search, direct sweeps
//! instead of derived oracles). Instance generation is exhaustive below the
//! requested size and seeded otherwise; reports are deterministic for a
//! fixed seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog;
use crate::connectivity::{
    lambda, lambda_dual, lambda_set, local_conn_pair, multi_local_conn, nullity_in,
};
use crate::extensions::{
    enumerate_modular_cuts, extend_by, extension_cut, guts_cut, guts_project_iterate,
    lambda_dual_via_guts, project_by, validate_modular_cut, CutViolation,
};
use crate::flats::flats;
use crate::ground::Mask;
use crate::matroid::Matroid;
use crate::modularity::{
    is_modular_flat, is_modular_matroid, is_modular_pair, is_skew_family, mutual_basis,
    shrink_mask, PartitionFamily,
};
use crate::quotients::{
    compose_projections, compose_projections_with_cuts, discrepancy, discrepancy_trusted,
    is_quotient, quotient_conditions, quotient_to_projection, splice,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub instances: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
    pub regime: Regime,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }
}

struct Ctx {
    max_size: usize,
    seed: u64,
    instances: usize,
    failures: usize,
    first: Option<String>,
    regime: Regime,
}

impl Ctx {
    fn new(max_size: usize, seed: u64) -> Ctx {
        Ctx {
            max_size,
            seed,
            instances: 0,
            failures: 0,
            first: None,
            regime: Regime::Exhaustive,
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(witness());
            }
        }
    }

    fn check_result(&mut self, r: Result<bool>, witness: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, witness),
            Err(e) => self.check(false, || format!("{}: {e}", witness())),
        }
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    fn sampled(&mut self) {
        self.regime = Regime::Sampled;
    }
}

fn corpus_sized(max: usize) -> Vec<Matroid> {
    catalog::corpus(max)
}

fn name_of(m: &Matroid) -> String {
    m.name().unwrap_or("anonymous").to_string()
}

/// Nonempty-block set partitions of the union's elements into at most
/// `max_parts` blocks, as restricted-growth assignments.
fn set_partitions(universe: Mask, max_parts: usize) -> Vec<Vec<Mask>> {
    let elems: Vec<usize> = universe.iter().collect();
    let mut out = Vec::new();
    let mut assignment = vec![0usize; elems.len()];
    fn rec(
        elems: &[usize],
        pos: usize,
        used: usize,
        max_parts: usize,
        assignment: &mut Vec<usize>,
        out: &mut Vec<Vec<Mask>>,
    ) {
        if pos == elems.len() {
            let mut parts = vec![Mask::EMPTY; used];
            for (i, &e) in elems.iter().enumerate() {
                parts[assignment[i]] = parts[assignment[i]].with(e);
            }
            out.push(parts);
            return;
        }
        for b in 0..(used + 1).min(max_parts) {
            assignment[pos] = b;
            rec(elems, pos + 1, used.max(b + 1), max_parts, assignment, out);
        }
    }
    if elems.is_empty() {
        out.push(Vec::new());
    } else {
        rec(&elems, 0, 0, max_parts, &mut assignment, &mut out);
    }
    out
}

/// Pairwise-disjoint indexed families with at most `max_parts` parts, not
/// necessarily covering; parts may be empty only when `allow_empty`.
fn disjoint_families(universe: Mask, max_parts: usize) -> Vec<Vec<Mask>> {
    let elems: Vec<usize> = universe.iter().collect();
    let mut out = Vec::new();
    let assignments = (max_parts + 1).pow(elems.len() as u32);
    for code in 0..assignments {
        let mut c = code;
        let mut parts = vec![Mask::EMPTY; max_parts];
        for &e in &elems {
            let a = c % (max_parts + 1);
            c /= max_parts + 1;
            if a > 0 {
                parts[a - 1] = parts[a - 1].with(e);
            }
        }
        out.push(parts);
    }
    out
}

fn family(m: &Matroid, parts: Vec<Mask>) -> PartitionFamily {
    PartitionFamily::new(m.ground().clone(), parts).expect("parts lie in the ground set")
}

fn random_subset(rng: &mut ChaCha8Rng, universe: Mask) -> Mask {
    Mask::from_indices(universe.iter().filter(|_| rng.gen_bool(0.5)))
}

/// A uniformly seeded basis of `x`: greedy over a shuffled element order.
fn shuffled_basis(m: &Matroid, x: Mask, rng: &mut ChaCha8Rng) -> Mask {
    let mut elems: Vec<usize> = x.iter().collect();
    elems.shuffle(rng);
    let mut b = Mask::EMPTY;
    for e in elems {
        if m.indep(b.with(e)) {
            b = b.with(e);
        }
    }
    b
}

fn rank_local_conn(m: &Matroid, x: Mask, y: Mask) -> usize {
    m.rank_in(x) + m.rank_in(y) - m.rank_in(x.union(y))
}

/// Finite-formula connectivity oracle: r(X) + r(E−X) − r(M).
fn rank_lambda(m: &Matroid, x: Mask) -> usize {
    m.rank_in(x) + m.rank_in(m.full_mask().minus(x)) - m.rank_full()
}

/// Finite-formula family connectivity oracle: Σ r(X_a) − r(∪ X_a).
fn rank_multi_conn(m: &Matroid, parts: &[Mask]) -> usize {
    let union = parts.iter().fold(Mask::EMPTY, |a, &p| a.union(p));
    parts.iter().map(|&p| m.rank_in(p)).sum::<usize>() - m.rank_in(union)
}

fn all_bases_of(m: &Matroid, x: Mask) -> Vec<Mask> {
    let r = m.rank_in(x);
    x.subsets()
        .filter(|&s| s.len() == r && m.indep(s))
        .collect()
}

/// Matroids from the corpus grouped by identical ground sets, as ordered
/// pairs (including equal indices for reflexive checks).
fn same_ground_pairs(max: usize) -> Vec<(Matroid, Matroid)> {
    let ms = corpus_sized(max);
    let mut out = Vec::new();
    for a in &ms {
        for b in &ms {
            if a.ground().same_as(b.ground()) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn quotient_pairs(max: usize) -> Result<Vec<(Matroid, Matroid)>> {
    let mut out = Vec::new();
    for (n, m) in same_ground_pairs(max) {
        if is_quotient(&n, &m)? {
            out.push((n, m));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

fn suite_axioms(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(8)) {
        let name = name_of(&m);
        let ok = crate::axioms::check_matroid(&m)?.ok();
        ctx.check(ok, || format!("{name} fails the axiom check"));

        let derived: Vec<(String, Matroid)> = derived_matroids(&m)?;
        for (desc, d) in derived {
            let report = crate::axioms::check_matroid(&d)?;
            ctx.check(report.ok(), || {
                format!(
                    "{desc} of {name} fails: {:?}",
                    report.violation.as_ref().map(|v| &v.1)
                )
            });
        }
    }
    // extensions and projections through every enumerated cut
    for m in corpus_sized(ctx.max_size.min(8)) {
        let name = name_of(&m);
        let cuts = match enumerate_modular_cuts(&m) {
            Ok(c) => c,
            Err(Error::TooManyFlats { .. }) => continue,
            Err(e) => return Err(e),
        };
        for cut in &cuts {
            let ext = extend_by(&m, "_x", cut)?;
            ctx.check(crate::axioms::check_matroid(&ext)?.ok(), || {
                format!("extension of {name} fails the axiom check")
            });
            let proj = project_by(&m, cut)?;
            ctx.check(crate::axioms::check_matroid(&proj)?.ok(), || {
                format!("projection of {name} fails the axiom check")
            });
        }
    }
    Ok(())
}

fn derived_matroids(m: &Matroid) -> Result<Vec<(String, Matroid)>> {
    let mut out: Vec<(String, Matroid)> = vec![("dual".into(), m.dual())];
    let n = m.len();
    for e in 0..n.min(3) {
        out.push((format!("delete {e}"), m.minor(Mask::EMPTY, Mask::bit(e))?));
        out.push((format!("contract {e}"), m.minor(Mask::bit(e), Mask::EMPTY)?));
        out.push((format!("project {e}"), m.project_set(Mask::bit(e))?));
    }
    if n >= 2 {
        out.push(("minor both".into(), m.minor(Mask::bit(0), Mask::bit(1))?));
    }
    if (1..10).contains(&n) {
        // duplicate the first element in parallel
        let mut mapping: Vec<(String, String)> = m
            .ground()
            .labels()
            .iter()
            .map(|l| (l.clone(), l.clone()))
            .collect();
        mapping.push(("_copy".into(), m.ground().label(0).to_string()));
        out.push(("preimage".into(), m.preimage(&mapping)?));
    }
    if n < 10 {
        let extra = Matroid::uniform_on(crate::ground::GroundSet::new(["_s"])?, 1)?;
        out.push((
            "direct sum".into(),
            Matroid::direct_sum(&[m.clone(), extra])?,
        ));
    }
    Ok(out)
}

fn suite_coreidentities(ctx: &mut Ctx) -> Result<()> {
    let mut rng = ctx.rng();
    for m in corpus_sized(ctx.max_size.min(8)) {
        let name = name_of(&m);
        // duality involution, and at least r + 1 flats in a rank-r matroid
        let dd = m.dual().dual();
        ctx.check_result(dd.equals(&m), || format!("{name}: dual involution"));
        if m.len() <= 7 {
            ctx.check(flats(&m)?.len() > m.rank_full(), || {
                format!("{name}: fewer flats than rank + 1")
            });
        }
    }
    for m in corpus_sized(ctx.max_size.min(7)) {
        let name = name_of(&m);
        let full = m.full_mask();
        // rank monotone and submodular
        let mut ok_rank = true;
        for x in full.subsets() {
            for y in full.subsets() {
                if x.is_subset(y) && m.rank_in(x) > m.rank_in(y) {
                    ok_rank = false;
                }
                if m.rank_in(x) + m.rank_in(y) < m.rank_in(x.union(y)) + m.rank_in(x.inter(y)) {
                    ok_rank = false;
                }
            }
        }
        ctx.check(ok_rank, || {
            format!("{name}: rank monotonicity/submodularity")
        });
    }
    for m in corpus_sized(ctx.max_size.min(6)) {
        let name = name_of(&m);
        let full = m.full_mask();
        // projection identities
        ctx.sampled();
        for _ in 0..6 {
            let x = random_subset(&mut rng, full);
            let y = random_subset(&mut rng, full);
            let px = m.project_set(x)?;
            ctx.check(px.closure_in(y) == m.closure_in(x.union(y)), || {
                format!("{name}: projection closure identity")
            });
            let pxy = px.project_set(y)?;
            ctx.check_result(pxy.equals(&m.project_set(x.union(y))?), || {
                format!("{name}: projection composition")
            });
            ctx.check_result(px.equals(&m.project_set(m.closure_in(x))?), || {
                format!("{name}: projection by the closure")
            });
            // deleting the projected set yields the contraction
            ctx.check_result(
                px.minor(Mask::EMPTY, x)?.equals(&m.minor(x, Mask::EMPTY)?),
                || format!("{name}: projection vs contraction"),
            );
            // independence rule through an independent set
            let yb = m.basis_in(y);
            let pyb = m.project_set(yb)?;
            let mut rule = true;
            for i in full.subsets() {
                let direct = i.is_disjoint(yb) && m.indep(i.union(yb));
                if pyb.indep(i) != direct {
                    rule = false;
                    break;
                }
            }
            ctx.check(rule, || format!("{name}: projection independence rule"));
            // minor commutation
            let c1 = random_subset(&mut rng, full);
            let d1 = random_subset(&mut rng, full.minus(c1));
            let inner = m.minor(c1, d1)?;
            let rest = full.minus(c1).minus(d1);
            let c2 = random_subset(&mut rng, rest);
            let d2 = random_subset(&mut rng, rest.minus(c2));
            let c2s = shrink_mask(m.ground(), inner.ground(), c2);
            let d2s = shrink_mask(m.ground(), inner.ground(), d2);
            ctx.check_result(
                inner
                    .minor(c2s, d2s)?
                    .equals(&m.minor(c1.union(c2), d1.union(d2))?),
                || format!("{name}: minor commutation"),
            );
        }
        // preimage rank formula and independence rule
        if m.len() < 10 {
            let mut mapping: Vec<(String, String)> = m
                .ground()
                .labels()
                .iter()
                .map(|l| (format!("{l}'"), l.clone()))
                .collect();
            if !m.is_empty() {
                mapping.push(("extra".into(), m.ground().label(0).to_string()));
            }
            let pre = m.preimage(&mapping)?;
            let map: Vec<usize> = mapping
                .iter()
                .map(|(_, t)| m.ground().index_of(t).unwrap())
                .collect();
            let mut ok = true;
            for x in pre.full_mask().subsets() {
                let image = Mask::from_indices(x.iter().map(|i| map[i]));
                let injective = image.len() == x.len();
                if pre.indep(x) != (injective && m.indep(image)) {
                    ok = false;
                    break;
                }
                if pre.rank_in(x) != m.rank_in(image) {
                    ok = false;
                    break;
                }
            }
            ctx.check(ok, || format!("{name}: preimage rules"));
        }
    }
    Ok(())
}

fn suite_closureinter(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(6)) {
        let name = name_of(&m);
        for u in m.full_mask().subsets().filter(|&u| m.indep(u)) {
            // all pairs with union exactly u
            for i1 in u.subsets() {
                let rest = u.minus(i1);
                for extra in i1.subsets() {
                    let i2 = rest.union(extra);
                    let lhs = m.closure_in(i1.inter(i2));
                    let rhs = m.closure_in(i1).inter(m.closure_in(i2));
                    ctx.check(lhs == rhs, || {
                        format!(
                            "{name}: closure of intersection fails on {} and {}",
                            m.ground().format_mask(i1),
                            m.ground().format_mask(i2)
                        )
                    });
                }
            }
        }
    }
    Ok(())
}

fn suite_modpairiffbasis(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(7)) {
        let name = name_of(&m);
        for x in m.full_mask().subsets() {
            for y in m.full_mask().subsets() {
                let fam = PartitionFamily::pair(m.ground().clone(), x, y)?;
                let by_basis = mutual_basis(&m, &fam)?.is_some();
                let by_rank =
                    m.rank_in(x) + m.rank_in(y) == m.rank_in(x.union(y)) + m.rank_in(x.inter(y));
                ctx.check(by_basis == by_rank, || {
                    format!(
                        "{name}: ({}, {}) basis={by_basis} rank={by_rank}",
                        m.ground().format_mask(x),
                        m.ground().format_mask(y)
                    )
                });
            }
        }
    }
    Ok(())
}

fn suite_blattice(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(4)) {
        let name = name_of(&m);
        let full = m.full_mask();
        for i in full.subsets().filter(|&i| m.indep(i)) {
            let member: Vec<bool> = full
                .subsets()
                .map(|x| x.is_subset(m.closure_in(x.inter(i))))
                .collect();
            let is_in = |x: Mask| member[x.0 as usize];
            let mut ok = true;
            for x in full.subsets() {
                if !is_in(x) {
                    continue;
                }
                if !is_in(m.closure_in(x)) {
                    ok = false;
                }
                for y in full.subsets() {
                    if is_in(y) && (!is_in(x.union(y)) || !is_in(x.inter(y))) {
                        ok = false;
                    }
                }
            }
            ctx.check(ok, || {
                format!(
                    "{name}: span lattice of {} not closed",
                    m.ground().format_mask(i)
                )
            });
        }
    }
    Ok(())
}

fn suite_modularinsert(ctx: &mut Ctx) -> Result<()> {
    let mut rng = ctx.rng();
    ctx.sampled();
    for m in corpus_sized(ctx.max_size.min(6)) {
        let name = name_of(&m);
        for _ in 0..24 {
            // random chain of length at most 4
            let mut chain = vec![random_subset(&mut rng, m.full_mask())];
            for _ in 0..rng.gen_range(0..3) {
                let prev = *chain.last().unwrap();
                chain.push(prev.union(random_subset(&mut rng, m.full_mask().minus(prev))));
            }
            let fam = family(&m, chain.clone());
            ctx.check_result(mutual_basis(&m, &fam).map(|w| w.is_some()), || {
                format!("{name}: chain of {} sets has no mutual basis", chain.len())
            });
            // insert a comparable set into a modular family
            let base = random_subset(&mut rng, m.full_mask());
            let below = random_subset(&mut rng, base);
            let above = base.union(random_subset(&mut rng, m.full_mask().minus(base)));
            for y in [below, above] {
                let fam2 = family(&m, vec![base, y]);
                ctx.check_result(mutual_basis(&m, &fam2).map(|w| w.is_some()), || {
                    format!("{name}: comparable insert is not modular")
                });
            }
        }
    }
    Ok(())
}

fn suite_modularcompl(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(5)) {
        let name = name_of(&m);
        let fam = flats(&m)?;
        let masks = fam.masks();
        for &f0 in &masks {
            for &f in &masks {
                if !f0.is_subset(f) {
                    continue;
                }
                for &f1 in &masks {
                    if !f.is_subset(f1) {
                        continue;
                    }
                    let found = masks.iter().any(|&g| {
                        f.inter(g) == f0
                            && m.closure_in(f.union(g)) == f1
                            && crate::modularity::modular_pair_rank_identity(&m, f, g)
                    });
                    ctx.check(found, || {
                        format!(
                            "{name}: no modular complement for {} within {} over {}",
                            m.ground().format_mask(f),
                            m.ground().format_mask(f1),
                            m.ground().format_mask(f0)
                        )
                    });
                }
            }
        }
    }
    Ok(())
}

fn suite_skewequiv(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(5)) {
        let name = name_of(&m);
        for parts in disjoint_families(m.full_mask(), 3) {
            let union = parts.iter().fold(Mask::EMPTY, |a, &p| a.union(p));
            let fam = family(&m, parts.clone());
            let c1 = is_skew_family(&m, &fam)?;
            // direct-sum condition
            let mut c2 = true;
            for s in union.subsets() {
                let componentwise = parts.iter().all(|&p| m.indep(s.inter(p)));
                if m.indep(s) != componentwise {
                    c2 = false;
                    break;
                }
            }
            // contraction condition over index splits
            let mut c3 = true;
            'splits: for split in 0u32..(1 << parts.len()) {
                let mut a1 = Mask::EMPTY;
                let mut a2 = Mask::EMPTY;
                for (i, &p) in parts.iter().enumerate() {
                    if split >> i & 1 == 1 {
                        a1 = a1.union(p);
                    } else {
                        a2 = a2.union(p);
                    }
                }
                let basis = m.basis_in(a1);
                for s in a2.subsets() {
                    if (s.is_disjoint(basis) && m.indep(s.union(basis))) != m.indep(s) {
                        c3 = false;
                        break 'splits;
                    }
                }
            }
            // circuit confinement
            let mut c4 = true;
            for c in union.subsets() {
                if !m.indep(c)
                    && c.iter().all(|e| m.indep(c.without(e)))
                    && !parts.iter().any(|&p| c.is_subset(p))
                {
                    c4 = false;
                    break;
                }
            }
            let verdicts = [c1, c2, c3, c4];
            ctx.check(verdicts.iter().all(|&v| v == c1), || {
                format!("{name}: skew conditions disagree {verdicts:?}")
            });
        }
    }
    Ok(())
}

fn suite_skewrank(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(5)) {
        let name = name_of(&m);
        for parts in disjoint_families(m.full_mask(), 3) {
            let fam = family(&m, parts.clone());
            let skew = is_skew_family(&m, &fam)?;
            let additive = rank_multi_conn(&m, &parts) == 0;
            ctx.check(skew == additive, || {
                format!("{name}: skew={skew} but rank additivity={additive}")
            });
        }
    }
    // overlapping families, sampled
    let mut rng = ctx.rng();
    ctx.sampled();
    for m in corpus_sized(ctx.max_size.min(7)) {
        let name = name_of(&m);
        for _ in 0..40 {
            let parts: Vec<Mask> = (0..rng.gen_range(1..4))
                .map(|_| random_subset(&mut rng, m.full_mask()))
                .collect();
            let fam = family(&m, parts.clone());
            let skew = is_skew_family(&m, &fam)?;
            let additive = rank_multi_conn(&m, &parts) == 0;
            ctx.check(skew == additive, || {
                format!("{name}: overlapping skew={skew} additivity={additive}")
            });
        }
    }
    Ok(())
}

fn suite_clskew(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(5)) {
        let name = name_of(&m);
        for parts in disjoint_families(m.full_mask(), 3) {
            let fam = family(&m, parts.clone());
            if !is_skew_family(&m, &fam)? {
                continue;
            }
            let closed: Vec<Mask> = parts.iter().map(|&p| m.closure_in(p)).collect();
            let cfam = family(&m, closed);
            ctx.check_result(is_skew_family(&m, &cfam), || {
                format!("{name}: closures of a skew family are not skew")
            });
        }
    }
    Ok(())
}

fn suite_skewmono(ctx: &mut Ctx) -> Result<()> {
    let mut rng = ctx.rng();
    ctx.sampled();
    for m in corpus_sized(ctx.max_size.min(5)) {
        let name = name_of(&m);
        for parts in disjoint_families(m.full_mask(), 3) {
            let fam = family(&m, parts.clone());
            if !is_skew_family(&m, &fam)? {
                continue;
            }
            let union = fam.union();
            // part-wise subsets
            let subsets: Vec<Mask> = parts.iter().map(|&p| random_subset(&mut rng, p)).collect();
            ctx.check_result(is_skew_family(&m, &family(&m, subsets)), || {
                format!("{name}: subsets of a skew family are not skew")
            });
            // coarsening: merge the first two parts
            if parts.len() >= 2 {
                let mut merged = vec![parts[0].union(parts[1])];
                merged.extend_from_slice(&parts[2..]);
                ctx.check_result(is_skew_family(&m, &family(&m, merged)), || {
                    format!("{name}: coarsening of a skew family is not skew")
                });
            }
            // deletion outside the family
            let d = random_subset(&mut rng, m.full_mask().minus(union));
            let deleted = m.minor(Mask::EMPTY, d)?;
            let moved: Vec<Mask> = parts
                .iter()
                .map(|&p| shrink_mask(m.ground(), deleted.ground(), p))
                .collect();
            ctx.check_result(is_skew_family(&deleted, &family(&deleted, moved)), || {
                format!("{name}: deletion breaks skewness")
            });
            // projection and contraction inside the union
            let c = random_subset(&mut rng, union);
            let projected = m.project_set(c)?;
            ctx.check_result(
                is_skew_family(&projected, &family(&projected, parts.clone())),
                || format!("{name}: projection inside the union breaks skewness"),
            );
            let contracted = m.minor(c, Mask::EMPTY)?;
            let moved: Vec<Mask> = parts
                .iter()
                .map(|&p| shrink_mask(m.ground(), contracted.ground(), p.minus(c)))
                .collect();
            ctx.check_result(
                is_skew_family(&contracted, &family(&contracted, moved)),
                || format!("{name}: contraction inside the union breaks skewness"),
            );
        }
    }
    Ok(())
}

fn suite_modulartoskew(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(5)) {
        let name = name_of(&m);
        for x in m.full_mask().subsets() {
            for y in m.full_mask().subsets() {
                let modular = crate::modularity::modular_pair_rank_identity(&m, x, y);
                let contracted = m.minor(x.inter(y), Mask::EMPTY)?;
                let a = shrink_mask(m.ground(), contracted.ground(), x.minus(y));
                let b = shrink_mask(m.ground(), contracted.ground(), y.minus(x));
                let skew = is_skew_family(&contracted, &family(&contracted, vec![a, b]))?;
                ctx.check(modular == skew, || {
                    format!(
                        "{name}: modular({}, {})={modular} but difference-skew={skew}",
                        m.ground().format_mask(x),
                        m.ground().format_mask(y)
                    )
                });
            }
        }
    }
    Ok(())
}

fn suite_maxskew(ctx: &mut Ctx) -> Result<()> {
    let mut rng = ctx.rng();
    ctx.sampled();
    for m in corpus_sized(ctx.max_size.min(5)) {
        let name = name_of(&m);
        for i in m
            .full_mask()
            .subsets()
            .filter(|&i| m.indep(i) && !i.is_empty())
        {
            let cl = m.closure_in(i);
            for parts in set_partitions(i, 3) {
                if parts.is_empty() {
                    continue;
                }
                for _ in 0..4 {
                    let fam_parts: Vec<Mask> = parts
                        .iter()
                        .map(|&p| p.union(random_subset(&mut rng, cl)))
                        .collect();
                    let fam = family(&m, fam_parts.clone());
                    if !is_skew_family(&m, &fam)? {
                        continue;
                    }
                    let confined = fam_parts
                        .iter()
                        .zip(&parts)
                        .all(|(&x, &ip)| x.is_subset(m.closure_in(ip)));
                    ctx.check(confined, || {
                        format!("{name}: skew family exceeds the part closures")
                    });
                }
            }
        }
    }
    Ok(())
}

fn suite_nullityprop(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(6)) {
        let name = name_of(&m);
        let full = m.full_mask();
        for x in full.subsets() {
            for y in full.subsets() {
                let nx = nullity_in(&m, x);
                let ny = nullity_in(&m, y);
                let mut ok = nx <= x.len();
                if x.is_subset(y) {
                    ok &= nx <= ny && ny <= nx + y.minus(x).len();
                    if y.is_subset(m.closure_in(x)) {
                        ok &= ny == nx + y.minus(x).len();
                    }
                }
                ok &= nx + ny <= nullity_in(&m, x.union(y)) + nullity_in(&m, x.inter(y));
                ctx.check(ok, || {
                    format!(
                        "{name}: nullity properties fail on {}, {}",
                        m.ground().format_mask(x),
                        m.ground().format_mask(y)
                    )
                });
            }
        }
    }
    Ok(())
}

fn suite_nullitysupermod(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(6)) {
        let name = name_of(&m);
        let full = m.full_mask();
        for x in full.subsets() {
            for y in full.subsets() {
                let ok = nullity_in(&m, x) + nullity_in(&m, y)
                    <= nullity_in(&m, x.union(y)) + nullity_in(&m, x.inter(y));
                ctx.check(ok, || {
                    format!(
                        "{name}: supermodularity fails on {}, {}",
                        m.ground().format_mask(x),
                        m.ground().format_mask(y)
                    )
                });
            }
        }
    }
    Ok(())
}

fn suite_nullityproject(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(6)) {
        let name = name_of(&m);
        let full = m.full_mask();
        for x in full.subsets() {
            let px = m.project_set(x)?;
            for y in full.subsets() {
                let lhs = nullity_in(&px, y) + nullity_in(&m, x);
                let mid = nullity_in(&m, x.union(y)) + x.inter(y).len();
                let py = m.project_set(y)?;
                let rhs = nullity_in(&py, x) + nullity_in(&m, y);
                let ge = nullity_in(&px, y) >= nullity_in(&m, y);
                ctx.check(lhs == mid && rhs == mid && ge, || {
                    format!(
                        "{name}: projection nullity identity fails on {}, {}",
                        m.ground().format_mask(x),
                        m.ground().format_mask(y)
                    )
                });
            }
        }
    }
    Ok(())
}

fn suite_nullitycontractadd(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(6)) {
        let name = name_of(&m);
        let full = m.full_mask();
        for c in full.subsets() {
            let pc = m.project_set(c)?;
            for x in full.subsets() {
                let ok = nullity_in(&pc, x) == nullity_in(&m, x) + rank_local_conn(&m, x, c);
                ctx.check(ok, || {
                    format!(
                        "{name}: contracted nullity fails on X={}, C={}",
                        m.ground().format_mask(x),
                        m.ground().format_mask(c)
                    )
                });
            }
        }
    }
    Ok(())
}

fn suite_skewnullity(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(5)) {
        let name = name_of(&m);
        for parts in disjoint_families(m.full_mask(), 3) {
            let union = parts.iter().fold(Mask::EMPTY, |a, &p| a.union(p));
            let total = nullity_in(&m, union);
            let sum: usize = parts.iter().map(|&p| nullity_in(&m, p)).sum();
            let skew = is_skew_family(&m, &family(&m, parts.clone()))?;
            ctx.check(total >= sum && ((total == sum) == skew), || {
                format!("{name}: nullity of a disjoint union: total={total} sum={sum} skew={skew}")
            });
        }
    }
    Ok(())
}

fn suite_nullityunion(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(4)) {
        let name = name_of(&m);
        let full = m.full_mask();
        for x1 in full.subsets() {
            for x2 in full.minus(x1).subsets() {
                for y1 in full.subsets() {
                    if !(nullity_in(&m, x1) == nullity_in(&m, y1)
                        && m.closure_in(x1) == m.closure_in(y1))
                    {
                        continue;
                    }
                    for y2 in full.minus(y1).subsets() {
                        if !(nullity_in(&m, x2) == nullity_in(&m, y2)
                            && m.closure_in(x2) == m.closure_in(y2))
                        {
                            continue;
                        }
                        let ok = nullity_in(&m, x1.union(x2)) == nullity_in(&m, y1.union(y2));
                        ctx.check(ok, || {
                            format!("{name}: union nullity differs across equivalent parts")
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

fn suite_lcwelldef(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(5)) {
        let name = name_of(&m);
        let full = m.full_mask();
        for x in full.subsets() {
            for y in full.subsets() {
                let expected = local_conn_pair(&m, x, y)?;
                let mut ok = true;
                'bases: for i in all_bases_of(&m, x) {
                    for j in all_bases_of(&m, y) {
                        if i.inter(j).len() + nullity_in(&m, i.union(j)) != expected {
                            ok = false;
                            break 'bases;
                        }
                    }
                }
                ctx.check(ok, || {
                    format!(
                        "{name}: local connectivity varies over bases of {}, {}",
                        m.ground().format_mask(x),
                        m.ground().format_mask(y)
                    )
                });
            }
        }
    }
    Ok(())
}

fn suite_lambdawelldef(ctx: &mut Ctx) -> Result<()> {
    let mut rng = ctx.rng();
    ctx.sampled();
    for m in corpus_sized(ctx.max_size.min(6)) {
        let name = name_of(&m);
        for parts in set_partitions(m.full_mask(), 3) {
            let fam = family(&m, parts.clone());
            if !fam.is_partition() {
                continue;
            }
            let expected = lambda(&m, &fam)?;
            for _ in 0..5 {
                let union = parts.iter().fold(Mask::EMPTY, |a, &p| {
                    a.union(shuffled_basis(&m, p, &mut rng))
                });
                ctx.check(nullity_in(&m, union) == expected, || {
                    format!("{name}: lambda varies over basis choices")
                });
            }
        }
    }
    Ok(())
}

fn suite_modcutextension(ctx: &mut Ctx) -> Result<()> {
    // exact census values
    let u12 = Matroid::uniform(1, 2)?;
    ctx.check(enumerate_modular_cuts(&u12)?.len() == 3, || {
        "cut census of uniform:1,2 is not 3".into()
    });
    let u23 = Matroid::uniform(2, 3)?;
    ctx.check(enumerate_modular_cuts(&u23)?.len() == 6, || {
        "cut census of uniform:2,3 is not 6".into()
    });

    for m in corpus_sized(ctx.max_size.min(6)) {
        let name = name_of(&m);
        let cuts = match enumerate_modular_cuts(&m) {
            Ok(c) => c,
            Err(Error::TooManyFlats { .. }) => continue,
            Err(e) => return Err(e),
        };
        let mut extensions = Vec::new();
        for cut in &cuts {
            let outcome = validate_modular_cut(&m, cut.members())?;
            ctx.check(outcome.valid().is_some(), || {
                format!("{name}: enumerated family fails validation")
            });
            let ext = extend_by(&m, "_z", cut)?;
            let restored = ext.minor(Mask::EMPTY, Mask::bit(m.len()))?;
            ctx.check_result(restored.equals(&m), || {
                format!("{name}: deleting the new element does not restore the matroid")
            });
            let back = extension_cut(&ext, "_z")?;
            ctx.check(back.members() == cut.members(), || {
                format!("{name}: extension cut does not round-trip")
            });
            extensions.push(ext);
        }
        for (i, a) in extensions.iter().enumerate() {
            for b in &extensions[i + 1..] {
                ctx.check_result(a.equals(b).map(|eq| !eq), || {
                    format!("{name}: two distinct cuts give the same extension")
                });
            }
        }
    }
    Ok(())
}

fn suite_modcutinter(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(5)) {
        let name = name_of(&m);
        let cuts = match enumerate_modular_cuts(&m) {
            Ok(c) => c,
            Err(Error::TooManyFlats { .. }) => continue,
            Err(e) => return Err(e),
        };
        for cut in &cuts {
            let members = cut.members();
            for i in 0..members.len() {
                for j in i + 1..members.len() {
                    for k in j..members.len() {
                        let fam: Vec<Mask> = if k == j {
                            vec![members[i], members[j]]
                        } else {
                            vec![members[i], members[j], members[k]]
                        };
                        let pf = family(&m, fam.clone());
                        if mutual_basis(&m, &pf)?.is_none() {
                            continue;
                        }
                        let inter = fam.iter().fold(m.full_mask(), |a, &f| a.inter(f));
                        ctx.check(cut.contains(inter), || {
                            format!("{name}: modular subfamily intersection escapes the cut")
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Proper cuts change family local connectivity by the count of part
/// closures in the cut, minus one when the union's closure is in the cut.
fn suite_modcutcon(ctx: &mut Ctx) -> Result<()> {
    let mut rng = ctx.rng();
    ctx.sampled();
    for m in corpus_sized(ctx.max_size.min(5)) {
        let name = name_of(&m);
        let cuts = match enumerate_modular_cuts(&m) {
            Ok(c) => c,
            Err(Error::TooManyFlats { .. }) => continue,
            Err(e) => return Err(e),
        };
        for cut in cuts.iter().filter(|c| c.is_proper()) {
            let projected = project_by(&m, cut)?;
            for _ in 0..12 {
                let arity = rng.gen_range(1..4);
                let parts: Vec<Mask> = (0..arity)
                    .map(|_| random_subset(&mut rng, m.full_mask()))
                    .collect();
                let union = parts.iter().fold(Mask::EMPTY, |a, &p| a.union(p));
                let before = multi_local_conn(&m, &family(&m, parts.clone()))?;
                let after = multi_local_conn(&projected, &family(&projected, parts.clone()))?;
                let in_cut = parts
                    .iter()
                    .filter(|&&p| cut.contains(m.closure_in(p)))
                    .count();
                let union_in = usize::from(cut.contains(m.closure_in(union)));
                ctx.check(before + union_in == after + in_cut, || {
                    format!("{name}: projected local connectivity bookkeeping fails")
                });
            }
        }
    }
    Ok(())
}

/// Proper cuts lower single-set connectivity by at most one, with equality
/// exactly when both side closures lie in the cut.
fn suite_modcutlambda(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(5)) {
        let name = name_of(&m);
        let cuts = match enumerate_modular_cuts(&m) {
            Ok(c) => c,
            Err(Error::TooManyFlats { .. }) => continue,
            Err(e) => return Err(e),
        };
        for cut in cuts.iter().filter(|c| c.is_proper()) {
            let projected = project_by(&m, cut)?;
            for x in m.full_mask().subsets() {
                let before = rank_lambda(&m, x);
                let after = rank_lambda(&projected, x);
                let both_sides = cut.contains(m.closure_in(x))
                    && cut.contains(m.closure_in(m.full_mask().minus(x)));
                let ok = before <= after + 1 && (before == after + 1) == both_sides;
                ctx.check(ok, || {
                    format!(
                        "{name}: connectivity drop across a cut fails on {}",
                        m.ground().format_mask(x)
                    )
                });
            }
        }
    }
    Ok(())
}

fn suite_vamos_guts(ctx: &mut Ctx) -> Result<()> {
    if ctx.max_size < 8 {
        return Ok(());
    }
    let v = catalog::vamos();
    let pairs = catalog::vamos_pairs(&v);
    let fam = PartitionFamily::new(v.ground().clone(), vec![pairs[0], pairs[1]])?;
    let g = guts_cut(&v, &fam)?;
    ctx.check(!g.covers_ground(), || {
        "the pair family covers the ground".into()
    });
    ctx.check(g.contains(pairs[2]) && g.contains(pairs[3]), || {
        "guts family misses the other two pair sets".into()
    });
    ctx.check(!g.contains(Mask::EMPTY), || {
        "guts family contains the empty flat".into()
    });
    let confirmed = matches!(
        g.validation().violation(),
        Some(CutViolation::MissingModularIntersection { a, b, inter })
            if (*a, *b) == (pairs[2], pairs[3]) && inter.is_empty()
    );
    ctx.check(confirmed, || {
        format!(
            "expected the modular-pair witness, got {:?}",
            g.validation().violation()
        )
    });
    Ok(())
}

fn suite_gutscut(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(6)) {
        let name = name_of(&m);
        for parts in set_partitions(m.full_mask(), 3) {
            let fam = family(&m, parts.clone());
            if !fam.is_partition() {
                continue;
            }
            let g = guts_cut(&m, &fam)?;
            ctx.check(g.validation().valid().is_some(), || {
                format!("{name}: guts family of a partition fails validation")
            });
            ctx.check(g.contains(m.closure_in(m.full_mask())), || {
                format!("{name}: guts family misses the full flat")
            });
            let skew = is_skew_family(&m, &fam)?;
            ctx.check(g.contains(m.loops()) == skew, || {
                format!("{name}: loop flat membership disagrees with skewness")
            });
        }
    }
    Ok(())
}

fn suite_gpsub(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(6)) {
        let name = name_of(&m);
        for parts in set_partitions(m.full_mask(), 3) {
            let fam = family(&m, parts);
            if !fam.is_partition() || is_skew_family(&m, &fam)? {
                continue;
            }
            let before = lambda_dual(&m, &fam)?;
            let cut = guts_cut(&m, &fam)?.into_modular_cut()?;
            let projected = project_by(&m, &cut)?;
            let fam_after = family(&projected, fam.parts().to_vec());
            let after = lambda_dual(&projected, &fam_after)?;
            ctx.check(before == after + 1, || {
                format!("{name}: guts projection changes dual connectivity {before} -> {after}")
            });
        }
    }
    Ok(())
}

fn suite_lambdadualeq(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(6)) {
        let name = name_of(&m);
        for parts in set_partitions(m.full_mask(), 3) {
            let fam = family(&m, parts);
            if !fam.is_partition() {
                continue;
            }
            let direct = lambda_dual(&m, &fam)?;
            let iterated = lambda_dual_via_guts(&m, &fam)?;
            ctx.check(direct == iterated, || {
                format!("{name}: guts iterations {iterated} != dual connectivity {direct}")
            });
        }
    }
    Ok(())
}

fn suite_lambdaminproj(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(5)) {
        let name = name_of(&m);
        for parts in set_partitions(m.full_mask(), 3) {
            let fam = family(&m, parts.clone());
            if !fam.is_partition() {
                continue;
            }
            let k = lambda_dual(&m, &fam)?;
            if k > 2 {
                continue;
            }
            // realize the minimum: P \ K = m with the family skew in P / K
            let mut stages = vec![m.clone()];
            let mut cuts = Vec::new();
            for _ in 0..k {
                let cur = stages.last().unwrap().clone();
                let fam_cur = family(&cur, fam.parts().to_vec());
                let cut = guts_cut(&cur, &fam_cur)?.into_modular_cut()?;
                stages.push(project_by(&cur, &cut)?);
                cuts.push(cut);
            }
            let witness = compose_projections_with_cuts(&stages, &cuts)?;
            ctx.check(witness.removed_size() == k, || {
                format!("{name}: realization removes the wrong number of elements")
            });
            let contracted = witness
                .matroid()
                .minor(witness.removed_set(), Mask::EMPTY)?;
            let moved: Vec<Mask> = fam
                .parts()
                .iter()
                .map(|&p| shrink_mask(m.ground(), contracted.ground(), p))
                .collect();
            ctx.check_result(
                is_skew_family(&contracted, &family(&contracted, moved)),
                || format!("{name}: family is not skew after contracting the witness set"),
            );
        }
    }
    Ok(())
}

fn suite_quotequiv(ctx: &mut Ctx) -> Result<()> {
    for (n, m) in same_ground_pairs(ctx.max_size.min(7)) {
        let conds = quotient_conditions(&n, &m)?;
        ctx.check(conds.unanimous(), || {
            format!(
                "({}, {}): quotient conditions disagree {:?}",
                name_of(&n),
                name_of(&m),
                conds
            )
        });
    }
    Ok(())
}

fn suite_commonbasis(ctx: &mut Ctx) -> Result<()> {
    for (n, m) in quotient_pairs(ctx.max_size.min(5))? {
        if n.rank_full() != m.rank_full() {
            continue;
        }
        let shares = all_bases_of(&n, n.full_mask())
            .iter()
            .any(|&b| m.indep(b) && b.len() == m.rank_full());
        if shares {
            ctx.check_result(n.equals(&m), || {
                format!(
                    "quotient pair ({}, {}) shares a basis but differs",
                    name_of(&n),
                    name_of(&m)
                )
            });
        } else {
            ctx.check(true, String::new);
        }
    }
    Ok(())
}

fn suite_discgood(ctx: &mut Ctx) -> Result<()> {
    let mut rng = ctx.rng();
    ctx.sampled();
    for (n, m) in quotient_pairs(ctx.max_size.min(7))? {
        let pn = name_of(&n);
        let pm = name_of(&m);
        for x in m.full_mask().subsets() {
            let delta = discrepancy_trusted(&n, &m, x)?;
            ctx.check(n.rank_in(x) + delta == m.rank_in(x), || {
                format!("({pn}, {pm}): rank identity fails")
            });
            ctx.check(nullity_in(&n, x) == nullity_in(&m, x) + delta, || {
                format!("({pn}, {pm}): nullity identity fails")
            });
            // sampled basis pairs all attain the same gap
            for _ in 0..4 {
                let i0 = shuffled_basis(&n, x, &mut rng);
                let mut i = i0;
                let mut order: Vec<usize> = x.minus(i0).iter().collect();
                order.shuffle(&mut rng);
                for e in order {
                    if m.indep(i.with(e)) {
                        i = i.with(e);
                    }
                }
                ctx.check(i.minus(i0).len() == delta, || {
                    format!("({pn}, {pm}): a basis pair misses the discrepancy")
                });
            }
        }
    }
    Ok(())
}

fn suite_discdual(ctx: &mut Ctx) -> Result<()> {
    for (n, m) in quotient_pairs(ctx.max_size.min(6))? {
        let full = m.full_mask();
        let d1 = discrepancy_trusted(&n, &m, full)?;
        let d2 = discrepancy_trusted(&m.dual(), &n.dual(), full)?;
        ctx.check(d1 == d2, || {
            format!(
                "({}, {}): discrepancy {d1} but dual discrepancy {d2}",
                name_of(&n),
                name_of(&m)
            )
        });
    }
    Ok(())
}

fn suite_disccontract(ctx: &mut Ctx) -> Result<()> {
    for (n, m) in quotient_pairs(ctx.max_size.min(5))? {
        let pn = name_of(&n);
        let pm = name_of(&m);
        for x in m.full_mask().subsets() {
            let nc = n.minor(x, Mask::EMPTY)?;
            let mc = m.minor(x, Mask::EMPTY)?;
            let dx = discrepancy_trusted(&n, &m, x)?;
            for y in m.full_mask().subsets() {
                let y_shrunk = shrink_mask(m.ground(), mc.ground(), y.minus(x));
                let lhs = discrepancy_trusted(&nc, &mc, y_shrunk)? + dx;
                let rhs = discrepancy_trusted(&n, &m, x.union(y))?;
                ctx.check(lhs == rhs, || {
                    format!("({pn}, {pm}): contraction additivity fails")
                });
            }
        }
    }
    Ok(())
}

fn suite_tightquot(ctx: &mut Ctx) -> Result<()> {
    for (n, m) in quotient_pairs(ctx.max_size.min(5))? {
        let members: Vec<Mask> = flats(&m)?
            .iter()
            .filter(|&(f, _)| {
                n.project_set(f)
                    .and_then(|np| m.project_set(f).and_then(|mp| np.equals(&mp)))
                    .unwrap_or(false)
            })
            .map(|(f, _)| f)
            .collect();
        let outcome = validate_modular_cut(&m, &members)?;
        let Some(cut) = outcome.valid() else {
            ctx.check(false, || {
                format!(
                    "({}, {}): agreement family is not a modular cut",
                    name_of(&n),
                    name_of(&m)
                )
            });
            continue;
        };
        let projected = project_by(&m, cut)?;
        ctx.check_result(is_quotient(&n, &projected), || {
            format!(
                "({}, {}): quotient lost after the tight projection",
                name_of(&n),
                name_of(&m)
            )
        });
    }
    Ok(())
}

fn suite_quotientisproject(ctx: &mut Ctx) -> Result<()> {
    for (n, m) in quotient_pairs(ctx.max_size.min(5))? {
        let w = quotient_to_projection(&n, &m)?;
        let delta = discrepancy(&n, &m, m.full_mask())?;
        let ok = w.removed_size() == delta
            && w.matroid()
                .minor(Mask::EMPTY, w.removed_set())?
                .equals(&m)?
            && w.matroid()
                .minor(w.removed_set(), Mask::EMPTY)?
                .equals(&n)?;
        ctx.check(ok, || {
            format!("({}, {}): reconstruction fails", name_of(&n), name_of(&m))
        });
    }
    // the named example: U(1,3) under U(2,3) reconstructs inside U(2,4)
    let n = Matroid::uniform(1, 3)?;
    let m = Matroid::uniform(2, 3)?;
    let w = quotient_to_projection(&n, &m)?;
    let free_rank_two = w
        .matroid()
        .full_mask()
        .subsets()
        .all(|s| w.matroid().indep(s) == (s.len() <= 2));
    ctx.check(
        w.removed_size() == 1 && w.matroid().len() == 4 && free_rank_two,
        || "the truncation example does not reconstruct to uniform:2,4".into(),
    );
    Ok(())
}

fn suite_mlcprop(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(4)) {
        let name = name_of(&m);
        let full = m.full_mask();
        let subsets: Vec<Mask> = full.subsets().collect();
        for &x1 in &subsets {
            for &x2 in &subsets {
                for &x3 in &subsets {
                    let parts = vec![x1, x2, x3];
                    check_mlc(ctx, &m, &name, &parts)?;
                }
            }
        }
        for &x1 in &subsets {
            for &x2 in &subsets {
                check_mlc(ctx, &m, &name, &[x1, x2])?;
            }
        }
    }
    Ok(())
}

fn check_mlc(ctx: &mut Ctx, m: &Matroid, name: &str, parts: &[Mask]) -> Result<()> {
    let fam = family(m, parts.to_vec());
    let value = multi_local_conn(m, &fam)?;
    let oracle = rank_multi_conn(m, parts);
    let mut ok = value == oracle;
    let bases: Vec<Mask> = parts.iter().map(|&p| m.basis_in(p)).collect();
    let disjoint = {
        let mut u = Mask::EMPTY;
        bases.iter().all(|&b| {
            let d = u.is_disjoint(b);
            u = u.union(b);
            d
        })
    };
    let union_bases = bases.iter().fold(Mask::EMPTY, |a, &b| a.union(b));
    if disjoint {
        ok &= value == nullity_in(m, union_bases);
    }
    if parts.len() == 2 {
        ok &= value == bases[0].inter(bases[1]).len() + nullity_in(m, bases[0].union(bases[1]));
    }
    // the disjoint sub-basis formula
    let b = m.basis_in(union_bases);
    let mut assigned = vec![Mask::EMPTY; parts.len()];
    for e in b.iter() {
        if let Some(a) = bases.iter().position(|ba| ba.contains(e)) {
            assigned[a] = assigned[a].with(e);
        }
    }
    let gap: usize = bases
        .iter()
        .zip(&assigned)
        .map(|(&ba, &ja)| ba.minus(ja).len())
        .sum();
    ok &= value == gap;
    ctx.check(ok, || {
        format!("{name}: local connectivity formulas disagree")
    });
    Ok(())
}

fn suite_lcpreimage(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(5)) {
        let name = name_of(&m);
        // the two-copy product map
        let mut mapping: Vec<(String, String)> = Vec::new();
        for copy in 0..2 {
            for l in m.ground().labels() {
                mapping.push((format!("{l}`{copy}"), l.clone()));
            }
        }
        let pre = m.preimage(&mapping)?;
        let n = m.len();
        for x in m.full_mask().subsets() {
            for y in m.full_mask().subsets() {
                let direct = multi_local_conn(&m, &family(&m, vec![x, y]))?;
                let x_up = Mask(x.0); // copy 0
                let y_up = Mask(y.0 << n); // copy 1
                let lifted = multi_local_conn(&pre, &family(&pre, vec![x_up, y_up]))?;
                ctx.check(direct == lifted, || {
                    format!("{name}: preimage lift changes the local connectivity")
                });
            }
        }
    }
    Ok(())
}

fn suite_mcprojsymm(ctx: &mut Ctx) -> Result<()> {
    let mut rng = ctx.rng();
    ctx.sampled();
    for m in corpus_sized(ctx.max_size.min(5)) {
        let name = name_of(&m);
        for _ in 0..60 {
            let arity = rng.gen_range(1..4);
            let parts: Vec<Mask> = (0..arity)
                .map(|_| random_subset(&mut rng, m.full_mask()))
                .collect();
            let c = random_subset(&mut rng, m.full_mask());
            let pc = m.project_set(c)?;
            let lhs = multi_local_conn(&pc, &family(&pc, parts.clone()))?
                + parts
                    .iter()
                    .map(|&p| rank_local_conn(&m, p, c))
                    .sum::<usize>();
            let union = parts.iter().fold(Mask::EMPTY, |a, &p| a.union(p));
            let rhs =
                multi_local_conn(&m, &family(&m, parts.clone()))? + rank_local_conn(&m, union, c);
            ctx.check(lhs == rhs, || {
                format!("{name}: symmetric projection identity fails")
            });
        }
    }
    Ok(())
}

fn suite_mccon(ctx: &mut Ctx) -> Result<()> {
    let mut rng = ctx.rng();
    ctx.sampled();
    for m in corpus_sized(ctx.max_size.min(5)) {
        let name = name_of(&m);
        for _ in 0..60 {
            let arity = rng.gen_range(1..4);
            let parts: Vec<Mask> = (0..arity)
                .map(|_| random_subset(&mut rng, m.full_mask()))
                .collect();
            let union = parts.iter().fold(Mask::EMPTY, |a, &p| a.union(p));
            let base = multi_local_conn(&m, &family(&m, parts.clone()))?;

            // contraction inside the union
            let c = random_subset(&mut rng, union);
            let pc = m.project_set(c)?;
            let inside = multi_local_conn(&pc, &family(&pc, parts.clone()))?;
            ctx.check(
                inside <= base && base <= inside + (arity - 1) * m.rank_in(c),
                || format!("{name}: interior contraction bounds fail"),
            );
            // the minor form agrees with the projection form
            let contracted = m.minor(c, Mask::EMPTY)?;
            let moved: Vec<Mask> = parts
                .iter()
                .map(|&p| shrink_mask(m.ground(), contracted.ground(), p.minus(c)))
                .collect();
            let minor_form = multi_local_conn(&contracted, &family(&contracted, moved))?;
            ctx.check(minor_form == inside, || {
                format!("{name}: contraction and projection forms differ")
            });

            // arbitrary contraction upper bound with equality condition
            let c2 = random_subset(&mut rng, m.full_mask());
            let pc2 = m.project_set(c2)?;
            let outside = multi_local_conn(&pc2, &family(&pc2, parts.clone()))?;
            ctx.check(outside <= base + m.rank_in(c2), || {
                format!("{name}: exterior contraction bound fails")
            });
            let equality = outside == base + m.rank_in(c2);
            let in_closure = c2.is_subset(m.closure_in(union));
            let skew_each = parts.iter().all(|&p| rank_local_conn(&m, p, c2) == 0);
            ctx.check(equality == (in_closure && skew_each), || {
                format!("{name}: exterior equality condition fails")
            });
        }
    }
    Ok(())
}

fn suite_lcprop(ctx: &mut Ctx) -> Result<()> {
    let mut rng = ctx.rng();
    ctx.sampled();
    for m in corpus_sized(ctx.max_size.min(5)) {
        let name = name_of(&m);
        let full = m.full_mask();
        for x in full.subsets() {
            for y in full.subsets() {
                let v = local_conn_pair(&m, x, y)?;
                let mut ok = v == rank_local_conn(&m, x, y);
                ok &= local_conn_pair(&m, m.closure_in(x), m.closure_in(y))? == v;
                ok &= v + m.rank_in(x.union(y)) == m.rank_in(x) + m.rank_in(y);
                if y == full.minus(x) {
                    ok &= v == rank_lambda(&m, x);
                }
                // skew iff zero
                let skew = is_skew_family(&m, &family(&m, vec![x, y]))?;
                ok &= (v == 0) == skew;
                // single-basis form
                let j = m.basis_in(y);
                let px = m.project_set(x)?;
                ok &= v == nullity_in(&px, j);
                // monotonicity and deletion invariance, sampled
                let x0 = random_subset(&mut rng, x);
                let y0 = random_subset(&mut rng, y);
                ok &= local_conn_pair(&m, x0, y0)? <= v;
                let d = random_subset(&mut rng, full.minus(x.union(y)));
                let deleted = m.minor(Mask::EMPTY, d)?;
                let xs = shrink_mask(m.ground(), deleted.ground(), x);
                let ys = shrink_mask(m.ground(), deleted.ground(), y);
                ok &= local_conn_pair(&deleted, xs, ys)? == v;
                // projection versus contraction
                let c = random_subset(&mut rng, full);
                let pc = m.project_set(c)?;
                let mc = m.minor(c, Mask::EMPTY)?;
                let xc = shrink_mask(m.ground(), mc.ground(), x.minus(c));
                let yc = shrink_mask(m.ground(), mc.ground(), y.minus(c));
                ok &= local_conn_pair(&pc, x, y)? == local_conn_pair(&mc, xc, yc)?;
                ctx.check(ok, || {
                    format!(
                        "{name}: pair properties fail on {}, {}",
                        m.ground().format_mask(x),
                        m.ground().format_mask(y)
                    )
                });
            }
        }
    }
    Ok(())
}

fn suite_lcmod(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(6)) {
        let name = name_of(&m);
        let full = m.full_mask();
        for x in full.subsets() {
            for y in full.subsets() {
                let v = rank_local_conn(&m, x, y);
                let r_inter = m.rank_in(x.inter(y));
                let modular = is_modular_pair(&m, x, y)?;
                ctx.check(v >= r_inter && ((v == r_inter) == modular), || {
                    format!(
                        "{name}: local connectivity vs modularity fails on {}, {}",
                        m.ground().format_mask(x),
                        m.ground().format_mask(y)
                    )
                });
            }
        }
    }
    Ok(())
}

fn suite_lcskewiff(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(5)) {
        let name = name_of(&m);
        for parts in disjoint_families(m.full_mask(), 3) {
            let fam = family(&m, parts.clone());
            let zero = multi_local_conn(&m, &fam)? == 0;
            let skew = is_skew_family(&m, &fam)?;
            ctx.check(zero == skew, || {
                format!("{name}: zero local connectivity vs skewness fails")
            });
        }
    }
    Ok(())
}

fn suite_conneqrelrank(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(6)) {
        let name = name_of(&m);
        for x in m.full_mask().subsets() {
            let lib = lambda_set(&m, x)?;
            let oracle = rank_lambda(&m, x);
            ctx.check(lib == oracle, || {
                format!(
                    "{name}: relative-rank connectivity {lib} differs from {oracle} on {}",
                    m.ground().format_mask(x)
                )
            });
        }
    }
    Ok(())
}

fn suite_connselfdual(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(6)) {
        let name = name_of(&m);
        let dual = m.dual();
        for x in m.full_mask().subsets() {
            ctx.check(rank_lambda(&m, x) == rank_lambda(&dual, x), || {
                format!(
                    "{name}: connectivity is not self-dual on {}",
                    m.ground().format_mask(x)
                )
            });
        }
    }
    Ok(())
}

fn suite_lambdazero(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(6)) {
        let name = name_of(&m);
        let dual = m.dual();
        for parts in set_partitions(m.full_mask(), 3) {
            let fam = family(&m, parts.clone());
            if !fam.is_partition() {
                continue;
            }
            let c1 = is_skew_family(&m, &fam)?;
            let c2 = is_skew_family(&dual, &family(&dual, parts.clone()))?;
            let mut c3 = true;
            for s in m.full_mask().subsets() {
                if m.indep(s) != parts.iter().all(|&p| m.indep(s.inter(p))) {
                    c3 = false;
                    break;
                }
            }
            let c4 = lambda(&m, &fam)? == 0;
            let c5 = lambda_dual(&m, &fam)? == 0;
            let verdicts = [c1, c2, c3, c4, c5];
            ctx.check(verdicts.iter().all(|&v| v == c1), || {
                format!("{name}: zero-connectivity conditions disagree {verdicts:?}")
            });
        }
    }
    Ok(())
}

fn suite_contractmodularcut(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(5)) {
        let name = name_of(&m);
        let mut contract_sets = vec![Mask::EMPTY];
        contract_sets.extend((0..m.len().min(2)).map(Mask::bit));
        if m.len() >= 2 {
            contract_sets.push(Mask::from_indices([0, 1]));
        }
        for &c in &contract_sets {
            let mc = m.minor(c, Mask::EMPTY)?;
            let cuts = match enumerate_modular_cuts(&mc) {
                Ok(c) => c,
                Err(Error::TooManyFlats { .. }) => continue,
                Err(e) => return Err(e),
            };
            for cut in &cuts {
                // validity and commutation are asserted inside the lift
                let lifted = crate::quotients::lift_modular_cut(&m, c, cut);
                ctx.check(lifted.is_ok(), || {
                    format!(
                        "{name}: lifting a cut across contraction of {} fails",
                        m.ground().format_mask(c)
                    )
                });
            }
        }
    }
    Ok(())
}

fn suite_majorofminor(ctx: &mut Ctx) -> Result<()> {
    // catalog pairs satisfying the splice hypothesis
    let ms = corpus_sized(ctx.max_size.min(5));
    for m in &ms {
        for n in &ms {
            let small_sets: Vec<Mask> = m.full_mask().subsets().filter(|s| s.len() <= 2).collect();
            for &c in &small_sets {
                for d in n.full_mask().subsets().filter(|s| s.len() <= 2) {
                    // disjointness of labels
                    let c_labels: Vec<&str> = m.ground().labels_of(c);
                    if d.iter().any(|i| c_labels.contains(&n.ground().label(i))) {
                        continue;
                    }
                    let mc = m.minor(c, Mask::EMPTY)?;
                    let nd = n.minor(Mask::EMPTY, d)?;
                    if !mc.ground().same_label_set(nd.ground()) {
                        continue;
                    }
                    if !mc.equals(&nd)? {
                        continue;
                    }
                    let p = splice(m, n, c, d)?;
                    ctx.check(p.len() == m.len() + d.len(), || {
                        format!(
                            "splice of {} and {} has the wrong ground",
                            name_of(m),
                            name_of(n)
                        )
                    });
                }
            }
        }
    }
    // constructed extensions exercise nonempty C and D together
    for m in corpus_sized(ctx.max_size.min(4)) {
        if m.is_empty() {
            continue;
        }
        let c = Mask::bit(0);
        let mc = m.minor(c, Mask::EMPTY)?;
        let cuts = match enumerate_modular_cuts(&mc) {
            Ok(cs) => cs,
            Err(Error::TooManyFlats { .. }) => continue,
            Err(e) => return Err(e),
        };
        for cut in cuts.iter().take(3) {
            let n = extend_by(&mc, "_d", cut)?;
            let d = n.ground().mask_of(["_d"])?;
            let p = splice(&m, &n, c, d)?;
            ctx.check(p.len() == m.len() + 1, || {
                format!("constructed splice of {} has the wrong ground", name_of(&m))
            });
        }
    }
    Ok(())
}

fn suite_projectseq(ctx: &mut Ctx) -> Result<()> {
    // truncation chains
    for n in 2..=ctx.max_size.min(4) {
        for k in 1..=n {
            let chain: Vec<Matroid> = (0..=k.min(2))
                .map(|i| Matroid::uniform(k - i, n))
                .collect::<Result<_>>()?;
            let w = compose_projections(&chain)?;
            ctx.check(w.removed_size() == chain.len() - 1, || {
                format!("truncation chain of uniform:{k},{n} fails")
            });
            // every projection witness certifies a quotient
            let deleted = w.matroid().minor(Mask::EMPTY, w.removed_set())?;
            let contracted = w.matroid().minor(w.removed_set(), Mask::EMPTY)?;
            ctx.check_result(is_quotient(&contracted, &deleted), || {
                format!("projection witness of uniform:{k},{n} is not a quotient")
            });
        }
    }
    // guts chains
    for m in corpus_sized(ctx.max_size.min(4)) {
        let fams = set_partitions(m.full_mask(), 2);
        for parts in fams.into_iter().take(4) {
            let fam = family(&m, parts);
            if !fam.is_partition() {
                continue;
            }
            let k = lambda_dual(&m, &fam)?.min(2);
            let chain: Vec<Matroid> = (0..=k)
                .map(|i| guts_project_iterate(&m, &fam, i))
                .collect::<Result<_>>()?;
            let w = compose_projections(&chain)?;
            ctx.check(w.removed_size() == k, || {
                format!("guts chain of {} fails", name_of(&m))
            });
        }
    }
    Ok(())
}

fn suite_modequiv(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(5)) {
        let name = name_of(&m);
        let fam = flats(&m)?;
        let loops = m.loops();
        for (f, _) in fam.iter() {
            let lib = is_modular_flat(&m, f)?;
            // skewness in the projection by the intersection
            let mut c3 = true;
            for (g, _) in fam.iter() {
                let proj = m.project_set(f.inter(g))?;
                if proj.rank_in(f) + proj.rank_in(g) != proj.rank_in(f.union(g)) {
                    c3 = false;
                    break;
                }
            }
            // flats meeting f in loops only are skew to f
            let mut c4 = true;
            for (g, _) in fam.iter() {
                if f.inter(g).is_subset(loops)
                    && m.rank_in(f) + m.rank_in(g) != m.rank_in(f.union(g))
                {
                    c4 = false;
                    break;
                }
            }
            // the contraction-parallel condition
            let mut c6 = true;
            'cloop: for c in m.full_mask().subsets() {
                let pc = m.project_set(c)?;
                let cl_f = pc.closure_in(f);
                for e in cl_f.minus(pc.loops()).iter() {
                    let found = f.iter().any(|fe| {
                        !pc.loops().contains(fe) && pc.rank_in(Mask::bit(e).with(fe)) == 1
                    });
                    if !found {
                        c6 = false;
                        break 'cloop;
                    }
                }
            }
            let verdicts = [lib, c3, c4, c6];
            ctx.check(verdicts.iter().all(|&v| v == lib), || {
                format!(
                    "{name}: modular-flat characterizations disagree on {} {verdicts:?}",
                    m.ground().format_mask(f)
                )
            });
        }
    }
    Ok(())
}

fn suite_modularfinite(ctx: &mut Ctx) -> Result<()> {
    for m in corpus_sized(ctx.max_size.min(6)) {
        if !m.loops().is_empty() {
            continue;
        }
        let name = name_of(&m);
        let fam = flats(&m)?;
        let full_rank = m.rank_full();
        for (f, rf) in fam.iter() {
            let lib = crate::modularity::is_modular_flat_with(&m, &fam, f)?;
            let by_corank_test = rf == 0
                || fam
                    .iter()
                    .filter(|&(_, rg)| full_rank - rg == rf - 1)
                    .all(|(g, _)| !f.inter(g).is_empty());
            let by_rank_test = fam
                .iter()
                .filter(|&(_, rg)| rg == (full_rank - rf) + 1)
                .all(|(g, _)| !f.inter(g).is_empty());
            ctx.check(lib == by_corank_test && lib == by_rank_test, || {
                format!(
                    "{name}: finite modularity criteria disagree on {}",
                    m.ground().format_mask(f)
                )
            });
        }
    }
    Ok(())
}

fn suite_modularfiniteinter(ctx: &mut Ctx) -> Result<()> {
    let mut ms = corpus_sized(ctx.max_size.min(6));
    if ctx.max_size >= 7 {
        ms.push(catalog::get("fano")?);
    }
    if ctx.max_size >= 13 {
        ms.push(catalog::get("pg_2_3")?);
    }
    for m in ms {
        let name = name_of(&m);
        let fam = flats(&m)?;
        let modular: Vec<Mask> = fam
            .iter()
            .map(|(f, _)| Ok((f, crate::modularity::is_modular_flat_with(&m, &fam, f)?)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|&(_, is)| is)
            .map(|(f, _)| f)
            .collect();
        for (i, &f) in modular.iter().enumerate() {
            for &g in &modular[i + 1..] {
                ctx.check_result(
                    crate::modularity::is_modular_flat_with(&m, &fam, f.inter(g)),
                    || {
                        format!(
                            "{name}: intersection of modular flats {} and {} is not modular",
                            m.ground().format_mask(f),
                            m.ground().format_mask(g)
                        )
                    },
                );
            }
        }
    }
    Ok(())
}

fn suite_modularlinehyperplane(ctx: &mut Ctx) -> Result<()> {
    // named verdicts
    for (name, size, expected) in [
        ("fano", 7, true),
        ("uniform:3,4", 4, false),
        ("vamos", 8, false),
    ] {
        if ctx.max_size < size {
            continue;
        }
        let m = catalog::get(name)?;
        ctx.check(is_modular_matroid(&m)? == expected, || {
            format!("{name}: modularity verdict differs from {expected}")
        });
    }
    if ctx.max_size >= 13 {
        let pg = catalog::get("pg_2_3")?;
        ctx.check(is_modular_matroid(&pg)?, || {
            "pg_2_3: expected a modular matroid".into()
        });
    }
    // loopless agreement with the line-hyperplane criterion
    for m in corpus_sized(ctx.max_size.min(7)) {
        if !m.loops().is_empty() {
            continue;
        }
        let name = name_of(&m);
        let fam = flats(&m)?;
        let by_def = is_modular_matroid(&m)?;
        let full = m.rank_full();
        let lines = fam.of_rank(2);
        let hyperplanes = if full == 0 {
            vec![]
        } else {
            fam.of_rank(full - 1)
        };
        let by_lines = lines
            .iter()
            .all(|&l| hyperplanes.iter().all(|&h| !l.inter(h).is_empty()));
        ctx.check(by_def == by_lines, || {
            format!("{name}: line-hyperplane criterion disagrees with the definition")
        });
    }
    Ok(())
}

fn suite_catalog(ctx: &mut Ctx) -> Result<()> {
    let bound = ctx.max_size.max(8);
    let outcome = catalog::self_check_up_to(bound);
    ctx.check(outcome.is_ok(), || format!("{:?}", outcome.err()));
    let a: Vec<String> = catalog::random_specs(6)
        .iter()
        .map(crate::spec::serialize_spec)
        .collect();
    let b: Vec<String> = catalog::random_specs(6)
        .iter()
        .map(crate::spec::serialize_spec)
        .collect();
    ctx.check(a == b, || "random corpus specs are not reproducible".into());
    // round-trip identity for every catalog entry and every random spec
    let specs = catalog::entries()
        .into_iter()
        .map(|e| e.spec)
        .chain(catalog::random_specs(ctx.max_size.min(6)));
    for spec in specs {
        let parsed = crate::spec::parse_spec(&crate::spec::serialize_spec(&spec));
        ctx.check(matches!(&parsed, Ok(p) if *p == spec), || {
            format!("spec {} does not round-trip", spec.name)
        });
    }
    Ok(())
}

type SuiteFn = fn(&mut Ctx) -> Result<()>;

/// All suites, in the order they run under `--suite all`.
fn suite_registry() -> Vec<(&'static str, SuiteFn)> {
    vec![
        ("axioms", suite_axioms as SuiteFn),
        ("coreidentities", suite_coreidentities),
        ("closureinter", suite_closureinter),
        ("modpairiffbasis", suite_modpairiffbasis),
        ("blattice", suite_blattice),
        ("modularinsert", suite_modularinsert),
        ("modularcompl", suite_modularcompl),
        ("skewequiv", suite_skewequiv),
        ("skewrank", suite_skewrank),
        ("clskew", suite_clskew),
        ("skewmono", suite_skewmono),
        ("modulartoskew", suite_modulartoskew),
        ("maxskew", suite_maxskew),
        ("nullityprop", suite_nullityprop),
        ("nullitysupermod", suite_nullitysupermod),
        ("nullityproject", suite_nullityproject),
        ("nullitycontractadd", suite_nullitycontractadd),
        ("skewnullity", suite_skewnullity),
        ("nullityunion", suite_nullityunion),
        ("lcwelldef", suite_lcwelldef),
        ("lambdawelldef", suite_lambdawelldef),
        ("modcutextension", suite_modcutextension),
        ("modcutinter", suite_modcutinter),
        ("modcutcon", suite_modcutcon),
        ("modcutlambda", suite_modcutlambda),
        ("vamos-guts", suite_vamos_guts),
        ("gutscut", suite_gutscut),
        ("gpsub", suite_gpsub),
        ("lambdadualeq", suite_lambdadualeq),
        ("lambdaminproj", suite_lambdaminproj),
        ("quotequiv", suite_quotequiv),
        ("commonbasis", suite_commonbasis),
        ("discgood", suite_discgood),
        ("discdual", suite_discdual),
        ("disccontract", suite_disccontract),
        ("tightquot", suite_tightquot),
        ("quotientisproject", suite_quotientisproject),
        ("mlcprop", suite_mlcprop),
        ("lcpreimage", suite_lcpreimage),
        ("mcprojsymm", suite_mcprojsymm),
        ("mccon", suite_mccon),
        ("lcprop", suite_lcprop),
        ("lcmod", suite_lcmod),
        ("lcskewiff", suite_lcskewiff),
        ("conneqrelrank", suite_conneqrelrank),
        ("connselfdual", suite_connselfdual),
        ("lambdazero", suite_lambdazero),
        ("contractmodularcut", suite_contractmodularcut),
        ("majorofminor", suite_majorofminor),
        ("projectseq", suite_projectseq),
        ("modequiv", suite_modequiv),
        ("modularfinite", suite_modularfinite),
        ("modularfiniteinter", suite_modularfiniteinter),
        ("modularlinehyperplane", suite_modularlinehyperplane),
        ("catalog", suite_catalog),
    ]
}

pub fn suite_ids() -> Vec<&'static str> {
    suite_registry().into_iter().map(|(id, _)| id).collect()
}

/// Run one suite at the given instance-size bound and seed.
pub fn run_suite(id: &str, max_size: usize, seed: u64) -> Result<SuiteReport> {
    let Some((_, f)) = suite_registry().into_iter().find(|(s, _)| *s == id) else {
        return Err(Error::UnknownSuite(id.to_string()));
    };
    let mut ctx = Ctx::new(max_size, seed);
    f(&mut ctx)?;
    Ok(SuiteReport {
        suite: id.to_string(),
        instances: ctx.instances,
        failures: ctx.failures,
        first_counterexample: ctx.first,
        regime: ctx.regime,
    })
}

/// Run every suite in registry order.
pub fn run_all(max_size: usize, seed: u64) -> Result<Vec<SuiteReport>> {
    suite_registry()
        .into_iter()
        .map(|(id, _)| run_suite(id, max_size, seed))
        .collect()
}
