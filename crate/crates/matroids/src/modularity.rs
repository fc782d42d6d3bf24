//! Mutual bases, modular pairs and families, skew families, modular flats,
//! and modular matroids.
//!
//! A family is modular when some independent set contains a basis of every
//! member. Pairs, flats and whole matroids inherit their modularity notions
//! from that, and every operation here that has an equivalent rank-side
//! characterization evaluates both and fails loudly on disagreement (a
//! disagreement would falsify the implementation, not the theory).

use crate::flats::{flats, FlatFamily};
use crate::ground::{GroundSet, Mask};
use crate::matroid::Matroid;
use crate::{Error, Result};

/// An indexed family of subsets of a ground set.
///
/// The `is_partition` flag is computed at construction: pairwise disjoint
/// parts whose union is the whole ground set.
#[derive(Clone, Debug)]
pub struct PartitionFamily {
    ground: GroundSet,
    parts: Vec<Mask>,
    is_partition: bool,
}

impl PartitionFamily {
    pub fn new(ground: GroundSet, parts: Vec<Mask>) -> Result<PartitionFamily> {
        let mut union = Mask::EMPTY;
        let mut disjoint = true;
        for &p in &parts {
            ground.check_mask(p)?;
            if !union.is_disjoint(p) {
                disjoint = false;
            }
            union = union.union(p);
        }
        let is_partition = disjoint && union == ground.full_mask();
        Ok(PartitionFamily {
            ground,
            parts,
            is_partition,
        })
    }

    pub fn pair(ground: GroundSet, x: Mask, y: Mask) -> Result<PartitionFamily> {
        PartitionFamily::new(ground, vec![x, y])
    }

    /// Parse `a,b|c,d` syntax; `-` denotes an empty part.
    pub fn parse(ground: GroundSet, text: &str) -> Result<PartitionFamily> {
        let mut parts = Vec::new();
        if !text.trim().is_empty() {
            for part in text.split('|') {
                let part = part.trim();
                if part == "-" || part.is_empty() {
                    parts.push(Mask::EMPTY);
                } else {
                    parts.push(ground.mask_of(part.split(',').map(str::trim))?);
                }
            }
        }
        PartitionFamily::new(ground, parts)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn parts(&self) -> &[Mask] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_partition(&self) -> bool {
        self.is_partition
    }

    pub fn union(&self) -> Mask {
        self.parts.iter().fold(Mask::EMPTY, |acc, &p| acc.union(p))
    }
}

/// An independent set containing a basis of every family member.
#[derive(Clone, Debug)]
pub struct MutualBasisWitness {
    host: Matroid,
    family: PartitionFamily,
    basis: Mask,
}

impl MutualBasisWitness {
    fn new(host: &Matroid, family: &PartitionFamily, basis: Mask) -> Result<MutualBasisWitness> {
        if !host.indep(basis) {
            return Err(Error::Internal("mutual basis witness is dependent".into()));
        }
        for &p in family.parts() {
            if host.rank_in(basis.inter(p)) != host.rank_in(p) {
                return Err(Error::Internal(
                    "mutual basis witness misses a part basis".into(),
                ));
            }
        }
        Ok(MutualBasisWitness {
            host: host.clone(),
            family: family.clone(),
            basis,
        })
    }

    pub fn basis(&self) -> Mask {
        self.basis
    }

    pub fn host(&self) -> &Matroid {
        &self.host
    }

    pub fn family(&self) -> &PartitionFamily {
        &self.family
    }
}

/// Search for a mutual basis; complete, deterministic (the witness is the
/// lexicographically least one over the canonical element order).
///
/// Backtracks over the elements of the family union with independence and
/// cardinality-feasibility pruning. When the backtracker reports failure
/// and the closure of the union is small, an exhaustive scan of independent
/// subsets of that closure re-verifies the failure.
pub fn mutual_basis(m: &Matroid, fam: &PartitionFamily) -> Result<Option<MutualBasisWitness>> {
    if !fam.ground().same_as(m.ground()) {
        return Err(Error::GroundMismatch);
    }
    crate::check_cap(m.len())?;
    let union = fam.union();
    let elems: Vec<usize> = union.iter().collect();
    let part_ranks: Vec<usize> = fam.parts().iter().map(|&p| m.rank_in(p)).collect();
    // suffix[k] = elements from position k onward
    let mut suffix = vec![Mask::EMPTY; elems.len() + 1];
    for k in (0..elems.len()).rev() {
        suffix[k] = suffix[k + 1].with(elems[k]);
    }
    let feasible = |b: Mask, rest: Mask| {
        fam.parts()
            .iter()
            .zip(&part_ranks)
            .all(|(&p, &r)| b.union(rest).inter(p).len() >= r)
    };
    let spans_all = |b: Mask| {
        fam.parts()
            .iter()
            .zip(&part_ranks)
            .all(|(&p, &r)| b.inter(p).len() == r)
    };

    fn dfs(
        m: &Matroid,
        elems: &[usize],
        suffix: &[Mask],
        pos: usize,
        b: Mask,
        feasible: &impl Fn(Mask, Mask) -> bool,
        spans_all: &impl Fn(Mask) -> bool,
    ) -> Option<Mask> {
        if pos == elems.len() {
            return spans_all(b).then_some(b);
        }
        let e = elems[pos];
        let with = b.with(e);
        if m.indep(with) && feasible(with, suffix[pos + 1]) {
            if let Some(found) = dfs(m, elems, suffix, pos + 1, with, feasible, spans_all) {
                return Some(found);
            }
        }
        if feasible(b, suffix[pos + 1]) {
            return dfs(m, elems, suffix, pos + 1, b, feasible, spans_all);
        }
        None
    }

    if let Some(b) = dfs(m, &elems, &suffix, 0, Mask::EMPTY, &feasible, &spans_all) {
        return Ok(Some(MutualBasisWitness::new(m, fam, b)?));
    }

    // completeness fallback over the closed-up search space
    let closed = m.closure_in(union);
    if closed.len() <= 12 {
        for b in closed.subsets() {
            if m.indep(b) && spans_all_over(m, fam, b) {
                return Ok(Some(MutualBasisWitness::new(m, fam, b)?));
            }
        }
    }
    Ok(None)
}

fn spans_all_over(m: &Matroid, fam: &PartitionFamily, b: Mask) -> bool {
    fam.parts()
        .iter()
        .all(|&p| m.rank_in(b.inter(p)) == m.rank_in(p))
}

/// Is the family modular, i.e. does a mutual basis exist?
pub fn is_modular_family(m: &Matroid, fam: &PartitionFamily) -> Result<bool> {
    Ok(mutual_basis(m, fam)?.is_some())
}

/// Modular pair test: mutual-basis existence, cross-checked against the
/// rank identity r(X) + r(Y) = r(X ∪ Y) + r(X ∩ Y).
pub fn is_modular_pair(m: &Matroid, x: Mask, y: Mask) -> Result<bool> {
    m.ground().check_mask(x)?;
    m.ground().check_mask(y)?;
    let fam = PartitionFamily::pair(m.ground().clone(), x, y)?;
    let by_basis = mutual_basis(m, &fam)?.is_some();
    let by_rank = modular_pair_rank_identity(m, x, y);
    if by_basis != by_rank {
        return Err(Error::Internal(format!(
            "modular pair routes disagree on ({}, {}): basis={by_basis} rank={by_rank}",
            m.ground().format_mask(x),
            m.ground().format_mask(y)
        )));
    }
    Ok(by_basis)
}

pub(crate) fn modular_pair_rank_identity(m: &Matroid, x: Mask, y: Mask) -> bool {
    m.rank_in(x) + m.rank_in(y) == m.rank_in(x.union(y)) + m.rank_in(x.inter(y))
}

/// Skew family test.
///
/// Route one is the definition (modular family with pairwise rank-zero
/// intersections); route two is the finite rank-sum criterion; route three
/// is the circuit criterion, applicable when no loop lies in two parts.
/// All applicable routes must agree.
pub fn is_skew_family(m: &Matroid, fam: &PartitionFamily) -> Result<bool> {
    if !fam.ground().same_as(m.ground()) {
        return Err(Error::GroundMismatch);
    }
    let by_def = {
        let modular = mutual_basis(m, fam)?.is_some();
        modular && pairwise_rank_zero(m, fam)
    };
    let union = fam.union();
    let by_rank_sum = fam.parts().iter().map(|&p| m.rank_in(p)).sum::<usize>() == m.rank_in(union);
    if by_def != by_rank_sum {
        return Err(Error::Internal(format!(
            "skew routes disagree: definition={by_def} rank-sum={by_rank_sum}"
        )));
    }
    if union.len() <= crate::size_cap() {
        let loops = m.loops();
        let shared = shared_elements(fam);
        if shared.inter(loops).is_empty() {
            let by_circuits = shared.is_empty() && circuits_confined(m, fam, union);
            if by_def != by_circuits {
                return Err(Error::Internal(format!(
                    "skew routes disagree: definition={by_def} circuits={by_circuits}"
                )));
            }
        }
    }
    Ok(by_def)
}

fn pairwise_rank_zero(m: &Matroid, fam: &PartitionFamily) -> bool {
    let parts = fam.parts();
    for (i, &a) in parts.iter().enumerate() {
        for &b in &parts[i + 1..] {
            if m.rank_in(a.inter(b)) != 0 {
                return false;
            }
        }
    }
    true
}

fn shared_elements(fam: &PartitionFamily) -> Mask {
    let parts = fam.parts();
    let mut shared = Mask::EMPTY;
    for (i, &a) in parts.iter().enumerate() {
        for &b in &parts[i + 1..] {
            shared = shared.union(a.inter(b));
        }
    }
    shared
}

/// Every minimal dependent subset of `union` lies inside a single part.
fn circuits_confined(m: &Matroid, fam: &PartitionFamily, union: Mask) -> bool {
    for c in union.subsets() {
        if !m.indep(c)
            && c.iter().all(|e| m.indep(c.without(e)))
            && !fam.parts().iter().any(|&p| c.is_subset(p))
        {
            return false;
        }
    }
    true
}

/// Modular flat test: the definition (a modular pair with every flat), with
/// four more characterizations evaluated and checked for unanimity: the
/// skew form in the contraction by the intersection, the complementary-flat
/// form, and two closure-distributivity forms.
pub fn is_modular_flat(m: &Matroid, f: Mask) -> Result<bool> {
    let fam = flats(m)?;
    is_modular_flat_with(m, &fam, f)
}

pub(crate) fn is_modular_flat_with(m: &Matroid, fam: &FlatFamily, f: Mask) -> Result<bool> {
    m.ground().check_mask(f)?;
    if !m.is_flat_in(f) {
        return Err(Error::NotAFlat(m.ground().format_mask(f)));
    }

    let mut by_definition = true;
    for (g, _) in fam.iter() {
        if !is_modular_pair(m, f, g)? {
            by_definition = false;
            break;
        }
    }

    // skew differences in the contraction by the intersection
    let mut by_contraction_skew = true;
    for (g, _) in fam.iter() {
        let inter = f.inter(g);
        let minor = m.minor(inter, Mask::EMPTY)?;
        let a = shrink_mask(m.ground(), minor.ground(), f.minus(g));
        let b = shrink_mask(m.ground(), minor.ground(), g.minus(f));
        if minor.rank_in(a) + minor.rank_in(b) != minor.rank_in(a.union(b)) {
            by_contraction_skew = false;
            break;
        }
    }

    // every complementary flat is skew to f
    let loops = m.loops();
    let full = m.full_mask();
    let mut by_complements = true;
    for (g, _) in fam.iter() {
        if f.inter(g) == loops
            && m.closure_in(f.union(g)) == full
            && m.rank_in(f) + m.rank_in(g) != m.rank_in(f.union(g))
        {
            by_complements = false;
            break;
        }
    }

    // f ∩ cl(g ∪ f0) = cl((f ∩ g) ∪ f0) for flats f0 ⊆ f
    let mut by_distrib_inside = true;
    'outer1: for (f0, _) in fam.iter() {
        if !f0.is_subset(f) {
            continue;
        }
        for (g, _) in fam.iter() {
            if f.inter(m.closure_in(g.union(f0))) != m.closure_in(f.inter(g).union(f0)) {
                by_distrib_inside = false;
                break 'outer1;
            }
        }
    }

    // cl(g1 ∪ f) ∩ g2 = cl(g1 ∪ (f ∩ g2)) for flats g1 ⊆ g2
    let mut by_distrib_outside = true;
    'outer2: for (g1, _) in fam.iter() {
        for (g2, _) in fam.iter() {
            if !g1.is_subset(g2) {
                continue;
            }
            if m.closure_in(g1.union(f)).inter(g2) != m.closure_in(g1.union(f.inter(g2))) {
                by_distrib_outside = false;
                break 'outer2;
            }
        }
    }

    let verdicts = [
        by_definition,
        by_contraction_skew,
        by_complements,
        by_distrib_inside,
        by_distrib_outside,
    ];
    if verdicts.iter().any(|&v| v != by_definition) {
        return Err(Error::Internal(format!(
            "modular flat characterizations disagree on {}: {verdicts:?}",
            m.ground().format_mask(f)
        )));
    }
    Ok(by_definition)
}

/// Re-express a parent-ground mask in a sub-ground's coordinates; elements
/// missing from the sub-ground are dropped.
pub(crate) fn shrink_mask(parent: &GroundSet, child: &GroundSet, mask: Mask) -> Mask {
    Mask::from_indices(mask.iter().filter_map(|i| child.index_of(parent.label(i))))
}

/// Modular matroid test: every flat modular; for loopless matroids the
/// line–hyperplane criterion is evaluated too and must agree.
pub fn is_modular_matroid(m: &Matroid) -> Result<bool> {
    let fam = flats(m)?;
    let mut by_definition = true;
    for (f, _) in fam.iter() {
        if !is_modular_flat_with(m, &fam, f)? {
            by_definition = false;
            break;
        }
    }
    if m.loops().is_empty() {
        let lines = fam.of_rank(2);
        let full = m.rank_full();
        let hyperplanes = if full == 0 {
            vec![]
        } else {
            fam.of_rank(full - 1)
        };
        let by_lines = lines
            .iter()
            .all(|&l| hyperplanes.iter().all(|&h| !l.inter(h).is_empty()));
        if by_definition != by_lines {
            return Err(Error::Internal(format!(
                "line-hyperplane criterion ({by_lines}) disagrees with the definition ({by_definition})"
            )));
        }
    }
    Ok(by_definition)
}

/// All flats with trivial intersection and spanning union with `f`.
pub fn complementary_flats(m: &Matroid, f: Mask) -> Result<Vec<Mask>> {
    m.ground().check_mask(f)?;
    if !m.is_flat_in(f) {
        return Err(Error::NotAFlat(m.ground().format_mask(f)));
    }
    let fam = flats(m)?;
    let loops = m.loops();
    let full = m.full_mask();
    Ok(fam
        .iter()
        .filter(|&(g, _)| f.inter(g) == loops && m.closure_in(f.union(g)) == full)
        .map(|(g, _)| g)
        .collect())
}
