//! Modular cuts, single-element extensions and projections, guts cuts, and
//! the guts-projection characterization of dual connectivity.
//!
//! A modular cut here is an upward-closed family of flats closed under
//! intersections of modular pairs. The third clause of the general
//! definition concerns infinite chains and is vacuous on finite ground
//! sets.

use std::sync::Arc;

use crate::flats::flats;
use crate::ground::{canonical_set_order, GroundSet, Mask};
use crate::matroid::{Matroid, Oracle, Provenance};
use crate::modularity::{
    is_modular_pair, is_skew_family, modular_pair_rank_identity, PartitionFamily,
};
use crate::{Error, Result};

/// A validated modular cut of a specific host matroid.
#[derive(Clone)]
pub struct ModularCut {
    host: Matroid,
    members: Arc<Vec<Mask>>,
}

impl std::fmt::Debug for ModularCut {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rendered: Vec<String> = self
            .members
            .iter()
            .map(|&m| self.host.ground().format_mask(m))
            .collect();
        write!(f, "ModularCut[{}]", rendered.join("; "))
    }
}

impl ModularCut {
    pub fn host(&self) -> &Matroid {
        &self.host
    }

    pub fn members(&self) -> &[Mask] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, f: Mask) -> bool {
        self.members
            .binary_search_by(|&m| canonical_set_order(m, f))
            .is_ok()
    }

    /// Proper cuts do not contain the loop flat.
    pub fn is_proper(&self) -> bool {
        !self.contains(self.host.loops())
    }
}

/// The first violated modular-cut clause, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutViolation {
    NotAFlat { member: Mask },
    MissingSuperflat { member: Mask, superflat: Mask },
    MissingModularIntersection { a: Mask, b: Mask, inter: Mask },
}

impl CutViolation {
    pub fn render(&self, ground: &GroundSet) -> String {
        match self {
            CutViolation::NotAFlat { member } => {
                format!("member {} is not a flat", ground.format_mask(*member))
            }
            CutViolation::MissingSuperflat { member, superflat } => format!(
                "superflat {} of member {} is missing",
                ground.format_mask(*superflat),
                ground.format_mask(*member)
            ),
            CutViolation::MissingModularIntersection { a, b, inter } => format!(
                "members {} and {} form a modular pair but their intersection {} is missing",
                ground.format_mask(*a),
                ground.format_mask(*b),
                ground.format_mask(*inter)
            ),
        }
    }
}

/// Outcome of validating a candidate flat family as a modular cut.
#[derive(Debug)]
pub enum ValidationOutcome {
    Valid(ModularCut),
    Invalid(CutViolation),
}

impl ValidationOutcome {
    pub fn into_result(self, context: &str) -> Result<ModularCut> {
        match self {
            ValidationOutcome::Valid(cut) => Ok(cut),
            ValidationOutcome::Invalid(v) => Err(Error::Internal(format!(
                "{context}: family is not a modular cut ({v:?})"
            ))),
        }
    }

    pub fn valid(&self) -> Option<&ModularCut> {
        match self {
            ValidationOutcome::Valid(c) => Some(c),
            ValidationOutcome::Invalid(_) => None,
        }
    }

    pub fn violation(&self) -> Option<&CutViolation> {
        match self {
            ValidationOutcome::Valid(_) => None,
            ValidationOutcome::Invalid(v) => Some(v),
        }
    }
}

/// Validate a family of sets as a modular cut: every member a flat, upward
/// closed among flats, closed under intersections of modular member pairs.
pub fn validate_modular_cut(m: &Matroid, family: &[Mask]) -> Result<ValidationOutcome> {
    crate::check_cap(m.len())?;
    for &f in family {
        m.ground().check_mask(f)?;
    }
    let mut members: Vec<Mask> = family.to_vec();
    members.sort_by(|a, b| canonical_set_order(*a, *b));
    members.dedup();

    for &f in &members {
        if !m.is_flat_in(f) {
            return Ok(ValidationOutcome::Invalid(CutViolation::NotAFlat {
                member: f,
            }));
        }
    }
    let contains = |f: Mask| {
        members
            .binary_search_by(|&x| canonical_set_order(x, f))
            .is_ok()
    };
    // the modular-pair clause is reported ahead of upward closure: a family
    // can break both, and the pair witness is the informative one
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if is_modular_pair(m, a, b)? && !contains(a.inter(b)) {
                return Ok(ValidationOutcome::Invalid(
                    CutViolation::MissingModularIntersection {
                        a,
                        b,
                        inter: a.inter(b),
                    },
                ));
            }
        }
    }
    let all_flats = flats(m)?;
    for &f in &members {
        for (g, _) in all_flats.iter() {
            if f.is_subset(g) && !contains(g) {
                return Ok(ValidationOutcome::Invalid(CutViolation::MissingSuperflat {
                    member: f,
                    superflat: g,
                }));
            }
        }
    }
    Ok(ValidationOutcome::Valid(ModularCut {
        host: m.clone(),
        members: Arc::new(members),
    }))
}

/// Largest flat count over which cuts are enumerated.
pub const MAX_FLATS_FOR_ENUMERATION: usize = 20;

/// Enumerate every modular cut of the matroid, in a canonical order.
///
/// Flats are processed in decreasing size so that upward closure can be
/// enforced incrementally; the modular-pair clause is enforced by recording
/// intersection obligations when a pair enters the family.
pub fn enumerate_modular_cuts(m: &Matroid) -> Result<Vec<ModularCut>> {
    let fam = flats(m)?;
    let count = fam.len();
    if count > MAX_FLATS_FOR_ENUMERATION {
        return Err(Error::TooManyFlats {
            count,
            cap: MAX_FLATS_FOR_ENUMERATION,
        });
    }
    let mut order: Vec<Mask> = fam.masks();
    order.sort_by(|a, b| canonical_set_order(*b, *a));
    let index_of = |f: Mask| order.iter().position(|&x| x == f).expect("flat");

    // superset obligations: supers[i] = bitmask of indices j<i with order[j] ⊇ order[i]
    let supers: Vec<u32> = order
        .iter()
        .enumerate()
        .map(|(i, &f)| {
            let mut bits = 0u32;
            for (j, &g) in order.iter().enumerate().take(i) {
                if f.is_subset(g) {
                    bits |= 1 << j;
                }
            }
            bits
        })
        .collect();
    // modular-pair matrix with intersection indices
    let pair_inter: Vec<Vec<Option<usize>>> = order
        .iter()
        .map(|&a| {
            order
                .iter()
                .map(|&b| {
                    if a != b && modular_pair_rank_identity(m, a, b) {
                        Some(index_of(a.inter(b)))
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();

    let mut found: Vec<u32> = Vec::new();
    // chosen/required are bitmasks over flat indices
    fn descend(
        pos: usize,
        chosen: u32,
        required: u32,
        order: &[Mask],
        supers: &[u32],
        pair_inter: &[Vec<Option<usize>>],
        found: &mut Vec<u32>,
    ) {
        if pos == order.len() {
            found.push(chosen);
            return;
        }
        let can_include = supers[pos] & chosen == supers[pos];
        let must_include = required >> pos & 1 == 1;
        if can_include {
            let mut req = required;
            let mut consistent = true;
            #[allow(clippy::needless_range_loop)]
            for j in 0..pos {
                if chosen >> j & 1 == 1 {
                    if let Some(i) = pair_inter[pos][j] {
                        if i < pos {
                            // intersections of comparable pairs are the pair
                            // minimum and are already chosen; incomparable
                            // pairs intersect strictly below both
                            if chosen >> i & 1 == 0 && i != pos {
                                consistent = false;
                                break;
                            }
                        } else if i != pos {
                            req |= 1 << i;
                        }
                    }
                }
            }
            if consistent {
                descend(
                    pos + 1,
                    chosen | 1 << pos,
                    req,
                    order,
                    supers,
                    pair_inter,
                    found,
                );
            }
        }
        if !must_include {
            descend(pos + 1, chosen, required, order, supers, pair_inter, found);
        }
    }
    descend(0, 0, 0, &order, &supers, &pair_inter, &mut found);

    let mut cuts: Vec<Vec<Mask>> = found
        .into_iter()
        .map(|bits| {
            let mut members: Vec<Mask> = order
                .iter()
                .enumerate()
                .filter(|&(i, _)| bits >> i & 1 == 1)
                .map(|(_, &f)| f)
                .collect();
            members.sort_by(|a, b| canonical_set_order(*a, *b));
            members
        })
        .collect();
    cuts.sort_by(|a, b| {
        a.len().cmp(&b.len()).then_with(|| {
            for (x, y) in a.iter().zip(b.iter()) {
                let ord = canonical_set_order(*x, *y);
                if ord != std::cmp::Ordering::Equal {
                    return ord;
                }
            }
            std::cmp::Ordering::Equal
        })
    });
    Ok(cuts
        .into_iter()
        .map(|members| ModularCut {
            host: m.clone(),
            members: Arc::new(members),
        })
        .collect())
}

struct ExtensionOracle {
    base: Matroid,
    members: Arc<Vec<Mask>>,
    e_index: usize,
}

impl Oracle for ExtensionOracle {
    fn indep(&self, x: Mask) -> bool {
        if !x.contains(self.e_index) {
            return self.base.indep(x);
        }
        let rest = x.without(self.e_index);
        if !self.base.indep(rest) {
            return false;
        }
        let cl = self.base.closure_in(rest);
        self.members
            .binary_search_by(|&m| canonical_set_order(m, cl))
            .is_err()
    }
}

fn check_host(cut: &ModularCut, m: &Matroid, what: &str) -> Result<()> {
    if cut.host.same_instance(m) {
        return Ok(());
    }
    if cut.host.ground().same_as(m.ground()) && cut.host.equals(m)? {
        return Ok(());
    }
    Err(Error::HostMismatch(format!(
        "{what}: cut belongs to a different matroid"
    )))
}

/// Unique single-element extension realizing a modular cut.
///
/// A set containing the new element is independent exactly when removing
/// it leaves an independent set whose closure avoids the cut. The result
/// is axiom-checked eagerly on small grounds, along with the defining
/// closure condition for every flat of the base.
pub fn extend_by(m: &Matroid, e: &str, cut: &ModularCut) -> Result<Matroid> {
    if m.ground().contains_label(e) {
        return Err(Error::LabelCollision(e.to_string()));
    }
    check_host(cut, m, "extend_by")?;
    let mut labels: Vec<String> = m.ground().labels().to_vec();
    labels.push(e.to_string());
    let ground = GroundSet::new(labels)?;
    let e_index = m.len();
    let ext = Matroid::from_oracle(
        ground,
        Provenance::Derived(format!("extension by {e}")),
        None,
        Box::new(ExtensionOracle {
            base: m.clone(),
            members: cut.members.clone(),
            e_index,
        }),
    );
    if ext.len() <= 10 {
        let report = crate::axioms::check_matroid(&ext)?;
        if let Some((axiom, witness)) = report.violation {
            return Err(Error::Internal(format!(
                "extension violates axiom {axiom:?}: {witness}"
            )));
        }
        for (f, _) in flats(m)?.iter() {
            let spans = ext.rank_in(f.with(e_index)) == ext.rank_in(f);
            if spans != cut.contains(f) {
                return Err(Error::Internal(format!(
                    "extension closure condition fails on flat {}",
                    m.ground().format_mask(f)
                )));
            }
        }
    }
    Ok(ext)
}

/// The modular cut a single-element extension induces on its deletion:
/// the flats of `mext \ e` whose closure in `mext` gains `e`.
pub fn extension_cut(mext: &Matroid, e: &str) -> Result<ModularCut> {
    let Some(e_index) = mext.ground().index_of(e) else {
        return Err(Error::NotInGround(e.to_string()));
    };
    let deleted = mext.minor(Mask::EMPTY, Mask::bit(e_index))?;
    let mut members = Vec::new();
    for (f, _) in flats(&deleted)?.iter() {
        let lifted = crate::modularity::shrink_mask(deleted.ground(), mext.ground(), f);
        debug_assert_eq!(lifted.len(), f.len());
        if mext.rank_in(lifted.with(e_index)) == mext.rank_in(lifted) {
            members.push(f);
        }
    }
    validate_modular_cut(&deleted, &members)?
        .into_result("extension cut of a matroid must validate")
}

fn fresh_label(ground: &GroundSet, prefix: &str) -> String {
    for i in 0usize.. {
        let candidate = format!("{prefix}{i}");
        if !ground.contains_label(&candidate) {
            return candidate;
        }
    }
    unreachable!()
}

/// Single-element projection through a modular cut: extend, then contract
/// the new element. The ground set is unchanged.
pub fn project_by(m: &Matroid, cut: &ModularCut) -> Result<Matroid> {
    let label = fresh_label(m.ground(), "_p");
    let ext = extend_by(m, &label, cut)?;
    let e_index = m.len();
    ext.minor(Mask::bit(e_index), Mask::EMPTY)
}

/// The guts family of an indexed family: all flats whose projection makes
/// the family skew, together with its validation outcome.
///
/// When the family's union is the whole ground set the family is a modular
/// cut; otherwise it may fail validation, and the failure is part of the
/// result rather than an error.
pub struct GutsCut {
    host: Matroid,
    members: Vec<Mask>,
    covers_ground: bool,
    validation: ValidationOutcome,
}

impl GutsCut {
    pub fn members(&self) -> &[Mask] {
        &self.members
    }

    pub fn covers_ground(&self) -> bool {
        self.covers_ground
    }

    pub fn validation(&self) -> &ValidationOutcome {
        &self.validation
    }

    pub fn contains(&self, f: Mask) -> bool {
        self.members
            .binary_search_by(|&m| canonical_set_order(m, f))
            .is_ok()
    }

    pub fn host(&self) -> &Matroid {
        &self.host
    }

    /// The validated cut; requires the family union to cover the ground.
    pub fn into_modular_cut(self) -> Result<ModularCut> {
        if !self.covers_ground {
            return Err(Error::UnionNotGround);
        }
        match self.validation {
            ValidationOutcome::Valid(c) => Ok(c),
            ValidationOutcome::Invalid(v) => Err(Error::Internal(format!(
                "guts family of a covering family failed validation: {}",
                v.render(self.host.ground())
            ))),
        }
    }
}

pub fn guts_cut(m: &Matroid, fam: &PartitionFamily) -> Result<GutsCut> {
    if !fam.ground().same_as(m.ground()) {
        return Err(Error::GroundMismatch);
    }
    let mut members = Vec::new();
    for (f, _) in flats(m)?.iter() {
        let projected = m.project_set(f)?;
        let fam_there = PartitionFamily::new(projected.ground().clone(), fam.parts().to_vec())?;
        if is_skew_family(&projected, &fam_there)? {
            members.push(f);
        }
    }
    members.sort_by(|a, b| canonical_set_order(*a, *b));
    let covers_ground = fam.union() == m.full_mask();
    let validation = validate_modular_cut(m, &members)?;
    Ok(GutsCut {
        host: m.clone(),
        members,
        covers_ground,
        validation,
    })
}

/// `k`-fold guts projection of a partition.
pub fn guts_project_iterate(m: &Matroid, fam: &PartitionFamily, k: usize) -> Result<Matroid> {
    if !fam.is_partition() {
        return Err(Error::NotAPartition);
    }
    let mut cur = m.clone();
    for _ in 0..k {
        let fam_cur = PartitionFamily::new(cur.ground().clone(), fam.parts().to_vec())?;
        let cut = guts_cut(&cur, &fam_cur)?.into_modular_cut()?;
        cur = project_by(&cur, &cut)?;
    }
    Ok(cur)
}

/// Dual connectivity as the number of guts projections needed to make the
/// partition skew; asserted equal to λ of the dual.
pub fn lambda_dual_via_guts(m: &Matroid, fam: &PartitionFamily) -> Result<usize> {
    if !fam.is_partition() {
        return Err(Error::NotAPartition);
    }
    let cap = m.rank_full() + 1;
    let mut cur = m.clone();
    let mut steps = 0;
    loop {
        let fam_cur = PartitionFamily::new(cur.ground().clone(), fam.parts().to_vec())?;
        if crate::connectivity::lambda(&cur, &fam_cur)? == 0 {
            break;
        }
        if steps >= cap {
            return Err(Error::IterationCapExceeded);
        }
        let cut = guts_cut(&cur, &fam_cur)?.into_modular_cut()?;
        cur = project_by(&cur, &cut)?;
        steps += 1;
    }
    let direct = crate::connectivity::lambda_dual(m, fam)?;
    if steps != direct {
        return Err(Error::Internal(format!(
            "guts iteration count {steps} disagrees with dual connectivity {direct}"
        )));
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn cut_of(m: &Matroid, families: &[&[&str]]) -> ModularCut {
        let members: Vec<Mask> = families
            .iter()
            .map(|f| m.ground().mask_of(f.iter().copied()).unwrap())
            .collect();
        match validate_modular_cut(m, &members).unwrap() {
            ValidationOutcome::Valid(c) => c,
            ValidationOutcome::Invalid(v) => panic!("expected valid cut: {v:?}"),
        }
    }

    #[test]
    fn validation_examples() {
        let m = Matroid::uniform(2, 3).unwrap();
        let full = cut_of(&m, &[&["a", "b", "c"]]);
        assert_eq!(full.len(), 1);
        let empty = validate_modular_cut(&m, &[]).unwrap();
        assert!(empty.valid().is_some());
        // {a} alone is missing its superflat E
        let bad = validate_modular_cut(&m, &[m.ground().mask_of(["a"]).unwrap()]).unwrap();
        assert!(matches!(
            bad.violation(),
            Some(CutViolation::MissingSuperflat { .. })
        ));
    }

    #[test]
    fn census_counts() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(enumerate_modular_cuts(&u12).unwrap().len(), 3);
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(enumerate_modular_cuts(&u23).unwrap().len(), 6);
        let u01 = Matroid::uniform(0, 1).unwrap();
        assert_eq!(enumerate_modular_cuts(&u01).unwrap().len(), 2);
    }

    #[test]
    fn enumerated_cuts_all_validate() {
        for name in ["uniform:1,2", "uniform:2,3", "uniform:2,4", "graphic:K4"] {
            let m = catalog::get(name).unwrap();
            for cut in enumerate_modular_cuts(&m).unwrap() {
                let outcome = validate_modular_cut(&m, cut.members()).unwrap();
                assert!(
                    outcome.valid().is_some(),
                    "enumerated cut fails validation on {name}"
                );
            }
        }
    }

    #[test]
    fn census_matches_brute_force() {
        // completeness: sweep all flat subsets, keep the up-closed ones
        // closed under modular-pair intersections, compare as sets
        for name in [
            "uniform:1,2",
            "uniform:1,3",
            "uniform:2,3",
            "uniform:2,4",
            "uniform:3,4",
            "graphic:K4",
            "fano",
        ] {
            let m = catalog::get(name).unwrap();
            let fl = flats(&m).unwrap().masks();
            let n = fl.len();
            assert!(n <= 16, "{name} has too many flats for this sweep");
            let modular: Vec<Vec<bool>> = fl
                .iter()
                .map(|&a| {
                    fl.iter()
                        .map(|&b| modular_pair_rank_identity(&m, a, b))
                        .collect()
                })
                .collect();
            let index_of = |f: Mask| fl.iter().position(|&x| x == f).unwrap();
            let mut brute: Vec<Vec<Mask>> = Vec::new();
            'cands: for bits in 0u32..1 << n {
                for i in 0..n {
                    if bits >> i & 1 == 0 {
                        continue;
                    }
                    for j in 0..n {
                        if i != j && fl[i].is_subset(fl[j]) && bits >> j & 1 == 0 {
                            continue 'cands;
                        }
                        if bits >> j & 1 == 1
                            && modular[i][j]
                            && bits >> index_of(fl[i].inter(fl[j])) & 1 == 0
                        {
                            continue 'cands;
                        }
                    }
                }
                let mut members: Vec<Mask> = (0..n)
                    .filter(|&i| bits >> i & 1 == 1)
                    .map(|i| fl[i])
                    .collect();
                members.sort_by(|a, b| canonical_set_order(*a, *b));
                brute.push(members);
            }
            let mut enumerated: Vec<Vec<Mask>> = enumerate_modular_cuts(&m)
                .unwrap()
                .iter()
                .map(|c| c.members().to_vec())
                .collect();
            brute.sort();
            enumerated.sort();
            assert_eq!(enumerated, brute, "census differs on {name}");
        }
    }

    #[test]
    fn extension_examples() {
        let m = Matroid::uniform(2, 3).unwrap();
        let free = cut_of(&m, &[&["a", "b", "c"]]);
        let ext = extend_by(&m, "d", &free).unwrap();
        assert!(ext.equals(&Matroid::uniform(2, 4).unwrap()).unwrap());

        // all flats: the new element is a loop
        let cuts = enumerate_modular_cuts(&m).unwrap();
        let all = cuts.iter().find(|c| c.len() == 5).unwrap();
        let ext = extend_by(&m, "d", all).unwrap();
        assert!(!ext.indep(ext.ground().mask_of(["d"]).unwrap()));

        // empty cut: coloop
        let none = cuts.iter().find(|c| c.is_empty()).unwrap();
        let ext = extend_by(&m, "d", none).unwrap();
        assert_eq!(ext.rank_full(), 3);
        assert!(matches!(
            extend_by(&m, "a", &free),
            Err(Error::LabelCollision(_))
        ));
    }

    #[test]
    fn extension_cut_round_trip() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let cut = extension_cut(&u24, "d").unwrap();
        assert_eq!(cut.len(), 1);
        assert_eq!(cut.members()[0], cut.host().full_mask());

        let m = Matroid::uniform(2, 3).unwrap();
        for cut in enumerate_modular_cuts(&m).unwrap() {
            let ext = extend_by(&m, "z", &cut).unwrap();
            let back = extension_cut(&ext, "z").unwrap();
            assert_eq!(back.members(), cut.members());
        }
    }

    #[test]
    fn project_by_examples() {
        let m = Matroid::uniform(2, 3).unwrap();
        let cuts = enumerate_modular_cuts(&m).unwrap();
        let free = cuts.iter().find(|c| c.len() == 1).unwrap();
        let truncated = project_by(&m, free).unwrap();
        assert!(truncated.equals(&Matroid::uniform(1, 3).unwrap()).unwrap());
        let all = cuts.iter().find(|c| c.len() == 5).unwrap();
        assert!(project_by(&m, all).unwrap().equals(&m).unwrap());
        let none = cuts.iter().find(|c| c.is_empty()).unwrap();
        assert!(project_by(&m, none).unwrap().equals(&m).unwrap());
    }

    #[test]
    fn guts_cut_examples() {
        let m = Matroid::uniform(2, 4).unwrap();
        let fam = PartitionFamily::parse(m.ground().clone(), "a,b|c,d").unwrap();
        let g = guts_cut(&m, &fam).unwrap();
        assert_eq!(g.members(), &[m.full_mask()]);
        assert!(g.covers_ground());
        assert!(g.validation().valid().is_some());
    }

    #[test]
    fn vamos_guts_family_is_not_a_cut() {
        let v = catalog::vamos();
        let pairs = catalog::vamos_pairs(&v);
        let fam = PartitionFamily::new(v.ground().clone(), vec![pairs[0], pairs[1]]).unwrap();
        let g = guts_cut(&v, &fam).unwrap();
        assert!(!g.covers_ground());
        assert!(g.contains(pairs[2]));
        assert!(g.contains(pairs[3]));
        match g.validation().violation() {
            Some(CutViolation::MissingModularIntersection { a, b, inter }) => {
                assert_eq!((*a, *b), (pairs[2], pairs[3]));
                assert_eq!(*inter, Mask::EMPTY);
            }
            other => panic!("expected the pair-intersection violation, got {other:?}"),
        }
    }

    #[test]
    fn guts_iteration_examples() {
        let m = Matroid::uniform(2, 4).unwrap();
        let fam = PartitionFamily::parse(m.ground().clone(), "a,b|c,d").unwrap();
        assert!(guts_project_iterate(&m, &fam, 0)
            .unwrap()
            .equals(&m)
            .unwrap());
        let once = guts_project_iterate(&m, &fam, 1).unwrap();
        assert!(once.equals(&Matroid::uniform(1, 4).unwrap()).unwrap());
        let twice = guts_project_iterate(&m, &fam, 2).unwrap();
        assert_eq!(twice.rank_full(), 0);
        assert_eq!(lambda_dual_via_guts(&m, &fam).unwrap(), 2);
    }

    #[test]
    fn guts_counts_k4_matchings() {
        let k4 = catalog::get("graphic:K4").unwrap();
        let fam = PartitionFamily::parse(k4.ground().clone(), "a,f|b,e|c,d").unwrap();
        assert_eq!(lambda_dual_via_guts(&k4, &fam).unwrap(), 3);
    }

    #[test]
    fn skew_partition_needs_no_projection() {
        let m = Matroid::uniform(2, 2).unwrap();
        let fam = PartitionFamily::parse(m.ground().clone(), "a|b").unwrap();
        assert_eq!(lambda_dual_via_guts(&m, &fam).unwrap(), 0);
    }
}
