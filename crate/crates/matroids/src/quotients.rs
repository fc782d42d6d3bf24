//! Quotients, discrepancy, and the reconstruction of quotients as
//! projections.
//!
//! `n` is a quotient of `m` when every closure in `m` is contained in the
//! corresponding closure in `n`. At finite scale every quotient is a
//! projection, and [`quotient_to_projection`] reconstructs a witness by
//! repeatedly projecting through the modular cut of flats where the two
//! matroids already agree.

use crate::extensions::{
    enumerate_modular_cuts, extend_by, project_by, validate_modular_cut, ModularCut,
};
use crate::flats::{circuits, flats};
use crate::ground::{GroundSet, Mask};
use crate::matroid::Matroid;
use crate::modularity::shrink_mask;
use crate::{Error, Result};

/// Nested basis pair witnessing the rank gap of a quotient on a set.
#[derive(Clone, Debug)]
pub struct BasisPair {
    pub set: Mask,
    pub n_basis: Mask,
    pub m_basis: Mask,
}

impl BasisPair {
    fn new(n: &Matroid, m: &Matroid, set: Mask, n_basis: Mask, m_basis: Mask) -> Result<BasisPair> {
        let nested = n_basis.is_subset(m_basis) && m_basis.is_subset(set);
        let bases = n.rank_in(n_basis) == n.rank_in(set)
            && n.indep(n_basis)
            && m.rank_in(m_basis) == m.rank_in(set)
            && m.indep(m_basis);
        if !nested || !bases {
            return Err(Error::Internal("malformed basis pair".into()));
        }
        Ok(BasisPair {
            set,
            n_basis,
            m_basis,
        })
    }

    pub fn gap(&self) -> usize {
        self.m_basis.minus(self.n_basis).len()
    }
}

/// A matroid `p` and set `k` with `p \ k = M` and `p / k = N` for the pair
/// it was built for; both identities are verified at construction.
#[derive(Clone, Debug)]
pub struct ProjectionWitness {
    p: Matroid,
    k: Mask,
}

impl ProjectionWitness {
    pub fn new(
        p: Matroid,
        k: Mask,
        deletion: &Matroid,
        contraction: &Matroid,
    ) -> Result<ProjectionWitness> {
        p.ground().check_mask(k)?;
        if !p.minor(Mask::EMPTY, k)?.equals(deletion)? {
            return Err(Error::Internal(
                "projection witness fails the deletion identity".into(),
            ));
        }
        if !p.minor(k, Mask::EMPTY)?.equals(contraction)? {
            return Err(Error::Internal(
                "projection witness fails the contraction identity".into(),
            ));
        }
        Ok(ProjectionWitness { p, k })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.p
    }

    pub fn removed_set(&self) -> Mask {
        self.k
    }

    pub fn removed_size(&self) -> usize {
        self.k.len()
    }
}

/// The per-condition verdicts behind a quotient test.
#[derive(Clone, Debug)]
pub struct QuotientConditions {
    /// cl_M(X) ⊆ cl_N(X) for all X (the definition).
    pub closures: bool,
    /// The dual direction: cl_{N*}(X) ⊆ cl_{M*}(X) for all X.
    pub dual_closures: bool,
    /// Closure containment restricted to M-independent sets.
    pub independent_closures: bool,
    /// Every flat of N is a flat of M.
    pub flats: bool,
    /// Every circuit of M is a union of circuits of N.
    pub circuit_unions: bool,
    /// Relative-rank domination on all nested pairs.
    pub relative_ranks: bool,
}

impl QuotientConditions {
    pub fn all(&self) -> [bool; 6] {
        [
            self.closures,
            self.dual_closures,
            self.independent_closures,
            self.flats,
            self.circuit_unions,
            self.relative_ranks,
        ]
    }

    pub fn unanimous(&self) -> bool {
        self.all().iter().all(|&b| b == self.closures)
    }
}

/// Evaluate all quotient characterizations for `(n, m)` on a common ground.
pub fn quotient_conditions(n: &Matroid, m: &Matroid) -> Result<QuotientConditions> {
    if !n.ground().same_as(m.ground()) {
        return Err(Error::GroundMismatch);
    }
    crate::check_cap(m.len())?;
    let full = m.full_mask();

    let mut closures = true;
    let mut independent_closures = true;
    for x in full.subsets() {
        if !m.closure_in(x).is_subset(n.closure_in(x)) {
            closures = false;
            if m.indep(x) {
                independent_closures = false;
            }
        }
    }
    let (nd, md) = (n.dual(), m.dual());
    let dual_closures = full
        .subsets()
        .all(|x| nd.closure_in(x).is_subset(md.closure_in(x)));
    let flats_cond = flats(n)?.iter().all(|(f, _)| m.is_flat_in(f));
    let n_circuits = circuits(n)?;
    let circuit_unions = circuits(m)?.iter().all(|&c| {
        let covered = n_circuits
            .iter()
            .filter(|&&cn| cn.is_subset(c))
            .fold(Mask::EMPTY, |acc, &cn| acc.union(cn));
        covered == c
    });
    let mut relative_ranks = true;
    'rel: for y in full.subsets() {
        for x in y.subsets() {
            let rn = n.rank_in(y) - n.rank_in(x);
            let rm = m.rank_in(y) - m.rank_in(x);
            if rn > rm {
                relative_ranks = false;
                break 'rel;
            }
        }
    }
    Ok(QuotientConditions {
        closures,
        dual_closures,
        independent_closures,
        flats: flats_cond,
        circuit_unions,
        relative_ranks,
    })
}

/// Quotient test; all characterizations are evaluated and must agree.
pub fn is_quotient(n: &Matroid, m: &Matroid) -> Result<bool> {
    let conds = quotient_conditions(n, m)?;
    if !conds.unanimous() {
        return Err(Error::Internal(format!(
            "quotient characterizations disagree: {:?}",
            conds
        )));
    }
    Ok(conds.closures)
}

/// Deterministic nested basis pair for `x`: the greedy N-basis extended
/// greedily to an M-basis inside `x`.
pub fn basis_pair(n: &Matroid, m: &Matroid, x: Mask) -> Result<BasisPair> {
    if !is_quotient(n, m)? {
        return Err(Error::NotAQuotient);
    }
    m.ground().check_mask(x)?;
    basis_pair_trusted(n, m, x)
}

pub(crate) fn basis_pair_trusted(n: &Matroid, m: &Matroid, x: Mask) -> Result<BasisPair> {
    let n_basis = n.basis_in(x);
    let mut m_basis = n_basis;
    for e in x.minus(n_basis).iter() {
        if m.indep(m_basis.with(e)) {
            m_basis = m_basis.with(e);
        }
    }
    BasisPair::new(n, m, x, n_basis, m_basis)
}

/// Rank gap between quotient-related matroids on a set: the size of the
/// difference in any nested basis pair for `x`.
pub fn discrepancy(n: &Matroid, m: &Matroid, x: Mask) -> Result<usize> {
    if !is_quotient(n, m)? {
        return Err(Error::NotAQuotient);
    }
    m.ground().check_mask(x)?;
    discrepancy_trusted(n, m, x)
}

/// Discrepancy without re-verifying the quotient precondition; for callers
/// that already have.
pub(crate) fn discrepancy_trusted(n: &Matroid, m: &Matroid, x: Mask) -> Result<usize> {
    let pair = basis_pair_trusted(n, m, x)?;
    let delta = pair.gap();
    if n.rank_in(x) + delta != m.rank_in(x) {
        return Err(Error::Internal(format!(
            "discrepancy {delta} violates the rank identity on {}",
            m.ground().format_mask(x)
        )));
    }
    Ok(delta)
}

/// Lift a modular cut of `m / c` to the modular cut `{F ∪ C}` of `m`; the
/// commutation of the two corresponding extensions is verified.
pub fn lift_modular_cut(m: &Matroid, c: Mask, cut: &ModularCut) -> Result<ModularCut> {
    m.ground().check_mask(c)?;
    let contracted = m.minor(c, Mask::EMPTY)?;
    if !contracted.equals(cut.host())? {
        return Err(Error::HostMismatch(
            "cut does not belong to the contraction".into(),
        ));
    }
    // members are masks over the cut host's ground, which may order the
    // shared labels differently from the freshly built contraction
    let lifted: Vec<Mask> = cut
        .members()
        .iter()
        .map(|&f| shrink_mask(cut.host().ground(), m.ground(), f).union(c))
        .collect();
    let lifted_cut = validate_modular_cut(m, &lifted)?
        .into_result("lifted family of a modular cut must validate")?;

    // commutation: extending then contracting equals extending the contraction
    let label = fresh_label_for(m.ground(), cut.host().ground());
    let big = extend_by(m, &label, &lifted_cut)?;
    let small = extend_by(cut.host(), &label, cut)?;
    let c_in_big = shrink_mask(m.ground(), big.ground(), c);
    if !big.minor(c_in_big, Mask::EMPTY)?.equals(&small)? {
        return Err(Error::Internal(
            "lifted extension does not commute with the contraction".into(),
        ));
    }
    Ok(lifted_cut)
}

fn fresh_label_for(a: &GroundSet, b: &GroundSet) -> String {
    for i in 0usize.. {
        let candidate = format!("_e{i}");
        if !a.contains_label(&candidate) && !b.contains_label(&candidate) {
            return candidate;
        }
    }
    unreachable!()
}

/// Compose a sequence of single-element projections into one projection
/// witness; consecutive cuts are searched among all modular cuts of each
/// stage unless supplied.
pub fn compose_projections(ms: &[Matroid]) -> Result<ProjectionWitness> {
    let mut cuts = Vec::new();
    for i in 0..ms.len().saturating_sub(1) {
        let found = enumerate_modular_cuts(&ms[i])?
            .into_iter()
            .find(|cut| {
                project_by(&ms[i], cut)
                    .and_then(|p| p.equals(&ms[i + 1]))
                    .unwrap_or(false)
            })
            .ok_or(Error::NotASingleElementProjection { index: i + 1 })?;
        cuts.push(found);
    }
    compose_projections_with_cuts(ms, &cuts)
}

/// As [`compose_projections`], with the witnessing cuts supplied: `cuts[i]`
/// is a modular cut of `ms[i]` whose projection is `ms[i + 1]`.
pub fn compose_projections_with_cuts(
    ms: &[Matroid],
    cuts: &[ModularCut],
) -> Result<ProjectionWitness> {
    let Some(first) = ms.first() else {
        return Err(Error::InvalidSpec("empty projection sequence".into()));
    };
    if cuts.len() + 1 != ms.len() {
        return Err(Error::InvalidSpec(format!(
            "{} cuts for {} matroids",
            cuts.len(),
            ms.len()
        )));
    }
    let mut p = first.clone();
    let mut k = Mask::EMPTY;
    for (i, cut) in cuts.iter().enumerate() {
        if !project_by(&ms[i], cut).and_then(|q| q.equals(&ms[i + 1]))? {
            return Err(Error::NotASingleElementProjection { index: i + 1 });
        }
        let lifted = lift_modular_cut(&p, k, cut)?;
        let label = fresh_label_for(p.ground(), first.ground());
        let e_index = p.len();
        p = extend_by(&p, &label, &lifted)?;
        k = k.with(e_index);
    }
    ProjectionWitness::new(p, k, first, ms.last().expect("nonempty"))
}

/// Reconstruct a quotient as a projection: repeatedly project `m` through
/// the cut of flats where the two matroids already agree, shrinking the
/// discrepancy by one per step, then compose the steps.
pub fn quotient_to_projection(n: &Matroid, m: &Matroid) -> Result<ProjectionWitness> {
    if !is_quotient(n, m)? {
        return Err(Error::NotAQuotient);
    }
    let total = discrepancy(n, m, m.full_mask())?;
    let mut stages = vec![m.clone()];
    let mut cuts = Vec::new();
    let mut cur = m.clone();
    for step in 0..total {
        let members: Vec<Mask> = flats(&cur)?
            .iter()
            .filter(|&(f, _)| {
                let agree = (|| -> Result<bool> {
                    let np = n.project_set(f)?;
                    let cp = cur.project_set(f)?;
                    np.equals(&cp)
                })();
                agree.unwrap_or(false)
            })
            .map(|(f, _)| f)
            .collect();
        let cut = validate_modular_cut(&cur, &members)?
            .into_result("the agreement family of a finitary quotient must be a modular cut")?;
        let next = project_by(&cur, &cut)?;
        let remaining = discrepancy(n, &next, next.full_mask())?;
        if remaining != total - step - 1 {
            return Err(Error::InternalDescentFailure(format!(
                "discrepancy {remaining} after step {step}, expected {}",
                total - step - 1
            )));
        }
        cuts.push(cut);
        stages.push(next.clone());
        cur = next;
    }
    if !cur.equals(n)? {
        return Err(Error::InternalDescentFailure(
            "descent finished on a different matroid".into(),
        ));
    }
    let witness = compose_projections_with_cuts(&stages, &cuts)?;
    if witness.removed_size() != total {
        return Err(Error::InternalDescentFailure(format!(
            "witness removes {} elements, expected {total}",
            witness.removed_size()
        )));
    }
    Ok(witness)
}

/// Splice: given disjoint `c`, `d` with `m / c = n \ d`, build `p` with
/// `p \ d = m` and `p / c = n` by extending through lifted cuts, one
/// element of `d` at a time.
pub fn splice(m: &Matroid, n: &Matroid, c: Mask, d: Mask) -> Result<Matroid> {
    m.ground().check_mask(c)?;
    n.ground().check_mask(d)?;
    let m_contract = m.minor(c, Mask::EMPTY)?;
    let n_delete = n.minor(Mask::EMPTY, d)?;
    if !m_contract.ground().same_label_set(n_delete.ground()) {
        return Err(Error::GroundMismatch);
    }
    let perm = m_contract
        .ground()
        .permutation_to(n_delete.ground())
        .expect("same label set");
    for x in m_contract.full_mask().subsets() {
        let mapped = Mask::from_indices(x.iter().map(|i| perm[i]));
        if m_contract.indep(x) != n_delete.indep(mapped) {
            return Err(Error::PrerequisiteMismatch {
                witness: m_contract.ground().format_mask(x),
            });
        }
    }
    // also require c and d disjoint as label sets
    for e in d.iter() {
        let label = n.ground().label(e);
        if let Some(i) = m.ground().index_of(label) {
            if c.contains(i) {
                return Err(Error::OverlappingSets);
            }
        }
    }

    let p = splice_rec(m, n, c, d)?;
    let d_in_p = lift_labels(n.ground(), p.ground(), d);
    let c_in_p = lift_labels(m.ground(), p.ground(), c);
    if !p.minor(Mask::EMPTY, d_in_p)?.equals(m)? {
        return Err(Error::Internal("splice fails the deletion identity".into()));
    }
    if !p.minor(c_in_p, Mask::EMPTY)?.equals(n)? {
        return Err(Error::Internal(
            "splice fails the contraction identity".into(),
        ));
    }
    Ok(p)
}

fn lift_labels(from: &GroundSet, to: &GroundSet, mask: Mask) -> Mask {
    Mask::from_indices(mask.iter().filter_map(|i| to.index_of(from.label(i))))
}

fn splice_rec(m: &Matroid, n: &Matroid, c: Mask, d: Mask) -> Result<Matroid> {
    let Some(e_index) = d.iter().next() else {
        return Ok(m.clone());
    };
    let e_label = n.ground().label(e_index).to_string();
    let n_smaller = n.minor(Mask::EMPTY, Mask::bit(e_index))?;
    let prev = splice_rec(
        m,
        &n_smaller,
        c,
        shrink_mask(n.ground(), n_smaller.ground(), d),
    )?;

    // n extends prev / c by e; lift its cut to prev and extend
    let cut_small = crate::extensions::extension_cut(n, &e_label)?;
    let c_in_prev = lift_labels(m.ground(), prev.ground(), c);
    let prev_contract = prev.minor(c_in_prev, Mask::EMPTY)?;
    // re-host the cut onto prev / c (same matroid up to label order)
    let rehosted: Vec<Mask> = cut_small
        .members()
        .iter()
        .map(|&f| lift_labels(cut_small.host().ground(), prev_contract.ground(), f))
        .collect();
    let cut = validate_modular_cut(&prev_contract, &rehosted)?
        .into_result("splice step cut must validate")?;
    let lifted = lift_modular_cut(&prev, c_in_prev, &cut)?;
    extend_by(&prev, &e_label, &lifted)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(k: usize, n: usize) -> Matroid {
        Matroid::uniform(k, n).unwrap()
    }

    #[test]
    fn truncation_is_a_quotient() {
        assert!(is_quotient(&u(1, 3), &u(2, 3)).unwrap());
        assert!(is_quotient(&u(2, 3), &u(2, 3)).unwrap());
        assert!(!is_quotient(&u(2, 3), &u(1, 3)).unwrap());
    }

    #[test]
    fn discrepancy_examples() {
        let full = u(2, 3).full_mask();
        assert_eq!(discrepancy(&u(1, 3), &u(2, 3), full).unwrap(), 1);
        assert_eq!(discrepancy(&u(2, 3), &u(2, 3), full).unwrap(), 0);
        let a = u(2, 3).ground().mask_of(["a"]).unwrap();
        assert_eq!(discrepancy(&u(0, 3), &u(2, 3), a).unwrap(), 1);
        assert!(matches!(
            discrepancy(&u(2, 3), &u(1, 3), full),
            Err(Error::NotAQuotient)
        ));
    }

    #[test]
    fn reconstruction_single_truncation() {
        let w = quotient_to_projection(&u(1, 3), &u(2, 3)).unwrap();
        assert_eq!(w.removed_size(), 1);
        assert_eq!(w.matroid().len(), 4);
        assert!(w
            .matroid()
            .minor(Mask::EMPTY, w.removed_set())
            .unwrap()
            .equals(&u(2, 3))
            .unwrap());
        // P is a four-element rank-two matroid extending U(2,3) freely
        assert_eq!(w.matroid().rank_full(), 2);
        let u24 = u(2, 4);
        let perm_free: Vec<Mask> = w.matroid().full_mask().subsets().collect();
        assert!(perm_free
            .iter()
            .all(|&s| w.matroid().indep(s) == (s.len() <= 2)));
        assert_eq!(u24.rank_full(), 2);
    }

    #[test]
    fn reconstruction_identity_case() {
        let m = u(2, 3);
        let w = quotient_to_projection(&m, &m).unwrap();
        assert_eq!(w.removed_size(), 0);
        assert!(w.matroid().equals(&m).unwrap());
    }

    #[test]
    fn reconstruction_double_truncation() {
        let w = quotient_to_projection(&u(0, 3), &u(2, 3)).unwrap();
        assert_eq!(w.removed_size(), 2);
        assert_eq!(w.matroid().len(), 5);
        assert_eq!(w.matroid().rank_full(), 2);
    }

    #[test]
    fn lift_cut_examples() {
        let m = u(2, 4);
        let a = m.ground().mask_of(["a"]).unwrap();
        let mc = m.minor(a, Mask::EMPTY).unwrap();
        let cuts = enumerate_modular_cuts(&mc).unwrap();
        let free = cuts.iter().find(|c| c.len() == 1).unwrap();
        let lifted = lift_modular_cut(&m, a, free).unwrap();
        assert_eq!(lifted.members(), &[m.full_mask()]);
        // c = ∅ leaves the cut unchanged
        let cuts_m = enumerate_modular_cuts(&m).unwrap();
        for cut in &cuts_m {
            let same = lift_modular_cut(&m, Mask::EMPTY, cut).unwrap();
            assert_eq!(same.members(), cut.members());
        }
    }

    #[test]
    fn lift_cut_with_permuted_host_ground() {
        // the cut lives on a host whose labels are ordered differently from
        // the freshly built contraction; members must map by label
        let m = u(3, 5);
        let a = m.ground().mask_of(["a"]).unwrap();
        let host = Matroid::uniform_on(GroundSet::new(["e", "b", "c", "d"]).unwrap(), 2).unwrap();
        let cut = enumerate_modular_cuts(&host)
            .unwrap()
            .into_iter()
            .find(|c| {
                c.members()
                    .iter()
                    .any(|&f| host.ground().format_mask(f) == "e")
            })
            .unwrap();
        let lifted = lift_modular_cut(&m, a, &cut).unwrap();
        let ae = m.ground().mask_of(["a", "e"]).unwrap();
        assert!(lifted.contains(ae));
        assert!(lifted.contains(m.full_mask()));
        assert_eq!(lifted.len(), 2);
    }

    #[test]
    fn compose_projection_sequences() {
        let single = compose_projections(&[u(2, 3)]).unwrap();
        assert_eq!(single.removed_size(), 0);
        let pair = compose_projections(&[u(2, 3), u(1, 3)]).unwrap();
        assert_eq!(pair.removed_size(), 1);
        let triple = compose_projections(&[u(2, 4), u(1, 4), u(0, 4)]).unwrap();
        assert_eq!(triple.removed_size(), 2);
        // the free matroid is not a projection of a rank-two matroid
        assert!(matches!(
            compose_projections(&[u(2, 3), u(3, 3)]),
            Err(Error::NotASingleElementProjection { index: 1 })
        ));
    }

    #[test]
    fn splice_base_case() {
        let m = u(2, 3);
        let p = splice(&m, &m, Mask::EMPTY, Mask::EMPTY).unwrap();
        assert!(p.equals(&m).unwrap());
    }

    #[test]
    fn splice_single_extension() {
        // m = U(2,3) on a,b,c; n = U(2,4) on a,b,c,d; c = ∅, d = {d}
        let m = u(2, 3);
        let n = u(2, 4);
        let d = n.ground().mask_of(["d"]).unwrap();
        let p = splice(&m, &n, Mask::EMPTY, d).unwrap();
        assert!(p.equals(&n).unwrap());
    }

    #[test]
    fn splice_with_contraction() {
        // m = U(2,3); n on {b, c, x} with n \ x = m / a = U(1,2)
        let m = u(2, 3);
        let a = m.ground().mask_of(["a"]).unwrap();
        let ground = GroundSet::new(["b", "c", "x"]).unwrap();
        let n = Matroid::uniform_on(ground, 1).unwrap();
        let d = n.ground().mask_of(["x"]).unwrap();
        let p = splice(&m, &n, a, d).unwrap();
        assert_eq!(p.len(), 4);
        assert!(p
            .minor(Mask::EMPTY, p.ground().mask_of(["x"]).unwrap())
            .unwrap()
            .equals(&m)
            .unwrap());
        let a_in_p = p.ground().mask_of(["a"]).unwrap();
        assert!(p.minor(a_in_p, Mask::EMPTY).unwrap().equals(&n).unwrap());
    }

    #[test]
    fn splice_prerequisite_mismatch() {
        let m = u(2, 3);
        let n = u(1, 3);
        // m / ∅ = U(2,3) but n \ ∅ = U(1,3)
        let err = splice(&m, &n, Mask::EMPTY, Mask::EMPTY).unwrap_err();
        assert!(matches!(err, Error::PrerequisiteMismatch { .. }));
    }
}
