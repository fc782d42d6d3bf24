//! Exhaustive independence-axiom checking.
//!
//! Verifies the empty-set, downward-closure and maximal-augmentation axioms
//! over every subset of the ground set. The maximality axiom is automatic
//! on finite ground sets and has no check here.

use crate::ground::{GroundSet, Mask};
use crate::matroid::Matroid;
use crate::Result;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum AxiomId {
    /// The empty set is independent.
    I1,
    /// Subsets of independent sets are independent.
    I2,
    /// A non-maximal independent set extends into any maximal one.
    I3,
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub elements: usize,
    /// `None` when all axioms hold; otherwise the axiom id plus a rendered
    /// witness.
    pub violation: Option<(AxiomId, String)>,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.violation.is_none()
    }
}

fn sweep(ground: &GroundSet, ind: impl Fn(Mask) -> bool) -> AxiomReport {
    let n = ground.len();
    let full = ground.full_mask();
    let violation = |axiom, msg| AxiomReport {
        elements: n,
        violation: Some((axiom, msg)),
    };

    if !ind(Mask::EMPTY) {
        return violation(AxiomId::I1, "empty set is dependent".into());
    }

    let table: Vec<bool> = full.subsets().map(&ind).collect();
    let get = |m: Mask| table[m.0 as usize];

    // single-element removals suffice for downward closure
    for m in full.subsets() {
        if !get(m) {
            continue;
        }
        for e in m.iter() {
            if !get(m.without(e)) {
                return violation(
                    AxiomId::I2,
                    format!(
                        "{} independent but subset {} dependent",
                        ground.format_mask(m),
                        ground.format_mask(m.without(e))
                    ),
                );
            }
        }
    }

    // augmentation masks and maximal members
    let mut independents = Vec::new();
    let mut maximals = Vec::new();
    let mut augs = vec![Mask::EMPTY; table.len()];
    for m in full.subsets() {
        if !get(m) {
            continue;
        }
        let aug = Mask::from_indices(full.minus(m).iter().filter(|&e| get(m.with(e))));
        augs[m.0 as usize] = aug;
        if aug.is_empty() {
            maximals.push(m);
        } else {
            independents.push(m);
        }
    }
    for &i in &independents {
        let aug = augs[i.0 as usize];
        for &b in &maximals {
            if b.inter(aug).is_empty() {
                return violation(
                    AxiomId::I3,
                    format!(
                        "no augmentation of non-maximal {} from maximal {}",
                        ground.format_mask(i),
                        ground.format_mask(b)
                    ),
                );
            }
        }
    }

    AxiomReport {
        elements: n,
        violation: None,
    }
}

/// Check the axioms for an explicit family of sets over a ground set.
pub fn check_axioms(ground: &GroundSet, family: &[Mask]) -> Result<AxiomReport> {
    crate::check_cap(ground.len())?;
    for &m in family {
        ground.check_mask(m)?;
    }
    let mut table = vec![false; 1 << ground.len()];
    for &m in family {
        table[m.0 as usize] = true;
    }
    Ok(sweep(ground, |m| table[m.0 as usize]))
}

/// Check the axioms for a matroid's oracle over every subset.
pub fn check_matroid(m: &Matroid) -> Result<AxiomReport> {
    crate::check_cap(m.len())?;
    Ok(sweep(m.ground(), |x| m.indep(x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vamos_passes() {
        let v = crate::catalog::vamos();
        assert!(check_matroid(&v).unwrap().ok());
    }

    #[test]
    fn missing_subset_fails_i2() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        let fam = vec![Mask::EMPTY, g.mask_of(["a", "b"]).unwrap()];
        let report = check_axioms(&g, &fam).unwrap();
        assert_eq!(report.violation.as_ref().unwrap().0, AxiomId::I2);
    }

    #[test]
    fn rank_zero_family_passes() {
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let report = check_axioms(&g, &[Mask::EMPTY]).unwrap();
        assert!(report.ok());
    }

    #[test]
    fn augmentation_failure_detected() {
        // {∅,{a},{b},{a,b},{c}} on {a,b,c}: {c} is maximal of size 1 while
        // {a,b} is maximal of size 2; augmenting {a} from {c} fails
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let fam = vec![
            Mask::EMPTY,
            g.mask_of(["a"]).unwrap(),
            g.mask_of(["b"]).unwrap(),
            g.mask_of(["a", "b"]).unwrap(),
            g.mask_of(["c"]).unwrap(),
        ];
        let report = check_axioms(&g, &fam).unwrap();
        assert_eq!(report.violation.as_ref().unwrap().0, AxiomId::I3);
    }
}
