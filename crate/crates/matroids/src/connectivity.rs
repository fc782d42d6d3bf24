//! Nullity, local connectivity ⊓ for pairs and indexed families, and the
//! partition connectivity λ with its dual.
//!
//! Every deterministic basis choice scans in canonical order. Each
//! operation whose value is basis-independent recomputes itself with
//! reverse-order bases and fails loudly on a mismatch; the rank-arithmetic
//! identities that hold at finite scale are asserted the same way.

use crate::ground::Mask;
use crate::matroid::Matroid;
use crate::modularity::PartitionFamily;
use crate::{Error, Result};

/// `|x| − rank(x)`: the corank of the restriction to `x`.
pub fn nullity(m: &Matroid, x: Mask) -> Result<usize> {
    m.ground().check_mask(x)?;
    Ok(nullity_in(m, x))
}

pub(crate) fn nullity_in(m: &Matroid, x: Mask) -> usize {
    x.len() - m.rank_in(x)
}

/// Local connectivity of a pair: `|I ∩ J| + nullity(I ∪ J)` over the
/// deterministic bases `I`, `J` of `x`, `y`.
pub fn local_conn_pair(m: &Matroid, x: Mask, y: Mask) -> Result<usize> {
    m.ground().check_mask(x)?;
    m.ground().check_mask(y)?;
    let value = pair_value(m, m.basis_in(x), m.basis_in(y));
    let rev = pair_value(m, m.basis_in_rev(x), m.basis_in_rev(y));
    if value != rev {
        return Err(Error::Internal(format!(
            "local connectivity depends on the basis choice: {value} vs {rev}"
        )));
    }
    let by_rank = m.rank_in(x) + m.rank_in(y) - m.rank_in(x.union(y));
    if value != by_rank {
        return Err(Error::Internal(format!(
            "local connectivity {value} disagrees with the rank form {by_rank}"
        )));
    }
    Ok(value)
}

fn pair_value(m: &Matroid, i: Mask, j: Mask) -> usize {
    i.inter(j).len() + nullity_in(m, i.union(j))
}

/// Local connectivity of an indexed family.
///
/// Disjoint families of at most two parts use the pair formula directly;
/// otherwise the family is lifted to the product preimage (one copy of the
/// ground set per index) where the part bases become disjoint, and the
/// value is the nullity of their union there. Two decomposition identities
/// are asserted either way.
pub fn multi_local_conn(m: &Matroid, fam: &PartitionFamily) -> Result<usize> {
    if !fam.ground().same_as(m.ground()) {
        return Err(Error::GroundMismatch);
    }
    let arity = fam.len();
    let budget = 4 * crate::size_cap();
    if arity > 0 && m.len() * arity > budget.min(crate::ground::MAX_ELEMENTS) {
        return Err(Error::BudgetExceeded(format!(
            "{} elements x {} parts exceeds {}",
            m.len(),
            arity,
            budget.min(crate::ground::MAX_ELEMENTS)
        )));
    }
    let bases: Vec<Mask> = fam.parts().iter().map(|&p| m.basis_in(p)).collect();
    let disjoint = {
        let mut u = Mask::EMPTY;
        fam.parts().iter().all(|&p| {
            let ok = u.is_disjoint(p);
            u = u.union(p);
            ok
        })
    };

    let value = if arity <= 2 && disjoint {
        match bases.as_slice() {
            [] => 0,
            [i] => nullity_in(m, *i),
            [i, j] => pair_value(m, *i, *j),
            _ => unreachable!(),
        }
    } else {
        preimage_nullity(m, &bases)?
    };

    // decomposition over multiplicities
    let union_bases = bases.iter().fold(Mask::EMPTY, |a, &b| a.union(b));
    let multiplicity_excess: usize = union_bases
        .iter()
        .map(|e| bases.iter().filter(|b| b.contains(e)).count() - 1)
        .sum();
    if value != nullity_in(m, union_bases) + multiplicity_excess {
        return Err(Error::Internal(
            "local connectivity violates the multiplicity decomposition".into(),
        ));
    }
    // rank formula
    let rank_sum: usize = fam.parts().iter().map(|&p| m.rank_in(p)).sum();
    if value + m.rank_in(fam.union()) != rank_sum {
        return Err(Error::Internal(
            "local connectivity violates the rank formula".into(),
        ));
    }
    Ok(value)
}

/// Nullity of the union of per-part basis copies in the product preimage.
fn preimage_nullity(m: &Matroid, bases: &[Mask]) -> Result<usize> {
    let n = m.len();
    let mut mapping = Vec::with_capacity(n * bases.len());
    for a in 0..bases.len() {
        for e in 0..n {
            mapping.push((
                format!("{}@{a}", m.ground().label(e)),
                m.ground().label(e).to_string(),
            ));
        }
    }
    let pm = m.preimage(&mapping)?;
    let mut lifted = Mask::EMPTY;
    for (a, b) in bases.iter().enumerate() {
        for e in b.iter() {
            lifted = lifted.with(a * n + e);
        }
    }
    Ok(nullity_in(&pm, lifted))
}

/// Connectivity of a partition of the ground set: the nullity of the union
/// of the deterministic part bases.
pub fn lambda(m: &Matroid, fam: &PartitionFamily) -> Result<usize> {
    if !fam.ground().same_as(m.ground()) {
        return Err(Error::GroundMismatch);
    }
    if !fam.is_partition() {
        return Err(Error::NotAPartition);
    }
    let union_fwd = fam
        .parts()
        .iter()
        .fold(Mask::EMPTY, |a, &p| a.union(m.basis_in(p)));
    let union_rev = fam
        .parts()
        .iter()
        .fold(Mask::EMPTY, |a, &p| a.union(m.basis_in_rev(p)));
    let value = nullity_in(m, union_fwd);
    let rev = nullity_in(m, union_rev);
    if value != rev {
        return Err(Error::Internal(format!(
            "lambda depends on the basis choice: {value} vs {rev}"
        )));
    }
    if fam.len() == 2 {
        let pair = local_conn_pair(m, fam.parts()[0], fam.parts()[1])?;
        if pair != value {
            return Err(Error::Internal(format!(
                "two-part lambda {value} disagrees with the pair form {pair}"
            )));
        }
    }
    Ok(value)
}

/// Connectivity of a single set, via the relative-rank form in the dual:
/// `rank*(x) − rank*(x − I)` for the deterministic basis `I` of `x`.
///
/// Asserted equal to the two-part partition value and to the same form
/// evaluated in the dual (self-duality).
pub fn lambda_set(m: &Matroid, x: Mask) -> Result<usize> {
    m.ground().check_mask(x)?;
    let value = lambda_set_raw(m, x);
    let dual = m.dual();
    let dual_value = lambda_set_raw(&dual, x);
    if value != dual_value {
        return Err(Error::Internal(format!(
            "lambda self-duality fails: {value} vs {dual_value}"
        )));
    }
    let fam = PartitionFamily::pair(m.ground().clone(), x, m.full_mask().minus(x))?;
    let part = lambda(m, &fam)?;
    if value != part {
        return Err(Error::Internal(format!(
            "lambda relative-rank form {value} disagrees with the partition form {part}"
        )));
    }
    Ok(value)
}

fn lambda_set_raw(m: &Matroid, x: Mask) -> usize {
    let basis = m.basis_in(x);
    let dual = m.dual();
    dual.rank_in(x) - dual.rank_in(x.minus(basis))
}

/// λ of the partition in the dual matroid.
pub fn lambda_dual(m: &Matroid, fam: &PartitionFamily) -> Result<usize> {
    lambda(&m.dual(), fam)
}

/// λ, λ*, and the pairwise local connectivities of a partition.
#[derive(Clone, Debug)]
pub struct ConnReport {
    pub lambda: usize,
    pub lambda_dual: usize,
    /// `((i, j), value)` for part index pairs i < j.
    pub per_pair_local_conn: Vec<((usize, usize), usize)>,
}

pub fn conn_report(m: &Matroid, fam: &PartitionFamily) -> Result<ConnReport> {
    let l = lambda(m, fam)?;
    let ld = lambda_dual(m, fam)?;
    if (l == 0) != (ld == 0) {
        return Err(Error::Internal(format!(
            "lambda zero ({l}) and dual-lambda zero ({ld}) must coincide"
        )));
    }
    if fam.len() == 2 && l != ld {
        return Err(Error::Internal(format!(
            "two-part lambda must be self-dual: {l} vs {ld}"
        )));
    }
    let mut per_pair = Vec::new();
    for i in 0..fam.len() {
        for j in i + 1..fam.len() {
            per_pair.push(((i, j), local_conn_pair(m, fam.parts()[i], fam.parts()[j])?));
        }
    }
    Ok(ConnReport {
        lambda: l,
        lambda_dual: ld,
        per_pair_local_conn: per_pair,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn pf(m: &Matroid, parts: &[&[&str]]) -> PartitionFamily {
        let masks = parts
            .iter()
            .map(|p| m.ground().mask_of(p.iter().copied()).unwrap())
            .collect();
        PartitionFamily::new(m.ground().clone(), masks).unwrap()
    }

    #[test]
    fn nullity_examples() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(nullity(&u23, u23.full_mask()).unwrap(), 1);
        assert_eq!(
            nullity(&u23, u23.ground().mask_of(["a"]).unwrap()).unwrap(),
            0
        );
        let v = catalog::vamos();
        let pairs = catalog::vamos_pairs(&v);
        assert_eq!(nullity(&v, pairs[0].union(pairs[1])).unwrap(), 1);
    }

    #[test]
    fn local_conn_examples() {
        let m = Matroid::uniform(2, 4).unwrap();
        let ab = m.ground().mask_of(["a", "b"]).unwrap();
        let cd = m.ground().mask_of(["c", "d"]).unwrap();
        assert_eq!(local_conn_pair(&m, ab, cd).unwrap(), 2);
        assert_eq!(local_conn_pair(&m, ab, ab).unwrap(), 2);
        let k4 = catalog::get("graphic:K4").unwrap();
        let t1 = k4.ground().mask_of(["a", "b", "d"]).unwrap();
        let t2 = k4.ground().mask_of(["a", "c", "e"]).unwrap();
        assert_eq!(local_conn_pair(&k4, t1, t2).unwrap(), 1);
    }

    #[test]
    fn multi_local_conn_matches_pairs() {
        let m = Matroid::uniform(2, 4).unwrap();
        let fam = pf(&m, &[&["a", "b"], &["c", "d"]]);
        assert_eq!(
            multi_local_conn(&m, &fam).unwrap(),
            local_conn_pair(&m, fam.parts()[0], fam.parts()[1]).unwrap()
        );
        // overlapping pair goes through the preimage path
        let overlap = pf(&m, &[&["a", "b"], &["b", "c"]]);
        assert_eq!(
            multi_local_conn(&m, &overlap).unwrap(),
            local_conn_pair(&m, overlap.parts()[0], overlap.parts()[1]).unwrap()
        );
    }

    #[test]
    fn k4_matchings_connectivity() {
        let k4 = catalog::get("graphic:K4").unwrap();
        // perfect matchings: {12,34}, {13,24}, {14,23}
        let fam = pf(&k4, &[&["a", "f"], &["b", "e"], &["c", "d"]]);
        assert!(fam.is_partition());
        assert_eq!(multi_local_conn(&k4, &fam).unwrap(), 3);
        assert_eq!(lambda(&k4, &fam).unwrap(), 3);
        assert_eq!(lambda_dual(&k4, &fam).unwrap(), 3);
    }

    #[test]
    fn skew_family_has_zero_local_conn() {
        let m = Matroid::uniform(3, 3).unwrap();
        let fam = pf(&m, &[&["a"], &["b"], &["c"]]);
        assert_eq!(multi_local_conn(&m, &fam).unwrap(), 0);
    }

    #[test]
    fn lambda_examples() {
        let m = Matroid::uniform(2, 4).unwrap();
        let fam = pf(&m, &[&["a", "b"], &["c", "d"]]);
        assert_eq!(lambda(&m, &fam).unwrap(), 2);
        let single = pf(&m, &[&["a", "b", "c", "d"]]);
        assert_eq!(lambda(&m, &single).unwrap(), 0);
        let not_partition = pf(&m, &[&["a", "b"], &["b", "c", "d"]]);
        assert!(matches!(
            lambda(&m, &not_partition),
            Err(Error::NotAPartition)
        ));
    }

    #[test]
    fn lambda_with_empty_part() {
        let m = Matroid::uniform(2, 4).unwrap();
        let fam = pf(&m, &[&["a", "b", "c", "d"], &[]]);
        assert!(fam.is_partition());
        assert_eq!(lambda(&m, &fam).unwrap(), 0);
    }

    #[test]
    fn lambda_set_examples() {
        let m = Matroid::uniform(2, 4).unwrap();
        let ab = m.ground().mask_of(["a", "b"]).unwrap();
        assert_eq!(lambda_set(&m, ab).unwrap(), 2);
        assert_eq!(lambda_set(&m, m.full_mask()).unwrap(), 0);
        let k4 = catalog::get("graphic:K4").unwrap();
        let tri = k4.ground().mask_of(["a", "b", "d"]).unwrap();
        assert_eq!(lambda_set(&k4, tri).unwrap(), 2);
    }

    #[test]
    fn conn_report_consistency() {
        let k4 = catalog::get("graphic:K4").unwrap();
        let fam = pf(&k4, &[&["a", "f"], &["b", "e"], &["c", "d"]]);
        let r = conn_report(&k4, &fam).unwrap();
        assert_eq!(r.lambda, 3);
        assert_eq!(r.lambda_dual, 3);
        assert_eq!(r.per_pair_local_conn.len(), 3);
    }
}
