//! Property tests over randomly generated GF(2) column matroids.

use proptest::prelude::*;

use matroids::ground::{GroundSet, Mask};
use matroids::spec::{parse_spec, serialize_spec, MatroidSpec, SpecKind};
use matroids::Matroid;

fn gf2_matroid() -> impl Strategy<Value = Matroid> {
    (1usize..=6, 1usize..=4)
        .prop_flat_map(|(n, rows)| {
            proptest::collection::vec(proptest::collection::vec(0u64..2, rows), n)
        })
        .prop_map(|columns| {
            let ground = GroundSet::with_default_labels(columns.len());
            Matroid::linear_on(ground, 2, columns).expect("valid GF(2) columns")
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_is_an_involution(m in gf2_matroid()) {
        prop_assert!(m.dual().dual().equals(&m).unwrap());
    }

    #[test]
    fn rank_is_monotone_and_submodular(m in gf2_matroid()) {
        let full = m.full_mask();
        for x in full.subsets() {
            for y in full.subsets() {
                let (rx, ry) = (m.rank(x).unwrap(), m.rank(y).unwrap());
                if x.is_subset(y) {
                    prop_assert!(rx <= ry);
                }
                prop_assert!(
                    rx + ry >= m.rank(x.union(y)).unwrap() + m.rank(x.inter(y)).unwrap()
                );
            }
        }
    }

    #[test]
    fn closure_is_idempotent_and_extensive(m in gf2_matroid(), x in (0u64..64).prop_map(Mask)) {
        let x = x.inter(m.full_mask());
        let cl = m.closure(x).unwrap();
        prop_assert!(x.is_subset(cl));
        prop_assert_eq!(m.closure(cl).unwrap(), cl);
        prop_assert_eq!(m.rank(cl).unwrap(), m.rank(x).unwrap());
    }

    #[test]
    fn minors_commute(m in gf2_matroid(), seed in any::<u64>()) {
        let full = m.full_mask();
        let c1 = Mask(seed).inter(full);
        let d1 = Mask(seed >> 8).inter(full.minus(c1));
        let rest = full.minus(c1).minus(d1);
        let c2 = Mask(seed >> 16).inter(rest);
        let d2 = Mask(seed >> 24).inter(rest.minus(c2));
        let inner = m.minor(c1, d1).unwrap();
        let c2_inner = inner.ground().mask_of(m.ground().labels_of(c2)).unwrap();
        let d2_inner = inner.ground().mask_of(m.ground().labels_of(d2)).unwrap();
        let twice = inner.minor(c2_inner, d2_inner).unwrap();
        let once = m.minor(c1.union(c2), d1.union(d2)).unwrap();
        prop_assert!(twice.equals(&once).unwrap());
    }

    #[test]
    fn projection_is_independent_of_generators(m in gf2_matroid(), x in (0u64..64).prop_map(Mask)) {
        let x = x.inter(m.full_mask());
        let by_set = m.project_set(x).unwrap();
        let by_closure = m.project_set(m.closure(x).unwrap()).unwrap();
        prop_assert!(by_set.equals(&by_closure).unwrap());
    }

    #[test]
    fn deletion_then_dual_is_dual_then_contraction(m in gf2_matroid(), x in (0u64..64).prop_map(Mask)) {
        let x = x.inter(m.full_mask());
        let lhs = m.minor(Mask::EMPTY, x).unwrap().dual();
        let rhs = m.dual().minor(x, Mask::EMPTY).unwrap();
        prop_assert!(lhs.equals(&rhs).unwrap());
    }

    #[test]
    fn uniform_spec_round_trips(rank in 0usize..9, extra in 0usize..5) {
        let spec = MatroidSpec::uniform("rt", rank, rank + extra);
        prop_assert_eq!(parse_spec(&serialize_spec(&spec)).unwrap(), spec);
    }

    #[test]
    fn linear_spec_round_trips(cols in proptest::collection::vec(proptest::collection::vec(0u64..3, 3), 1..6)) {
        let spec = MatroidSpec {
            name: "rt".into(),
            kind: SpecKind::Linear { p: 3, columns: cols },
            labels: None,
        };
        prop_assert_eq!(parse_spec(&serialize_spec(&spec)).unwrap(), spec);
    }

    #[test]
    fn restriction_rank_never_exceeds_cardinality(m in gf2_matroid(), x in (0u64..64).prop_map(Mask)) {
        let x = x.inter(m.full_mask());
        let r = m.rank(x).unwrap();
        prop_assert!(r <= x.len());
        let basis = m.basis_of(x).unwrap();
        prop_assert_eq!(basis.len(), r);
        prop_assert!(basis.is_subset(x));
        prop_assert!(m.indep(basis));
    }
}
