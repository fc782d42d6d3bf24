//! Enumeration of flats, circuits, lines, hyperplanes, and loops.

use std::collections::HashSet;

use crate::ground::{canonical_set_order, Mask};
use crate::matroid::Matroid;
use crate::Result;

/// All flats of a matroid, rank-annotated, in canonical order.
#[derive(Clone, Debug)]
pub struct FlatFamily {
    host: Matroid,
    flats: Vec<(Mask, usize)>,
}

impl FlatFamily {
    pub fn host(&self) -> &Matroid {
        &self.host
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// `(flat, rank)` pairs in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (Mask, usize)> + '_ {
        self.flats.iter().copied()
    }

    pub fn masks(&self) -> Vec<Mask> {
        self.flats.iter().map(|&(m, _)| m).collect()
    }

    pub fn contains(&self, f: Mask) -> bool {
        self.flats
            .binary_search_by(|&(m, _)| canonical_set_order(m, f))
            .is_ok()
    }

    /// Rank annotation computed once at enumeration.
    pub fn rank_of(&self, f: Mask) -> Option<usize> {
        self.flats
            .binary_search_by(|&(m, _)| canonical_set_order(m, f))
            .ok()
            .map(|i| self.flats[i].1)
    }

    pub fn of_rank(&self, r: usize) -> Vec<Mask> {
        self.flats
            .iter()
            .filter(|&&(_, fr)| fr == r)
            .map(|&(m, _)| m)
            .collect()
    }
}

/// Enumerate the distinct closures of all subsets.
///
/// When the rank is below half the ground size, only closures of
/// independent sets are taken (every flat is the closure of one of its
/// bases); otherwise all subsets are closed. Both paths produce the same
/// family.
pub fn flats(m: &Matroid) -> Result<FlatFamily> {
    crate::check_cap(m.len())?;
    let set = if 2 * m.rank_full() < m.len() {
        closures_of_independent_sets(m)
    } else {
        closures_of_all_subsets(m)
    };
    let mut flats: Vec<(Mask, usize)> = set.into_iter().map(|f| (f, m.rank_in(f))).collect();
    flats.sort_by(|a, b| canonical_set_order(a.0, b.0));
    Ok(FlatFamily {
        host: m.clone(),
        flats,
    })
}

fn closures_of_all_subsets(m: &Matroid) -> HashSet<Mask> {
    m.full_mask().subsets().map(|s| m.closure_in(s)).collect()
}

fn closures_of_independent_sets(m: &Matroid) -> HashSet<Mask> {
    let mut out = HashSet::new();
    let mut stack = vec![(Mask::EMPTY, 0usize)];
    out.insert(m.closure_in(Mask::EMPTY));
    while let Some((cur, start)) = stack.pop() {
        for i in start..m.len() {
            let next = cur.with(i);
            if m.indep(next) {
                out.insert(m.closure_in(next));
                stack.push((next, i + 1));
            }
        }
    }
    out
}

/// Minimal dependent sets, in canonical order.
pub fn circuits(m: &Matroid) -> Result<Vec<Mask>> {
    crate::check_cap(m.len())?;
    let mut out = Vec::new();
    for s in m.full_mask().subsets() {
        if !m.indep(s) && s.iter().all(|e| m.indep(s.without(e))) {
            out.push(s);
        }
    }
    out.sort_by(|a, b| canonical_set_order(*a, *b));
    Ok(out)
}

/// Flats of rank two.
pub fn lines(m: &Matroid) -> Result<Vec<Mask>> {
    Ok(flats(m)?.of_rank(2))
}

/// Flats of corank one.
pub fn hyperplanes(m: &Matroid) -> Result<Vec<Mask>> {
    let full = m.rank_full();
    if full == 0 {
        return Ok(Vec::new());
    }
    Ok(flats(m)?.of_rank(full - 1))
}

/// The loops: `closure(∅)`.
pub fn loops(m: &Matroid) -> Mask {
    m.loops()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn fano_has_sixteen_flats() {
        let f = catalog::get("fano").unwrap();
        let fam = flats(&f).unwrap();
        assert_eq!(fam.len(), 16);
        assert_eq!(fam.of_rank(0).len(), 1);
        assert_eq!(fam.of_rank(1).len(), 7);
        assert_eq!(fam.of_rank(2).len(), 7);
        assert_eq!(fam.of_rank(3).len(), 1);
    }

    #[test]
    fn uniform34_flats() {
        let m = Matroid::uniform(3, 4).unwrap();
        let fam = flats(&m).unwrap();
        // empty set, four singletons, six pairs, E
        assert_eq!(fam.len(), 12);
    }

    #[test]
    fn all_loops_single_flat() {
        let m = Matroid::uniform(0, 2).unwrap();
        let fam = flats(&m).unwrap();
        assert_eq!(fam.len(), 1);
        assert_eq!(fam.masks()[0], m.full_mask());
        assert_eq!(loops(&m), m.full_mask());
    }

    #[test]
    fn both_enumeration_paths_agree() {
        for name in [
            "fano",
            "graphic:K4",
            "graphic:K23",
            "uniform:2,6",
            "uniform:5,6",
        ] {
            let m = catalog::get(name).unwrap();
            let a: Vec<Mask> = closures_of_all_subsets(&m).into_iter().collect();
            let b: Vec<Mask> = closures_of_independent_sets(&m).into_iter().collect();
            let mut a = a;
            let mut b = b;
            a.sort();
            b.sort();
            assert_eq!(a, b, "flat enumeration paths disagree on {name}");
        }
    }

    #[test]
    fn circuit_examples() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(circuits(&u23).unwrap(), vec![u23.full_mask()]);
        let free = Matroid::uniform(3, 3).unwrap();
        assert!(circuits(&free).unwrap().is_empty());
        let vamos = catalog::vamos();
        assert_eq!(circuits(&vamos).unwrap().len(), 41);
    }

    #[test]
    fn k4_hyperplanes() {
        let m = catalog::get("graphic:K4").unwrap();
        let h = hyperplanes(&m).unwrap();
        assert_eq!(h.len(), 7);
        let fam = flats(&m).unwrap();
        assert_eq!(fam.len(), 15);
    }

    #[test]
    fn vamos_pair_sets_are_lines() {
        let v = catalog::vamos();
        let pairs = catalog::vamos_pairs(&v);
        let ls = lines(&v).unwrap();
        assert!(ls.contains(&pairs[2]));
        assert_eq!(v.closure(pairs[2]).unwrap(), pairs[2]);
    }

    #[test]
    fn flat_family_is_meet_closed() {
        for name in ["fano", "uniform:2,4", "graphic:K4", "vamos"] {
            let m = catalog::get(name).unwrap();
            let fam = flats(&m).unwrap();
            for (f, _) in fam.iter() {
                for (g, _) in fam.iter() {
                    assert!(fam.contains(f.inter(g)), "meet missing in {name}");
                }
            }
            assert!(fam.contains(m.loops()));
            assert!(fam.contains(m.full_mask()));
        }
    }

    #[test]
    fn flat_iff_equals_closure_small() {
        for name in ["uniform:2,4", "graphic:K4", "fano"] {
            let m = catalog::get(name).unwrap();
            let fam = flats(&m).unwrap();
            for s in m.full_mask().subsets() {
                assert_eq!(fam.contains(s), m.closure(s).unwrap() == s);
            }
        }
    }
}
