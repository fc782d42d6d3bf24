//! Independent brute-force oracles for the catalog's frozen values.
//!
//! Everything here is recomputed from first principles: independence comes
//! from test-local GF(p) elimination, union-find, or the Vámos paving rule,
//! and flats/circuits come from direct subset sweeps over those oracles —
//! none of it touches the library's enumeration code.

use matroids::catalog;
use matroids::flats;
use matroids::ground::Mask;

trait RawOracle {
    fn n(&self) -> usize;
    fn indep(&self, set: &[usize]) -> bool;
}

struct RawLinear {
    p: u64,
    cols: Vec<Vec<u64>>,
}

impl RawOracle for RawLinear {
    fn n(&self) -> usize {
        self.cols.len()
    }

    fn indep(&self, set: &[usize]) -> bool {
        let mut rows: Vec<Vec<u64>> = set.iter().map(|&i| self.cols[i].clone()).collect();
        let dim = self.cols.first().map_or(0, Vec::len);
        let p = self.p;
        let mut rank = 0;
        for d in 0..dim {
            let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][d].is_multiple_of(p)) else {
                continue;
            };
            rows.swap(rank, pivot);
            let head = rows[rank][d];
            // scale others without inverses: row_r := head*row_r - row_r[d]*row_rank
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && !row[d].is_multiple_of(p) {
                    let f = row[d];
                    for (a, b) in row.iter_mut().zip(&pivot_row) {
                        *a = (head * *a % p + (p - f % p) * b % p) % p;
                    }
                }
            }
            rank += 1;
        }
        rank == rows.len()
    }
}

struct RawVamos;

impl RawOracle for RawVamos {
    fn n(&self) -> usize {
        8
    }

    fn indep(&self, set: &[usize]) -> bool {
        // pairs (0,1) (2,3) (4,5) (6,7); nonspanning circuits are the pair
        // unions except the last two pairs together
        if set.len() > 4 {
            return false;
        }
        let mask: u32 = set.iter().map(|&i| 1 << i).sum();
        const CIRCUITS: [u32; 5] = [0b00001111, 0b00110011, 0b11000011, 0b00111100, 0b11001100];
        CIRCUITS.iter().all(|&c| mask & c != c)
    }
}

struct RawGraphic {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl RawOracle for RawGraphic {
    fn n(&self) -> usize {
        self.edges.len()
    }

    fn indep(&self, set: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(p: &mut [usize], mut v: usize) -> usize {
            while p[v] != v {
                v = p[v];
            }
            v
        }
        for &i in set {
            let (u, v) = self.edges[i];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return false;
            }
            parent[ru] = rv;
        }
        true
    }
}

fn elements_of(mask: usize, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

fn raw_rank(o: &dyn RawOracle, mask: usize) -> usize {
    let mut picked = Vec::new();
    for e in elements_of(mask, o.n()) {
        picked.push(e);
        if !o.indep(&picked) {
            picked.pop();
        }
    }
    picked.len()
}

fn raw_closure(o: &dyn RawOracle, mask: usize) -> usize {
    let r = raw_rank(o, mask);
    let mut out = mask;
    for e in 0..o.n() {
        if raw_rank(o, mask | 1 << e) == r {
            out |= 1 << e;
        }
    }
    out
}

struct RawCounts {
    rank: usize,
    flats: usize,
    circuits: usize,
    hyperplanes: usize,
}

fn raw_counts(o: &dyn RawOracle) -> RawCounts {
    let n = o.n();
    let mut flat_set = std::collections::BTreeSet::new();
    let mut circuits = 0usize;
    for mask in 0..1usize << n {
        flat_set.insert(raw_closure(o, mask));
        let elems = elements_of(mask, n);
        if !elems.is_empty()
            && !o.indep(&elems)
            && elems.iter().all(|&e| {
                let sub: Vec<usize> = elems.iter().copied().filter(|&x| x != e).collect();
                o.indep(&sub)
            })
        {
            circuits += 1;
        }
    }
    let full = raw_rank(o, (1usize << n) - 1);
    let hyperplanes = flat_set
        .iter()
        .filter(|&&f| raw_rank(o, f) + 1 == full)
        .count();
    RawCounts {
        rank: full,
        flats: flat_set.len(),
        circuits,
        hyperplanes,
    }
}

fn compare(name: &str, oracle: &dyn RawOracle) {
    let m = catalog::get(name).unwrap();
    assert_eq!(m.len(), oracle.n(), "{name}: ground size");
    // the oracles must agree pointwise
    for mask in 0..1usize << oracle.n() {
        let lib = m.indep(Mask(mask as u64));
        let raw = oracle.indep(&elements_of(mask, oracle.n()));
        assert_eq!(lib, raw, "{name}: oracle mismatch on {mask:b}");
    }
    let counts = raw_counts(oracle);
    assert_eq!(m.rank_full(), counts.rank, "{name}: rank");
    assert_eq!(
        flats::flats(&m).unwrap().len(),
        counts.flats,
        "{name}: flat count"
    );
    assert_eq!(
        flats::circuits(&m).unwrap().len(),
        counts.circuits,
        "{name}: circuit count"
    );
    assert_eq!(
        flats::hyperplanes(&m).unwrap().len(),
        counts.hyperplanes,
        "{name}: hyperplane count"
    );
}

#[test]
fn fano_against_raw_elimination() {
    let cols = (1u64..8)
        .map(|i| vec![i >> 2 & 1, i >> 1 & 1, i & 1])
        .collect();
    compare("fano", &RawLinear { p: 2, cols });
}

#[test]
fn pg_2_3_against_raw_elimination() {
    let mut cols = Vec::new();
    for a in 0..3u64 {
        for b in 0..3u64 {
            for c in 0..3u64 {
                let v = [a, b, c];
                if let Some(first) = v.iter().position(|&x| x != 0) {
                    if v[first] == 1 {
                        cols.push(v.to_vec());
                    }
                }
            }
        }
    }
    compare("pg_2_3", &RawLinear { p: 3, cols });
}

#[test]
fn vamos_against_raw_paving_rule() {
    compare("vamos", &RawVamos);
}

#[test]
fn k4_against_raw_union_find() {
    compare(
        "graphic:K4",
        &RawGraphic {
            vertices: 4,
            edges: vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        },
    );
}

#[test]
fn k23_against_raw_union_find() {
    compare(
        "graphic:K23",
        &RawGraphic {
            vertices: 5,
            edges: vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        },
    );
}
