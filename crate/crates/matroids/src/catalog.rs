//! Named matroid constructors and the fixed test corpus shared by the
//! verification suites.
//!
//! Catalog names are stable public identifiers: `uniform:k,n` (k ≤ n ≤ 8),
//! `free:n`, `loops:n`, `fano`, `pg_2_3`, `vamos`, `graphic:K4`,
//! `graphic:K23`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ground::{GroundSet, Mask};
use crate::matroid::Matroid;
use crate::spec::{MatroidSpec, SpecKind};
use crate::{Error, Result};

/// Seed for the corpus' random explicit-bases matroids.
pub const CORPUS_SEED: u64 = 0xA11CE;

/// Known values for a named entry, reproduced by the library on demand
/// (see [`self_check`]).
#[derive(Clone, Copy, Debug, Default)]
pub struct Expected {
    pub rank: usize,
    pub flat_count: Option<usize>,
    pub circuit_count: Option<usize>,
    pub hyperplane_count: Option<usize>,
    pub modular: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub spec: MatroidSpec,
    pub expected: Expected,
}

fn uniform_expected(rank: usize, size: usize) -> Expected {
    let choose = |n: usize, k: usize| -> usize {
        if k > n {
            return 0;
        }
        let mut acc = 1usize;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    };
    let flat_count = if rank == 0 {
        1
    } else {
        1 + (0..rank).map(|i| choose(size, i)).sum::<usize>()
    };
    Expected {
        rank,
        flat_count: Some(flat_count),
        circuit_count: Some(if rank < size {
            choose(size, rank + 1)
        } else {
            0
        }),
        hyperplane_count: Some(if rank == 0 { 0 } else { choose(size, rank - 1) }),
        modular: Some(rank <= 2 || rank == size),
    }
}

fn fano_spec() -> MatroidSpec {
    // columns are the nonzero GF(2) triples; column i is the binary
    // expansion of i+1, most significant digit first
    let columns = (1u64..8)
        .map(|i| vec![i >> 2 & 1, i >> 1 & 1, i & 1])
        .collect();
    MatroidSpec {
        name: "fano".into(),
        kind: SpecKind::Linear { p: 2, columns },
        labels: Some((1..=7).map(|i| i.to_string()).collect()),
    }
}

fn pg_2_3_spec() -> MatroidSpec {
    // one representative per projective point: first nonzero coordinate 1
    let mut columns = Vec::new();
    for a in 0..3u64 {
        for b in 0..3u64 {
            for c in 0..3u64 {
                let v = [a, b, c];
                if let Some(first) = v.iter().position(|&x| x != 0) {
                    if v[first] == 1 {
                        columns.push(v.to_vec());
                    }
                }
            }
        }
    }
    MatroidSpec {
        name: "pg_2_3".into(),
        kind: SpecKind::Linear { p: 3, columns },
        labels: Some((1..=13).map(|i| i.to_string()).collect()),
    }
}

const VAMOS_LABELS: [&str; 8] = ["a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2"];

fn vamos_spec() -> MatroidSpec {
    // the five nonspanning four-element circuits, completed to a full
    // circuit list by the rank-four paving rule (every five-element set is
    // dependent)
    let pair = |i: usize| {
        vec![
            VAMOS_LABELS[2 * i].to_string(),
            VAMOS_LABELS[2 * i + 1].to_string(),
        ]
    };
    let mut circuits: Vec<Vec<String>> = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]
        .iter()
        .map(|&(i, j)| {
            let mut c = pair(i);
            c.extend(pair(j));
            c
        })
        .collect();
    for five in subsets_of_size(8, 5) {
        circuits.push(five.iter().map(|&i| VAMOS_LABELS[i].to_string()).collect());
    }
    MatroidSpec {
        name: "vamos".into(),
        kind: SpecKind::ExplicitCircuits { circuits },
        labels: Some(VAMOS_LABELS.iter().map(|s| s.to_string()).collect()),
    }
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

fn k4_spec() -> MatroidSpec {
    // edges of K4 on vertices 0..4 in order 01,02,03,12,13,23
    MatroidSpec {
        name: "graphic:K4".into(),
        kind: SpecKind::Graphic {
            vertices: 4,
            edges: vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        },
        labels: Some(["a", "b", "c", "d", "e", "f"].map(String::from).to_vec()),
    }
}

fn k23_spec() -> MatroidSpec {
    // K_{2,3}: left vertices 0,1; right vertices 2,3,4
    MatroidSpec {
        name: "graphic:K23".into(),
        kind: SpecKind::Graphic {
            vertices: 5,
            edges: vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        },
        labels: Some(["a", "b", "c", "d", "e", "f"].map(String::from).to_vec()),
    }
}

/// The named (non-uniform) catalog entries.
pub fn named_entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "fano".into(),
            spec: fano_spec(),
            expected: Expected {
                rank: 3,
                flat_count: Some(16),
                circuit_count: Some(14),
                hyperplane_count: Some(7),
                modular: Some(true),
            },
        },
        CatalogEntry {
            name: "pg_2_3".into(),
            spec: pg_2_3_spec(),
            expected: Expected {
                rank: 3,
                flat_count: Some(28),
                circuit_count: Some(286),
                hyperplane_count: Some(13),
                modular: Some(true),
            },
        },
        CatalogEntry {
            name: "vamos".into(),
            spec: vamos_spec(),
            expected: Expected {
                rank: 4,
                flat_count: Some(79),
                circuit_count: Some(41),
                hyperplane_count: Some(41),
                modular: Some(false),
            },
        },
        CatalogEntry {
            name: "graphic:K4".into(),
            spec: k4_spec(),
            expected: Expected {
                rank: 3,
                flat_count: Some(15),
                circuit_count: Some(7),
                hyperplane_count: Some(7),
                modular: Some(false),
            },
        },
        CatalogEntry {
            name: "graphic:K23".into(),
            spec: k23_spec(),
            expected: Expected {
                rank: 4,
                flat_count: Some(34),
                circuit_count: Some(3),
                hyperplane_count: Some(11),
                modular: Some(false),
            },
        },
    ]
}

/// All catalog entries: uniforms for k ≤ n ≤ 8 plus the named ones.
pub fn entries() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for n in 0..=8usize {
        for k in 0..=n {
            out.push(CatalogEntry {
                name: format!("uniform:{k},{n}"),
                spec: MatroidSpec::uniform(&format!("uniform:{k},{n}"), k, n),
                expected: uniform_expected(k, n),
            });
        }
    }
    out.extend(named_entries());
    out
}

/// Build a catalog matroid by name.
pub fn get(name: &str) -> Result<Matroid> {
    if let Some(args) = name.strip_prefix("uniform:") {
        let (k, n) = parse_pair(args).ok_or_else(|| Error::UnknownName(name.into()))?;
        if k > n || n > 8 {
            return Err(Error::UnknownName(name.into()));
        }
        return MatroidSpec::uniform(name, k, n).build();
    }
    if let Some(arg) = name.strip_prefix("free:") {
        let n: usize = arg.parse().map_err(|_| Error::UnknownName(name.into()))?;
        if n > 8 {
            return Err(Error::UnknownName(name.into()));
        }
        return MatroidSpec::uniform(name, n, n).build();
    }
    if let Some(arg) = name.strip_prefix("loops:") {
        let n: usize = arg.parse().map_err(|_| Error::UnknownName(name.into()))?;
        if n > 8 {
            return Err(Error::UnknownName(name.into()));
        }
        return MatroidSpec::uniform(name, 0, n).build();
    }
    for e in named_entries() {
        if e.name == name {
            return e.spec.build();
        }
    }
    Err(Error::UnknownName(name.into()))
}

fn parse_pair(s: &str) -> Option<(usize, usize)> {
    let (a, b) = s.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// The Vámos matroid.
pub fn vamos() -> Matroid {
    get("vamos").expect("vamos spec is valid")
}

/// The four two-element sets whose pair-unions give the nonspanning
/// circuits of the Vámos matroid.
pub fn vamos_pairs(v: &Matroid) -> [Mask; 4] {
    let p = |i: usize| {
        v.ground()
            .mask_of([VAMOS_LABELS[2 * i], VAMOS_LABELS[2 * i + 1]])
            .expect("vamos labels")
    };
    [p(0), p(1), p(2), p(3)]
}

/// Deterministic corpus: all catalog entries with at most `max_size`
/// elements, plus seeded random explicit-bases matroids derived from random
/// GF(2) column matrices. The seed is recorded in each random entry's name.
pub fn corpus(max_size: usize) -> Vec<Matroid> {
    let mut out = Vec::new();
    for e in entries() {
        if e.spec.size() <= max_size {
            out.push(e.spec.build().expect("catalog entries are valid"));
        }
    }
    for spec in random_specs(max_size) {
        out.push(spec.build().expect("random corpus entries are valid"));
    }
    out
}

/// Seeded random explicit-bases specs used by [`corpus`].
pub fn random_specs(max_size: usize) -> Vec<MatroidSpec> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    for n in 3..=max_size.min(8) {
        for instance in 0..2 {
            let rows = n / 2 + 1;
            let columns: Vec<Vec<u64>> = (0..n)
                .map(|_| (0..rows).map(|_| rng.gen_range(0..2u64)).collect())
                .collect();
            let ground = GroundSet::with_default_labels(n);
            let linear = Matroid::linear_on(ground.clone(), 2, columns)
                .expect("random GF(2) columns are a valid spec");
            let r = linear.rank_full();
            let mut bases = Vec::new();
            for s in linear.full_mask().subsets() {
                if s.len() == r && linear.indep(s) {
                    bases.push(
                        ground
                            .labels_of(s)
                            .into_iter()
                            .map(String::from)
                            .collect::<Vec<_>>(),
                    );
                }
            }
            out.push(MatroidSpec {
                name: format!("random-gf2:{n}.{instance}:seed={CORPUS_SEED:#x}"),
                kind: SpecKind::ExplicitBases { bases },
                labels: Some(ground.labels().to_vec()),
            });
        }
    }
    out
}

/// Recompute every expected value of every entry; errors carry the first
/// mismatch.
pub fn self_check() -> Result<()> {
    self_check_up_to(usize::MAX)
}

/// As [`self_check`], restricted to entries of at most `max_size` elements.
pub fn self_check_up_to(max_size: usize) -> Result<()> {
    for e in entries() {
        if e.spec.size() > max_size {
            continue;
        }
        let m = e.spec.build()?;
        let fail = |what: &str, got: usize, want: usize| {
            Err(Error::Internal(format!(
                "catalog entry {}: {what} is {got}, expected {want}",
                e.name
            )))
        };
        if m.rank_full() != e.expected.rank {
            return fail("rank", m.rank_full(), e.expected.rank);
        }
        if let Some(want) = e.expected.flat_count {
            let got = crate::flats::flats(&m)?.len();
            if got != want {
                return fail("flat count", got, want);
            }
        }
        if let Some(want) = e.expected.circuit_count {
            let got = crate::flats::circuits(&m)?.len();
            if got != want {
                return fail("circuit count", got, want);
            }
        }
        if let Some(want) = e.expected.hyperplane_count {
            let got = crate::flats::hyperplanes(&m)?.len();
            if got != want {
                return fail("hyperplane count", got, want);
            }
        }
        if let Some(want) = e.expected.modular {
            let got = crate::modularity::is_modular_matroid(&m)?;
            if got != want {
                return Err(Error::Internal(format!(
                    "catalog entry {}: modularity is {got}, expected {want}",
                    e.name
                )));
            }
        }
    }
    Ok(())
}
