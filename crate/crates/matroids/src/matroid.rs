//! Matroid representations behind a uniform independence-oracle interface.
//!
//! A [`Matroid`] owns a ground set, an oracle, a provenance record, and
//! per-instance memo tables for independence and rank queries. Values are
//! immutable after construction and cheap to clone; derived matroids
//! (duals, minors, projections, preimages, sums, extensions) are new values
//! holding handles to their parents.
//!
//! The maximality axiom of the independence-family axiomatization is
//! automatic for finite ground sets and is not represented here; the
//! remaining three axioms are checked by [`crate::axioms`].

use std::sync::atomic::{AtomicU8, Ordering};
use std::sync::{Arc, OnceLock};

use crate::ground::{GroundSet, Mask};
use crate::{Error, Result};

/// Ground sets up to this size get full memo tables; larger ones fall back
/// to uncached oracle calls (parents usually remain memoized).
const MEMO_MAX_BITS: usize = 14;

pub(crate) trait Oracle: Send + Sync {
    fn indep(&self, x: Mask) -> bool;
}

/// Construction record for a matroid value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Uniform { rank: usize, size: usize },
    Linear { field: u64 },
    Graphic { vertices: usize },
    ExplicitBases,
    ExplicitCircuits,
    Derived(String),
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Provenance::Uniform { rank, size } => write!(f, "uniform({rank},{size})"),
            Provenance::Linear { field } => write!(f, "linear(GF({field}))"),
            Provenance::Graphic { vertices } => write!(f, "graphic({vertices} vertices)"),
            Provenance::ExplicitBases => write!(f, "explicit bases"),
            Provenance::ExplicitCircuits => write!(f, "explicit circuits"),
            Provenance::Derived(op) => write!(f, "{op}"),
        }
    }
}

struct Inner {
    ground: GroundSet,
    name: Option<String>,
    provenance: Provenance,
    oracle: Box<dyn Oracle>,
    indep_memo: OnceLock<Box<[AtomicU8]>>,
    rank_memo: OnceLock<Box<[AtomicU8]>>,
}

/// A finite matroid: ground set plus independence oracle.
#[derive(Clone)]
pub struct Matroid {
    inner: Arc<Inner>,
}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Matroid({}, |E|={}, {})",
            self.inner.name.as_deref().unwrap_or("_"),
            self.len(),
            self.inner.provenance
        )
    }
}

const UNKNOWN: u8 = 0xFF;

fn fresh_memo(n: usize) -> Option<Box<[AtomicU8]>> {
    if n > MEMO_MAX_BITS {
        return None;
    }
    Some((0..1usize << n).map(|_| AtomicU8::new(UNKNOWN)).collect())
}

impl Matroid {
    pub(crate) fn from_oracle(
        ground: GroundSet,
        provenance: Provenance,
        name: Option<String>,
        oracle: Box<dyn Oracle>,
    ) -> Matroid {
        Matroid {
            inner: Arc::new(Inner {
                ground,
                name,
                provenance,
                oracle,
                indep_memo: OnceLock::new(),
                rank_memo: OnceLock::new(),
            }),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.inner.ground
    }

    pub fn len(&self) -> usize {
        self.inner.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn name(&self) -> Option<&str> {
        self.inner.name.as_deref()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.inner.provenance
    }

    pub fn full_mask(&self) -> Mask {
        self.inner.ground.full_mask()
    }

    pub fn same_instance(&self, other: &Matroid) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    /// Total independence oracle: sets with bits outside the ground set are
    /// dependent by definition.
    pub fn indep(&self, x: Mask) -> bool {
        if !x.is_subset(self.full_mask()) {
            return false;
        }
        if let Some(memo) = self
            .inner
            .indep_memo
            .get_or_init(|| fresh_memo(self.len()).unwrap_or_default())
            .get(x.0 as usize)
        {
            let v = memo.load(Ordering::Relaxed);
            if v != UNKNOWN {
                return v == 1;
            }
            let ans = self.inner.oracle.indep(x);
            memo.store(ans as u8, Ordering::Relaxed);
            ans
        } else {
            self.inner.oracle.indep(x)
        }
    }

    /// Checked oracle query.
    pub fn is_independent(&self, x: Mask) -> Result<bool> {
        self.inner.ground.check_mask(x)?;
        Ok(self.indep(x))
    }

    /// Deterministic greedy basis of `x`: scan in canonical element order.
    pub(crate) fn basis_in(&self, x: Mask) -> Mask {
        let mut b = Mask::EMPTY;
        for i in x.iter() {
            if self.indep(b.with(i)) {
                b = b.with(i);
            }
        }
        b
    }

    /// Greedy basis scanning in reverse canonical order; used by the
    /// well-definedness cross-checks.
    pub(crate) fn basis_in_rev(&self, x: Mask) -> Mask {
        let mut b = Mask::EMPTY;
        for i in x.iter_rev() {
            if self.indep(b.with(i)) {
                b = b.with(i);
            }
        }
        b
    }

    pub(crate) fn rank_in(&self, x: Mask) -> usize {
        if let Some(memo) = self
            .inner
            .rank_memo
            .get_or_init(|| fresh_memo(self.len()).unwrap_or_default())
            .get(x.0 as usize)
        {
            let v = memo.load(Ordering::Relaxed);
            if v != UNKNOWN {
                return v as usize;
            }
            let r = self.basis_in(x).len();
            memo.store(r as u8, Ordering::Relaxed);
            r
        } else {
            self.basis_in(x).len()
        }
    }

    pub(crate) fn closure_in(&self, x: Mask) -> Mask {
        let r = self.rank_in(x);
        let mut out = x;
        for i in self.full_mask().minus(x).iter() {
            if self.rank_in(x.with(i)) == r {
                out = out.with(i);
            }
        }
        out
    }

    pub(crate) fn is_flat_in(&self, x: Mask) -> bool {
        self.closure_in(x) == x
    }

    /// Rank of a set: size of the deterministic greedy basis.
    pub fn rank(&self, x: Mask) -> Result<usize> {
        self.inner.ground.check_mask(x)?;
        Ok(self.rank_in(x))
    }

    /// Rank of the whole matroid.
    pub fn rank_full(&self) -> usize {
        self.rank_in(self.full_mask())
    }

    /// Deterministic maximal independent subset of `x`.
    pub fn basis_of(&self, x: Mask) -> Result<Mask> {
        self.inner.ground.check_mask(x)?;
        Ok(self.basis_in(x))
    }

    /// `{ e : rank(x + e) = rank(x) }`.
    pub fn closure(&self, x: Mask) -> Result<Mask> {
        self.inner.ground.check_mask(x)?;
        Ok(self.closure_in(x))
    }

    /// Relative rank of `y` to `x`: the rank of `y − x` after contracting
    /// `x`, which at finite scale equals `rank(x ∪ y) − rank(x)`.
    pub fn relative_rank(&self, y: Mask, x: Mask) -> Result<usize> {
        self.inner.ground.check_mask(x)?;
        self.inner.ground.check_mask(y)?;
        Ok(self.rank_in(x.union(y)) - self.rank_in(x))
    }

    pub fn is_flat(&self, x: Mask) -> Result<bool> {
        self.inner.ground.check_mask(x)?;
        Ok(self.is_flat_in(x))
    }

    /// The set of loops, `closure(∅)`.
    pub fn loops(&self) -> Mask {
        self.closure_in(Mask::EMPTY)
    }

    // ----- derived matroids -------------------------------------------------

    /// Dual matroid: `I` independent iff `E − I` spans the original.
    pub fn dual(&self) -> Matroid {
        let name = self.name().map(|n| format!("{n}*"));
        Matroid::from_oracle(
            self.ground().clone(),
            Provenance::Derived("dual".into()),
            name,
            Box::new(DualOracle { base: self.clone() }),
        )
    }

    /// Minor by contracting `contract` and deleting `delete`.
    ///
    /// Independence is evaluated against a fixed greedy basis of the
    /// contracted set; the result does not depend on that choice.
    pub fn minor(&self, contract: Mask, delete: Mask) -> Result<Matroid> {
        self.inner.ground.check_mask(contract)?;
        self.inner.ground.check_mask(delete)?;
        if !contract.is_disjoint(delete) {
            return Err(Error::OverlappingSets);
        }
        let keep: Vec<usize> = self
            .full_mask()
            .minus(contract.union(delete))
            .iter()
            .collect();
        let ground = GroundSet::new(keep.iter().map(|&i| self.ground().label(i)))?;
        let contract_basis = self.basis_in(contract);
        let desc = format!(
            "minor(contract={}, delete={})",
            self.ground().format_mask(contract),
            self.ground().format_mask(delete)
        );
        Ok(Matroid::from_oracle(
            ground,
            Provenance::Derived(desc),
            None,
            Box::new(MinorOracle {
                base: self.clone(),
                keep,
                contract_basis,
            }),
        ))
    }

    /// Projection by a set: same ground set, independent sets of `M / x`
    /// (the elements of `x` become loops).
    pub fn project_set(&self, x: Mask) -> Result<Matroid> {
        self.inner.ground.check_mask(x)?;
        let x_basis = self.basis_in(x);
        Ok(Matroid::from_oracle(
            self.ground().clone(),
            Provenance::Derived(format!("project({})", self.ground().format_mask(x))),
            None,
            Box::new(ProjectSetOracle {
                base: self.clone(),
                x,
                x_basis,
            }),
        ))
    }

    /// Preimage along a labeling map: each pair is `(new label, target
    /// label)`. A set is independent iff the map is injective on it and the
    /// image is independent here.
    pub fn preimage(&self, mapping: &[(String, String)]) -> Result<Matroid> {
        let ground = GroundSet::new(mapping.iter().map(|(l, _)| l.clone()))?;
        let mut map = Vec::with_capacity(mapping.len());
        for (_, target) in mapping {
            match self.ground().index_of(target) {
                Some(i) => map.push(i),
                None => return Err(Error::ImageOutsideGround(target.clone())),
            }
        }
        Ok(Matroid::from_oracle(
            ground,
            Provenance::Derived("preimage".into()),
            None,
            Box::new(PreimageOracle {
                base: self.clone(),
                map,
            }),
        ))
    }

    /// Direct sum of matroids on pairwise-disjoint grounds.
    pub fn direct_sum(parts: &[Matroid]) -> Result<Matroid> {
        let mut labels: Vec<String> = Vec::new();
        for p in parts {
            for l in p.ground().labels() {
                if labels.contains(l) {
                    return Err(Error::GroundOverlap(l.clone()));
                }
                labels.push(l.clone());
            }
        }
        let ground = GroundSet::new(labels)?;
        let mut offset = 0;
        let mut comps = Vec::with_capacity(parts.len());
        for p in parts {
            comps.push((p.clone(), offset));
            offset += p.len();
        }
        Ok(Matroid::from_oracle(
            ground,
            Provenance::Derived(format!("direct_sum({} parts)", parts.len())),
            None,
            Box::new(DirectSumOracle { comps }),
        ))
    }

    // ----- comparison -------------------------------------------------------

    /// Oracle equality over a shared ground set (labels may be ordered
    /// differently). Enumerates all subsets, so the cap applies.
    pub fn equals(&self, other: &Matroid) -> Result<bool> {
        if !self.ground().same_label_set(other.ground()) {
            return Err(Error::GroundMismatch);
        }
        crate::check_cap(self.len())?;
        if self.ground().same_as(other.ground()) {
            for m in self.full_mask().subsets() {
                if self.indep(m) != other.indep(m) {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        let perm = self
            .ground()
            .permutation_to(other.ground())
            .ok_or(Error::GroundMismatch)?;
        for m in self.full_mask().subsets() {
            let mapped = Mask::from_indices(m.iter().map(|i| perm[i]));
            if self.indep(m) != other.indep(mapped) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First subset (by mask order) on which the two oracles disagree.
    pub fn first_disagreement(&self, other: &Matroid) -> Result<Option<Mask>> {
        if !self.ground().same_as(other.ground()) {
            return Err(Error::GroundMismatch);
        }
        crate::check_cap(self.len())?;
        for m in self.full_mask().subsets() {
            if self.indep(m) != other.indep(m) {
                return Ok(Some(m));
            }
        }
        Ok(None)
    }

    // ----- basic constructors ----------------------------------------------

    pub fn uniform(rank: usize, size: usize) -> Result<Matroid> {
        Matroid::uniform_on(GroundSet::with_default_labels(size), rank)
    }

    pub fn uniform_on(ground: GroundSet, rank: usize) -> Result<Matroid> {
        if rank > ground.len() {
            return Err(Error::InvalidSpec(format!(
                "uniform rank {rank} exceeds size {}",
                ground.len()
            )));
        }
        let size = ground.len();
        Ok(Matroid::from_oracle(
            ground,
            Provenance::Uniform { rank, size },
            Some(format!("uniform:{rank},{size}")),
            Box::new(UniformOracle { rank }),
        ))
    }

    /// Column matroid over GF(p), prime `p` only.
    pub fn linear_on(ground: GroundSet, p: u64, columns: Vec<Vec<u64>>) -> Result<Matroid> {
        if !is_prime(p) {
            return Err(Error::SemanticError(format!(
                "field order {p} is not prime"
            )));
        }
        if columns.len() != ground.len() {
            return Err(Error::InvalidSpec(format!(
                "{} columns for {} labels",
                columns.len(),
                ground.len()
            )));
        }
        let dim = columns.first().map_or(0, Vec::len);
        for c in &columns {
            if c.len() != dim {
                return Err(Error::InvalidSpec("columns have unequal length".into()));
            }
            if c.iter().any(|&v| v >= p) {
                return Err(Error::InvalidSpec(format!("column entry not in [0,{p})")));
            }
        }
        Ok(Matroid::from_oracle(
            ground,
            Provenance::Linear { field: p },
            None,
            Box::new(LinearOracle { p, columns }),
        ))
    }

    /// Cycle matroid of a multigraph on `vertices` vertices; edges are
    /// vertex pairs, loops allowed.
    pub fn graphic_on(
        ground: GroundSet,
        vertices: usize,
        edges: Vec<(usize, usize)>,
    ) -> Result<Matroid> {
        if edges.len() != ground.len() {
            return Err(Error::InvalidSpec(format!(
                "{} edges for {} labels",
                edges.len(),
                ground.len()
            )));
        }
        if edges.iter().any(|&(u, v)| u >= vertices || v >= vertices) {
            return Err(Error::InvalidSpec("edge endpoint out of range".into()));
        }
        Ok(Matroid::from_oracle(
            ground,
            Provenance::Graphic { vertices },
            None,
            Box::new(GraphicOracle { vertices, edges }),
        ))
    }

    /// Matroid from an explicit list of bases, validated by full pairwise
    /// exchange checking.
    pub fn from_bases(ground: GroundSet, bases: Vec<Mask>) -> Result<Matroid> {
        if bases.is_empty() {
            return Err(Error::InvalidSpec("explicit_bases list is empty".into()));
        }
        for &b in &bases {
            ground.check_mask(b).map_err(|_| {
                Error::InvalidSpec("basis contains a label outside the ground set".into())
            })?;
        }
        let card = bases[0].len();
        if bases.iter().any(|b| b.len() != card) {
            return Err(Error::NotAMatroid("bases have unequal cardinality".into()));
        }
        let mut sorted = bases.clone();
        sorted.sort();
        sorted.dedup();
        // basis exchange: for all B1, B2 and e in B1 - B2 there is
        // f in B2 - B1 with B1 - e + f a basis
        for &b1 in &sorted {
            for &b2 in &sorted {
                for e in b1.minus(b2).iter() {
                    let ok = b2
                        .minus(b1)
                        .iter()
                        .any(|f| sorted.binary_search(&b1.without(e).with(f)).is_ok());
                    if !ok {
                        return Err(Error::NotAMatroid(format!(
                            "exchange fails for bases {} and {} at element {}",
                            ground.format_mask(b1),
                            ground.format_mask(b2),
                            ground.label(e)
                        )));
                    }
                }
            }
        }
        Ok(Matroid::from_oracle(
            ground,
            Provenance::ExplicitBases,
            None,
            Box::new(ExplicitBasesOracle { bases: sorted }),
        ))
    }

    /// Matroid whose dependent sets are exactly the sets containing a listed
    /// circuit; the induced oracle is axiom-checked when the ground is small
    /// enough.
    pub fn from_circuits(ground: GroundSet, circuits: Vec<Mask>) -> Result<Matroid> {
        for &c in &circuits {
            ground.check_mask(c).map_err(|_| {
                Error::InvalidSpec("circuit contains a label outside the ground set".into())
            })?;
        }
        let m = Matroid::from_oracle(
            ground,
            Provenance::ExplicitCircuits,
            None,
            Box::new(ExplicitCircuitsOracle { circuits }),
        );
        if m.len() <= crate::size_cap() {
            let report = crate::axioms::check_matroid(&m)?;
            if let Some(v) = report.violation {
                return Err(Error::NotAMatroid(format!(
                    "axiom {:?} fails: {}",
                    v.0, v.1
                )));
            }
        }
        Ok(m)
    }

    pub(crate) fn with_name(self, name: &str) -> Matroid {
        let inner = &self.inner;
        Matroid {
            inner: Arc::new(Inner {
                ground: inner.ground.clone(),
                name: Some(name.to_string()),
                provenance: inner.provenance.clone(),
                oracle: Box::new(ReuseOracle { base: self.clone() }),
                indep_memo: OnceLock::new(),
                rank_memo: OnceLock::new(),
            }),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

struct ReuseOracle {
    base: Matroid,
}

impl Oracle for ReuseOracle {
    fn indep(&self, x: Mask) -> bool {
        self.base.indep(x)
    }
}

struct UniformOracle {
    rank: usize,
}

impl Oracle for UniformOracle {
    fn indep(&self, x: Mask) -> bool {
        x.len() <= self.rank
    }
}

struct LinearOracle {
    p: u64,
    columns: Vec<Vec<u64>>,
}

impl Oracle for LinearOracle {
    fn indep(&self, x: Mask) -> bool {
        let cols: Vec<&Vec<u64>> = x.iter().map(|i| &self.columns[i]).collect();
        let dim = self.columns.first().map_or(0, Vec::len);
        if cols.len() > dim {
            return false;
        }
        gf_rank(self.p, dim, &cols) == cols.len()
    }
}

/// Row-reduction rank of the given columns over GF(p).
fn gf_rank(p: u64, dim: usize, cols: &[&Vec<u64>]) -> usize {
    let mut mat: Vec<Vec<u64>> = cols.iter().map(|c| (*c).clone()).collect();
    let mut rank = 0;
    for d in 0..dim {
        let Some(pivot) = (rank..mat.len()).find(|&r| !mat[r][d].is_multiple_of(p)) else {
            continue;
        };
        mat.swap(rank, pivot);
        let inv = mod_inverse(mat[rank][d], p);
        for v in mat[rank].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot_row = mat[rank].clone();
        for (r, row) in mat.iter_mut().enumerate() {
            if r != rank && row[d] % p != 0 {
                let f = row[d];
                for (a, b) in row.iter_mut().zip(&pivot_row) {
                    *a = (*a + (p - f % p) * b) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0 mod p
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

struct GraphicOracle {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Oracle for GraphicOracle {
    fn indep(&self, x: Mask) -> bool {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for i in x.iter() {
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

struct ExplicitBasesOracle {
    bases: Vec<Mask>,
}

impl Oracle for ExplicitBasesOracle {
    fn indep(&self, x: Mask) -> bool {
        self.bases.iter().any(|&b| x.is_subset(b))
    }
}

struct ExplicitCircuitsOracle {
    circuits: Vec<Mask>,
}

impl Oracle for ExplicitCircuitsOracle {
    fn indep(&self, x: Mask) -> bool {
        !self.circuits.iter().any(|&c| c.is_subset(x))
    }
}

struct DualOracle {
    base: Matroid,
}

impl Oracle for DualOracle {
    fn indep(&self, x: Mask) -> bool {
        let rest = self.base.full_mask().minus(x);
        self.base.rank_in(rest) == self.base.rank_full()
    }
}

struct MinorOracle {
    base: Matroid,
    keep: Vec<usize>,
    contract_basis: Mask,
}

impl Oracle for MinorOracle {
    fn indep(&self, x: Mask) -> bool {
        let lifted = Mask::from_indices(x.iter().map(|i| self.keep[i]));
        self.base.indep(lifted.union(self.contract_basis))
    }
}

struct ProjectSetOracle {
    base: Matroid,
    x: Mask,
    x_basis: Mask,
}

impl Oracle for ProjectSetOracle {
    fn indep(&self, i: Mask) -> bool {
        i.is_disjoint(self.x) && self.base.indep(i.union(self.x_basis))
    }
}

struct PreimageOracle {
    base: Matroid,
    map: Vec<usize>,
}

impl Oracle for PreimageOracle {
    fn indep(&self, x: Mask) -> bool {
        let mut image = Mask::EMPTY;
        for i in x.iter() {
            let t = self.map[i];
            if image.contains(t) {
                return false;
            }
            image = image.with(t);
        }
        self.base.indep(image)
    }
}

struct DirectSumOracle {
    comps: Vec<(Matroid, usize)>,
}

impl Oracle for DirectSumOracle {
    fn indep(&self, x: Mask) -> bool {
        self.comps.iter().all(|(m, offset)| {
            if m.is_empty() {
                return true;
            }
            let slice = Mask(x.0 >> offset).inter(m.full_mask());
            m.indep(slice)
        })
    }
}
