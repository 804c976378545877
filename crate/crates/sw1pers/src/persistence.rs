//! Persistent homology of a Rips filtration over a prime field, plus
//! persistence-diagram metrics.
//!
//! H0 comes from union-find over the edges. H1 comes from the standard
//! left-to-right column reduction applied to the anti-transpose of the
//! triangle boundary matrix: one column per edge (its triangle cofacets),
//! processed latest-edge-first, with the clearing shortcut skipping the
//! columns of paired 1-simplices (the union-find already matched negative
//! edges against vertices). By the persistence duality theorem this yields
//! exactly the same pairs as reducing the 2-boundary columns directly, but
//! sidesteps that direction's pathology on full 2-skeletons, where the vast
//! majority of triangle columns reduce to zero through long cascades. A
//! 200-point cloud drops from ~14s to well under a second this way; the
//! naive-reduction oracle tests pin down that the diagrams are identical.

use crate::embedding::{self, EmbeddingError, PointCloud};
use crate::rips::{self, FilteredComplex, RipsError};
use crate::signal::TrigPolynomial;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PersistenceError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("prime {0} exceeds the supported maximum 65521")]
    PrimeTooLarge(u32),
    #[error("invalid filtration order at simplex {position}: {reason}")]
    InvalidFiltrationOrder { position: usize, reason: &'static str },
    #[error("diagrams have different homology dimensions ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },
    #[error("the lower bound requires a prime p > N, got p = {p}, N = {degree}")]
    FieldTooSmall { p: u32, degree: usize },
    #[error("sampling gap {delta:.4e} exceeds the theorem limit {limit:.4e}")]
    DeltaTooLarge { delta: f64, limit: f64 },
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Rips(#[from] RipsError),
}

/// A checked prime for homology coefficients, at most 65521 so that
/// products fit comfortably and inverses can be tabulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FieldPrime(u32);

impl FieldPrime {
    pub fn new(p: u32) -> Result<Self, PersistenceError> {
        if p > 65521 {
            return Err(PersistenceError::PrimeTooLarge(p));
        }
        if p < 2 {
            return Err(PersistenceError::NotPrime(p));
        }
        let mut d = 2u32;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(PersistenceError::NotPrime(p));
            }
            d += 1;
        }
        Ok(FieldPrime(p))
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

/// Tabulated `F_p` arithmetic.
struct Fp {
    p: u64,
    inv: Vec<u32>,
}

impl Fp {
    fn new(prime: FieldPrime) -> Self {
        let p = prime.0 as u64;
        let mut inv = vec![0u32; prime.0 as usize];
        if p > 1 {
            inv[1] = 1;
            // inv[i] = -(p / i) * inv[p % i] mod p
            for i in 2..p {
                let r = (p % i) as usize;
                inv[i as usize] = ((p - (p / i) * inv[r] as u64 % p) % p) as u32;
            }
        }
        Fp { p, inv }
    }

    #[inline]
    fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            (self.p - a as u64) as u32
        }
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        (a as u64 * b as u64 % self.p) as u32
    }

    #[inline]
    fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p - b as u64) % self.p) as u32
    }

    #[inline]
    fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }
}

/// A (birth, death) pair; death is `f64::INFINITY` for essential classes.
/// Serializes as a two-element array.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PersistencePair {
    pub birth: f64,
    pub death: f64,
}

impl PersistencePair {
    pub fn persistence(&self) -> f64 {
        self.death - self.birth
    }
}

impl Serialize for PersistencePair {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(2))?;
        seq.serialize_element(&self.birth)?;
        seq.serialize_element(&self.death)?;
        seq.end()
    }
}

/// Multiset of birth/death pairs for one homology dimension. Pairs with
/// `birth == death` are pruned at construction and only counted. Classes
/// still alive at the filtration threshold are reported separately as
/// censored, with death set to the threshold.
#[derive(Debug, Clone, Serialize)]
pub struct PersistenceDiagram {
    pub dim: usize,
    pub field: u32,
    pub pairs: Vec<PersistencePair>,
    pub censored: Vec<PersistencePair>,
    #[serde(skip)]
    pub zero_pairs: usize,
}

impl PersistenceDiagram {
    pub fn empty(dim: usize, field: u32) -> Self {
        Self {
            dim,
            field,
            pairs: Vec::new(),
            censored: Vec::new(),
            zero_pairs: 0,
        }
    }

    pub fn finite_pairs(&self) -> impl Iterator<Item = &PersistencePair> {
        self.pairs.iter().filter(|p| p.death.is_finite())
    }

    /// Sorted copy of the finite pairs, for order-insensitive comparison.
    pub fn sorted_finite(&self) -> Vec<(f64, f64)> {
        let mut v: Vec<(f64, f64)> = self.finite_pairs().map(|p| (p.birth, p.death)).collect();
        v.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
        v
    }
}

/// Largest `death - birth` over the diagram: zero when empty, infinite if
/// any essential pair is present (exclude those first if that is not what
/// you want).
pub fn max_persistence(dgm: &PersistenceDiagram) -> f64 {
    dgm.pairs
        .iter()
        .map(|p| p.death - p.birth)
        .fold(0.0, f64::max)
}

/// Both persistence diagrams of a filtration, with bookkeeping used by the
/// consistency checks (`edge_count =` H0 deaths `+` H1 births, counting
/// pruned and censored classes).
#[derive(Debug, Clone)]
pub struct Homology {
    pub h0: PersistenceDiagram,
    pub h1: PersistenceDiagram,
    pub edge_count: usize,
}

struct UnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
    /// Smallest vertex index in the component, kept at the root: the elder
    /// representative (every vertex is born at time zero, so ties are broken
    /// by vertex index).
    rep: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            rank: vec![0; n],
            rep: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    /// Merges the two roots; returns the surviving root.
    fn union(&mut self, a: u32, b: u32) -> u32 {
        let rep = self.rep[a as usize].min(self.rep[b as usize]);
        let root = if self.rank[a as usize] < self.rank[b as usize] {
            self.parent[a as usize] = b;
            b
        } else if self.rank[a as usize] > self.rank[b as usize] {
            self.parent[b as usize] = a;
            a
        } else {
            self.parent[b as usize] = a;
            self.rank[a as usize] += 1;
            a
        };
        self.rep[root as usize] = rep;
        root
    }
}

/// Lookup from a vertex pair to the edge's filtration ordinal.
enum EdgeIndex {
    Flat { n: usize, table: Vec<u32> },
    Sparse(std::collections::HashMap<(u32, u32), u32>),
}

const NO_EDGE: u32 = u32::MAX;

impl EdgeIndex {
    fn new(n: usize, capacity: usize) -> Self {
        if n <= 2048 {
            EdgeIndex::Flat {
                n,
                table: vec![NO_EDGE; n * n],
            }
        } else {
            EdgeIndex::Sparse(std::collections::HashMap::with_capacity(capacity))
        }
    }

    #[inline]
    fn insert(&mut self, i: u32, j: u32, ordinal: u32) {
        match self {
            EdgeIndex::Flat { n, table } => table[i as usize * *n + j as usize] = ordinal,
            EdgeIndex::Sparse(map) => {
                map.insert((i, j), ordinal);
            }
        }
    }

    #[inline]
    fn get(&self, i: u32, j: u32) -> u32 {
        match self {
            EdgeIndex::Flat { n, table } => table[i as usize * *n + j as usize],
            EdgeIndex::Sparse(map) => map.get(&(i, j)).copied().unwrap_or(NO_EDGE),
        }
    }
}

type Column = Vec<(u32, u32)>; // (edge ordinal, coefficient), ascending ordinal

/// `out = a - factor * b` over `F_p`, merging two ordinal-sorted columns and
/// dropping cancellations.
fn sub_scaled(fp: &Fp, a: &[(u32, u32)], b: &[(u32, u32)], factor: u32, out: &mut Column) {
    out.clear();
    let mut ia = 0;
    let mut ib = 0;
    while ia < a.len() && ib < b.len() {
        match a[ia].0.cmp(&b[ib].0) {
            std::cmp::Ordering::Less => {
                out.push(a[ia]);
                ia += 1;
            }
            std::cmp::Ordering::Greater => {
                let c = fp.neg(fp.mul(factor, b[ib].1));
                if c != 0 {
                    out.push((b[ib].0, c));
                }
                ib += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = fp.sub(a[ia].1, fp.mul(factor, b[ib].1));
                if c != 0 {
                    out.push((a[ia].0, c));
                }
                ia += 1;
                ib += 1;
            }
        }
    }
    out.extend_from_slice(&a[ia..]);
    for &(ord, c) in &b[ib..] {
        let c = fp.neg(fp.mul(factor, c));
        if c != 0 {
            out.push((ord, c));
        }
    }
}

/// Computes the H0 and H1 persistence diagrams of a filtration over `F_p`.
///
/// H0 pairing follows the elder rule (the older component survives a merge;
/// every vertex enters at time zero, so ties resolve by smaller vertex
/// index) and yields one essential pair per connected component. H1 classes
/// alive at the threshold are reported as censored rather than essential,
/// since a complete filtration of a bounded cloud leaves none.
pub fn compute_persistence(
    complex: &FilteredComplex,
    field: FieldPrime,
) -> Result<Homology, PersistenceError> {
    let fp = Fp::new(field);
    let n = complex.vertex_count();
    let simplices = complex.simplices();

    for (pos, w) in simplices.windows(2).enumerate() {
        let order = w[0]
            .time
            .total_cmp(&w[1].time)
            .then(w[0].dim.cmp(&w[1].dim))
            .then(w[0].verts.cmp(&w[1].verts));
        if order == std::cmp::Ordering::Greater {
            return Err(PersistenceError::InvalidFiltrationOrder {
                position: pos + 1,
                reason: "simplices not sorted by (time, dim, vertices)",
            });
        }
    }

    let edge_total = simplices.iter().filter(|s| s.dim == 1).count();
    let mut edge_index = EdgeIndex::new(n, edge_total);
    let mut edge_time: Vec<f64> = Vec::with_capacity(edge_total);
    let mut positive: Vec<bool> = Vec::with_capacity(edge_total);

    let mut h0 = PersistenceDiagram::empty(0, field.0);
    let mut h1 = PersistenceDiagram::empty(1, field.0);
    let mut uf = UnionFind::new(n);

    // Pass 1: vertices and edges (union-find). Edge ordinals are assigned in
    // filtration order.
    for (pos, s) in simplices.iter().enumerate() {
        match s.dim {
            0 => {
                if s.verts[0] as usize >= n {
                    return Err(PersistenceError::InvalidFiltrationOrder {
                        position: pos,
                        reason: "vertex index out of range",
                    });
                }
            }
            1 => {
                let (i, j) = (s.verts[0], s.verts[1]);
                if i >= j || j as usize >= n {
                    return Err(PersistenceError::InvalidFiltrationOrder {
                        position: pos,
                        reason: "edge vertices must be ascending and in range",
                    });
                }
                let ordinal = edge_time.len() as u32;
                edge_index.insert(i, j, ordinal);
                edge_time.push(s.time);
                let (ra, rb) = (uf.find(i), uf.find(j));
                if ra == rb {
                    positive.push(true);
                } else {
                    positive.push(false);
                    uf.union(ra, rb);
                    if s.time == 0.0 {
                        h0.zero_pairs += 1;
                    } else {
                        h0.pairs.push(PersistencePair {
                            birth: 0.0,
                            death: s.time,
                        });
                    }
                }
            }
            _ => {}
        }
    }
    for v in 0..n as u32 {
        if uf.find(v) == v {
            h0.pairs.push(PersistencePair {
                birth: 0.0,
                death: f64::INFINITY,
            });
        }
    }

    // Pass 2: triangle ranks and the edge -> cofacet lists (CSR layout).
    // Entries are keyed by "revrank" (triangle position counted from the end
    // of the filtration) so the column pivot, its last entry, is the
    // earliest cofacet.
    let edge_count = edge_time.len();
    let mut tri_time: Vec<f64> = Vec::new();
    let mut tri_edges: Vec<[u32; 3]> = Vec::new();
    for (pos, s) in simplices.iter().enumerate() {
        if s.dim != 2 {
            continue;
        }
        let (i, j, k) = (s.verts[0], s.verts[1], s.verts[2]);
        // boundary of [i, j, k]: +[i,j] - [i,k] + [j,k]
        let eij = edge_index.get(i, j);
        let eik = edge_index.get(i, k);
        let ejk = edge_index.get(j, k);
        if eij == NO_EDGE || eik == NO_EDGE || ejk == NO_EDGE {
            return Err(PersistenceError::InvalidFiltrationOrder {
                position: pos,
                reason: "triangle face missing from the filtration",
            });
        }
        tri_time.push(s.time);
        tri_edges.push([eij, eik, ejk]);
    }
    let tri_count = tri_time.len();
    let revrank = |rank: usize| (tri_count - 1 - rank) as u32;

    let mut head = vec![0u32; edge_count + 1];
    for edges in &tri_edges {
        for &e in edges {
            head[e as usize + 1] += 1;
        }
    }
    for e in 0..edge_count {
        head[e + 1] += head[e];
    }
    let mut entries: Vec<(u32, u32)> = vec![(0, 0); 3 * tri_count];
    let mut cursor = head.clone();
    let neg_one = fp.neg(1);
    for rank in (0..tri_count).rev() {
        let [eij, eik, ejk] = tri_edges[rank];
        for (e, coeff) in [(eij, 1), (eik, neg_one), (ejk, 1)] {
            let slot = cursor[e as usize] as usize;
            entries[slot] = (revrank(rank), coeff);
            cursor[e as usize] += 1;
        }
    }
    drop(tri_edges);

    // Pass 3: standard reduction of the edge columns, latest edge first.
    // Negative edges are cleared (already paired against vertices); a pair
    // (pivot triangle, edge) is an H1 class born at the edge and dying at
    // the triangle; a column that sweeps to zero is a class still alive at
    // the threshold.
    const NO_OWNER: u32 = u32::MAX;
    let mut owner: Vec<u32> = vec![NO_OWNER; tri_count];
    let mut stored: Vec<Column> = Vec::new();
    let mut stored_edge: Vec<u32> = Vec::new();
    let mut col: Column = Vec::new();
    let mut scratch: Column = Vec::new();

    for e_ord in (0..edge_count).rev() {
        if !positive[e_ord] {
            continue;
        }
        col.clear();
        col.extend_from_slice(&entries[head[e_ord] as usize..head[e_ord + 1] as usize]);
        loop {
            let Some(&(pivot, coeff)) = col.last() else {
                h1.censored.push(PersistencePair {
                    birth: edge_time[e_ord],
                    death: complex.threshold(),
                });
                break;
            };
            let own = owner[pivot as usize];
            if own == NO_OWNER {
                owner[pivot as usize] = stored.len() as u32;
                let birth = edge_time[e_ord];
                let death = tri_time[tri_count - 1 - pivot as usize];
                if birth == death {
                    h1.zero_pairs += 1;
                } else {
                    h1.pairs.push(PersistencePair { birth, death });
                }
                stored.push(std::mem::take(&mut col));
                stored_edge.push(e_ord as u32);
                break;
            }
            let pivot_col = &stored[own as usize];
            let pivot_coeff = pivot_col.last().expect("stored columns are nonempty").1;
            let factor = fp.mul(coeff, fp.inv(pivot_coeff));
            sub_scaled(&fp, &col, pivot_col, factor, &mut scratch);
            std::mem::swap(&mut col, &mut scratch);
        }
    }
    // pairs were generated latest-birth-first; present them in birth order
    h1.pairs.reverse();
    h1.censored.reverse();

    Ok(Homology {
        h0,
        h1,
        edge_count,
    })
}

// ---------------------------------------------------------------------------
// Diagram metrics
// ---------------------------------------------------------------------------

fn linf_cost(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).abs().max((a.1 - b.1).abs())
}

fn half_persistence(p: (f64, f64)) -> f64 {
    (p.1 - p.0) / 2.0
}

/// Bipartite matching feasibility: can every point be matched (to a point of
/// the other diagram or to the diagonal) with L-infinity cost at most `c`?
fn matching_feasible(pa: &[(f64, f64)], pb: &[(f64, f64)], c: f64) -> bool {
    let np = pa.len();
    let nq = pb.len();
    let total = np + nq;
    // left = pa points then diagonal ghosts of pb; right = pb points then
    // diagonal ghosts of pa
    let mut matched_right: Vec<usize> = vec![usize::MAX; total];
    let mut visited: Vec<u32> = vec![0; total];
    let mut stamp = 0u32;

    fn neighbors(
        l: usize,
        np: usize,
        nq: usize,
        pa: &[(f64, f64)],
        pb: &[(f64, f64)],
        c: f64,
    ) -> Vec<usize> {
        let mut out = Vec::new();
        if l < np {
            let p = pa[l];
            for (qi, &q) in pb.iter().enumerate() {
                if linf_cost(p, q) <= c {
                    out.push(qi);
                }
            }
            if half_persistence(p) <= c {
                out.push(nq + l); // its own diagonal ghost
            }
        } else {
            let qi = l - np;
            if half_persistence(pb[qi]) <= c {
                out.push(qi);
            }
            // ghost-to-ghost matches are free
            for g in nq..nq + np {
                out.push(g);
            }
        }
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn augment(
        l: usize,
        np: usize,
        nq: usize,
        pa: &[(f64, f64)],
        pb: &[(f64, f64)],
        c: f64,
        matched_right: &mut [usize],
        visited: &mut [u32],
        stamp: u32,
    ) -> bool {
        for r in neighbors(l, np, nq, pa, pb, c) {
            if visited[r] == stamp {
                continue;
            }
            visited[r] = stamp;
            if matched_right[r] == usize::MAX
                || augment(
                    matched_right[r],
                    np,
                    nq,
                    pa,
                    pb,
                    c,
                    matched_right,
                    visited,
                    stamp,
                )
            {
                matched_right[r] = l;
                return true;
            }
        }
        false
    }

    for l in 0..total {
        stamp += 1;
        if !augment(l, np, nq, pa, pb, c, &mut matched_right, &mut visited, stamp) {
            return false;
        }
    }
    true
}

/// Exact bottleneck distance between two diagrams of the same homology
/// dimension, computed over their finite pairs. The diagonal (with countable
/// multiplicity) is always available as a match target, so diagrams of
/// different sizes compare fine.
pub fn bottleneck(
    dgm1: &PersistenceDiagram,
    dgm2: &PersistenceDiagram,
) -> Result<f64, PersistenceError> {
    if dgm1.dim != dgm2.dim {
        return Err(PersistenceError::DimensionMismatch {
            left: dgm1.dim,
            right: dgm2.dim,
        });
    }
    let pa: Vec<(f64, f64)> = dgm1.finite_pairs().map(|p| (p.birth, p.death)).collect();
    let pb: Vec<(f64, f64)> = dgm2.finite_pairs().map(|p| (p.birth, p.death)).collect();
    if pa.is_empty() && pb.is_empty() {
        return Ok(0.0);
    }

    // the optimum is always realized by one of these candidate costs
    let mut candidates: Vec<f64> = Vec::with_capacity(pa.len() * pb.len() + pa.len() + pb.len() + 1);
    candidates.push(0.0);
    for &p in &pa {
        candidates.push(half_persistence(p));
        for &q in &pb {
            candidates.push(linf_cost(p, q));
        }
    }
    for &q in &pb {
        candidates.push(half_persistence(q));
    }
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();

    let mut lo = 0usize;
    let mut hi = candidates.len() - 1;
    debug_assert!(matching_feasible(&pa, &pb, candidates[hi]));
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if matching_feasible(&pa, &pb, candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(candidates[lo])
}

/// `q`-Wasserstein distance from a diagram to the diagonal, in closed form:
/// `(1/2) (sum (death - birth)^q)^(1/q)`. Converges to half the maximum
/// persistence as `q` grows.
pub fn wasserstein_to_diagonal(dgm: &PersistenceDiagram, q: f64) -> f64 {
    assert!(q >= 1.0, "Wasserstein order must be at least 1");
    let gaps: Vec<f64> = dgm.finite_pairs().map(|p| p.death - p.birth).collect();
    let top = gaps.iter().fold(0.0f64, |m, &g| m.max(g));
    if top == 0.0 {
        return 0.0;
    }
    // factor out the largest gap so powers stay in range
    let sum: f64 = gaps.iter().map(|g| (g / top).powf(q)).sum();
    0.5 * top * sum.powf(1.0 / q)
}

// ---------------------------------------------------------------------------
// Lower bound on maximum persistence
// ---------------------------------------------------------------------------

/// Sensitivity constant `2 sqrt(2) ||f'||_2 / ||f - mean||_2` of a
/// trigonometric polynomial, computed from its coefficients. It converts a
/// sampling gap `delta` into an upper bound `delta * kappa` on the Rips
/// birth time of the dominant cycle of the centered, normalized
/// sliding-window cloud.
pub fn lower_bound_constant(trig: &TrigPolynomial) -> f64 {
    let mut num = 0.0;
    let mut den = 0.0;
    for n in 1..=trig.degree() {
        let r2 = trig.harmonic_radius(n).powi(2);
        num += (n * n) as f64 * r2;
        den += r2;
    }
    if den == 0.0 {
        return 0.0;
    }
    2.0 * std::f64::consts::SQRT_2 * (num / den).sqrt()
}

#[derive(Debug, Clone, Serialize)]
pub struct LowerBoundReport {
    pub l: usize,
    pub degree: usize,
    pub sample_count: usize,
    pub field: u32,
    /// Sampling density `d_H(T, circle) = pi / sample_count`.
    pub delta: f64,
    pub kappa: f64,
    pub r_hat_max: f64,
    /// `sqrt(3) * r_hat_max - delta * kappa`.
    pub bound: f64,
    pub max_persistence: f64,
    pub satisfied: bool,
}

/// Checks the guaranteed lower bound on maximum persistence for an
/// `L`-periodic trigonometric polynomial sampled densely on the circle:
/// `mp >= sqrt(3) * max_n r_hat_n - delta * kappa`, over `F_p` with
/// `p > degree`.
pub fn verify_persistence_lower_bound(
    trig: &TrigPolynomial,
    l: usize,
    sample_count: usize,
    field: FieldPrime,
) -> Result<LowerBoundReport, PersistenceError> {
    let degree = trig.degree();
    if field.0 as usize <= degree {
        return Err(PersistenceError::FieldTooSmall {
            p: field.0,
            degree,
        });
    }
    // L-periodicity gate (reuses the structure checks)
    for n in 1..=degree {
        if n % l != 0 && trig.harmonic_radius(n) > 1e-10 {
            return Err(EmbeddingError::NotLPeriodic {
                n,
                l,
                radius: trig.harmonic_radius(n),
            }
            .into());
        }
    }
    let radii = trig.normalized_radii();
    let r_hat_max = radii.iter().fold(0.0f64, |m, &r| m.max(r));
    let kappa = lower_bound_constant(trig);
    let delta = std::f64::consts::PI / sample_count as f64;
    // a NaN limit (degenerate polynomial) must also land here
    let limit = 3.0f64.sqrt() * r_hat_max / kappa;
    if delta.partial_cmp(&limit) != Some(std::cmp::Ordering::Less) {
        return Err(PersistenceError::DeltaTooLarge { delta, limit });
    }

    let params = embedding::resonant_params(l, degree);
    let base = embedding::circle_grid(sample_count);
    let cloud = embedding::sliding_window(|t| trig.eval(t), params, &base)?;
    let normalized = embedding::normalize(&embedding::center(&cloud))?;
    let complex = rips::build_rips(&rips::pairwise_distances(&normalized), 2, 2.0)?;
    let homology = compute_persistence(&complex, field)?;
    let mp = max_persistence(&homology.h1);
    let bound = 3.0f64.sqrt() * r_hat_max - delta * kappa;

    Ok(LowerBoundReport {
        l,
        degree,
        sample_count,
        field: field.0,
        delta,
        kappa,
        r_hat_max,
        bound,
        max_persistence: mp,
        satisfied: mp + 1e-12 >= bound,
    })
}

/// Convenience pipeline used by diagnostics and tests: embed a point cloud,
/// compute its Rips persistence at the given threshold.
pub fn cloud_persistence(
    cloud: &PointCloud,
    threshold: f64,
    field: FieldPrime,
) -> Result<Homology, PersistenceError> {
    let complex = rips::build_rips(&rips::pairwise_distances(cloud), 2, threshold)?;
    compute_persistence(&complex, field)
}
