//! Vietoris-Rips filtrations up to dimension 2.
//!
//! A simplex enters at the largest pairwise distance among its vertices, so
//! the filtration is determined by the distance matrix. The 2-skeleton is all
//! 1-dimensional persistence needs; anything deeper would be wasted work.

use crate::embedding::PointCloud;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RipsError {
    #[error("distance matrix is not symmetric at ({i}, {j})")]
    MatrixNotSymmetric { i: usize, j: usize },
}

/// Symmetric matrix of pairwise Euclidean distances with zero diagonal.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<f64>,
}

impl DistanceMatrix {
    pub fn from_raw(n: usize, d: Vec<f64>) -> Result<Self, RipsError> {
        assert_eq!(d.len(), n * n, "matrix storage must be n*n");
        for i in 0..n {
            for j in i + 1..n {
                if d[i * n + j] != d[j * n + i] {
                    return Err(RipsError::MatrixNotSymmetric { i, j });
                }
            }
        }
        Ok(Self { n, d })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.d[i * self.n + j]
    }
}

/// Euclidean distances between all pairs of cloud points.
pub fn pairwise_distances(cloud: &PointCloud) -> DistanceMatrix {
    let n = cloud.len();
    assert!(n > 0, "cannot build distances for an empty cloud");
    let mut d = vec![0.0; n * n];
    for i in 0..n {
        let pi = cloud.point(i);
        for j in i + 1..n {
            let pj = cloud.point(j);
            let dist = pi
                .iter()
                .zip(pj)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt();
            d[i * n + j] = dist;
            d[j * n + i] = dist;
        }
    }
    DistanceMatrix { n, d }
}

/// A simplex of dimension 0, 1 or 2 with its filtration entry time.
/// Unused vertex slots hold `u32::MAX`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Simplex {
    pub time: f64,
    pub dim: u8,
    pub verts: [u32; 3],
}

impl Simplex {
    fn vertex(time: f64, v: u32) -> Self {
        Simplex {
            time,
            dim: 0,
            verts: [v, u32::MAX, u32::MAX],
        }
    }

    fn edge(time: f64, i: u32, j: u32) -> Self {
        Simplex {
            time,
            dim: 1,
            verts: [i, j, u32::MAX],
        }
    }

    fn triangle(time: f64, i: u32, j: u32, k: u32) -> Self {
        Simplex {
            time,
            dim: 2,
            verts: [i, j, k],
        }
    }
}

/// A Rips filtration: simplices sorted by `(entry time, dimension, vertex
/// tuple)`, which puts every face before its cofaces.
#[derive(Debug, Clone)]
pub struct FilteredComplex {
    vertex_count: usize,
    threshold: f64,
    simplices: Vec<Simplex>,
}

impl FilteredComplex {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Debug dump, one simplex per line: `dim t v0 v1 [v2]`, in filtration
    /// order. Suitable for diffing against an external implementation.
    pub fn dump(&self, mut w: impl std::io::Write) -> std::io::Result<()> {
        for s in &self.simplices {
            match s.dim {
                0 => writeln!(w, "0 {} {}", s.time, s.verts[0])?,
                1 => writeln!(w, "1 {} {} {}", s.time, s.verts[0], s.verts[1])?,
                _ => writeln!(
                    w,
                    "2 {} {} {} {}",
                    s.time, s.verts[0], s.verts[1], s.verts[2]
                )?,
            }
        }
        Ok(())
    }
}

/// Builds the Rips filtration: vertices at time zero, every edge no longer
/// than `threshold`, and (for `max_dim = 2`) every triangle whose edges all
/// fit, entering at its longest edge.
pub fn build_rips(
    distances: &DistanceMatrix,
    max_dim: usize,
    threshold: f64,
) -> Result<FilteredComplex, RipsError> {
    assert!(
        max_dim == 1 || max_dim == 2,
        "only dimensions 1 and 2 are supported"
    );
    assert!(threshold > 0.0, "threshold must be positive");
    let n = distances.n;
    for i in 0..n {
        for j in i + 1..n {
            if distances.get(i, j) != distances.get(j, i) {
                return Err(RipsError::MatrixNotSymmetric { i, j });
            }
        }
    }

    let mut simplices: Vec<Simplex> = Vec::new();
    for v in 0..n {
        simplices.push(Simplex::vertex(0.0, v as u32));
    }

    // neighbor lists restricted to the threshold, ascending by index
    let mut neighbors: Vec<Vec<u32>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            let dij = distances.get(i, j);
            if dij <= threshold {
                simplices.push(Simplex::edge(dij, i as u32, j as u32));
                neighbors[i].push(j as u32);
                neighbors[j].push(i as u32);
            }
        }
    }

    if max_dim >= 2 {
        // walk each edge (i, j) and intersect the tails of the two neighbor
        // lists past j, so each triangle i < j < k is found exactly once
        for i in 0..n {
            for &j in &neighbors[i] {
                let j = j as usize;
                if j <= i {
                    continue;
                }
                let dij = distances.get(i, j);
                let ni = &neighbors[i];
                let nj = &neighbors[j];
                let mut a = ni.partition_point(|&k| k <= j as u32);
                let mut b = nj.partition_point(|&k| k <= j as u32);
                while a < ni.len() && b < nj.len() {
                    match ni[a].cmp(&nj[b]) {
                        std::cmp::Ordering::Less => a += 1,
                        std::cmp::Ordering::Greater => b += 1,
                        std::cmp::Ordering::Equal => {
                            let k = ni[a] as usize;
                            let time = dij.max(distances.get(i, k)).max(distances.get(j, k));
                            simplices.push(Simplex::triangle(time, i as u32, j as u32, k as u32));
                            a += 1;
                            b += 1;
                        }
                    }
                }
            }
        }
    }

    simplices.sort_unstable_by(|x, y| {
        x.time
            .total_cmp(&y.time)
            .then(x.dim.cmp(&y.dim))
            .then(x.verts.cmp(&y.verts))
    });

    Ok(FilteredComplex {
        vertex_count: n,
        threshold,
        simplices,
    })
}
