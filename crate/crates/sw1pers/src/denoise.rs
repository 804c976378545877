//! Mean-shift smoothing of unit-norm point clouds under cosine similarity.

use crate::embedding::PointCloud;

/// How the neighborhood threshold `epsilon` is interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeanShiftRule {
    /// Neighbors satisfy `1 - x.y < epsilon`. With the default
    /// `epsilon = cos(pi/16)` this admits almost the whole hemisphere around
    /// each point; it is the literal published rule and the default.
    Similarity,
    /// Neighbors satisfy `x.y > epsilon`, i.e. an angular cap of
    /// `arccos(epsilon)` around each point.
    Angular,
}

#[derive(Debug, Clone, Copy)]
pub struct MeanShiftParams {
    pub epsilon: f64,
    pub iterations: usize,
    pub rule: MeanShiftRule,
}

impl Default for MeanShiftParams {
    fn default() -> Self {
        Self {
            epsilon: (std::f64::consts::PI / 16.0).cos(),
            iterations: 1,
            rule: MeanShiftRule::Similarity,
        }
    }
}

impl MeanShiftParams {
    /// Minimum inner product for `y` to count as a neighbor of `x`.
    fn dot_threshold(&self) -> f64 {
        match self.rule {
            MeanShiftRule::Similarity => 1.0 - self.epsilon,
            MeanShiftRule::Angular => self.epsilon,
        }
    }
}

/// Result of a mean-shift pass; `degenerate` lists points whose neighbor
/// mean vanished and were therefore left in place.
#[derive(Debug, Clone)]
pub struct MeanShiftResult {
    pub cloud: PointCloud,
    pub degenerate: Vec<usize>,
}

/// Replaces each point with the renormalized mean of its cosine-similarity
/// neighbors, repeated `iterations` times.
///
/// Updates are synchronous: all means of one iteration are computed from the
/// same input cloud, so the output does not depend on point order. Every
/// point is its own neighbor (`1 - x.x = 0`), so neighborhoods are never
/// empty; a zero mean (exactly cancelling neighbors) leaves the original
/// point untouched and flags its index.
pub fn mean_shift(cloud: &PointCloud, params: &MeanShiftParams) -> MeanShiftResult {
    assert!(
        params.epsilon > 0.0 && params.epsilon <= 2.0,
        "epsilon must lie in (0, 2]"
    );
    let n = cloud.len();
    let dim = cloud.dim();
    let threshold = params.dot_threshold();

    let mut current = cloud.clone();
    let mut degenerate = Vec::new();
    for _ in 0..params.iterations {
        let mut next = vec![0.0; n * dim];
        degenerate.clear();
        for i in 0..n {
            let xi = current.point(i);
            let mean = &mut next[i * dim..(i + 1) * dim];
            for j in 0..n {
                let xj = current.point(j);
                let dot: f64 = xi.iter().zip(xj).map(|(a, b)| a * b).sum();
                if dot > threshold {
                    for (m, &x) in mean.iter_mut().zip(xj) {
                        *m += x;
                    }
                }
            }
            let norm: f64 = mean.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm < 1e-12 {
                mean.copy_from_slice(xi);
                degenerate.push(i);
            } else {
                for m in mean.iter_mut() {
                    *m /= norm;
                }
            }
        }
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            rows.push(next[i * dim..(i + 1) * dim].to_vec());
        }
        current = PointCloud::from_rows(rows);
    }
    MeanShiftResult {
        cloud: current,
        degenerate,
    }
}
