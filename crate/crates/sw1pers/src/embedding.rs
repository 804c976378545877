//! Sliding-window embeddings and their geometry for trigonometric inputs.
//!
//! The embedding sends `t` to `(f(t), f(t+tau), ..., f(t+M*tau))`. For a
//! trigonometric polynomial the image decomposes over the basis vectors
//! `u_n[m] = cos(n m tau)`, `v_n[m] = sin(n m tau)`, and with the resonant
//! choice `tau = 2pi / (L (M+1))` those vectors become mutually orthogonal
//! with equal norms, which is what makes the centered, normalized cloud of an
//! `L`-periodic signal wind around a round torus.

use crate::signal::{TrigPolynomial, TWO_PI};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EmbeddingError {
    #[error("window must satisfy M*tau < 2pi (M = {m}, tau = {tau})")]
    WindowTooWide { m: usize, tau: f64 },
    #[error("M must be >= 1 and tau > 0 (M = {m}, tau = {tau})")]
    BadParams { m: usize, tau: f64 },
    #[error("base point set is empty")]
    EmptySampleSet,
    #[error("sin(L*tau) = 0: the ellipse closed form is degenerate")]
    DegenerateTau,
    #[error("point {index} has near-zero norm; the signal is locally constant")]
    ZeroVector { index: usize },
    #[error("coefficient at n = {n} (radius {radius:.3e}) is off the L = {l} lattice")]
    NotLPeriodic { n: usize, l: usize, radius: f64 },
}

/// Window parameters: embedding dimension `M + 1` and step `tau`, with the
/// standing requirement `M * tau < 2pi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowParams {
    m: usize,
    tau: f64,
    /// Assumed period count of the target signal on `[0, 2pi]`.
    l: usize,
    /// Fourier degree used to derive `m`, when built by [`resonant_params`].
    n: Option<usize>,
}

impl WindowParams {
    pub fn new(m: usize, tau: f64) -> Result<Self, EmbeddingError> {
        if m < 1 || tau.is_nan() || tau <= 0.0 {
            return Err(EmbeddingError::BadParams { m, tau });
        }
        if m as f64 * tau >= TWO_PI {
            return Err(EmbeddingError::WindowTooWide { m, tau });
        }
        Ok(Self { m, tau, l: 1, n: None })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn degree(&self) -> Option<usize> {
        self.n
    }

    /// Embedding dimension `M + 1`.
    pub fn dim(&self) -> usize {
        self.m + 1
    }

    pub fn window_size(&self) -> f64 {
        self.m as f64 * self.tau
    }
}

/// Window parameters resonant with an `L`-periodic signal of Fourier degree
/// `N`: `M = 2N` and `tau = 2pi / (L (M+1))`, so `L (M+1) tau = 2pi`.
pub fn resonant_params(l: usize, n: usize) -> WindowParams {
    assert!(l >= 1 && n >= 1, "resonant_params needs L >= 1 and N >= 1");
    let m = 2 * n;
    let tau = TWO_PI / (l as f64 * (m + 1) as f64);
    WindowParams {
        m,
        tau,
        l,
        n: Some(n),
    }
}

/// An ordered point cloud in `R^{dim}`, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    data: Vec<f64>,
    dim: usize,
    params: Option<WindowParams>,
}

impl PointCloud {
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Self {
        assert!(!rows.is_empty(), "point cloud needs at least one point");
        let dim = rows[0].len();
        let mut data = Vec::with_capacity(rows.len() * dim);
        for row in &rows {
            assert_eq!(row.len(), dim, "all points must share a dimension");
            data.extend_from_slice(row);
        }
        Self {
            data,
            dim,
            params: None,
        }
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.dim)
    }

    pub fn params(&self) -> Option<&WindowParams> {
        self.params.as_ref()
    }

    /// One point per row, coordinates comma-separated.
    pub fn write_csv(&self, mut w: impl std::io::Write) -> std::io::Result<()> {
        for p in self.points() {
            let row: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            writeln!(w, "{}", row.join(","))?;
        }
        Ok(())
    }
}

/// `count` evenly spaced points covering `[start, end]` inclusive.
pub fn uniform_grid(count: usize, start: f64, end: f64) -> Vec<f64> {
    assert!(count >= 2, "a grid needs at least two points");
    (0..count)
        .map(|k| start + (end - start) * k as f64 / (count - 1) as f64)
        .collect()
}

/// `count` points on the circle `[0, 2pi)`, endpoint excluded.
pub fn circle_grid(count: usize) -> Vec<f64> {
    (0..count).map(|k| TWO_PI * k as f64 / count as f64).collect()
}

/// Embeds `f` at each base point: point `i`, coordinate `m` is
/// `f(t_i + m * tau)`. The callee evaluates `f` wherever the window lands;
/// periodic inputs wrap naturally, spline-backed inputs should restrict the
/// base set so `t + M*tau` stays inside their domain.
pub fn sliding_window(
    f: impl Fn(f64) -> f64,
    params: WindowParams,
    base_points: &[f64],
) -> Result<PointCloud, EmbeddingError> {
    if base_points.is_empty() {
        return Err(EmbeddingError::EmptySampleSet);
    }
    let dim = params.dim();
    let mut data = Vec::with_capacity(base_points.len() * dim);
    for &t in base_points {
        for m in 0..dim {
            data.push(f(t + m as f64 * params.tau));
        }
    }
    Ok(PointCloud {
        data,
        dim,
        params: Some(params),
    })
}

/// The fundamental basis pair `u_n[m] = cos(n m tau)`, `v_n[m] = sin(n m tau)`
/// for `m = 0..=M`.
pub fn basis_vectors(n: usize, params: WindowParams) -> (Vec<f64>, Vec<f64>) {
    let dim = params.dim();
    let mut u = Vec::with_capacity(dim);
    let mut v = Vec::with_capacity(dim);
    for m in 0..dim {
        let ang = n as f64 * m as f64 * params.tau;
        u.push(ang.cos());
        v.push(ang.sin());
    }
    (u, v)
}

/// Eigenvalues of the Gram matrix of `(u_L, v_L)` in closed form:
/// `lambda_{1,2} = ((M+1) +- |sin(L(M+1)tau) / sin(L tau)|) / 2`.
///
/// These are the squared semi-axes of the ellipse traced by the sliding
/// window embedding of `cos(Lt)`; they coincide exactly at resonance
/// `L (M+1) tau = 0 (mod pi)`.
pub fn ellipse_eigenvalues(l: usize, params: WindowParams) -> Result<(f64, f64), EmbeddingError> {
    let denom = (l as f64 * params.tau).sin();
    if denom.abs() < 1e-12 {
        return Err(EmbeddingError::DegenerateTau);
    }
    let span = (l as f64 * (params.m as f64 + 1.0) * params.tau).sin();
    let gap = (span / denom).abs();
    let dim = params.dim() as f64;
    Ok(((dim + gap) / 2.0, (dim - gap) / 2.0))
}

/// Removes each point's component along the all-ones direction:
/// `C(x) = x - (<x, 1> / (M+1)) 1`. Idempotent and distance non-increasing.
pub fn center(cloud: &PointCloud) -> PointCloud {
    let dim = cloud.dim;
    let mut data = cloud.data.clone();
    for p in data.chunks_exact_mut(dim) {
        let mean = p.iter().sum::<f64>() / dim as f64;
        for x in p {
            *x -= mean;
        }
    }
    PointCloud {
        data,
        dim,
        params: cloud.params,
    }
}

/// Scales every point to unit norm, preserving order. A near-zero point
/// signals a locally constant signal and is reported as an error; the
/// scoring pipeline maps that case to score zero.
pub fn normalize(cloud: &PointCloud) -> Result<PointCloud, EmbeddingError> {
    let dim = cloud.dim;
    let mut data = cloud.data.clone();
    for (i, p) in data.chunks_exact_mut(dim).enumerate() {
        let norm = p.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-12 {
            return Err(EmbeddingError::ZeroVector { index: i });
        }
        for x in p {
            *x /= norm;
        }
    }
    Ok(PointCloud {
        data,
        dim,
        params: cloud.params,
    })
}

/// Numerical verification that an `L`-periodic trigonometric polynomial's
/// centered, normalized sliding-window cloud decomposes over an orthonormal
/// basis with the predicted radii. All residuals are near rounding error on
/// valid input.
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub m: usize,
    pub tau: f64,
    /// Max `|<a, b>|` over distinct pairs drawn from `{u_0} U {u_n, v_n}` on
    /// the `L`-lattice.
    pub orthogonality_residual: f64,
    /// Max deviation of `||u_n||`, `||v_n||` from `sqrt((M+1)/2)`, `n >= 1`.
    pub norm_deviation: f64,
    /// Max deviation of `||C(phi(t))||` from
    /// `sqrt(M+1) * sqrt(||S_N f||^2 - mean^2)` over a dense grid.
    pub centered_norm_deviation: f64,
    /// Max residual of the orthonormal decomposition of the normalized cloud.
    pub decomposition_residual: f64,
    /// Normalized radii indexed by harmonic (`0` off the lattice).
    pub radii: Vec<f64>,
}

impl StructureReport {
    pub fn max_residual(&self) -> f64 {
        self.orthogonality_residual
            .max(self.norm_deviation)
            .max(self.centered_norm_deviation)
            .max(self.decomposition_residual)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn verify_structure(
    trig: &TrigPolynomial,
    l: usize,
) -> Result<StructureReport, EmbeddingError> {
    assert!(l >= 1);
    let degree = trig.degree();
    for n in 1..=degree {
        if n % l != 0 {
            let radius = trig.harmonic_radius(n);
            if radius > 1e-10 {
                return Err(EmbeddingError::NotLPeriodic { n, l, radius });
            }
        }
    }
    let lattice: Vec<usize> = (1..=degree).filter(|n| n % l == 0).collect();
    let radii_hat = trig.normalized_radii();
    if !lattice.iter().any(|&n| radii_hat[n] > 0.0) {
        // constant input: the centered cloud is identically zero
        return Err(EmbeddingError::ZeroVector { index: 0 });
    }

    let params = resonant_params(l, degree.max(1));
    let dim = params.dim();
    let expected_norm = (dim as f64 / 2.0).sqrt();

    // basis vectors on the lattice, plus the all-ones u_0
    let mut basis: Vec<Vec<f64>> = vec![vec![1.0; dim]];
    let mut norm_deviation: f64 = 0.0;
    for &n in &lattice {
        let (u, v) = basis_vectors(n, params);
        norm_deviation = norm_deviation
            .max((norm(&u) - expected_norm).abs())
            .max((norm(&v) - expected_norm).abs());
        basis.push(u);
        basis.push(v);
    }
    let mut orthogonality_residual: f64 = 0.0;
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            orthogonality_residual = orthogonality_residual.max(dot(&basis[i], &basis[j]).abs());
        }
    }

    // predicted orthonormal frame: rotate (u_n, v_n) by the coefficient phase
    let mut frame: Vec<(usize, Vec<f64>, Vec<f64>)> = Vec::new();
    for &n in &lattice {
        let (u, v) = basis_vectors(n, params);
        let (a, b) = (trig.cos_coeffs()[n], trig.sin_coeffs()[n]);
        let alpha = b.atan2(a);
        let (ca, sa) = (alpha.cos(), alpha.sin());
        let mut x = vec![0.0; dim];
        let mut y = vec![0.0; dim];
        for k in 0..dim {
            x[k] = ca * u[k] + sa * v[k];
            y[k] = sa * u[k] - ca * v[k];
        }
        let (nx, ny) = (norm(&x), norm(&y));
        for k in 0..dim {
            x[k] /= nx;
            y[k] /= ny;
        }
        frame.push((n, x, y));
    }

    let predicted_centered_norm =
        (dim as f64).sqrt() * (trig.norm_l2_sq() - trig.mean() * trig.mean()).sqrt();

    let grid = circle_grid(512);
    let cloud = sliding_window(|t| trig.eval(t), params, &grid)?;
    let centered = center(&cloud);
    let mut centered_norm_deviation: f64 = 0.0;
    let mut decomposition_residual: f64 = 0.0;
    for (i, &t) in grid.iter().enumerate() {
        let c = centered.point(i);
        let cn = norm(c);
        centered_norm_deviation = centered_norm_deviation.max((cn - predicted_centered_norm).abs());
        // normalized point vs the predicted torus curve
        let mut residual_sq = 0.0;
        for k in 0..dim {
            let mut predicted = 0.0;
            for (n, x, y) in &frame {
                let ang = *n as f64 * t;
                predicted += radii_hat[*n] * (ang.cos() * x[k] + ang.sin() * y[k]);
            }
            let diff = c[k] / cn - predicted;
            residual_sq += diff * diff;
        }
        decomposition_residual = decomposition_residual.max(residual_sq.sqrt());
    }

    Ok(StructureReport {
        m: params.m,
        tau: params.tau,
        orthogonality_residual,
        norm_deviation,
        centered_norm_deviation,
        decomposition_residual,
        radii: radii_hat,
    })
}
