//! Signal ingestion, interpolation, smoothing, Fourier analysis, and
//! synthetic signal generation.

use std::f64::consts::PI;
use std::fmt;
use std::io::{BufRead, Write};
use std::path::Path;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub const TWO_PI: f64 = 2.0 * PI;

#[derive(Debug, Error)]
pub enum SignalError {
    #[error("times and values have different lengths ({times} vs {values})")]
    LengthMismatch { times: usize, values: usize },
    #[error("need at least {min} samples, got {got}")]
    TooFewSamples { min: usize, got: usize },
    #[error("times must be strictly increasing (violated at index {index})")]
    DuplicateTimes { index: usize },
    #[error("non-finite entry at index {index}")]
    NonFinite { index: usize },
    #[error("moving-average window must be odd, got {0}")]
    EvenWindow(usize),
    #[error("moving-average window {window} exceeds signal length {len}")]
    WindowTooLarge { window: usize, len: usize },
    #[error("degree {degree} needs at least {min} quadrature points, got {got}")]
    InsufficientQuadrature { degree: usize, min: usize, got: usize },
    #[error("unknown shape `{0}`")]
    UnknownShape(String),
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// A real-valued time series sampled at strictly increasing times.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    times: Vec<f64>,
    values: Vec<f64>,
}

impl SampledSignal {
    pub fn new(times: Vec<f64>, values: Vec<f64>) -> Result<Self, SignalError> {
        if times.len() != values.len() {
            return Err(SignalError::LengthMismatch {
                times: times.len(),
                values: values.len(),
            });
        }
        if times.len() < 2 {
            return Err(SignalError::TooFewSamples {
                min: 2,
                got: times.len(),
            });
        }
        for (i, (&t, &v)) in times.iter().zip(&values).enumerate() {
            if !t.is_finite() || !v.is_finite() {
                return Err(SignalError::NonFinite { index: i });
            }
        }
        if let Some(i) = times.windows(2).position(|w| w[1] <= w[0]) {
            return Err(SignalError::DuplicateTimes { index: i + 1 });
        }
        Ok(Self { times, values })
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty() // cannot happen: the constructor demands two samples
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.times[0], self.times[self.times.len() - 1])
    }

    /// Maps `values -> scale * values + offset` leaving times untouched.
    pub fn affine(&self, scale: f64, offset: f64) -> Self {
        Self {
            times: self.times.clone(),
            values: self.values.iter().map(|v| scale * v + offset).collect(),
        }
    }

    /// Reads a two-column `time,value` CSV. A header row is skipped if its
    /// fields do not parse as numbers.
    pub fn read_csv(path: impl AsRef<Path>) -> Result<Self, SignalError> {
        let path = path.as_ref();
        let file = std::fs::File::open(path)?;
        Self::parse_csv(std::io::BufReader::new(file), &path.display().to_string())
    }

    pub fn parse_csv(reader: impl BufRead, path: &str) -> Result<Self, SignalError> {
        let mut times = Vec::new();
        let mut values = Vec::new();
        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut fields = trimmed.split(',');
            let (a, b) = match (fields.next(), fields.next()) {
                (Some(a), Some(b)) => (a.trim(), b.trim()),
                _ => {
                    return Err(SignalError::Parse {
                        path: path.to_string(),
                        line: lineno + 1,
                        message: format!("expected two comma-separated fields, got `{trimmed}`"),
                    })
                }
            };
            match (a.parse::<f64>(), b.parse::<f64>()) {
                (Ok(t), Ok(v)) => {
                    times.push(t);
                    values.push(v);
                }
                _ if lineno == 0 => continue, // optional header
                _ => {
                    return Err(SignalError::Parse {
                        path: path.to_string(),
                        line: lineno + 1,
                        message: format!("cannot parse `{trimmed}` as time,value"),
                    })
                }
            }
        }
        if times.len() < 2 {
            return Err(SignalError::Parse {
                path: path.to_string(),
                line: 0,
                message: format!("expected at least 2 data rows, got {}", times.len()),
            });
        }
        Self::new(times, values)
    }

    pub fn write_csv(&self, mut w: impl Write) -> std::io::Result<()> {
        writeln!(w, "time,value")?;
        for (t, v) in self.times.iter().zip(&self.values) {
            writeln!(w, "{t},{v}")?;
        }
        Ok(())
    }
}

/// Simple centered moving average. Endpoint windows shrink symmetrically so
/// the series keeps its length; times are unchanged.
pub fn moving_average(
    signal: &SampledSignal,
    window_points: usize,
) -> Result<SampledSignal, SignalError> {
    let j = signal.len();
    if window_points.is_multiple_of(2) || window_points == 0 {
        return Err(SignalError::EvenWindow(window_points));
    }
    if window_points > j {
        return Err(SignalError::WindowTooLarge {
            window: window_points,
            len: j,
        });
    }
    let half = window_points / 2;
    let values = signal.values();
    let smoothed = (0..j)
        .map(|i| {
            let lo = i.saturating_sub(half);
            let hi = (i + half).min(j - 1);
            let slice = &values[lo..=hi];
            slice.iter().sum::<f64>() / slice.len() as f64
        })
        .collect();
    SampledSignal::new(signal.times().to_vec(), smoothed)
}

// ---------------------------------------------------------------------------
// Cubic splines
// ---------------------------------------------------------------------------

/// Natural cubic spline through a set of samples: second derivative vanishes
/// at both endpoints, C2 at interior knots, interpolates every sample.
#[derive(Debug, Clone)]
pub struct SplineModel {
    knots: Vec<f64>,
    values: Vec<f64>,
    /// Second derivative at each knot (zero at both ends).
    second_derivs: Vec<f64>,
}

impl SplineModel {
    pub fn domain(&self) -> (f64, f64) {
        (self.knots[0], self.knots[self.knots.len() - 1])
    }

    fn segment(&self, t: f64) -> usize {
        // partition_point returns the first knot > t; clamp to a valid segment
        let idx = self.knots.partition_point(|&k| k <= t);
        idx.clamp(1, self.knots.len() - 1) - 1
    }

    pub fn eval(&self, t: f64) -> f64 {
        let i = self.segment(t);
        let (t0, t1) = (self.knots[i], self.knots[i + 1]);
        let h = t1 - t0;
        let (s0, s1) = (self.second_derivs[i], self.second_derivs[i + 1]);
        let (y0, y1) = (self.values[i], self.values[i + 1]);
        let a = (t1 - t) / h;
        let b = (t - t0) / h;
        a * y0 + b * y1 + ((a * a * a - a) * s0 + (b * b * b - b) * s1) * h * h / 6.0
    }

    /// Second derivative of the segment containing `t`. At an interior knot
    /// the left and right segments agree (C2); pass a nudged `t` to probe a
    /// specific side.
    pub fn second_derivative(&self, t: f64) -> f64 {
        let i = self.segment(t);
        let (t0, t1) = (self.knots[i], self.knots[i + 1]);
        let h = t1 - t0;
        (self.second_derivs[i] * (t1 - t) + self.second_derivs[i + 1] * (t - t0)) / h
    }
}

/// Fits a natural cubic spline. Requires at least four samples.
pub fn fit_spline(signal: &SampledSignal) -> Result<SplineModel, SignalError> {
    let j = signal.len();
    if j < 4 {
        return Err(SignalError::TooFewSamples { min: 4, got: j });
    }
    let t = signal.times();
    let y = signal.values();
    let n = j - 1; // number of intervals
    let h: Vec<f64> = (0..n).map(|i| t[i + 1] - t[i]).collect();

    // Tridiagonal system for interior second derivatives, natural ends fixed
    // at zero. Thomas algorithm on rows 1..n-1.
    let mut diag = vec![0.0; j];
    let mut rhs = vec![0.0; j];
    for i in 1..n {
        diag[i] = 2.0 * (h[i - 1] + h[i]);
        rhs[i] = 6.0 * ((y[i + 1] - y[i]) / h[i] - (y[i] - y[i - 1]) / h[i - 1]);
    }
    let mut c_prime = vec![0.0; j];
    let mut d_prime = vec![0.0; j];
    for i in 1..n {
        let denom = diag[i] - if i > 1 { h[i - 1] * c_prime[i - 1] } else { 0.0 };
        c_prime[i] = h[i] / denom;
        let prev = if i > 1 { h[i - 1] * d_prime[i - 1] } else { 0.0 };
        d_prime[i] = (rhs[i] - prev) / denom;
    }
    let mut second = vec![0.0; j];
    for i in (1..n).rev() {
        second[i] = d_prime[i] - c_prime[i] * second[i + 1];
    }

    Ok(SplineModel {
        knots: t.to_vec(),
        values: y.to_vec(),
        second_derivs: second,
    })
}

// ---------------------------------------------------------------------------
// Trigonometric polynomials
// ---------------------------------------------------------------------------

/// A truncated Fourier series `sum_n a_n cos(nt) + b_n sin(nt)` on `[0, 2pi]`.
///
/// The complex coefficients are `(a_n - i b_n)/2` for `n > 0` and `a_0` at
/// `n = 0`; the harmonic radius is `r_n = sqrt(a_n^2 + b_n^2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPolynomial {
    /// Cosine coefficients `a_0..a_N`.
    cos: Vec<f64>,
    /// Sine coefficients `b_0..b_N`, with `b_0 = 0`.
    sin: Vec<f64>,
}

impl TrigPolynomial {
    pub fn new(cos: Vec<f64>, sin: Vec<f64>) -> Result<Self, SignalError> {
        if cos.len() != sin.len() {
            return Err(SignalError::LengthMismatch {
                times: cos.len(),
                values: sin.len(),
            });
        }
        if cos.is_empty() {
            return Err(SignalError::TooFewSamples { min: 1, got: 0 });
        }
        for (i, (&a, &b)) in cos.iter().zip(&sin).enumerate() {
            if !a.is_finite() || !b.is_finite() {
                return Err(SignalError::NonFinite { index: i });
            }
        }
        let mut sin = sin;
        sin[0] = 0.0;
        Ok(Self { cos, sin })
    }

    /// Builds `sum a_n cos(n t)` from the cosine coefficients alone.
    pub fn from_cosines(cos: Vec<f64>) -> Self {
        let sin = vec![0.0; cos.len()];
        Self::new(cos, sin).expect("cosine coefficients must be finite")
    }

    pub fn degree(&self) -> usize {
        self.cos.len() - 1
    }

    pub fn cos_coeffs(&self) -> &[f64] {
        &self.cos
    }

    pub fn sin_coeffs(&self) -> &[f64] {
        &self.sin
    }

    pub fn eval(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        for n in 0..self.cos.len() {
            let nt = n as f64 * t;
            acc += self.cos[n] * nt.cos() + self.sin[n] * nt.sin();
        }
        acc
    }

    /// Termwise derivative: `d/dt [a cos(nt) + b sin(nt)] = nb cos(nt) - na sin(nt)`.
    pub fn derivative(&self) -> Self {
        let mut cos = vec![0.0; self.cos.len()];
        let mut sin = vec![0.0; self.sin.len()];
        for n in 1..self.cos.len() {
            cos[n] = n as f64 * self.sin[n];
            sin[n] = -(n as f64) * self.cos[n];
        }
        Self { cos, sin }
    }

    pub fn deriv_eval(&self, order: usize, t: f64) -> f64 {
        let mut d = self.clone();
        for _ in 0..order {
            d = d.derivative();
        }
        d.eval(t)
    }

    /// Mean value over the period (the 0-th complex coefficient).
    pub fn mean(&self) -> f64 {
        self.cos[0]
    }

    /// Harmonic radius `r_n = sqrt(a_n^2 + b_n^2)` (`= 2|f^(n)|` for `n >= 1`).
    pub fn harmonic_radius(&self, n: usize) -> f64 {
        self.cos[n].hypot(self.sin[n])
    }

    /// Squared L2 norm with the `1/(2pi)` normalization:
    /// `a_0^2 + (1/2) sum_{n>=1} (a_n^2 + b_n^2)` by Parseval.
    pub fn norm_l2_sq(&self) -> f64 {
        let mut acc = self.cos[0] * self.cos[0];
        for n in 1..self.cos.len() {
            acc += 0.5 * (self.cos[n] * self.cos[n] + self.sin[n] * self.sin[n]);
        }
        acc
    }

    /// Radii of the centered, normalized sliding-window decomposition:
    /// `r_n / sqrt(sum_k r_k^2)` over `n >= 1`, so the squares sum to one.
    pub fn normalized_radii(&self) -> Vec<f64> {
        let radii: Vec<f64> = (0..=self.degree()).map(|n| self.harmonic_radius(n)).collect();
        let total: f64 = radii[1..].iter().map(|r| r * r).sum();
        let scale = total.sqrt();
        let mut out = vec![0.0; radii.len()];
        if scale > 0.0 {
            for n in 1..radii.len() {
                out[n] = radii[n] / scale;
            }
        }
        out
    }
}

/// Anything evaluable on the circle together with its derivatives; order 0 is
/// the function itself.
pub trait SmoothPeriodic {
    fn eval(&self, t: f64) -> f64;
    fn deriv(&self, order: usize, t: f64) -> f64;
}

impl SmoothPeriodic for TrigPolynomial {
    fn eval(&self, t: f64) -> f64 {
        TrigPolynomial::eval(self, t)
    }

    fn deriv(&self, order: usize, t: f64) -> f64 {
        self.deriv_eval(order, t)
    }
}

/// Computes the degree-`N` Fourier truncation of `f` by trapezoidal
/// quadrature on a uniform grid, which is exact (to rounding) for
/// trigonometric polynomials when the grid outruns the aliasing limit.
pub fn fourier_truncate(
    f: impl Fn(f64) -> f64,
    degree: usize,
    quadrature_points: usize,
) -> Result<TrigPolynomial, SignalError> {
    let min = 2 * degree + 2;
    if quadrature_points < min {
        return Err(SignalError::InsufficientQuadrature {
            degree,
            min,
            got: quadrature_points,
        });
    }
    let q = quadrature_points;
    let samples: Vec<f64> = (0..q).map(|k| f(TWO_PI * k as f64 / q as f64)).collect();
    let mut cos = vec![0.0; degree + 1];
    let mut sin = vec![0.0; degree + 1];
    for n in 0..=degree {
        let mut ac = 0.0;
        let mut asn = 0.0;
        for (k, &s) in samples.iter().enumerate() {
            let ang = n as f64 * TWO_PI * k as f64 / q as f64;
            ac += s * ang.cos();
            asn += s * ang.sin();
        }
        let scale = if n == 0 { 1.0 } else { 2.0 } / q as f64;
        cos[n] = ac * scale;
        sin[n] = asn * scale;
    }
    sin[0] = 0.0;
    TrigPolynomial::new(cos, sin)
}

/// L2 norm (with the `1/(2pi)` normalization) of the `k`-th derivative of the
/// truncation remainder `f - S_N f`, by dense quadrature.
pub fn remainder_l2(f: &dyn SmoothPeriodic, trunc: &TrigPolynomial, order: usize) -> f64 {
    const QUAD: usize = 8192;
    let mut acc = 0.0;
    for k in 0..QUAD {
        let t = TWO_PI * k as f64 / QUAD as f64;
        let r = f.deriv(order, t) - trunc.deriv_eval(order, t);
        acc += r * r;
    }
    (acc / QUAD as f64).sqrt()
}

// ---------------------------------------------------------------------------
// Synthetic signals
// ---------------------------------------------------------------------------

/// Waveform families for synthetic data. All span `[0, 2pi]`; the periodic
/// ones complete two periods (three for the chirp's fastest stretch) so that
/// `L = 2` window parameters resonate with them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    /// `cos(2t - phase)`
    Cosine,
    /// Cosine plus a linear trend spanning the full amplitude.
    TrendedCosine,
    /// Cosine damped by `exp(-t / 2pi)`.
    DampedCosine,
    /// Cosine with sharpened crests: `2 ((1 + cos(2t - phase)) / 2)^4 - 1`.
    PeakedCosine,
    /// Two-period rising sawtooth in `[-1, 1]`.
    Sawtooth,
    /// `sign(cos(2t - phase))`.
    SquareWave,
    /// Accelerating oscillation `cos(e^{t/2} - phase)`.
    Chirp,
    /// `Re(sum_{n=1}^{5} c_n e^{2int})` with `c_n` drawn from the unit disk.
    RandomTrig,
    Constant,
    Linear,
}

impl Shape {
    pub const ALL: [Shape; 10] = [
        Shape::Cosine,
        Shape::TrendedCosine,
        Shape::DampedCosine,
        Shape::PeakedCosine,
        Shape::Sawtooth,
        Shape::SquareWave,
        Shape::Chirp,
        Shape::RandomTrig,
        Shape::Constant,
        Shape::Linear,
    ];

    /// The four periodic shapes plus the two non-periodic controls used by
    /// the classification benchmark.
    pub const BENCHMARK: [Shape; 6] = [
        Shape::Cosine,
        Shape::TrendedCosine,
        Shape::DampedCosine,
        Shape::PeakedCosine,
        Shape::Constant,
        Shape::Linear,
    ];

    pub fn is_periodic(self) -> bool {
        !matches!(self, Shape::Constant | Shape::Linear)
    }

    pub fn name(self) -> &'static str {
        match self {
            Shape::Cosine => "cosine",
            Shape::TrendedCosine => "trended-cosine",
            Shape::DampedCosine => "damped-cosine",
            Shape::PeakedCosine => "peaked-cosine",
            Shape::Sawtooth => "sawtooth",
            Shape::SquareWave => "square-wave",
            Shape::Chirp => "chirp",
            Shape::RandomTrig => "random-trig",
            Shape::Constant => "constant",
            Shape::Linear => "linear",
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Shape {
    type Err = SignalError;

    fn from_str(s: &str) -> Result<Self, SignalError> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        Shape::ALL
            .iter()
            .copied()
            .find(|shape| shape.name() == key)
            .ok_or_else(|| SignalError::UnknownShape(s.to_string()))
    }
}

fn fract(x: f64) -> f64 {
    x - x.floor()
}

fn shape_value(shape: Shape, phase: f64, t: f64, trig: &[(f64, f64)]) -> f64 {
    match shape {
        Shape::Cosine => (2.0 * t - phase).cos(),
        Shape::TrendedCosine => (2.0 * t - phase).cos() + t / PI - 1.0,
        Shape::DampedCosine => (-t / TWO_PI).exp() * (2.0 * t - phase).cos(),
        Shape::PeakedCosine => {
            let u = (1.0 + (2.0 * t - phase).cos()) / 2.0;
            2.0 * u.powi(4) - 1.0
        }
        Shape::Sawtooth => 2.0 * fract((t - phase / 2.0) / PI) - 1.0,
        Shape::SquareWave => {
            let c = (2.0 * t - phase).cos();
            if c >= 0.0 {
                1.0
            } else {
                -1.0
            }
        }
        Shape::Chirp => ((0.5 * t).exp() - phase).cos(),
        Shape::RandomTrig => trig
            .iter()
            .enumerate()
            .map(|(i, &(re, im))| {
                let ang = 2.0 * (i + 1) as f64 * (t - phase / 2.0);
                re * ang.cos() - im * ang.sin()
            })
            .sum(),
        Shape::Constant => 1.0,
        Shape::Linear => t / PI - 1.0,
    }
}

/// One standard normal deviate via Box-Muller from two uniforms.
fn box_muller(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = 1.0 - rng.gen::<f64>(); // (0, 1]
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (TWO_PI * u2).cos()
}

/// Generates `n_samples` evenly spaced samples of `shape` on `[0, 2pi]` with
/// additive Gaussian noise.
///
/// The noise standard deviation is `noise_std_fraction` times the signal
/// amplitude, where amplitude is `(max - min) / 2` of the noiseless profile.
/// Randomness comes from a seeded ChaCha8 stream (counter-based, identical
/// across platforms) with normals produced by Box-Muller, so equal inputs
/// reproduce bit-identical outputs. The `RandomTrig` coefficients are drawn
/// from the same stream before the noise.
pub fn synth(
    shape: Shape,
    phase: f64,
    noise_std_fraction: f64,
    n_samples: usize,
    seed: u64,
) -> Result<SampledSignal, SignalError> {
    if n_samples < 2 {
        return Err(SignalError::TooFewSamples {
            min: 2,
            got: n_samples,
        });
    }
    if noise_std_fraction.is_nan() || noise_std_fraction < 0.0 {
        return Err(SignalError::NonFinite { index: 0 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trig: Vec<(f64, f64)> = if shape == Shape::RandomTrig {
        // rejection-sample the unit disk
        (0..5)
            .map(|_| loop {
                let re = 2.0 * rng.gen::<f64>() - 1.0;
                let im = 2.0 * rng.gen::<f64>() - 1.0;
                if re * re + im * im <= 1.0 {
                    break (re, im);
                }
            })
            .collect()
    } else {
        Vec::new()
    };

    let times: Vec<f64> = (0..n_samples)
        .map(|k| TWO_PI * k as f64 / (n_samples - 1) as f64)
        .collect();
    let clean: Vec<f64> = times
        .iter()
        .map(|&t| shape_value(shape, phase, t, &trig))
        .collect();
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for &v in &clean {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    let amplitude = (hi - lo) / 2.0;
    let sigma = noise_std_fraction * amplitude;
    let values: Vec<f64> = clean
        .into_iter()
        .map(|v| {
            if sigma > 0.0 {
                v + sigma * box_muller(&mut rng)
            } else {
                v
            }
        })
        .collect();
    SampledSignal::new(times, values)
}
