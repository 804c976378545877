//! The end-to-end periodicity score: signal in, score in `[0, ~1]` out.
//!
//! Per candidate period count `L` the pipeline runs moving average, cubic
//! spline, domain rescaling to `[0, 2pi]`, the resonant sliding-window
//! embedding, centering, normalization, optional mean-shift, and 1-dimensional
//! persistence over `F_p`; the score is the best `max persistence / sqrt(3)`
//! across the sweep. `sqrt(3)` is the Rips death radius of a unit circle, so
//! a clean period scores near one.

use crate::denoise::{mean_shift, MeanShiftParams};
use crate::embedding::{self, EmbeddingError};
use crate::persistence::{self, FieldPrime, PersistenceError};
use crate::rips;
use crate::signal::{self, SampledSignal, SignalError, TWO_PI};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScoreError {
    #[error("signal too short: need at least 4 samples, got {0}")]
    SignalTooShort(usize),
    #[error("invalid configuration: {0}")]
    BadConfig(String),
    #[error(transparent)]
    Signal(#[from] SignalError),
    #[error(transparent)]
    Persistence(#[from] PersistenceError),
}

#[derive(Debug, Clone)]
pub struct ScoreConfig {
    /// Fourier degree governing the embedding dimension `M + 1 = 2N + 1`.
    pub n: usize,
    /// Homology coefficient field; must exceed `n`.
    pub field: FieldPrime,
    /// Candidate period counts; the best score across the sweep is reported.
    pub l_set: Vec<usize>,
    /// Number of base points populating the cloud.
    pub cloud_size: usize,
    /// Moving-average window (odd), applied when denoising is on.
    pub ma_window: usize,
    pub mean_shift: MeanShiftParams,
    /// Toggles both the moving average and the mean-shift pass.
    pub denoise: bool,
    /// Rips entry-time cap; 2 covers the diameter of a normalized cloud.
    pub threshold: f64,
}

impl Default for ScoreConfig {
    fn default() -> Self {
        Self {
            n: 10,
            field: FieldPrime::new(11).expect("11 is prime"),
            l_set: vec![2, 3, 4],
            cloud_size: 200,
            ma_window: 7,
            mean_shift: MeanShiftParams::default(),
            denoise: true,
            threshold: 2.0,
        }
    }
}

impl ScoreConfig {
    /// Full validation for the scoring sweep, including the `p > N`
    /// requirement the score semantics rest on.
    pub fn validate(&self) -> Result<(), ScoreError> {
        if self.field.value() as usize <= self.n {
            return Err(ScoreError::BadConfig(format!(
                "field prime {} must exceed N = {}",
                self.field.value(),
                self.n
            )));
        }
        self.validate_pipeline()
    }

    /// Validation of the embedding pipeline alone. Diagram inspection works
    /// over any prime, including p <= N (that freedom is the whole point of
    /// the field-dependence experiments), so the `p > N` gate is not
    /// applied here.
    pub fn validate_pipeline(&self) -> Result<(), ScoreError> {
        if self.l_set.is_empty() {
            return Err(ScoreError::BadConfig("L sweep is empty".into()));
        }
        if self.cloud_size < 2 * (2 * self.n + 1) {
            return Err(ScoreError::BadConfig(format!(
                "cloud size {} is below 2(2N+1) = {}",
                self.cloud_size,
                2 * (2 * self.n + 1)
            )));
        }
        if self.ma_window.is_multiple_of(2) {
            return Err(ScoreError::BadConfig(format!(
                "moving-average window {} must be odd",
                self.ma_window
            )));
        }
        Ok(())
    }
}

/// Per-`L` pipeline outcome: the maximizing pair of the H1 diagram, or a
/// degenerate marker when the embedded cloud collapsed (constant signal).
#[derive(Debug, Clone, Serialize)]
pub struct LBreakdown {
    pub l: usize,
    pub max_persistence: f64,
    pub birth: f64,
    pub death: f64,
    pub degenerate: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Score {
    /// `max persistence / sqrt(3)` of the best `L`.
    pub value: f64,
    pub best_l: usize,
    pub per_l: Vec<LBreakdown>,
}

/// Runs the signal-to-cloud half of the pipeline for one period count:
/// moving average, spline, rescale to `[0, 2pi]`, resonant embedding with
/// clipped windows, center, normalize, optional mean-shift. Returns `None`
/// when the centered cloud collapses (a constant signal).
pub fn embed_signal(
    signal: &SampledSignal,
    config: &ScoreConfig,
    l: usize,
) -> Result<Option<embedding::PointCloud>, ScoreError> {
    config.validate_pipeline()?;
    if signal.len() < 4 {
        return Err(ScoreError::SignalTooShort(signal.len()));
    }
    let prepared = if config.denoise {
        signal::moving_average(signal, config.ma_window.min(odd_cap(signal.len())))?
    } else {
        signal.clone()
    };
    let spline = signal::fit_spline(&prepared)?;
    let (t0, t1) = spline.domain();
    let span = t1 - t0;
    embed_spline(&spline, move |s| t0 + s * span / TWO_PI, config, l)
}

fn embed_spline(
    spline: &signal::SplineModel,
    rescale: impl Fn(f64) -> f64,
    config: &ScoreConfig,
    l: usize,
) -> Result<Option<embedding::PointCloud>, ScoreError> {
    let params = embedding::resonant_params(l, config.n);
    // clip windows so every evaluation stays inside the spline's domain
    let base_end = TWO_PI - params.window_size();
    let base = embedding::uniform_grid(config.cloud_size, 0.0, base_end);
    let cloud = embedding::sliding_window(|s| spline.eval(rescale(s)), params, &base)
        .map_err(PersistenceError::from)?;
    let centered = embedding::center(&cloud);
    let normalized = match embedding::normalize(&centered) {
        Ok(c) => c,
        Err(EmbeddingError::ZeroVector { .. }) => return Ok(None),
        Err(e) => return Err(PersistenceError::from(e).into()),
    };
    Ok(Some(if config.denoise {
        mean_shift(&normalized, &config.mean_shift).cloud
    } else {
        normalized
    }))
}

fn score_one_l(
    spline: &signal::SplineModel,
    rescale: impl Fn(f64) -> f64,
    l: usize,
    config: &ScoreConfig,
) -> Result<LBreakdown, ScoreError> {
    let cloud = match embed_spline(spline, rescale, config, l)? {
        Some(cloud) => cloud,
        None => {
            return Ok(LBreakdown {
                l,
                max_persistence: 0.0,
                birth: 0.0,
                death: 0.0,
                degenerate: true,
            })
        }
    };
    let complex = rips::build_rips(&rips::pairwise_distances(&cloud), 2, config.threshold)
        .map_err(PersistenceError::from)?;
    let homology = persistence::compute_persistence(&complex, config.field)?;
    let best = homology
        .h1
        .pairs
        .iter()
        .max_by(|a, b| a.persistence().total_cmp(&b.persistence()));
    Ok(match best {
        Some(pair) => LBreakdown {
            l,
            max_persistence: pair.persistence(),
            birth: pair.birth,
            death: pair.death,
            degenerate: false,
        },
        None => LBreakdown {
            l,
            max_persistence: 0.0,
            birth: 0.0,
            death: 0.0,
            degenerate: false,
        },
    })
}

/// Scores one signal. Degenerate cases (constant input, collapsed clouds)
/// yield score zero rather than an error. The moving-average window shrinks
/// to the largest odd value not exceeding the signal length, so short
/// signals stay scoreable under the default configuration.
pub fn score(signal: &SampledSignal, config: &ScoreConfig) -> Result<Score, ScoreError> {
    config.validate()?;
    if signal.len() < 4 {
        return Err(ScoreError::SignalTooShort(signal.len()));
    }
    let prepared = if config.denoise {
        signal::moving_average(signal, config.ma_window.min(odd_cap(signal.len())))?
    } else {
        signal.clone()
    };
    let spline = signal::fit_spline(&prepared)?;
    let (t0, t1) = spline.domain();
    let span = t1 - t0;
    let rescale = move |s: f64| t0 + s * span / TWO_PI;

    let mut per_l = Vec::with_capacity(config.l_set.len());
    for &l in &config.l_set {
        per_l.push(score_one_l(&spline, rescale, l, config)?);
    }
    let best = per_l
        .iter()
        .max_by(|a, b| {
            a.max_persistence
                .total_cmp(&b.max_persistence)
                .then(b.l.cmp(&a.l)) // stable preference for the smaller L on ties
        })
        .expect("l_set is nonempty");
    Ok(Score {
        value: best.max_persistence / 3.0f64.sqrt(),
        best_l: best.l,
        per_l: per_l.clone(),
    })
}

/// Largest odd window not exceeding the signal length.
fn odd_cap(len: usize) -> usize {
    if len.is_multiple_of(2) {
        len - 1
    } else {
        len
    }
}

/// Scores a batch and sorts descending; ties keep input order. Signals are
/// scored in parallel, the ordering is deterministic regardless.
pub fn rank(
    signals: &[SampledSignal],
    config: &ScoreConfig,
) -> Result<Vec<(usize, Score)>, ScoreError> {
    if signals.is_empty() {
        return Err(ScoreError::BadConfig("rank needs at least one signal".into()));
    }
    let mut scored: Vec<(usize, Score)> = signals
        .par_iter()
        .enumerate()
        .map(|(i, s)| score(s, config).map(|sc| (i, sc)))
        .collect::<Result<_, _>>()?;
    scored.sort_by(|a, b| b.1.value.total_cmp(&a.1.value).then(a.0.cmp(&b.0)));
    Ok(scored)
}
