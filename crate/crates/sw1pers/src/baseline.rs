//! Classic Lomb-Scargle periodogram, the comparison baseline for the
//! classification experiments.

use crate::signal::SampledSignal;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BaselineError {
    #[error("periodogram needs at least 3 samples, got {0}")]
    TooFewSamples(usize),
    #[error("frequencies must be positive, got {0}")]
    InvalidFrequency(f64),
}

/// Normalized power sampled on a frequency grid (cycles per time unit).
#[derive(Debug, Clone, Serialize)]
pub struct Periodogram {
    pub frequencies: Vec<f64>,
    pub power: Vec<f64>,
}

impl Periodogram {
    pub fn peak(&self) -> Option<(f64, f64)> {
        self.frequencies
            .iter()
            .zip(&self.power)
            .max_by(|a, b| a.1.total_cmp(b.1))
            .map(|(&f, &p)| (f, p))
    }
}

/// Lomb-Scargle periodogram: mean-subtracted, per-frequency phase shift
/// `tan(2 w tau_f) = sum sin(2 w t) / sum cos(2 w t)`, power normalized by
/// the sample variance. A constant signal (zero variance) has zero power
/// everywhere by definition.
pub fn lomb_scargle(
    signal: &SampledSignal,
    frequencies: &[f64],
) -> Result<Periodogram, BaselineError> {
    let j = signal.len();
    if j < 3 {
        return Err(BaselineError::TooFewSamples(j));
    }
    if let Some(&f) = frequencies.iter().find(|&&f| f.is_nan() || f <= 0.0) {
        return Err(BaselineError::InvalidFrequency(f));
    }
    let times = signal.times();
    let mean = signal.values().iter().sum::<f64>() / j as f64;
    let y: Vec<f64> = signal.values().iter().map(|v| v - mean).collect();
    let variance = y.iter().map(|v| v * v).sum::<f64>() / (j as f64 - 1.0);

    let mut power = Vec::with_capacity(frequencies.len());
    if variance == 0.0 {
        power.resize(frequencies.len(), 0.0);
        return Ok(Periodogram {
            frequencies: frequencies.to_vec(),
            power,
        });
    }

    for &f in frequencies {
        let w = std::f64::consts::TAU * f;
        let (mut s2, mut c2) = (0.0, 0.0);
        for &t in times {
            let a = 2.0 * w * t;
            s2 += a.sin();
            c2 += a.cos();
        }
        let tau = s2.atan2(c2) / (2.0 * w);
        let (mut yc, mut ys, mut cc, mut ss) = (0.0, 0.0, 0.0, 0.0);
        for (&t, &v) in times.iter().zip(&y) {
            let a = w * (t - tau);
            let (sin, cos) = a.sin_cos();
            yc += v * cos;
            ys += v * sin;
            cc += cos * cos;
            ss += sin * sin;
        }
        let cos_term = if cc > 0.0 { yc * yc / cc } else { 0.0 };
        let sin_term = if ss > 0.0 { ys * ys / ss } else { 0.0 };
        power.push((cos_term + sin_term) / (2.0 * variance));
    }
    Ok(Periodogram {
        frequencies: frequencies.to_vec(),
        power,
    })
}

/// Default grid: 0.5 to `J/4` cycles per record, oversampled four-fold
/// (step 0.25 cycles per record).
pub fn default_frequency_grid(signal: &SampledSignal) -> Vec<f64> {
    let (t0, t1) = signal.domain();
    let record = t1 - t0;
    let max_cycles = signal.len() as f64 / 4.0;
    let mut grid = Vec::new();
    let mut c = 0.5;
    while c <= max_cycles + 1e-12 {
        grid.push(c / record);
        c += 0.25;
    }
    grid
}

/// One scalar for ranking/ROC: the maximum normalized power over the default
/// grid. Larger means more periodic. ROC analysis is invariant to monotone
/// transforms, so the raw peak carries the same information as a p-value.
pub fn ls_score(signal: &SampledSignal) -> f64 {
    match lomb_scargle(signal, &default_frequency_grid(signal)) {
        Ok(p) => p.peak().map(|(_, power)| power).unwrap_or(0.0),
        Err(_) => 0.0,
    }
}
