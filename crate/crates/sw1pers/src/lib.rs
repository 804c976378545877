//! Periodicity quantification for sampled signals.
//!
//! The pipeline embeds a signal into `R^{M+1}` with a sliding window
//! `t -> (f(t), f(t+tau), ..., f(t+M*tau))`, centers and normalizes the
//! resulting point cloud, and measures how circular the cloud is via the
//! maximum persistence of its 1-dimensional Vietoris-Rips persistent
//! homology over a prime field. Periodic signals trace closed curves, so
//! a long-lived 1-cycle is direct evidence of repetition, independent of
//! the waveform's shape.
//!
//! Module layout mirrors the pipeline:
//!
//! * [`signal`] - ingestion, cubic splines, moving average, Fourier truncation,
//!   synthetic signal generation.
//! * [`embedding`] - sliding-window point clouds and their closed-form geometry
//!   for trigonometric inputs.
//! * [`denoise`] - mean-shift smoothing of normalized clouds.
//! * [`rips`] - Vietoris-Rips filtrations up to dimension 2.
//! * [`persistence`] - persistence diagrams over `F_p`, bottleneck and
//!   Wasserstein metrics.
//! * [`scoring`] - the end-to-end periodicity score.
//! * [`baseline`] - Lomb-Scargle periodogram for comparison.
//! * [`cli`] - command-line drivers, ROC/AUC evaluation, file formats.
//!
//! See the crate examples for runnable walkthroughs of each capability.

pub mod baseline;
pub mod cli;
pub mod denoise;
pub mod embedding;
pub mod persistence;
pub mod rips;
pub mod scoring;
pub mod signal;

pub use embedding::{PointCloud, WindowParams};
pub use persistence::{FieldPrime, PersistenceDiagram};
pub use rips::FilteredComplex;
pub use scoring::{Score, ScoreConfig};
pub use signal::{SampledSignal, TrigPolynomial};
