//! A compact version of the classification benchmark: phase-swept periodic
//! profiles against constant and linear negatives, scored by the embedding
//! pipeline and by Lomb-Scargle, compared via AUC. Uses 25 profiles per
//! shape so it finishes in about a minute; the acceptance suite runs the
//! full 100-per-shape version.
//!
//! ```text
//! cargo run --release --example roc_benchmark
//! ```

use rayon::prelude::*;
use sw1pers::baseline::ls_score;
use sw1pers::cli::{roc_auc, synth_dataset, read_dataset};
use sw1pers::scoring::{score, ScoreConfig};
use sw1pers::signal::Shape;

fn main() {
    let dir = std::env::temp_dir().join("sw1pers_roc_benchmark");
    let config = ScoreConfig {
        l_set: vec![2],
        ..ScoreConfig::default()
    };
    for noise in [0.0, 0.25] {
        synth_dataset(&dir, &Shape::BENCHMARK, 25, noise, 50, 42).expect("dataset");
        let data = read_dataset(&dir).expect("dataset read");
        let sw_scores: Vec<f64> = data
            .par_iter()
            .map(|(_, s)| score(s, &config).expect("score").value)
            .collect();
        let ls_scores: Vec<f64> = data.par_iter().map(|(_, s)| ls_score(s)).collect();

        println!("noise {:.0}%:", noise * 100.0);
        println!("{:>16} {:>10} {:>12}", "shape", "sw1pers", "lombscargle");
        let negatives = |scores: &[f64]| -> Vec<f64> {
            data.iter()
                .zip(scores)
                .filter(|((e, _), _)| !e.shape.is_periodic())
                .map(|(_, &s)| s)
                .collect()
        };
        let neg_sw = negatives(&sw_scores);
        let neg_ls = negatives(&ls_scores);
        for shape in [
            Shape::Cosine,
            Shape::TrendedCosine,
            Shape::DampedCosine,
            Shape::PeakedCosine,
        ] {
            let pos = |scores: &[f64]| -> Vec<f64> {
                data.iter()
                    .zip(scores)
                    .filter(|((e, _), _)| e.shape == shape)
                    .map(|(_, &s)| s)
                    .collect()
            };
            println!(
                "{:>16} {:>10.3} {:>12.3}",
                shape.name(),
                roc_auc(&pos(&sw_scores), &neg_sw),
                roc_auc(&pos(&ls_scores), &neg_ls)
            );
        }
        println!();
    }
    let _ = std::fs::remove_dir_all(&dir);
}
