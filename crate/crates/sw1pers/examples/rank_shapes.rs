//! Shape-independence: rank ten different waveforms purely by how periodic
//! they are. A clean cosine, a noisy sawtooth and a spiky wave should all
//! outrank a chirp or a constant, regardless of what the repeating pattern
//! looks like.
//!
//! ```text
//! cargo run --release --example rank_shapes
//! ```

use sw1pers::scoring::{rank, ScoreConfig};
use sw1pers::signal::{synth, SampledSignal, Shape};

fn main() {
    let fixtures: Vec<(String, SampledSignal)> = vec![
        ("pure cosine".into(), synth(Shape::Cosine, 0.0, 0.0, 50, 1).unwrap()),
        ("cosine + 25% noise".into(), synth(Shape::Cosine, 0.0, 0.25, 50, 2).unwrap()),
        ("cosine + 50% noise".into(), synth(Shape::Cosine, 0.0, 0.50, 50, 3).unwrap()),
        ("cosine + 75% noise".into(), synth(Shape::Cosine, 0.0, 0.75, 50, 4).unwrap()),
        ("sawtooth + 25% noise".into(), synth(Shape::Sawtooth, 0.0, 0.25, 50, 5).unwrap()),
        ("square + 25% noise".into(), synth(Shape::SquareWave, 0.0, 0.25, 50, 6).unwrap()),
        ("damped cosine + 25% noise".into(), synth(Shape::DampedCosine, 0.0, 0.25, 50, 7).unwrap()),
        ("random trig polynomial".into(), synth(Shape::RandomTrig, 0.0, 0.0, 50, 8).unwrap()),
        ("chirp".into(), synth(Shape::Chirp, 0.0, 0.0, 50, 9).unwrap()),
        ("constant".into(), synth(Shape::Constant, 0.0, 0.0, 50, 10).unwrap()),
    ];
    let signals: Vec<SampledSignal> = fixtures.iter().map(|(_, s)| s.clone()).collect();
    let config = ScoreConfig::default();
    let ranked = rank(&signals, &config).expect("ranking");
    println!("{:>4}  {:<28} {:>8} {:>4}", "rank", "signal", "score", "L");
    for (position, (idx, score)) in ranked.iter().enumerate() {
        println!(
            "{:>4}  {:<28} {:>8.4} {:>4}",
            position + 1,
            fixtures[*idx].0,
            score.value,
            score.best_l
        );
    }
}
