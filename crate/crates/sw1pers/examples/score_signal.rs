//! Score a few synthetic signals end to end and print the per-L breakdown.
//!
//! ```text
//! cargo run --release --example score_signal
//! ```

use sw1pers::scoring::{score, ScoreConfig};
use sw1pers::signal::{synth, Shape};

fn main() {
    let config = ScoreConfig::default();
    println!(
        "defaults: N = {}, F_{}, L in {:?}, cloud {}, MA window {}, denoise {}",
        config.n,
        config.field.value(),
        config.l_set,
        config.cloud_size,
        config.ma_window,
        config.denoise
    );
    println!();

    let cases = [
        (Shape::Cosine, 0.0),
        (Shape::Cosine, 0.25),
        (Shape::Cosine, 0.75),
        (Shape::Sawtooth, 0.25),
        (Shape::SquareWave, 0.1),
        (Shape::Chirp, 0.0),
        (Shape::Linear, 0.0),
        (Shape::Constant, 0.0),
    ];
    for (shape, noise) in cases {
        let signal = synth(shape, 0.4, noise, 50, 7).expect("synthesis");
        let result = score(&signal, &config).expect("scoring");
        println!(
            "{:>13} @ {:>4.0}% noise  ->  score {:.4} (L = {})",
            shape.name(),
            noise * 100.0,
            result.value,
            result.best_l
        );
        for b in &result.per_l {
            println!(
                "               L = {}: mp {:.4} (birth {:.4}, death {:.4}){}",
                b.l,
                b.max_persistence,
                b.birth,
                b.death,
                if b.degenerate { " [degenerate]" } else { "" }
            );
        }
    }
}
