//! Effect of mean-shift smoothing on a noisy embedded cloud: the dominant
//! 1-cycle's persistence before and after one pass, under both neighbor
//! rules.
//!
//! ```text
//! cargo run --release --example mean_shift_denoising
//! ```

use sw1pers::denoise::{mean_shift, MeanShiftParams, MeanShiftRule};
use sw1pers::persistence::{cloud_persistence, max_persistence, FieldPrime};
use sw1pers::scoring::{embed_signal, ScoreConfig};
use sw1pers::signal::{synth, Shape};

fn main() {
    let field = FieldPrime::new(11).unwrap();
    let signal = synth(Shape::Cosine, 0.0, 0.5, 50, 3).expect("synthesis");
    // embed without any denoising to get the raw cloud
    let raw_config = ScoreConfig {
        l_set: vec![2],
        denoise: false,
        ..ScoreConfig::default()
    };
    let cloud = embed_signal(&signal, &raw_config, 2)
        .expect("embedding")
        .expect("nondegenerate");

    let mp_raw = max_persistence(&cloud_persistence(&cloud, 2.0, field).unwrap().h1);
    println!("cosine + 50% noise, embedded at L = 2 ({} points)", cloud.len());
    println!("raw cloud:                 mp = {mp_raw:.4} (score {:.4})", mp_raw / 3f64.sqrt());

    for (label, rule, eps) in [
        ("similarity rule, eps = cos(pi/16)", MeanShiftRule::Similarity, (std::f64::consts::PI / 16.0).cos()),
        ("angular rule,    eps = cos(pi/16)", MeanShiftRule::Angular, (std::f64::consts::PI / 16.0).cos()),
    ] {
        let params = MeanShiftParams {
            epsilon: eps,
            iterations: 1,
            rule,
        };
        let shifted = mean_shift(&cloud, &params);
        let mp = max_persistence(&cloud_persistence(&shifted.cloud, 2.0, field).unwrap().h1);
        println!(
            "{label}: mp = {:.4} (score {:.4}){}",
            mp,
            mp / 3f64.sqrt(),
            if shifted.degenerate.is_empty() {
                String::new()
            } else {
                format!(" [{} degenerate points]", shifted.degenerate.len())
            }
        );
    }
}
