//! As the embedding dimension grows with the resonant window fixed, the
//! diagrams of the centered, normalized clouds settle down: consecutive
//! bottleneck distances shrink. For a signal that is itself a trigonometric
//! polynomial they collapse to rounding noise as soon as every harmonic is
//! captured, because the normalized clouds become isometric.
//!
//! ```text
//! cargo run --release --example convergence
//! ```

use sw1pers::embedding::{center, circle_grid, normalize, resonant_params, sliding_window};
use sw1pers::persistence::{bottleneck, cloud_persistence, FieldPrime, PersistenceDiagram};
use sw1pers::signal::TrigPolynomial;

fn main() {
    let field = FieldPrime::new(11).unwrap();
    let base = circle_grid(100);

    // degree-4 signal: diagrams coincide exactly from N = 4 on
    let exact = TrigPolynomial::from_cosines(vec![0.0, 0.0, 1.0, 0.0, 0.5]);
    // an infinite series stand-in: truncations of a sawtooth-like profile
    let series: Vec<f64> = (0..=12)
        .map(|n| if n == 0 { 0.0 } else { 1.0 / n as f64 })
        .collect();
    let rough = TrigPolynomial::from_cosines(series);

    for (name, trig, l) in [
        ("cos(2t) + 0.5 cos(4t), L = 2", exact, 2usize),
        ("sum_{n<=12} cos(nt)/n, L = 1", rough, 1),
    ] {
        println!("{name}");
        let diagram = |n: usize| -> PersistenceDiagram {
            let truncated = TrigPolynomial::new(
                trig.cos_coeffs()[..=n.min(trig.degree())].to_vec(),
                trig.sin_coeffs()[..=n.min(trig.degree())].to_vec(),
            )
            .unwrap();
            let params = resonant_params(l, n);
            let cloud = sliding_window(|t| truncated.eval(t), params, &base).unwrap();
            let normalized = normalize(&center(&cloud)).unwrap();
            cloud_persistence(&normalized, 2.0, field).unwrap().h1
        };
        let ns = [4usize, 6, 8, 10, 12];
        let dgms: Vec<PersistenceDiagram> = ns.iter().map(|&n| diagram(n)).collect();
        for (w, pair) in ns.windows(2).zip(dgms.windows(2)) {
            let d = bottleneck(&pair[0], &pair[1]).unwrap();
            println!("  d_B(dgm_{}, dgm_{}) = {:.6}", w[0], w[1], d);
        }
        println!();
    }
}
