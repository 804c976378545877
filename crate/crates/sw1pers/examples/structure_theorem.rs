//! With the resonant window, the centered and normalized embedding of an
//! L-periodic trigonometric polynomial winds around a torus with one circle
//! factor per harmonic; the radii are the normalized harmonic amplitudes.
//! This example checks all of that numerically.
//!
//! ```text
//! cargo run --release --example structure_theorem
//! ```

use sw1pers::embedding::verify_structure;
use sw1pers::signal::TrigPolynomial;

fn main() {
    let cases = [
        ("cos(2t)", TrigPolynomial::from_cosines(vec![0.0, 0.0, 1.0]), 2usize),
        (
            "cos(2t) + cos(4t)",
            TrigPolynomial::from_cosines(vec![0.0, 0.0, 1.0, 0.0, 1.0]),
            2,
        ),
        (
            "0.6 cos(t) + 0.8 cos(2t)",
            TrigPolynomial::from_cosines(vec![0.0, 0.6, 0.8]),
            1,
        ),
        (
            "0.3 + sin(3t) - 0.5 cos(6t)",
            TrigPolynomial::new(
                vec![0.3, 0.0, 0.0, 0.0, 0.0, 0.0, -0.5],
                vec![0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0],
            )
            .unwrap(),
            3,
        ),
    ];
    for (name, trig, l) in cases {
        let report = verify_structure(&trig, l).expect("valid L-periodic input");
        println!("{name}  (L = {l}, M = {}, tau = {:.5})", report.m, report.tau);
        println!("  orthogonality residual   {:.3e}", report.orthogonality_residual);
        println!("  basis norm deviation     {:.3e}", report.norm_deviation);
        println!("  centered norm deviation  {:.3e}", report.centered_norm_deviation);
        println!("  decomposition residual   {:.3e}", report.decomposition_residual);
        let radii: Vec<String> = report
            .radii
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0.0)
            .map(|(n, r)| format!("r_{n} = {r:.4}"))
            .collect();
        println!("  torus radii: {}", radii.join(", "));
        println!();
    }

    // a mislabeled period count is caught immediately
    let cos3 = TrigPolynomial::from_cosines(vec![0.0, 0.0, 0.0, 1.0]);
    match verify_structure(&cos3, 2) {
        Err(e) => println!("cos(3t) claimed 2-periodic -> {e}"),
        Ok(_) => unreachable!(),
    }
}
