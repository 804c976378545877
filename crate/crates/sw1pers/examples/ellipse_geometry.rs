//! The sliding-window cloud of cos(Lt) is an ellipse whose axes come from a
//! closed form; it is roundest when L(M+1)tau is a multiple of pi. This
//! example sweeps the window size and compares the closed form against
//! numerically computed Gram eigenvalues.
//!
//! ```text
//! cargo run --release --example ellipse_geometry
//! ```

use sw1pers::embedding::{basis_vectors, ellipse_eigenvalues, WindowParams};

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn main() {
    let l = 2usize;
    let m = 20usize;
    println!("f(t) = cos({l}t), M = {m}: eccentricity as the window grows");
    println!("{:>10} {:>12} {:>12} {:>12} {:>12}", "M*tau", "lambda1", "lambda2", "numeric1", "numeric2");
    for step in 1..=12 {
        let window = step as f64 * 0.5;
        let tau = window / m as f64;
        let params = WindowParams::new(m, tau).unwrap();
        let closed = match ellipse_eigenvalues(l, params) {
            Ok(pair) => pair,
            Err(_) => continue,
        };
        let (u, v) = basis_vectors(l, params);
        let (uu, vv, uv) = (dot(&u, &u), dot(&v, &v), dot(&u, &v));
        let mean = (uu + vv) / 2.0;
        let gap = (((uu - vv) / 2.0).powi(2) + uv * uv).sqrt();
        println!(
            "{:>10.3} {:>12.6} {:>12.6} {:>12.6} {:>12.6}",
            window,
            closed.0,
            closed.1,
            mean + gap,
            mean - gap
        );
    }

    // resonance: L (M+1) tau = 2 pi makes the ellipse a circle
    let tau = std::f64::consts::TAU / (l as f64 * (m as f64 + 1.0));
    let params = WindowParams::new(m, tau).unwrap();
    let (l1, l2) = ellipse_eigenvalues(l, params).unwrap();
    println!();
    println!(
        "resonant window M*tau = {:.4}: lambda1 = lambda2 = {:.4} (= (M+1)/2 = {:.1})",
        params.window_size(),
        l1.max(l2),
        (m as f64 + 1.0) / 2.0
    );
    assert!((l1 - l2).abs() < 1e-9);
}
