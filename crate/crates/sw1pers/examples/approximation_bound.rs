//! Truncating a signal's Fourier series moves its sliding-window cloud by a
//! bounded amount: d_H(X, Y) <= sqrt(4k-2) ||R_N f^(k)||_2 sqrt(M+1) /
//! (N+1)^(k-1/2). This example measures actual distances against the k = 1
//! and k = 2 bounds.
//!
//! ```text
//! cargo run --release --example approximation_bound
//! ```

use sw1pers::embedding::{circle_grid, resonant_params, sliding_window, PointCloud};
use sw1pers::signal::{fourier_truncate, remainder_l2, TrigPolynomial};

fn hausdorff(x: &PointCloud, y: &PointCloud) -> f64 {
    let one_sided = |a: &PointCloud, b: &PointCloud| -> f64 {
        a.points()
            .map(|p| {
                b.points()
                    .map(|q| {
                        p.iter()
                            .zip(q)
                            .map(|(s, t)| (s - t) * (s - t))
                            .sum::<f64>()
                    })
                    .fold(f64::INFINITY, f64::min)
                    .sqrt()
            })
            .fold(0.0, f64::max)
    };
    one_sided(x, y).max(one_sided(y, x))
}

fn main() {
    // f = cos t + 0.5 cos 4t + 0.2 cos 7t
    let f = TrigPolynomial::from_cosines(vec![0.0, 1.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.2]);
    let base = circle_grid(200);
    println!("f = cos t + 0.5 cos 4t + 0.2 cos 7t, 200 base points");
    println!(
        "{:>3} {:>10} {:>12} {:>10} {:>12} {:>10}",
        "N", "d_H", "k=1 bound", "slack", "k=2 bound", "slack"
    );
    for n in [1usize, 2, 3, 4, 5, 6] {
        let trunc = fourier_truncate(|t| f.eval(t), n, 256).unwrap();
        let params = resonant_params(1, n);
        let x = sliding_window(|t| f.eval(t), params, &base).unwrap();
        let y = sliding_window(|t| trunc.eval(t), params, &base).unwrap();
        let d_h = hausdorff(&x, &y);
        let dim = (params.m() + 1) as f64;
        let np1 = (n + 1) as f64;
        let k1 = 2.0f64.sqrt() * remainder_l2(&f, &trunc, 1) * dim.sqrt() / np1.sqrt();
        let k2 = 6.0f64.sqrt() * remainder_l2(&f, &trunc, 2) * dim.sqrt() / np1.powf(1.5);
        if d_h < 1e-13 {
            println!("{n:>3} {d_h:>10.2e}  (truncation is exact beyond the top harmonic)");
            continue;
        }
        println!(
            "{:>3} {:>10.4} {:>12.4} {:>9.1}x {:>12.4} {:>9.1}x",
            n,
            d_h,
            k1,
            k1 / d_h,
            k2,
            k2 / d_h
        );
    }
}
