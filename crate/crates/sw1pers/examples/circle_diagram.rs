//! First contact with the persistence machinery: the diagram of points on a
//! circle, the effect of the coefficient field, and the bottleneck distance
//! under perturbation.
//!
//! ```text
//! cargo run --release --example circle_diagram
//! ```

use sw1pers::embedding::PointCloud;
use sw1pers::persistence::{bottleneck, cloud_persistence, FieldPrime};
use sw1pers::signal::TWO_PI;

fn circle(n: usize, wobble: f64) -> PointCloud {
    PointCloud::from_rows(
        (0..n)
            .map(|k| {
                let a = TWO_PI * k as f64 / n as f64;
                let r = 1.0 + wobble * (7.0 * a).sin();
                vec![r * a.cos(), r * a.sin()]
            })
            .collect(),
    )
}

fn main() {
    let clean = circle(150, 0.0);
    let hom = cloud_persistence(&clean, 2.0, FieldPrime::new(11).unwrap()).unwrap();
    println!("150 points on the unit circle:");
    println!(
        "  components: {} essential, {} finite H0 deaths",
        hom.h0.pairs.iter().filter(|p| p.death.is_infinite()).count(),
        hom.h0.finite_pairs().count()
    );
    for pair in &hom.h1.pairs {
        println!(
            "  H1 class: born {:.5} (nearest-neighbor gap 2 sin(pi/150) = {:.5}), dies {:.5} (sqrt(3) = {:.5})",
            pair.birth,
            2.0 * (std::f64::consts::PI / 150.0).sin(),
            pair.death,
            3.0f64.sqrt()
        );
    }

    // same diagram over any field for this torsion-free cloud
    let f2 = cloud_persistence(&clean, 2.0, FieldPrime::new(2).unwrap()).unwrap();
    let d_fields = bottleneck(&hom.h1, &f2.h1).unwrap();
    println!("  F_2 vs F_11 bottleneck: {d_fields:.1e}");

    // stability: a wobbled circle moves the diagram by at most 2 * sup-norm
    let wobbled = circle(150, 0.05);
    let hom_w = cloud_persistence(&wobbled, 2.0, FieldPrime::new(11).unwrap()).unwrap();
    let d = bottleneck(&hom.h1, &hom_w.h1).unwrap();
    println!("  5% radial wobble: d_B = {d:.4} (bound 2 * 0.05 = 0.1)");
}
