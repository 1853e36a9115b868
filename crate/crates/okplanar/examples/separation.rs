//! Balanced separations of order at most 2 * floor(k/2) + 4, extracted from
//! the pipeline's tree decomposition and compared against the exhaustive
//! oracle on small instances.
//!
//! Run with: cargo run --example separation

use okplanar::families::gen_stacked_prism;
use okplanar::separate::{brute_force_min_balanced_separation_capped, verify_separation};
use okplanar::{separate, ConvexDrawing};

fn main() {
    for (m, n) in [(6usize, 2usize), (8, 3)] {
        let d = gen_stacked_prism(m, n);
        let k = 2 * n - 2;
        let sep = separate(&d, k).unwrap();
        let g = d.graph();
        verify_separation(&g, &sep).unwrap();
        println!(
            "Y_{m}_{n} (n = {}, outer min-{k}-planar): separation order {} <= bound {}",
            d.n(),
            sep.order(),
            2 * (k / 2) + 4
        );
        println!(
            "  separator {:?}, strict sides {} / {}",
            sep.separator(),
            sep.strict_a().len(),
            sep.strict_b().len()
        );
        if g.n() <= 16 {
            let best = brute_force_min_balanced_separation_capped(&g, 16).unwrap();
            println!("  exhaustive minimum order: {best}");
        }
    }

    let c9 = ConvexDrawing::new(9, (0..9).map(|i| {
        let j = (i + 1) % 9;
        (i.min(j), i.max(j))
    }))
    .unwrap();
    let sep = separate(&c9, 0).unwrap();
    println!(
        "C_9 with k = 0: order {} (exhaustive minimum {})",
        sep.order(),
        brute_force_min_balanced_separation_capped(&c9.graph(), 16).unwrap()
    );
}
