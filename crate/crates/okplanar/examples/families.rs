//! The graph families: grids, G_k, the stretched F_k with its prescribed
//! drawing, and stacked prisms, with their measured crossing numbers.
//!
//! Run with: cargo run --example families

use okplanar::families::{gen_fk, gen_gk, gen_grid, gen_stacked_prism};

fn main() {
    let g = gen_grid(3, 4);
    println!("grid 3x4: {} vertices, {} edges", g.n(), g.m());

    for k in 1..=2usize {
        let g = gen_gk(k);
        println!(
            "G_{k}: {} vertices, {} edges (abstract graph, treewidth 3k-1 = {})",
            g.n(),
            g.m(),
            3 * k - 1
        );
    }

    for k in 1..=4usize {
        let d = gen_fk(k);
        let r = d.crossings();
        println!(
            "F_{k}: {} vertices, {} edges, measured k-value {} (proved <= 2k-1 = {})",
            d.n(),
            d.m(),
            r.k_value,
            2 * k - 1
        );
    }

    for (m, n) in [(6usize, 1usize), (6, 3), (8, 3)] {
        let d = gen_stacked_prism(m, n);
        let r = d.crossings();
        println!(
            "Y_{m}_{n}: {} vertices, k-value {} = min-k-value {} (2n-2 = {})",
            d.n(),
            r.k_value,
            r.min_k_value,
            2 * n - 2
        );
    }
}
