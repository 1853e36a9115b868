//! Crossing analysis of convex drawings: per-edge counts, the k-value and
//! the min-k-value, and what they mean for outer (min-)k-planarity.
//!
//! Run with: cargo run --example crossings

use okplanar::ConvexDrawing;

fn complete(n: usize) -> ConvexDrawing {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    ConvexDrawing::new(n, edges).unwrap()
}

fn main() {
    for n in [4usize, 5, 6, 7] {
        let d = complete(n);
        let r = d.crossings();
        println!(
            "K_{n} on a circle: {} crossing pairs, k-value {}, min-k-value {}",
            r.pairs.len(),
            r.k_value,
            r.min_k_value
        );
        for k in 0..=r.k_value {
            println!(
                "  outer {k}-planar: {:5}   outer min-{k}-planar: {}",
                d.is_outer_k_planar(k),
                d.is_outer_min_k_planar(k)
            );
        }
    }

    // The cyclic order matters: the same 6-cycle with a twisted order crosses.
    let plain = ConvexDrawing::new(6, (0..6).map(|i| (i, (i + 1) % 6)).map(|(a, b)| (a.min(b), a.max(b)))).unwrap();
    let twisted = ConvexDrawing::with_order(
        6,
        plain.edges().to_vec(),
        vec![0, 2, 4, 1, 5, 3],
    )
    .unwrap();
    println!(
        "C_6 drawn in order 1..6: k-value {}; drawn in order 1,3,5,2,6,4: k-value {}",
        plain.crossings().k_value,
        twisted.crossings().k_value
    );
}
