//! Degree reduction: high-degree vertices become paths of images on their
//! arc, preserving every crossing count. The expansion is what lets the
//! pipeline assume maximum degree 3.
//!
//! Run with: cargo run --example expansion

use okplanar::ConvexDrawing;

fn main() {
    let mut edges = Vec::new();
    for u in 0..7 {
        for v in u + 1..7 {
            edges.push((u, v));
        }
    }
    let k7 = ConvexDrawing::new(7, edges).unwrap();
    let before = k7.crossings();
    let ex = k7.expand().unwrap();
    let after = ex.expanded.crossings();

    println!(
        "K_7: {} vertices (max degree {}) -> {} vertices (max degree {})",
        k7.n(),
        k7.max_degree(),
        ex.expanded.n(),
        ex.expanded.max_degree()
    );
    for v in 0..k7.n() {
        println!("  vertex {v} -> images {:?}", ex.images[v]);
    }
    println!(
        "k-value {} -> {}, min-k-value {} -> {}",
        before.k_value, after.k_value, before.min_k_value, after.min_k_value
    );

    let mut preserved = 0;
    for (i, &e) in k7.edges().iter().enumerate() {
        let ne = ex.edge_map[&e];
        let ni = ex.expanded.edge_index(ne).unwrap();
        assert_eq!(before.per_edge[i], after.per_edge[ni]);
        preserved += 1;
    }
    println!("all {preserved} corresponding edges keep their crossing counts");
}
