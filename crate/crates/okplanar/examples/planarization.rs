//! Planarizing a drawing with exact rational coordinates: the crossing graph
//! G_C, the subdivided graph G_S, faces, and the dual-distance bound that
//! drives the width result.
//!
//! Run with: cargo run --example planarization

use okplanar::decomp::build_tree_pair;
use okplanar::families::gen_stacked_prism;
use okplanar::planarize;

fn main() {
    let k = 4; // Y_{8,3} is outer min-4-planar
    let d = gen_stacked_prism(8, 3);
    let hulled = d.hull_complete().unwrap();
    let expanded = hulled.expand().unwrap().expanded;
    let p = planarize(&expanded).unwrap();

    println!(
        "Y_8_3 expanded: n = {}, m = {}, crossings = {}",
        expanded.n(),
        expanded.m(),
        p.report.pairs.len()
    );
    println!(
        "G_C: {} vertices, {} edges, {} faces (V - E + F = {})",
        p.gc.num_vertices(),
        p.gc.num_edges(),
        p.gc_faces.num_faces(),
        p.gc.num_vertices() as i64 - p.gc.num_edges() as i64 + p.gc_faces.num_faces() as i64
    );
    println!(
        "G_S: {} vertices, {} edges, {} faces, {} auxiliary edges",
        p.gs.num_vertices(),
        p.gs.num_edges(),
        p.gs_faces.num_faces(),
        p.gs.aux_edges.len()
    );
    println!("placement attempt used: {}", p.attempt);

    let longest = p
        .gc
        .chains
        .iter()
        .map(|c| c.len())
        .max()
        .unwrap();
    println!("longest edge chain in G_C: {longest} vertices");

    let pair = build_tree_pair(&p, k).unwrap();
    println!(
        "dual tree rooted at the outer face: max depth {} (bound floor({k}/2) + 1 = {})",
        pair.max_depth(),
        k / 2 + 1
    );
}
