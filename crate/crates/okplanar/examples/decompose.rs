//! Tree decomposition of an outer min-k-planar drawing with certified width
//! at most 3 * floor(k/2) + 4, written to a PACE-style .td file.
//!
//! Run with: cargo run --example decompose

use okplanar::decomp::run_pipeline;
use okplanar::families::gen_fk;
use okplanar::io::write_td;
use okplanar::oracles::exact_treewidth;

fn main() {
    let k = 3; // F_2 is outer 3-planar
    let d = gen_fk(2);
    let run = run_pipeline(&d, k).unwrap();

    println!(
        "F_2: n = {}, m = {}, outer min-{k}-planar",
        d.n(),
        d.m()
    );
    println!(
        "expanded graph: {} vertices; decomposition has {} bags on the spanning tree T_S",
        run.expansion.expanded.n(),
        run.td.num_nodes()
    );
    println!(
        "width {} <= bound 3 * floor({k}/2) + 4 = {}",
        run.td.width(),
        run.width_bound()
    );
    println!("validator: {:?} violations", run.td.validate(&d.graph()).len());

    // The crossing-free comparison point: a cycle has treewidth 2.
    let c12 = okplanar::ConvexDrawing::new(12, (0..12).map(|i| {
        let j = (i + 1) % 12;
        (i.min(j), i.max(j))
    }))
    .unwrap();
    let run_c = run_pipeline(&c12, 0).unwrap();
    println!(
        "C_12 with k = 0: width {} (exact treewidth {})",
        run_c.td.width(),
        exact_treewidth(&c12.graph()).unwrap()
    );

    let path = std::env::temp_dir().join("okplanar_f2.td");
    std::fs::write(&path, write_td(&run.td, d.n())).unwrap();
    println!("wrote {}", path.display());
}
