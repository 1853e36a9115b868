//! The four text formats (.cvx drawings, .gr graphs, .td decompositions,
//! .sep separations) and the planarization debug export.
//!
//! Run with: cargo run --example file_formats

use okplanar::decomp::run_pipeline;
use okplanar::families::gen_stacked_prism;
use okplanar::io::{
    parse_cvx, parse_td, write_cvx, write_gr, write_planarization_debug, write_sep, write_td,
};
use okplanar::planarize;
use okplanar::separate::extract_balanced_separation;

fn main() {
    let d = gen_stacked_prism(4, 2);
    let cvx = write_cvx(&d);
    println!("--- Y_4_2 as .cvx ---\n{cvx}");
    assert_eq!(parse_cvx(&cvx).unwrap().edges(), d.edges());

    println!("--- the same graph as .gr ---\n{}", write_gr(&d.graph()));

    let run = run_pipeline(&d, 2).unwrap();
    let td = write_td(&run.td, d.n());
    println!("--- decomposition as .td ---\n{td}");
    let (parsed, n) = parse_td(&td).unwrap();
    assert_eq!(n, d.n());
    assert!(parsed.validate(&d.graph()).is_empty());

    let (sep, _) = extract_balanced_separation(&run.td, &d.graph()).unwrap();
    println!("--- separation as .sep ---\n{}", write_sep(&sep, d.n()));

    let p = planarize(&d.hull_complete().unwrap().expand().unwrap().expanded).unwrap();
    let debug = write_planarization_debug(&p);
    println!("--- planarization debug export (first 12 lines) ---");
    for line in debug.lines().take(12) {
        println!("{line}");
    }
}
