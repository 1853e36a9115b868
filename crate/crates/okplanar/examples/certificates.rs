//! Lower-bound certificates: the G_k bramble of order 3k, the exact
//! treewidth oracle, and the minor relation between F_k and G_k.
//!
//! Run with: cargo run --example certificates

use okplanar::families::{gen_gk, gen_gk_bramble, FkLayout};
use okplanar::oracles::{bramble_order, exact_treewidth, verify_bramble};

fn main() {
    for k in 1..=2usize {
        let g = gen_gk(k);
        let b = gen_gk_bramble(k);
        verify_bramble(&g, &b).unwrap();
        let order = bramble_order(&g, &b).unwrap();
        println!(
            "G_{k}: bramble with {} sets verified, order {order} (= 3k), so tw >= {}",
            b.sets.len(),
            order - 1
        );
    }

    let g1 = gen_gk(1);
    println!("exact treewidth of G_1: {}", exact_treewidth(&g1).unwrap());

    // Contracting the attached paths of F_k recovers G_k exactly, so
    // tw(F_k) >= tw(G_k) = 3k - 1.
    for k in 1..=2usize {
        let layout = FkLayout::new(k);
        let (classes, num) = layout.contraction_classes();
        let contracted = layout.drawing().graph().contract_classes(&classes, num);
        println!(
            "F_{k} contracted along Z_i, W_i, v_i,2k: equals G_{k}? {}",
            contracted == gen_gk(k)
        );
    }

    let f1 = FkLayout::new(1).drawing();
    println!(
        "exact treewidth of F_1: {} (>= 3k - 1 = 2)",
        exact_treewidth(&f1.graph()).unwrap()
    );
}
