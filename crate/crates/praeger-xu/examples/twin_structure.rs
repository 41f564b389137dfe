//! Twins and twin quotients: how the k = 1 graphs collapse to cycles.
//!
//! ```bash
//! cargo run -p praeger-xu --release --example twin_structure
//! ```

use praeger_xu::graph::{PxGraph, PxParams};
use praeger_xu::twins::{
    cycle_dist, dist_from_quotient, min_twin_cover, twin_classes, twin_quotient,
};

fn main() -> praeger_xu::Result<()> {
    for n in [4usize, 6] {
        let params = PxParams::new(n, 1)?;
        let g = PxGraph::build(params);
        let partition = twin_classes(&g);
        println!(
            "{params}: {} twin classes of size {:?}",
            partition.class_count(),
            partition.uniform_class_size().unwrap()
        );
        for class in partition.classes() {
            let members: Vec<String> = class
                .iter()
                .map(|&id| g.vertex_from_id(id).unwrap().to_string())
                .collect();
            println!("  {{{}}}", members.join(", "));
        }
        let quotient = twin_quotient(&g, &partition);
        println!(
            "  quotient: {} vertices, {} edges ({})",
            quotient.vertex_count(),
            quotient.edge_count(),
            if quotient.is_single_edge() {
                "a single edge".to_string()
            } else {
                format!("the cycle C_{}", quotient.vertex_count())
            }
        );
        let cover = min_twin_cover(&g);
        println!("  minimum twin cover has {} vertices", cover.len());
    }

    // Distinguishing numbers transfer from the quotient: with classes
    // of t mutual twins, d colors suffice once binomial(d,t) covers the
    // quotient's distinguishing number.
    println!("\ntransfer of distinguishing numbers for k = 1:");
    for n in [3usize, 5, 6, 7, 12] {
        let quotient_dist = cycle_dist(n)?;
        println!(
            "  n = {n}: quotient needs {quotient_dist} colors, lifted graph needs {}",
            dist_from_quotient(2, quotient_dist)
        );
    }
    println!(
        "  n = 4: quotient is an edge (2 colors), lifted graph needs {}",
        dist_from_quotient(4, 2)
    );

    // PX(n,k) with k >= 2 has no twins at all.
    let g = PxGraph::build(PxParams::new(5, 2)?);
    println!("\nPX(5,2) twin-free: {}", twin_classes(&g).is_twin_free());
    Ok(())
}
