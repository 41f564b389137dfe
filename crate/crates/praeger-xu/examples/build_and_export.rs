//! Construct PX(n,k) graphs and export them.
//!
//! ```bash
//! cargo run -p praeger-xu --release --example build_and_export
//! ```

use praeger_xu::graph::{ExportFormat, PxGraph, PxParams};

fn main() -> praeger_xu::Result<()> {
    // The smallest twin-free instance.
    let params = PxParams::new(3, 2)?;
    let g = PxGraph::build(params);
    println!(
        "{params}: {} vertices, {} edges, 4-regular, connected: {}",
        g.vertex_count(),
        g.edge_count(),
        g.is_connected()
    );

    let v: praeger_xu::Vertex = "0:00".parse()?;
    println!("neighbours of {v}:");
    for nbr in g.neighbors(v)? {
        println!("  {nbr}");
    }

    println!("\nedge list:");
    print!("{}", g.export(ExportFormat::Edges));

    // A large instance builds just as quickly.
    let big = PxGraph::build(PxParams::new(20, 5)?);
    println!(
        "\nPX(20,5): {} vertices, {} edges",
        big.vertex_count(),
        big.edge_count()
    );

    // DOT output carries a circular layout: fibre 0 at 12 o'clock,
    // words from the innermost ring outwards.
    let dot = g.export(ExportFormat::Dot);
    println!("\nfirst lines of the DOT export:");
    for line in dot.lines().take(4) {
        println!("  {line}");
    }
    Ok(())
}
