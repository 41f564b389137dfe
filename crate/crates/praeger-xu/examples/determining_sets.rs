//! Determining sets: constructed witnesses against exhaustive search.
//!
//! ```bash
//! cargo run -p praeger-xu --release --example determining_sets
//! ```

use praeger_xu::campaign::det_witness_holds_at_scale;
use praeger_xu::formulas::det_formula;
use praeger_xu::graph::{PxGraph, PxParams};
use praeger_xu::group::{a_order, full_aut};
use praeger_xu::symmetry::{det_bruteforce, is_determining, SearchBudget};
use praeger_xu::witnesses::det_witness;

fn main() -> praeger_xu::Result<()> {
    let budget = SearchBudget::default();
    println!("witness vs formula vs exhaustive search:");
    for (n, k) in [(5usize, 2usize), (6, 3), (7, 3), (4, 2), (4, 3)] {
        let params = PxParams::new(n, k)?;
        let g = PxGraph::build(params);
        let group = full_aut(&g, &budget)?;
        let witness = det_witness(params)?;
        let ids: Vec<u32> = witness
            .iter()
            .map(|&v| g.vertex_id(v))
            .collect::<praeger_xu::Result<Vec<_>>>()?;
        let (minimum, _) = det_bruteforce(g.vertex_count(), &group, &budget)?;
        let labels: Vec<String> = witness.iter().map(|v| v.to_string()).collect();
        println!(
            "  {params}: formula {} | search minimum {} | witness {:?} determining: {}",
            det_formula(params),
            minimum,
            labels,
            is_determining(group.iter(), &ids)
        );
    }

    // Far beyond exhaustive subset search, a witness still verifies by
    // streaming the whole group past its four vertices.
    let params = PxParams::new(20, 5)?;
    let witness = det_witness(params)?;
    let labels: Vec<String> = witness.iter().map(|v| v.to_string()).collect();
    println!(
        "\nPX(20,5): witness {:?} checked against all {} group elements: {}",
        labels,
        a_order(params)?,
        det_witness_holds_at_scale(params, &witness)?
    );
    Ok(())
}
