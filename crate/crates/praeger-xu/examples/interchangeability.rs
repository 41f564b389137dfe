//! Which vertex pairs can be swapped by an automorphism: the window
//! criterion, explicit swap elements, and brute-force confirmation.
//!
//! ```bash
//! cargo run -p praeger-xu --release --example interchangeability
//! ```

use praeger_xu::graph::{PxGraph, PxParams, Vertex};
use praeger_xu::group::enumerate_a;
use praeger_xu::symmetry::interchangeable_bruteforce;
use praeger_xu::witnesses::{interchange_witness, z_interchangeable, InterchangeQuery};

fn main() -> praeger_xu::Result<()> {
    // The window criterion in action on PX(5,3).
    let params = PxParams::new(5, 3)?;
    let pairs = [("0:000", "0:110"), ("0:101", "1:001"), ("0:000", "2:011")];
    for (a, b) in pairs {
        let u: Vertex = a.parse()?;
        let v: Vertex = b.parse()?;
        let query = InterchangeQuery::new(params, u, v)?;
        println!(
            "{params}: {u} and {v} share window {:?}; interchangeable: {}",
            query.window(),
            query.interchangeable_in_a()
        );
        if let Ok(alpha) = query.witness() {
            println!("  swap element: {alpha}");
        }
    }

    // A same-fibre pair is always swappable by pure bit flips.
    let alpha = interchange_witness(params, "0:000".parse()?, "0:110".parse()?)?;
    println!("\nsame-fibre swap uses flips only: {alpha}");

    // Antipodal all-zero vertices swap by the half-turn rotation.
    let params103 = PxParams::new(10, 3)?;
    let alpha = interchange_witness(params103, "0:000".parse()?, "5:000".parse()?)?;
    println!("antipodal swap in PX(10,3): {alpha}");

    // Brute force agrees with the criterion.
    let g = PxGraph::build(params);
    let group: Vec<_> = enumerate_a(params)?.collect();
    let mut fails = 0;
    let mut total = 0;
    for uid in 0..g.vertex_count() as u32 {
        for vid in uid + 1..g.vertex_count() as u32 {
            let query =
                InterchangeQuery::new(params, g.vertex_from_id(uid)?, g.vertex_from_id(vid)?)?;
            let found = interchangeable_bruteforce(group.iter(), uid, vid)?.is_some();
            total += 1;
            if found != query.interchangeable_in_a() {
                fails += 1;
            }
        }
    }
    println!(
        "\ncriterion vs exhaustive search on all {total} pairs of {params}: {fails} disagreements"
    );

    // The vertices of PX(4,3) that the semidirect product cannot swap
    // with 0:000 (its exceptional coset can).
    let params43 = PxParams::new(4, 3)?;
    let g43 = PxGraph::build(params43);
    let blocked: Vec<String> = (1..g43.vertex_count() as u32)
        .map(|id| g43.vertex_from_id(id).unwrap())
        .filter(|v| !z_interchangeable(params43, *v).unwrap())
        .map(|v| v.to_string())
        .collect();
    println!("\nPX(4,3) vertices not swappable with 0:000 inside the semidirect product:");
    println!("  {blocked:?}");
    Ok(())
}
