//! The n = 4 family, where the full automorphism group outgrows the
//! semidirect product: the hypercube PX(4,2), the exceptional
//! involution of PX(4,3), and the complete bipartite PX(4,1).
//!
//! ```bash
//! cargo run -p praeger-xu --release --example exceptional_cases
//! ```

use praeger_xu::bitstring::BitWord;
use praeger_xu::graph::{PxGraph, PxParams};
use praeger_xu::group::{
    a_order, full_aut, hypercube_to_px42, px43_coset_swap_table, xi_fixed_points, Automorphism,
};
use praeger_xu::symmetry::SearchBudget;

fn main() -> praeger_xu::Result<()> {
    let budget = SearchBudget::default();

    for (n, k) in [(4usize, 1usize), (4, 2), (4, 3)] {
        let params = PxParams::new(n, k)?;
        let g = PxGraph::build(params);
        let full = full_aut(&g, &budget)?;
        println!(
            "{params}: |A| = {} but |Aut| = {}",
            a_order(params)?,
            full.len()
        );
    }

    // PX(4,2) is the 4-dimensional hypercube.
    println!("\nhypercube vertices land in PX(4,2) as:");
    for word in BitWord::all(4)?.take(4) {
        println!("  {word} -> {}", hypercube_to_px42(word)?);
    }

    // PX(4,3) carries an involution outside the semidirect product. It
    // fixes two vertices per fibre and respects the palindromic
    // half-fibres instead of the fibres.
    let params = PxParams::new(4, 3)?;
    let xi = Automorphism::xi(params)?;
    println!("\nPX(4,3) exceptional involution {xi}");
    println!("fixed points:");
    for v in xi_fixed_points() {
        println!("  {v} (palindromic word: {})", v.word().is_palindrome());
    }

    // Its coset supplies the swaps the semidirect product cannot make.
    println!("\nswap witnesses through the exceptional coset:");
    for row in px43_coset_swap_table() {
        println!("  0:000 <-> {} via ({}) then xi", row.v, row.alpha);
    }
    Ok(())
}
