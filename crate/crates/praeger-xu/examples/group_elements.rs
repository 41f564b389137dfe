//! The automorphism group as algebra: rotations, reflections, window
//! bit flips, and their relations.
//!
//! ```bash
//! cargo run -p praeger-xu --release --example group_elements
//! ```

use praeger_xu::graph::{PxGraph, PxParams, Vertex};
use praeger_xu::group::{a_order, enumerate_a, mu_fixed_fibres, Automorphism};

fn main() -> praeger_xu::Result<()> {
    let params = PxParams::new(5, 2)?;
    let g = PxGraph::build(params);

    let rho = Automorphism::rotation(params, 1)?;
    let mu = Automorphism::reflection(params, params.k() - 1)?;
    let tau1 = Automorphism::bit_flip(params, 1)?;

    let v: Vertex = "0:01".parse()?;
    println!("{params}, acting on {v}:");
    println!("  rotation          {rho}   -> {}", rho.apply(v)?);
    println!("  reflection        {mu}   -> {}", mu.apply(v)?);
    println!("  window flip       {tau1}   -> {}", tau1.apply(v)?);

    // Conjugating a flip generator by the rotation shifts its index.
    let conj = rho.compose(&tau1.compose(&rho.inverse())?)?;
    println!("\nrho tau_1 rho^-1 = {conj} (a shifted flip generator)");

    // Reflections pair the fibres up; each fixes exactly one fibre
    // when n is odd.
    for s in 0..params.n() {
        println!("  mu_{s} fixes fibres {:?}", mu_fixed_fibres(s, params));
    }

    // The group has 2^n * 2n elements, all acting as automorphisms.
    println!("\n|A| = {}", a_order(params)?);
    let sample = enumerate_a(params)?.nth(137).unwrap();
    println!("element #137 of the enumeration: {sample}");
    println!(
        "it maps fibre 0 onto fibre {}",
        sample.induced_fibre_action()?.apply(0, params.n())
    );
    println!("and sends 0:00 to {}", sample.apply(g.vertex_from_id(0)?)?);
    Ok(())
}
