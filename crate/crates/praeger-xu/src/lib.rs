//! Praeger-Xu graphs PX(n,k) and their symmetry parameters.
//!
//! This crate constructs the tetravalent graphs PX(n,k), realizes their
//! automorphism groups algebraically, and verifies the graphs'
//! determining numbers, distinguishing numbers and 2-distinguishing
//! costs by three mutually checking routes: closed-form values
//! ([`formulas`]), constructive witnesses ([`witnesses`]) and
//! independent brute-force search ([`symmetry`]).
//!
//! Start with the runnable examples (`cargo run -p praeger-xu --example
//! build_and_export` and friends), or with [`graph::PxGraph::build`]
//! and [`group::enumerate_a`].

pub mod bitstring;
pub mod campaign;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod group;
pub mod report;
pub mod symmetry;
pub mod twins;
pub mod witnesses;

pub use bitstring::{BitWord, Parity};
pub use campaign::{run_campaign, CheckKind, Config};
pub use error::{Error, Result};
pub use formulas::{cost_formula, det_formula, dist_formula, ParamValue};
pub use graph::{antipodal, vertex_from_id, vertex_id, ExportFormat, PxGraph, PxParams, Vertex};
pub use group::{
    a_element, a_order, enumerate_a, full_aut, hypercube_to_px42, is_automorphism, mu_fixed_fibres,
    Automorphism, Dihedral, PermTable, TauWord,
};
pub use report::{params_report, summary, Method, ParamsReport, Status, VerificationReport};
pub use symmetry::{
    cost2_bruteforce, det_bruteforce, dist_bruteforce, generic_automorphisms, is_determining,
    is_distinguishing, Coloring, SearchBudget, VertexAction,
};
pub use twins::{min_twin_cover, twin_classes, twin_quotient, QuotientGraph, TwinPartition};
pub use witnesses::{
    cost_witness, det_witness, dist_witness, generic_cost_upper_witness, interchange_witness,
    interchangeable_predicate, z_interchangeable, InterchangeQuery,
};
