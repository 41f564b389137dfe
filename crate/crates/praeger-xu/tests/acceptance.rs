//! Acceptance suite: the full claim matrix, one test per criterion,
//! each printing a pass/fail line. Run with
//! `cargo test -p praeger-xu --test acceptance -- --nocapture`.

use std::collections::HashSet;

use praeger_xu::campaign::{
    check_aut, check_interchange, check_interchange_points, check_params, check_phi,
    check_relations, check_scale_witnesses, check_twins, check_witnesses, check_xi, Config,
};
use praeger_xu::graph::{PxGraph, PxParams};
use praeger_xu::group::{a_order, enumerate_a, full_aut, Automorphism, PermTable};
use praeger_xu::report::VerificationReport;
use praeger_xu::symmetry::{
    cost2_bruteforce, det_bruteforce, is_determining, is_distinguishing, Coloring, SearchBudget,
};
use praeger_xu::witnesses::{cost_witness, det_witness, dist_witness};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn conclude(criterion: &str, reports: &[VerificationReport]) {
    let all_pass = reports.iter().all(|r| r.passed());
    println!(
        "[acceptance] {criterion}: {} ({} claims)",
        if all_pass { "PASS" } else { "FAIL" },
        reports.len()
    );
    for report in reports {
        assert!(
            report.passed(),
            "{} -> {:?} ({:?})",
            report.claim,
            report.status,
            report.value
        );
    }
}

fn grid() -> Vec<PxParams> {
    Config::default().grid()
}

#[test]
fn criterion_1_parameter_grid_reproduction() {
    let cfg = Config::default();
    let mut reports = Vec::new();
    for params in grid() {
        reports.extend(check_params(params, &cfg.budget_for(params)));
    }
    // The headline values, pinned explicitly.
    let expectations = [
        ((4, 1), "det", 6u64),
        ((4, 1), "dist", 5),
        ((4, 2), "det", 3),
        ((4, 2), "cost", 5),
        ((4, 3), "det", 2),
        ((4, 3), "cost", 3),
        ((3, 2), "cost", 3),
    ];
    for ((n, k), which, expected) in expectations {
        let claim = format!("{which}(PX({n},{k})) = {expected}");
        assert!(
            reports.iter().any(|r| r.claim == claim && r.passed()),
            "missing or failing headline claim: {claim}"
        );
    }
    conclude(
        "criterion 1 (parameter grid: brute force = closed form)",
        &reports,
    );
}

#[test]
fn criterion_2_group_structure() {
    let cfg = Config::default();
    let mut reports = Vec::new();
    for params in grid() {
        reports.extend(check_aut(params, &cfg.budget_for(params)));
        reports.push(check_relations(params));
    }
    reports.extend(check_xi());
    conclude(
        "criterion 2 (group structure, relations, exceptional involution)",
        &reports,
    );

    // Order spot checks on the n = 4 family.
    let budget = SearchBudget::default();
    let g43 = PxGraph::build(PxParams::new(4, 3).unwrap());
    assert_eq!(full_aut(&g43, &budget).unwrap().len(), 256);
    let g42 = PxGraph::build(PxParams::new(4, 2).unwrap());
    assert_eq!(full_aut(&g42, &budget).unwrap().len(), 384);
}

#[test]
fn criterion_3_hypercube_isomorphism() {
    let report = check_phi();
    conclude(
        "criterion 3 (hypercube maps isomorphically onto PX(4,2))",
        &[report],
    );
}

#[test]
fn criterion_4_twin_structure() {
    let reports: Vec<VerificationReport> = grid().into_iter().map(check_twins).collect();
    conclude("criterion 4 (twin classes and quotients)", &reports);
}

#[test]
fn criterion_5_interchangeability() {
    let mut reports = Vec::new();
    for (n, k) in [(5, 2), (5, 3), (6, 2), (6, 3), (7, 2)] {
        reports.push(check_interchange(PxParams::new(n, k).unwrap()));
    }
    reports.extend(check_interchange_points());
    conclude(
        "criterion 5 (interchange criterion = exhaustive search)",
        &reports,
    );
}

#[test]
fn criterion_6_witness_validity_at_scale() {
    let cfg = Config::default();
    let mut reports = Vec::new();
    for params in grid() {
        reports.extend(check_witnesses(params, &cfg.budget_for(params)));
    }
    reports.extend(check_scale_witnesses());
    conclude(
        "criterion 6 (constructive witnesses, including at scale)",
        &reports,
    );
}

// ---- criterion 7: property suites ----

fn flip_word_orbit(alpha: &Automorphism, g: &PxGraph, fibre: usize) -> Vec<u32> {
    g.fibre(fibre)
        .unwrap()
        .into_iter()
        .map(|v| alpha.apply_id(g.vertex_id(v).unwrap()))
        .collect()
}

/// A flip word preserving an odd subset of a fibre setwise acts
/// trivially on that whole fibre.
fn odd_fixed_set_lemma() -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 3..=6usize {
        for k in 1..=3.min(n - 1) {
            let params = PxParams::new(n, k).unwrap();
            let g = PxGraph::build(params);
            let fibre_size = params.fibre_size();
            for fibre in 0..n {
                let members: Vec<u32> = g
                    .fibre(fibre)
                    .unwrap()
                    .into_iter()
                    .map(|v| g.vertex_id(v).unwrap())
                    .collect();
                // All odd subsets of size 1 and 3, plus random odd ones.
                let mut subsets: Vec<Vec<u32>> = members.iter().map(|&m| vec![m]).collect();
                if fibre_size >= 3 {
                    for a in 0..fibre_size {
                        for b in a + 1..fibre_size {
                            for c in b + 1..fibre_size {
                                subsets.push(vec![members[a], members[b], members[c]]);
                            }
                        }
                    }
                }
                for _ in 0..20 {
                    let mut size = rng.gen_range(1..=fibre_size);
                    if size % 2 == 0 {
                        size = (size % fibre_size) + 1;
                    }
                    let mut pick: Vec<u32> = members.clone();
                    for i in (1..pick.len()).rev() {
                        pick.swap(i, rng.gen_range(0..=i));
                    }
                    pick.truncate(size.min(pick.len()));
                    if pick.len() % 2 == 1 {
                        subsets.push(pick);
                    }
                }
                for mask in 0..(1u64 << n) {
                    let tau = praeger_xu::group::TauWord::from_mask(mask, n).unwrap();
                    let alpha = Automorphism::from_parts(
                        params,
                        tau,
                        praeger_xu::group::Dihedral::identity(),
                        false,
                    )
                    .unwrap();
                    let trivial_here = members.iter().all(|&m| alpha.apply_id(m) == m);
                    for subset in &subsets {
                        let image: HashSet<u32> =
                            subset.iter().map(|&m| alpha.apply_id(m)).collect();
                        let preserved = subset.iter().all(|m| image.contains(m));
                        if preserved && subset.len() % 2 == 1 && !trivial_here {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Every element without the exceptional factor maps fibres onto the
/// fibres its dihedral part names.
fn block_system_invariant() -> bool {
    for params in grid() {
        let g = PxGraph::build(params);
        let n = params.n();
        for alpha in enumerate_a(params).unwrap() {
            let delta = alpha.induced_fibre_action().unwrap();
            for fibre in 0..n {
                let expected = delta.apply(fibre, n);
                let image = flip_word_orbit(&alpha, &g, fibre);
                if !image
                    .iter()
                    .all(|&id| g.vertex_from_id(id).unwrap().fibre() == expected)
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Supersets of determining sets determine; refinements of
/// distinguishing colorings distinguish.
fn monotonicity_samples() -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let budget = SearchBudget::default();
    for (n, k) in [(3usize, 2usize), (5, 2), (4, 3), (6, 1), (6, 3)] {
        let params = PxParams::new(n, k).unwrap();
        let g = PxGraph::build(params);
        let group = full_aut(&g, &budget).unwrap();
        let base: Vec<u32> = det_witness(params)
            .unwrap()
            .into_iter()
            .map(|v| g.vertex_id(v).unwrap())
            .collect();
        for _ in 0..200 {
            let mut superset = base.clone();
            let extra = rng.gen_range(0..g.vertex_count() as u32);
            if !superset.contains(&extra) {
                superset.push(extra);
            }
            if !is_determining(group.iter(), &superset) {
                return false;
            }
        }

        let coloring = dist_witness(params).unwrap();
        if !is_distinguishing(group.iter(), &coloring) {
            return false;
        }
        for _ in 0..200 {
            let color = rng.gen_range(0..coloring.num_colors() as u8);
            let class = coloring.class(color);
            if class.len() < 2 {
                continue;
            }
            let take = rng.gen_range(1..class.len());
            let part: Vec<u32> = class[..take].to_vec();
            let refined = coloring.split_class(&part).unwrap();
            if !is_distinguishing(group.iter(), &refined) {
                return false;
            }
        }
    }
    true
}

/// The parallel subset searches return identical witnesses for any
/// worker count.
fn deterministic_across_worker_counts() -> bool {
    let run_with = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        pool.install(|| {
            let budget = SearchBudget::default();
            let mut outputs = Vec::new();
            for (n, k) in [(3usize, 2usize), (5, 2), (4, 3), (6, 2)] {
                let params = PxParams::new(n, k).unwrap();
                let g = PxGraph::build(params);
                let group = full_aut(&g, &budget).unwrap();
                outputs.push(det_bruteforce(g.vertex_count(), &group, &budget).unwrap());
                outputs.push(cost2_bruteforce(g.vertex_count(), &group, &budget).unwrap());
            }
            outputs
        })
    };
    let single = run_with(1);
    let multi = run_with(4);
    single == multi
}

/// One thousand seeded random red classes: whenever the 2-coloring
/// distinguishes, its red class is also a determining set.
fn distinguishing_implies_determining() -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let budget = SearchBudget::default();
    let instances: Vec<(PxGraph, Vec<PermTable>)> = [(3usize, 2usize), (5, 2), (4, 3)]
        .iter()
        .map(|&(n, k)| {
            let g = PxGraph::build(PxParams::new(n, k).unwrap());
            let group = full_aut(&g, &budget).unwrap();
            (g, group)
        })
        .collect();
    for round in 0..1000 {
        let (g, group) = &instances[round % instances.len()];
        let size = rng.gen_range(1..=6usize.min(g.vertex_count() - 1));
        let mut red = HashSet::new();
        while red.len() < size {
            red.insert(rng.gen_range(0..g.vertex_count() as u32));
        }
        let red: Vec<u32> = red.into_iter().collect();
        let coloring = Coloring::two_class(g.vertex_count(), &red).unwrap();
        if is_distinguishing(group.iter(), &coloring) && !is_determining(group.iter(), &red) {
            return false;
        }
    }
    true
}

#[test]
fn criterion_7_property_suites() {
    let checks: [(&str, fn() -> bool); 5] = [
        ("odd fixed set lemma", odd_fixed_set_lemma),
        ("fibre block system", block_system_invariant),
        ("monotonicity", monotonicity_samples),
        (
            "worker-count determinism",
            deterministic_across_worker_counts,
        ),
        (
            "distinguishing red class determines",
            distinguishing_implies_determining,
        ),
    ];
    let mut all = true;
    for (name, check) in checks {
        let ok = check();
        all &= ok;
        assert!(ok, "property suite failed: {name}");
    }
    println!(
        "[acceptance] criterion 7 (property suites): {} ({} suites)",
        if all { "PASS" } else { "FAIL" },
        checks.len()
    );
}

#[test]
fn group_orders_on_the_grid() {
    // Faithful enumeration sizes double-checked against the closed form.
    for params in grid() {
        assert_eq!(
            a_order(params).unwrap(),
            (1u64 << params.n()) * 2 * params.n() as u64
        );
    }
    // A value from beyond the brute-force grid.
    assert_eq!(a_order(PxParams::new(20, 5).unwrap()).unwrap(), 41_943_040);
    let witness = cost_witness(PxParams::new(13, 4).unwrap()).unwrap();
    assert_eq!(witness.len(), 4);
}
