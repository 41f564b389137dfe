//! Reproducible verification campaigns: every published claim on a
//! parameter grid, each checked by formula, constructive witness and
//! independent brute force, with one report per claim.

use std::collections::HashSet;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bitstring::BitWord;
use crate::error::{Error, Result};
use crate::formulas::{cost_formula, det_formula, dist_formula};
use crate::graph::{PxGraph, PxParams, Vertex};
use crate::group::{
    a_element, a_order, enumerate_a, full_aut, hypercube_to_px42, is_automorphism, mu_fixed_fibres,
    px43_coset_swap_table, xi_fixed_points, Automorphism, Dihedral, PermTable,
};
use crate::report::{Method, Status, VerificationReport};
use crate::symmetry::{
    cost2_bruteforce, det_bruteforce, dist_bruteforce, generic_automorphisms_of,
    interchangeable_bruteforce, is_determining, is_distinguishing, Coloring, SearchBudget,
};
use crate::twins::{twin_classes, twin_quotient};
use crate::witnesses::{
    cost_witness, det_witness, dist_witness, generic_cost_upper_witness, interchangeable_predicate,
};

/// Which claim families to run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckKind {
    /// Parameter values: brute force against the closed forms.
    Params,
    /// Group orders, faithfulness, agreement with structure-blind search.
    Aut,
    /// Generator relations, pointwise.
    Relations,
    /// The exceptional involution of PX(4,3) and its swap table.
    Xi,
    /// The hypercube isomorphism onto PX(4,2).
    Phi,
    /// Twin classes, covers and quotients.
    Twins,
    /// Interchangeability criterion against exhaustive search.
    Interchange,
    /// Constructive witnesses, including the beyond-search scale cases.
    Witness,
}

impl CheckKind {
    pub fn all() -> Vec<CheckKind> {
        vec![
            CheckKind::Params,
            CheckKind::Aut,
            CheckKind::Relations,
            CheckKind::Xi,
            CheckKind::Phi,
            CheckKind::Twins,
            CheckKind::Interchange,
            CheckKind::Witness,
        ]
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "params" => Ok(CheckKind::Params),
            "aut" => Ok(CheckKind::Aut),
            "relations" => Ok(CheckKind::Relations),
            "xi" => Ok(CheckKind::Xi),
            "phi" => Ok(CheckKind::Phi),
            "twins" => Ok(CheckKind::Twins),
            "interchange" => Ok(CheckKind::Interchange),
            "witness" => Ok(CheckKind::Witness),
            _ => Err(Error::Parse(format!("unknown check kind {s:?}"))),
        }
    }
}

/// Campaign configuration: grid bounds, budgets, parallelism.
#[derive(Clone, Debug)]
pub struct Config {
    pub n_max: usize,
    pub k_max: usize,
    pub vertex_cap: usize,
    pub budget: SearchBudget,
    pub workers: Option<usize>,
    pub checks: Vec<CheckKind>,
    /// When set, only this instance is checked (grid bounds ignored).
    pub only: Option<PxParams>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            n_max: 7,
            k_max: 4,
            vertex_cap: 112,
            budget: SearchBudget::default(),
            workers: None,
            checks: CheckKind::all(),
            only: None,
        }
    }
}

impl Config {
    /// Applies `key=value` lines (comments with `#`, blank lines ok).
    pub fn apply_config_file(&mut self, text: &str) -> Result<()> {
        for (number, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Parse(format!("config line {}: expected key=value", number + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            let parse_usize = |v: &str| {
                v.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("config key {key}: bad number {v:?}")))
            };
            match key {
                "n_max" => self.n_max = parse_usize(value)?,
                "k_max" => self.k_max = parse_usize(value)?,
                "vertex_cap" => self.vertex_cap = parse_usize(value)?,
                "workers" => self.workers = Some(parse_usize(value)?),
                "max_subset_size" => self.budget.max_subset_size = parse_usize(value)?,
                "max_colorings" => self.budget.max_colorings = parse_usize(value)? as u64,
                "node_limit" => self.budget.node_limit = parse_usize(value)? as u64,
                "generic_vertex_cap" => self.budget.generic_vertex_cap = parse_usize(value)?,
                "time_limit_ms" => {
                    self.budget.time_limit = Some(Duration::from_millis(parse_usize(value)? as u64))
                }
                _ => return Err(Error::Parse(format!("unknown config key {key:?}"))),
            }
        }
        Ok(())
    }

    /// Reads the global time cap from `PX_BUDGET_MS` when set.
    pub fn apply_env(&mut self) -> Result<()> {
        if let Ok(raw) = std::env::var("PX_BUDGET_MS") {
            let ms = raw
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("PX_BUDGET_MS: bad number {raw:?}")))?;
            self.budget.time_limit = Some(Duration::from_millis(ms));
        }
        Ok(())
    }

    /// The parameter grid: 3 <= n <= n_max, 1 <= k <= min(n-1, k_max),
    /// capped by vertex count.
    pub fn grid(&self) -> Vec<PxParams> {
        if let Some(params) = self.only {
            return vec![params];
        }
        let mut grid = Vec::new();
        for n in 3..=self.n_max {
            for k in 1..=self.k_max.min(n - 1) {
                if let Ok(params) = PxParams::new(n, k) {
                    if params.vertex_count() <= self.vertex_cap {
                        grid.push(params);
                    }
                }
            }
        }
        grid
    }

    /// Per-instance budget: the k = 1 graphs have determining number n,
    /// so their subset cap is raised to n.
    pub fn budget_for(&self, params: PxParams) -> SearchBudget {
        let mut budget = self.budget.clone();
        if params.k() == 1 {
            budget.max_subset_size = budget.max_subset_size.max(params.n());
        }
        budget
    }
}

fn finish(
    claim: String,
    method: Method,
    started: Instant,
    outcome: Result<(bool, serde_json::Value, Vec<String>)>,
) -> VerificationReport {
    let elapsed_ms = started.elapsed().as_millis();
    match outcome {
        Ok((ok, value, witness)) => VerificationReport {
            claim,
            method,
            value,
            witness,
            elapsed_ms,
            status: if ok { Status::Pass } else { Status::Fail },
        },
        Err(Error::BudgetExhausted(message)) => VerificationReport {
            claim,
            method,
            value: serde_json::json!({ "budget": message }),
            witness: vec![],
            elapsed_ms,
            status: Status::Budget,
        },
        Err(error) => VerificationReport {
            claim,
            method,
            value: serde_json::json!({ "error": error.to_string() }),
            witness: vec![],
            elapsed_ms,
            status: Status::Fail,
        },
    }
}

fn labels(vertices: &[Vertex]) -> Vec<String> {
    vertices.iter().map(|v| v.to_string()).collect()
}

fn id_labels(g: &PxGraph, ids: &[u32]) -> Vec<String> {
    ids.iter()
        .map(|&id| g.vertex_from_id(id).unwrap().to_string())
        .collect()
}

/// Brute-force parameter values against the closed forms (one report
/// per parameter).
pub fn check_params(params: PxParams, budget: &SearchBudget) -> Vec<VerificationReport> {
    let g = PxGraph::build(params);
    let mut reports = Vec::new();

    let started = Instant::now();
    let group = match full_aut(&g, budget) {
        Ok(group) => group,
        Err(error) => {
            return vec![finish(
                format!("{params}: full automorphism group available"),
                Method::Bruteforce,
                started,
                Err(error),
            )]
        }
    };

    let expected_det = det_formula(params).value().unwrap();
    let started = Instant::now();
    let outcome = det_bruteforce(g.vertex_count(), &group, budget).map(|(size, witness)| {
        (
            size as u64 == expected_det,
            serde_json::json!({ "bruteforce": size, "formula": expected_det }),
            id_labels(&g, &witness),
        )
    });
    reports.push(finish(
        format!("det({params}) = {expected_det}"),
        Method::Bruteforce,
        started,
        outcome,
    ));

    let expected_dist = dist_formula(params).value().unwrap();
    let started = Instant::now();
    let outcome = dist_bruteforce(g.vertex_count(), &group, budget).map(|colors| {
        (
            colors as u64 == expected_dist,
            serde_json::json!({ "bruteforce": colors, "formula": expected_dist }),
            vec![],
        )
    });
    reports.push(finish(
        format!("dist({params}) = {expected_dist}"),
        Method::Bruteforce,
        started,
        outcome,
    ));

    if let Some(expected_cost) = cost_formula(params).value() {
        let started = Instant::now();
        let outcome = cost2_bruteforce(g.vertex_count(), &group, budget).map(|(size, witness)| {
            (
                size as u64 == expected_cost,
                serde_json::json!({ "bruteforce": size, "formula": expected_cost }),
                id_labels(&g, &witness),
            )
        });
        reports.push(finish(
            format!("cost({params}) = {expected_cost}"),
            Method::Bruteforce,
            started,
            outcome,
        ));
    }
    reports
}

/// Faithfulness of the algebraic enumeration and agreement with the
/// structure-blind search.
pub fn check_aut(params: PxParams, budget: &SearchBudget) -> Vec<VerificationReport> {
    let g = PxGraph::build(params);
    let mut reports = Vec::new();

    let started = Instant::now();
    let outcome = (|| {
        let expected = a_order(params)?;
        let mut tables = HashSet::new();
        let mut all_valid = true;
        for alpha in enumerate_a(params)? {
            let table = alpha.perm_table();
            all_valid &= is_automorphism(&g, &table);
            tables.insert(table);
        }
        Ok((
            tables.len() as u64 == expected && all_valid,
            serde_json::json!({ "distinct": tables.len(), "expected": expected, "all_automorphisms": all_valid }),
            vec![],
        ))
    })();
    reports.push(finish(
        format!("{params}: semidirect product acts faithfully by automorphisms"),
        Method::Bruteforce,
        started,
        outcome,
    ));

    if g.vertex_count() <= 56 {
        let started = Instant::now();
        let outcome = (|| {
            let generic = generic_automorphisms_of(&g, budget)?;
            let algebraic = full_aut(&g, budget)?;
            let expected: Option<u64> = match (params.n(), params.k()) {
                (4, 3) => Some(256),
                (4, 2) => Some(384),
                (4, 1) => Some(1152), // the complete bipartite graph on 4+4
                _ => Some(a_order(params)?),
            };
            let size_ok = expected.is_none_or(|e| generic.len() as u64 == e);
            Ok((
                generic == algebraic && size_ok,
                serde_json::json!({ "generic": generic.len(), "assembled": algebraic.len() }),
                vec![],
            ))
        })();
        reports.push(finish(
            format!("{params}: structure-blind search finds exactly the assembled group"),
            Method::Bruteforce,
            started,
            outcome,
        ));
    }
    reports
}

/// The six generator relations, checked pointwise as vertex maps.
pub fn check_relations(params: PxParams) -> VerificationReport {
    let started = Instant::now();
    let outcome = (|| {
        let n = params.n();
        let k = params.k();
        let g = PxGraph::build(params);
        let equal = |a: &Automorphism, b: &Automorphism| {
            (0..g.vertex_count() as u32).all(|id| a.apply_id(id) == b.apply_id(id))
        };
        let conj = |inner: &Automorphism, by: &Automorphism| -> Result<Automorphism> {
            by.compose(&inner.compose(&by.inverse())?)
        };
        let identity = Automorphism::identity(params)?;
        let mu = Automorphism::reflection(params, k - 1)?;
        let rho = Automorphism::rotation(params, 1)?;
        let mut ok = equal(&mu.compose(&mu)?, &identity);
        ok &= equal(&conj(&rho, &mu)?, &rho.inverse());
        for s in 0..n {
            let tau_s = Automorphism::bit_flip(params, s)?;
            ok &= equal(&tau_s.compose(&tau_s)?, &identity);
            ok &= equal(
                &conj(&tau_s, &rho)?,
                &Automorphism::bit_flip(params, (s + 1) % n)?,
            );
            ok &= equal(
                &conj(&tau_s, &mu)?,
                &Automorphism::bit_flip(params, (k - 1 + n - s % n) % n)?,
            );
            for t in 0..n {
                let tau_t = Automorphism::bit_flip(params, t)?;
                ok &= equal(&tau_s.compose(&tau_t)?, &tau_t.compose(&tau_s)?);
            }
        }
        Ok((ok, serde_json::json!({ "relations": 6 }), vec![]))
    })();
    finish(
        format!("{params}: generator relations hold pointwise"),
        Method::Witness,
        started,
        outcome,
    )
}

/// The exceptional involution of PX(4,3): an automorphism outside the
/// semidirect product, with the published swap table.
pub fn check_xi() -> Vec<VerificationReport> {
    let params = PxParams::new(4, 3).expect("PX(4,3)");
    let g = PxGraph::build(params);
    let mut reports = Vec::new();

    let started = Instant::now();
    let outcome = (|| {
        let xi = Automorphism::xi(params)?;
        let table = xi.perm_table();
        let automorphism = is_automorphism(&g, &table);
        let outside = enumerate_a(params)?.all(|alpha| alpha.perm_table() != table);
        let involution = xi.compose(&xi)?.is_identity();
        let fixed = labels(&xi_fixed_points());
        // Palindromic half-fibres must map onto half-fibres.
        let mut blocks_ok = true;
        for i in 0..4 {
            for palindromic in [false, true] {
                let mut images = HashSet::new();
                for u in g.fibre(i)? {
                    if u.word().is_palindrome() == palindromic {
                        let image = xi.apply(u)?;
                        images.insert((image.fibre(), image.word().is_palindrome()));
                    }
                }
                blocks_ok &= images.len() == 1;
            }
        }
        Ok((
            automorphism && outside && involution && blocks_ok && fixed.len() == 8,
            serde_json::json!({
                "automorphism": automorphism,
                "outside_semidirect_product": outside,
                "involution": involution,
                "half_fibre_blocks": blocks_ok,
            }),
            fixed,
        ))
    })();
    reports.push(finish(
        "PX(4,3): exceptional involution is a new automorphism".into(),
        Method::Witness,
        started,
        outcome,
    ));

    let started = Instant::now();
    let outcome = (|| {
        let origin: Vertex = "0:000".parse()?;
        let xi = Automorphism::xi(params)?;
        let mut ok = true;
        let mut rows = Vec::new();
        for row in px43_coset_swap_table() {
            let alpha_xi = row.alpha.compose(&xi)?;
            ok &= xi.apply(row.v)? == row.xi_image;
            ok &= alpha_xi.apply(origin)? == row.v;
            ok &= alpha_xi.apply(row.v)? == origin;
            rows.push(format!("{} <-> {} via {}", origin, row.v, row.alpha));
        }
        Ok((
            ok && rows.len() == 8,
            serde_json::json!({ "rows": rows.len() }),
            rows,
        ))
    })();
    reports.push(finish(
        "PX(4,3): published coset swap table verified row by row".into(),
        Method::Witness,
        started,
        outcome,
    ));
    reports
}

/// The hypercube Q_4 maps isomorphically onto PX(4,2).
pub fn check_phi() -> VerificationReport {
    let started = Instant::now();
    let outcome = (|| {
        let g = PxGraph::build(PxParams::new(4, 2)?);
        let images: Vec<Vertex> = BitWord::all(4)?
            .map(hypercube_to_px42)
            .collect::<Result<Vec<_>>>()?;
        let distinct: HashSet<Vertex> = images.iter().copied().collect();
        let mut edges_mapped = 0usize;
        let mut all_edges = true;
        for (a, word) in BitWord::all(4)?.enumerate() {
            for j in 0..4 {
                let b = word.flip(j)?.numeral() as usize;
                if a < b {
                    all_edges &= g.are_adjacent(images[a], images[b])?;
                    edges_mapped += 1;
                }
            }
        }
        Ok((
            distinct.len() == 16 && edges_mapped == 32 && all_edges,
            serde_json::json!({ "vertices": distinct.len(), "edges": edges_mapped }),
            labels(&images),
        ))
    })();
    finish(
        "Q4 -> PX(4,2): bijective on 16 vertices, maps all 32 edges onto edges".into(),
        Method::Witness,
        started,
        outcome,
    )
}

/// Twin structure: classes as the theorem describes, quotient a cycle
/// (or a single edge for PX(4,1)).
pub fn check_twins(params: PxParams) -> VerificationReport {
    let started = Instant::now();
    let outcome = (|| {
        let g = PxGraph::build(params);
        let partition = twin_classes(&g);
        let (n, k) = (params.n(), params.k());
        let structure_ok = if k >= 2 {
            partition.is_twin_free()
        } else if n == 4 {
            partition.class_count() == 2 && partition.uniform_class_size() == Some(4)
        } else {
            partition.class_count() == n
                && partition.uniform_class_size() == Some(2)
                && partition.classes().iter().all(|class| {
                    let fibre = g.vertex_from_id(class[0]).unwrap().fibre();
                    class
                        .iter()
                        .all(|&id| g.vertex_from_id(id).unwrap().fibre() == fibre)
                })
        };
        let quotient = twin_quotient(&g, &partition);
        let quotient_ok = if k >= 2 {
            quotient.vertex_count() == g.vertex_count()
        } else if n == 4 {
            quotient.is_single_edge()
        } else {
            quotient.is_cycle() && quotient.vertex_count() == n
        };
        Ok((
            structure_ok && quotient_ok,
            serde_json::json!({
                "classes": partition.class_count(),
                "class_size": partition.uniform_class_size(),
                "quotient_vertices": quotient.vertex_count(),
            }),
            vec![],
        ))
    })();
    finish(
        format!("{params}: twin classes and quotient match the published structure"),
        Method::Bruteforce,
        started,
        outcome,
    )
}

/// The interchangeability criterion agrees with exhaustive search over
/// the semidirect product, on every distinct vertex pair.
pub fn check_interchange(params: PxParams) -> VerificationReport {
    let started = Instant::now();
    let outcome = (|| {
        let g = PxGraph::build(params);
        let group: Vec<PermTable> = enumerate_a(params)?
            .map(|alpha| alpha.perm_table())
            .collect();
        let count = g.vertex_count() as u32;
        let disagreements: Vec<String> = (0..count)
            .into_par_iter()
            .map(|uid| {
                let mut bad = Vec::new();
                for vid in uid + 1..count {
                    let u = g.vertex_from_id(uid).unwrap();
                    let v = g.vertex_from_id(vid).unwrap();
                    let by_formula = interchangeable_predicate(params, u, v).unwrap();
                    let by_search = interchangeable_bruteforce(group.iter(), uid, vid)
                        .unwrap()
                        .is_some();
                    if by_formula != by_search {
                        bad.push(format!("{u} vs {v}"));
                    }
                }
                bad
            })
            .reduce(Vec::new, |mut a, mut b| {
                a.append(&mut b);
                a
            });
        let pairs = (count as u64) * (count as u64 - 1) / 2;
        Ok((
            disagreements.is_empty(),
            serde_json::json!({ "pairs": pairs, "disagreements": disagreements.len() }),
            disagreements,
        ))
    })();
    finish(
        format!("{params}: interchange criterion equals exhaustive search on all pairs"),
        Method::Bruteforce,
        started,
        outcome,
    )
}

/// The two published point cases of the interchange criterion.
pub fn check_interchange_points() -> Vec<VerificationReport> {
    let mut reports = Vec::new();

    let started = Instant::now();
    let outcome = (|| {
        let params = PxParams::new(5, 3)?;
        let u: Vertex = "0:101".parse()?;
        let v: Vertex = "1:001".parse()?;
        let by_formula = interchangeable_predicate(params, u, v)?;
        let group: Vec<PermTable> = enumerate_a(params)?.map(|a| a.perm_table()).collect();
        let g = PxGraph::build(params);
        let by_search =
            interchangeable_bruteforce(group.iter(), g.vertex_id(u)?, g.vertex_id(v)?)?.is_some();
        Ok((
            !by_formula && !by_search,
            serde_json::json!({ "formula": by_formula, "search": by_search }),
            vec![u.to_string(), v.to_string()],
        ))
    })();
    reports.push(finish(
        "PX(5,3): (0,101) and (1,001) are not interchangeable".into(),
        Method::Bruteforce,
        started,
        outcome,
    ));

    let started = Instant::now();
    let outcome = (|| {
        let params = PxParams::new(10, 3)?;
        let u: Vertex = "0:000".parse()?;
        let v: Vertex = "5:000".parse()?;
        let by_formula = interchangeable_predicate(params, u, v)?;
        let uid = crate::graph::vertex_id(params, u)?;
        let vid = crate::graph::vertex_id(params, v)?;
        let mut rotation = None;
        let mut reflection = None;
        for alpha in enumerate_a(params)? {
            if alpha.apply_id(uid) == vid && alpha.apply_id(vid) == uid {
                match alpha.delta() {
                    Dihedral::Rotation(_) => rotation = rotation.or(Some(alpha)),
                    Dihedral::Reflection(_) => reflection = reflection.or(Some(alpha)),
                }
                if rotation.is_some() && reflection.is_some() {
                    break;
                }
            }
        }
        let witnesses: Vec<String> = [&rotation, &reflection]
            .iter()
            .filter_map(|w| w.map(|alpha| alpha.to_string()))
            .collect();
        Ok((
            by_formula && rotation.is_some() && reflection.is_some(),
            serde_json::json!({ "formula": by_formula }),
            witnesses,
        ))
    })();
    reports.push(finish(
        "PX(10,3): (0,000) and (5,000) swap by both a rotation and a reflection".into(),
        Method::Bruteforce,
        started,
        outcome,
    ));
    reports
}

/// Constructive witnesses on one grid instance, verified against the
/// full group.
pub fn check_witnesses(params: PxParams, budget: &SearchBudget) -> Vec<VerificationReport> {
    let g = PxGraph::build(params);
    let mut reports = Vec::new();

    let started = Instant::now();
    let outcome = (|| {
        let group = full_aut(&g, budget)?;
        let witness = det_witness(params)?;
        let ids: Vec<u32> = witness
            .iter()
            .map(|&v| g.vertex_id(v))
            .collect::<Result<Vec<_>>>()?;
        let determining = is_determining(group.iter(), &ids);
        let size_ok = witness.len() as u64 == det_formula(params).value().unwrap();
        Ok((
            determining && size_ok,
            serde_json::json!({ "size": witness.len(), "determining": determining }),
            labels(&witness),
        ))
    })();
    reports.push(finish(
        format!("{params}: constructed determining set verifies at formula size"),
        Method::Witness,
        started,
        outcome,
    ));

    let started = Instant::now();
    let outcome = (|| {
        let group = full_aut(&g, budget)?;
        let coloring = dist_witness(params)?;
        let distinguishing = is_distinguishing(group.iter(), &coloring);
        let colors_ok = coloring.num_colors() as u64 == dist_formula(params).value().unwrap();
        let first_class = id_labels(&g, &coloring.class(0));
        Ok((
            distinguishing && colors_ok,
            serde_json::json!({ "colors": coloring.num_colors(), "distinguishing": distinguishing }),
            first_class,
        ))
    })();
    reports.push(finish(
        format!("{params}: constructed distinguishing coloring verifies"),
        Method::Witness,
        started,
        outcome,
    ));

    if params.k() >= 2 {
        let started = Instant::now();
        let outcome = (|| {
            let group = full_aut(&g, budget)?;
            let red = cost_witness(params)?;
            let ids: Vec<u32> = red
                .iter()
                .map(|&v| g.vertex_id(v))
                .collect::<Result<Vec<_>>>()?;
            let coloring = Coloring::two_class(g.vertex_count(), &ids)?;
            let distinguishing = is_distinguishing(group.iter(), &coloring);
            let size_ok = red.len() as u64 == cost_formula(params).value().unwrap();
            Ok((
                distinguishing && size_ok,
                serde_json::json!({ "size": red.len(), "distinguishing": distinguishing }),
                labels(&red),
            ))
        })();
        reports.push(finish(
            format!("{params}: constructed red class verifies at formula size"),
            Method::Witness,
            started,
            outcome,
        ));
    }
    reports
}

/// Streaming check over all of `A`, parallel over the enumeration
/// index: no non-identity element fixes the set pointwise.
pub fn det_witness_holds_at_scale(params: PxParams, witness: &[Vertex]) -> Result<bool> {
    let ids: Vec<u32> = witness
        .iter()
        .map(|&v| crate::graph::vertex_id(params, v))
        .collect::<Result<Vec<_>>>()?;
    let total = a_order(params)?;
    Ok((0..total).into_par_iter().all(|index| {
        let alpha = a_element(params, index);
        !(ids.iter().all(|&s| alpha.apply_id(s) == s) && !alpha.is_identity())
    }))
}

/// Streaming check over all of `A`: no non-identity element stabilizes
/// the red class setwise.
pub fn red_class_holds_at_scale(params: PxParams, red: &[Vertex]) -> Result<bool> {
    let ids: Vec<u32> = red
        .iter()
        .map(|&v| crate::graph::vertex_id(params, v))
        .collect::<Result<Vec<_>>>()?;
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    let total = a_order(params)?;
    Ok((0..total).into_par_iter().all(|index| {
        let alpha = a_element(params, index);
        !(ids
            .iter()
            .all(|&r| sorted.binary_search(&alpha.apply_id(r)).is_ok())
            && !alpha.is_identity())
    }))
}

/// The beyond-search scale cases: a four-vertex determining set for
/// PX(20,5) over all 41,943,040 elements of `A`, and the two red
/// classes for PX(13,4) over all 212,992.
pub fn check_scale_witnesses() -> Vec<VerificationReport> {
    let mut reports = Vec::new();

    let started = Instant::now();
    let outcome = (|| {
        let params = PxParams::new(20, 5)?;
        let witness = det_witness(params)?;
        let ok = det_witness_holds_at_scale(params, &witness)?;
        Ok((
            ok && witness.len() == 4,
            serde_json::json!({ "group_elements": a_order(params)?, "size": witness.len() }),
            labels(&witness),
        ))
    })();
    reports.push(finish(
        "PX(20,5): size-4 determining set verified over the whole group".into(),
        Method::Witness,
        started,
        outcome,
    ));

    let started = Instant::now();
    let outcome = (|| {
        let params = PxParams::new(13, 4)?;
        let red = cost_witness(params)?;
        let ok = red_class_holds_at_scale(params, &red)?;
        Ok((
            ok && red.len() == 4,
            serde_json::json!({ "group_elements": a_order(params)?, "size": red.len() }),
            labels(&red),
        ))
    })();
    reports.push(finish(
        "PX(13,4): size-4 red class verified over the whole group".into(),
        Method::Witness,
        started,
        outcome,
    ));

    let started = Instant::now();
    let outcome = (|| {
        let params = PxParams::new(13, 4)?;
        let red = generic_cost_upper_witness(params)?;
        let ok = red_class_holds_at_scale(params, &red)?;
        Ok((
            ok && red.len() == 5,
            serde_json::json!({ "group_elements": a_order(params)?, "size": red.len() }),
            labels(&red),
        ))
    })();
    reports.push(finish(
        "PX(13,4): padded size-5 red class verified over the whole group".into(),
        Method::Witness,
        started,
        outcome,
    ));
    reports
}

/// Sanity checks on the reflection fixed-fibre structure.
pub fn check_reflections(params: PxParams) -> VerificationReport {
    let started = Instant::now();
    let outcome = (|| {
        let n = params.n();
        let mut ok = true;
        for s in 0..n {
            let fixed = mu_fixed_fibres(s, params);
            if n % 2 == 1 {
                ok &= fixed.len() == 1;
            } else {
                ok &= fixed.len() == 2 || fixed.is_empty();
                ok &= fixed.is_empty() == (s % 2 == params.k() % 2);
                if let [a, b] = fixed[..] {
                    ok &= crate::graph::antipodal(a, b, n);
                }
            }
            // The advertised fibre action.
            let mu = Dihedral::mu(s, params);
            for i in 0..n {
                ok &= mu.apply(i, n) == (s + 1 + 2 * n - params.k() - i) % n;
            }
        }
        Ok((ok, serde_json::json!({ "reflections": n }), vec![]))
    })();
    finish(
        format!("{params}: reflection fixed-fibre structure"),
        Method::Formula,
        started,
        outcome,
    )
}

fn run_checks(cfg: &Config) -> Vec<VerificationReport> {
    let grid = cfg.grid();
    let mut reports = Vec::new();
    for &check in &cfg.checks {
        match check {
            CheckKind::Params => {
                for &params in &grid {
                    reports.extend(check_params(params, &cfg.budget_for(params)));
                }
            }
            CheckKind::Aut => {
                for &params in &grid {
                    reports.extend(check_aut(params, &cfg.budget_for(params)));
                }
            }
            CheckKind::Relations => {
                for &params in &grid {
                    reports.push(check_relations(params));
                    reports.push(check_reflections(params));
                }
            }
            CheckKind::Xi => reports.extend(check_xi()),
            CheckKind::Phi => reports.push(check_phi()),
            CheckKind::Twins => {
                for &params in &grid {
                    reports.push(check_twins(params));
                }
            }
            CheckKind::Interchange => {
                let instances: Vec<PxParams> = if cfg.only.is_some() {
                    grid.clone()
                } else {
                    [(5, 2), (5, 3), (6, 2), (6, 3), (7, 2)]
                        .iter()
                        .map(|&(n, k)| PxParams::new(n, k).unwrap())
                        .collect()
                };
                for params in instances {
                    reports.push(check_interchange(params));
                }
                if cfg.only.is_none() {
                    reports.extend(check_interchange_points());
                }
            }
            CheckKind::Witness => {
                for &params in &grid {
                    reports.extend(check_witnesses(params, &cfg.budget_for(params)));
                }
                if cfg.only.is_none() {
                    reports.extend(check_scale_witnesses());
                }
            }
        }
    }
    reports
}

/// Runs the configured verification campaign; deterministic output for
/// any worker count.
pub fn run_campaign(cfg: &Config) -> Result<Vec<VerificationReport>> {
    match cfg.workers {
        None => Ok(run_checks(cfg)),
        Some(workers) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .map_err(|e| Error::InvalidParams(format!("worker pool: {e}")))?;
            Ok(pool.install(|| run_checks(cfg)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_matches_the_acceptance_grid() {
        let cfg = Config::default();
        let grid = cfg.grid();
        assert_eq!(grid.len(), 17);
        assert!(grid.contains(&PxParams::new(5, 4).unwrap()));
        assert!(grid.contains(&PxParams::new(7, 4).unwrap()));
        assert!(!grid.iter().any(|p| p.vertex_count() > 112));
    }

    #[test]
    fn config_file_and_env_parsing() {
        let mut cfg = Config::default();
        cfg.apply_config_file("# comment\nn_max = 5\nworkers=2\nmax_subset_size=7\n")
            .unwrap();
        assert_eq!(cfg.n_max, 5);
        assert_eq!(cfg.workers, Some(2));
        assert_eq!(cfg.budget.max_subset_size, 7);
        assert!(cfg.apply_config_file("bogus").is_err());
        assert!(cfg.apply_config_file("unknown=1").is_err());
    }

    #[test]
    fn budget_raises_subset_cap_for_k1() {
        let cfg = Config::default();
        assert_eq!(
            cfg.budget_for(PxParams::new(7, 1).unwrap()).max_subset_size,
            7
        );
        assert_eq!(
            cfg.budget_for(PxParams::new(7, 2).unwrap()).max_subset_size,
            6
        );
    }

    #[test]
    fn single_instance_campaign_passes() {
        let cfg = Config {
            only: Some(PxParams::new(3, 2).unwrap()),
            checks: vec![CheckKind::Params, CheckKind::Relations, CheckKind::Twins],
            ..Config::default()
        };
        let reports = run_campaign(&cfg).unwrap();
        assert!(!reports.is_empty());
        for report in &reports {
            assert!(report.passed(), "{}: {:?}", report.claim, report.value);
        }
    }

    #[test]
    fn phi_and_xi_checks_pass() {
        assert!(check_phi().passed());
        for report in check_xi() {
            assert!(report.passed(), "{}", report.claim);
        }
    }
}
