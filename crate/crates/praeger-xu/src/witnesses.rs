//! Constructive witnesses: determining sets, distinguishing colorings,
//! cost-achieving red classes, the interchangeability criterion and
//! explicit swap elements.
//!
//! Every construction here is verifiable by the oracles in
//! [`crate::symmetry`]; the test suites do exactly that. The red class
//! for n = 2k-1 departs from the published two-vertex construction,
//! which fails for those parameters (see [`crate::formulas`]).

use crate::bitstring::BitWord;
use crate::error::{Error, Result};
use crate::formulas::cost_formula;
use crate::graph::{vertex_id, PxGraph, PxParams, Vertex};
use crate::group::{full_aut, Automorphism, Dihedral, TauWord};
use crate::symmetry::{cost2_bruteforce, det_bruteforce, Coloring, SearchBudget};
use crate::twins::{
    cycle_dist, cycle_distinguishing_coloring, lift_quotient_coloring, min_twin_cover, twin_classes,
};

fn zeros(k: usize) -> BitWord {
    BitWord::zeros(k).expect("word length validated by PxParams")
}

fn ones(k: usize) -> BitWord {
    BitWord::ones(k).expect("word length validated by PxParams")
}

/// 0...01: all zeros with the last bit set.
fn zeros_then_one(k: usize) -> BitWord {
    BitWord::from_numeral(1, k).expect("word length validated by PxParams")
}

/// A minimum determining set for PX(n,k).
///
/// For k >= 2 away from the n = 4 exceptions this is the all-zeros
/// vertex in every k-th fibre (fibres 0, 1 and k when k = n/2); for
/// k = 1 it is a minimum twin cover. PX(4,2) has no published explicit
/// set, so it is found by exhaustive search over the full group.
pub fn det_witness(params: PxParams) -> Result<Vec<Vertex>> {
    let (n, k) = (params.n(), params.k());
    if k == 1 {
        let g = PxGraph::build(params);
        return min_twin_cover(&g)
            .into_iter()
            .map(|id| g.vertex_from_id(id))
            .collect();
    }
    if (n, k) == (4, 2) {
        let g = PxGraph::build(params);
        let group = full_aut(&g, &SearchBudget::default())?;
        let (_, witness) = det_bruteforce(g.vertex_count(), &group, &SearchBudget::default())?;
        return witness.into_iter().map(|id| g.vertex_from_id(id)).collect();
    }
    if (n, k) == (4, 3) {
        return Ok(vec![
            Vertex::new(0, zeros(3)),
            Vertex::new(3, zeros_then_one(3)),
        ]);
    }
    if 2 * k == n {
        return Ok(vec![
            Vertex::new(0, zeros(k)),
            Vertex::new(1, zeros(k)),
            Vertex::new(k, zeros(k)),
        ]);
    }
    Ok((0..n.div_ceil(k))
        .map(|i| Vertex::new(i * k, zeros(k)))
        .collect())
}

/// The always-valid red class of size `ceil(n/k) + 1` for n >= 5 and
/// k >= 2: the all-zeros vertex in every k-th fibre plus an all-ones
/// vertex in fibre 1. For k = 2 with n even the all-ones vertex moves
/// to fibre 0 and fibre 1 gets all-zeros instead, which kills the one
/// reflection the plain variant misses.
pub fn generic_cost_upper_witness(params: PxParams) -> Result<Vec<Vertex>> {
    let (n, k) = (params.n(), params.k());
    if k < 2 || n < 5 {
        return Err(Error::NotApplicable(format!(
            "the padded red class construction needs n >= 5 and k >= 2, got {params}"
        )));
    }
    let fibre_count = n.div_ceil(k);
    if k == 2 && n % 2 == 0 {
        let mut red = vec![Vertex::new(0, ones(k))];
        red.extend((1..fibre_count).map(|i| Vertex::new(i * k, zeros(k))));
        red.push(Vertex::new(1, zeros(k)));
        Ok(red)
    } else {
        let mut red: Vec<Vertex> = (0..fibre_count)
            .map(|i| Vertex::new(i * k, zeros(k)))
            .collect();
        red.push(Vertex::new(1, ones(k)));
        Ok(red)
    }
}

/// A minimum red class for a 2-distinguishing coloring of PX(n,k),
/// k >= 2. Its size always equals [`cost_formula`].
pub fn cost_witness(params: PxParams) -> Result<Vec<Vertex>> {
    let (n, k) = (params.n(), params.k());
    if k == 1 {
        return Err(Error::NotApplicable(
            "PX(n,1) is not 2-distinguishable; cost is undefined".into(),
        ));
    }
    let red = if (n, k) == (4, 2) {
        let g = PxGraph::build(params);
        let group = full_aut(&g, &SearchBudget::default())?;
        let (_, witness) = cost2_bruteforce(g.vertex_count(), &group, &SearchBudget::default())?;
        witness
            .into_iter()
            .map(|id| g.vertex_from_id(id))
            .collect::<Result<Vec<_>>>()?
    } else if (n, k) == (4, 3) {
        vec![
            Vertex::new(0, zeros(3)),
            Vertex::new(2, zeros(3)),
            Vertex::new(3, zeros_then_one(3)),
        ]
    } else if n == 2 * k - 1 {
        // Two reds in fibre 0 differing in the last bit, one in fibre
        // k-1. The published two-vertex set is interchangeable here.
        vec![
            Vertex::new(0, zeros(k)),
            Vertex::new(0, zeros_then_one(k)),
            Vertex::new(k - 1, zeros(k)),
        ]
    } else if n < 2 * k {
        // 5 <= n <= 2k-2: a non-interchangeable pair.
        let j = n / 2 - 1;
        let mut word_bits = vec![true; k];
        word_bits[0] = false;
        vec![
            Vertex::new(0, zeros(k)),
            Vertex::new(j, BitWord::from_bits(&word_bits)?),
        ]
    } else if n % k != 0 && n % k != k - 1 {
        // 2k < n with both window tilings available: all-zeros in every
        // k-th fibre, with the last one perturbed in its final bit.
        let fibre_count = n.div_ceil(k);
        let mut red: Vec<Vertex> = (0..fibre_count - 1)
            .map(|i| Vertex::new(i * k, zeros(k)))
            .collect();
        red.push(Vertex::new((fibre_count - 1) * k, zeros_then_one(k)));
        red
    } else {
        generic_cost_upper_witness(params)?
    };
    debug_assert_eq!(Some(red.len() as u64), cost_formula(params).value());
    Ok(red)
}

/// A distinguishing coloring: the 2-coloring with [`cost_witness`] red
/// for k >= 2, and the lifted quotient coloring (3 colors, or 5 for
/// PX(4,1)) for k = 1.
pub fn dist_witness(params: PxParams) -> Result<Coloring> {
    let (n, k) = (params.n(), params.k());
    if k >= 2 {
        let red: Vec<u32> = cost_witness(params)?
            .into_iter()
            .map(|v| vertex_id(params, v))
            .collect::<Result<Vec<_>>>()?;
        return Coloring::two_class(params.vertex_count(), &red);
    }
    let g = PxGraph::build(params);
    let partition = twin_classes(&g);
    if n == 4 {
        lift_quotient_coloring(&g, &partition, &[0, 1], 5)
    } else {
        let quotient = cycle_distinguishing_coloring(n, cycle_dist(n)?)?;
        lift_quotient_coloring(&g, &partition, &quotient, 3)
    }
}

/// A pair of distinct vertices plus the window of fibre positions whose
/// flip generators touch both of their fibres.
#[derive(Clone, Debug)]
pub struct InterchangeQuery {
    params: PxParams,
    u: Vertex,
    v: Vertex,
    window: Vec<usize>,
}

impl InterchangeQuery {
    pub fn new(params: PxParams, u: Vertex, v: Vertex) -> Result<Self> {
        if u == v {
            return Err(Error::InvalidParams(
                "interchange query needs distinct vertices".into(),
            ));
        }
        vertex_id(params, u)?;
        vertex_id(params, v)?;
        let (n, k) = (params.n(), params.k());
        let (i, j) = (u.fibre(), v.fibre());
        let window = (0..n)
            .filter(|&m| (m + n - i) % n < k && (m + n - j) % n < k)
            .collect();
        Ok(InterchangeQuery {
            params,
            u,
            v,
            window,
        })
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    fn bit(word: BitWord, index: usize) -> bool {
        word.get(index)
            .expect("window residues stay inside the word")
    }

    /// The interchangeability criterion over the group `A`: same fibre;
    /// or a reflection whose bit demands agree on the whole window; or
    /// an antipodal rotation whose demands agree on the whole window.
    pub fn interchangeable_in_a(&self) -> bool {
        self.matching_clause().is_some()
    }

    fn matching_clause(&self) -> Option<Clause> {
        let n = self.params.n();
        let (i, x) = (self.u.fibre(), self.u.word());
        let (j, y) = (self.v.fibre(), self.v.word());
        if i == j {
            return Some(Clause::SameFibre);
        }
        let agree = |flip_j: bool, flip_i: bool| flip_j == flip_i;
        if n % 2 == 0 && j == (i + n / 2) % n {
            let rotation_ok = self.window.iter().all(|&m| {
                let tj = (m + n - j) % n;
                let ti = (m + n - i) % n;
                agree(
                    Self::bit(x, tj) == Self::bit(y, tj),
                    Self::bit(y, ti) == Self::bit(x, ti),
                )
            });
            if rotation_ok {
                return Some(Clause::AntipodalRotation);
            }
        }
        let reflection_ok = self.window.iter().all(|&m| {
            let tj = (m + n - j) % n;
            let ti = (m + n - i) % n;
            agree(
                Self::bit(x.reverse(), tj) == Self::bit(y, tj),
                Self::bit(y.reverse(), ti) == Self::bit(x, ti),
            )
        });
        reflection_ok.then_some(Clause::Reflection)
    }

    /// Constructs an element of `A` swapping the pair, following the
    /// matching clause: a pure flip for same-fibre pairs, a flip times
    /// the half-turn for antipodal agreement, a flip times the fibre
    /// swapping reflection otherwise.
    pub fn witness(&self) -> Result<Automorphism> {
        let clause = self.matching_clause().ok_or_else(|| {
            Error::NoWitness(format!(
                "{} and {} are not interchangeable over the semidirect product",
                self.u, self.v
            ))
        })?;
        let n = self.params.n();
        let k = self.params.k();
        let (i, x) = (self.u.fibre(), self.u.word());
        let (j, y) = (self.v.fibre(), self.v.word());
        // Flip demands accumulate as set bits; on window overlaps the
        // matched clause guarantees both windows ask for the same thing.
        let mut mask = 0u64;
        let delta = match clause {
            Clause::SameFibre => {
                for t in 0..k {
                    if Self::bit(x, t) != Self::bit(y, t) {
                        mask |= 1 << ((i + t) % n);
                    }
                }
                Dihedral::identity()
            }
            Clause::AntipodalRotation => {
                for t in 0..k {
                    if Self::bit(x, t) != Self::bit(y, t) {
                        mask |= 1 << ((j + t) % n);
                        mask |= 1 << ((i + t) % n);
                    }
                }
                Dihedral::rotation(n / 2, n)
            }
            Clause::Reflection => {
                for t in 0..k {
                    if Self::bit(x.reverse(), t) != Self::bit(y, t) {
                        mask |= 1 << ((j + t) % n);
                    }
                    if Self::bit(y.reverse(), t) != Self::bit(x, t) {
                        mask |= 1 << ((i + t) % n);
                    }
                }
                Dihedral::reflection_with_offset(i + j, n)
            }
        };
        let alpha =
            Automorphism::from_parts(self.params, TauWord::from_mask(mask, n)?, delta, false)?;
        if alpha.apply(self.u)? != self.v || alpha.apply(self.v)? != self.u {
            return Err(Error::NoWitness(format!(
                "constructed element {alpha} does not swap {} and {}",
                self.u, self.v
            )));
        }
        Ok(alpha)
    }
}

enum Clause {
    SameFibre,
    AntipodalRotation,
    Reflection,
}

/// True iff `u` and `v` are interchangeable by an element of `A`.
pub fn interchangeable_predicate(params: PxParams, u: Vertex, v: Vertex) -> Result<bool> {
    Ok(InterchangeQuery::new(params, u, v)?.interchangeable_in_a())
}

/// Specialization of the criterion to the all-zeros vertex of fibre 0.
pub fn z_interchangeable(params: PxParams, v: Vertex) -> Result<bool> {
    let z = Vertex::new(0, zeros(params.k()));
    interchangeable_predicate(params, z, v)
}

/// An element of `A` swapping `u` and `v`, built from the proof of the
/// interchangeability criterion.
pub fn interchange_witness(params: PxParams, u: Vertex, v: Vertex) -> Result<Automorphism> {
    InterchangeQuery::new(params, u, v)?.witness()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{enumerate_a, PermTable};
    use crate::symmetry::{is_determining, is_distinguishing};

    fn p(n: usize, k: usize) -> PxParams {
        PxParams::new(n, k).unwrap()
    }

    fn v(s: &str) -> Vertex {
        s.parse().unwrap()
    }

    fn names(vertices: &[Vertex]) -> Vec<String> {
        vertices.iter().map(|u| u.to_string()).collect()
    }

    #[test]
    fn det_witness_shapes() {
        assert_eq!(
            names(&det_witness(p(7, 3)).unwrap()),
            ["0:000", "3:000", "6:000"]
        );
        assert_eq!(
            names(&det_witness(p(6, 3)).unwrap()),
            ["0:000", "1:000", "3:000"]
        );
        assert_eq!(names(&det_witness(p(4, 3)).unwrap()), ["0:000", "3:001"]);
        assert_eq!(det_witness(p(4, 2)).unwrap().len(), 3);
        assert_eq!(det_witness(p(5, 1)).unwrap().len(), 5);
        assert_eq!(det_witness(p(4, 1)).unwrap().len(), 6);
        assert_eq!(
            names(&det_witness(p(20, 5)).unwrap()),
            ["0:00000", "5:00000", "10:00000", "15:00000"]
        );
    }

    #[test]
    fn det_witnesses_verify_on_the_grid() {
        let budget = SearchBudget::default();
        for n in 3..=7usize {
            for k in 1..n.min(5) {
                let params = p(n, k);
                let g = PxGraph::build(params);
                let group = full_aut(&g, &budget).unwrap();
                let set: Vec<u32> = det_witness(params)
                    .unwrap()
                    .into_iter()
                    .map(|u| g.vertex_id(u).unwrap())
                    .collect();
                assert!(is_determining(group.iter(), &set), "PX({n},{k})");
                assert_eq!(
                    set.len() as u64,
                    crate::formulas::det_formula(params).value().unwrap(),
                    "PX({n},{k})"
                );
            }
        }
    }

    #[test]
    fn cost_witness_shapes() {
        assert_eq!(names(&cost_witness(p(6, 4)).unwrap()), ["0:0000", "2:0111"]);
        assert_eq!(
            names(&cost_witness(p(7, 3)).unwrap()),
            ["0:000", "3:000", "6:001"]
        );
        assert_eq!(
            names(&cost_witness(p(6, 2)).unwrap()),
            ["0:11", "2:00", "4:00", "1:00"]
        );
        assert_eq!(
            names(&cost_witness(p(5, 3)).unwrap()),
            ["0:000", "0:001", "2:000"]
        );
        assert_eq!(
            names(&cost_witness(p(3, 2)).unwrap()),
            ["0:00", "0:01", "1:00"]
        );
        assert_eq!(
            names(&cost_witness(p(4, 3)).unwrap()),
            ["0:000", "2:000", "3:001"]
        );
        assert_eq!(cost_witness(p(4, 2)).unwrap().len(), 5);
        assert!(matches!(
            cost_witness(p(5, 1)),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn cost_witnesses_verify_on_the_grid() {
        let budget = SearchBudget::default();
        for n in 3..=7usize {
            for k in 2..n.min(5) {
                let params = p(n, k);
                let g = PxGraph::build(params);
                let group = full_aut(&g, &budget).unwrap();
                let red: Vec<u32> = cost_witness(params)
                    .unwrap()
                    .into_iter()
                    .map(|u| g.vertex_id(u).unwrap())
                    .collect();
                assert_eq!(red.len() as u64, cost_formula(params).value().unwrap());
                let coloring = Coloring::two_class(g.vertex_count(), &red).unwrap();
                assert!(is_distinguishing(group.iter(), &coloring), "PX({n},{k})");
            }
        }
    }

    #[test]
    fn dist_witnesses_verify_on_the_grid() {
        let budget = SearchBudget::default();
        for n in 3..=7usize {
            for k in 1..n.min(5) {
                let params = p(n, k);
                let g = PxGraph::build(params);
                let group = full_aut(&g, &budget).unwrap();
                let coloring = dist_witness(params).unwrap();
                assert!(is_distinguishing(group.iter(), &coloring), "PX({n},{k})");
                assert_eq!(
                    coloring.num_colors() as u64,
                    crate::formulas::dist_formula(params).value().unwrap(),
                    "PX({n},{k})"
                );
            }
        }
    }

    #[test]
    fn interchange_point_cases() {
        assert!(!interchangeable_predicate(p(5, 3), v("0:101"), v("1:001")).unwrap());
        assert!(interchangeable_predicate(p(10, 3), v("0:000"), v("5:000")).unwrap());
        // Every distinct pair of PX(3,2) is interchangeable.
        let g = PxGraph::build(p(3, 2));
        for uid in 0..12u32 {
            for vid in (uid + 1)..12 {
                let u = g.vertex_from_id(uid).unwrap();
                let w = g.vertex_from_id(vid).unwrap();
                assert!(interchangeable_predicate(p(3, 2), u, w).unwrap());
            }
        }
        assert!(interchangeable_predicate(p(3, 2), v("0:00"), v("0:00")).is_err());
    }

    #[test]
    fn z_specialization_agrees_with_the_general_criterion() {
        for (n, k) in [(4usize, 3usize), (5, 2), (6, 3)] {
            let params = p(n, k);
            let g = PxGraph::build(params);
            let z = Vertex::new(0, zeros(k));
            for vid in 1..g.vertex_count() as u32 {
                let w = g.vertex_from_id(vid).unwrap();
                assert_eq!(
                    z_interchangeable(params, w).unwrap(),
                    interchangeable_predicate(params, z, w).unwrap()
                );
            }
        }
        assert!(!z_interchangeable(p(4, 3), v("1:010")).unwrap());
        assert!(z_interchangeable(p(4, 3), v("2:110")).unwrap());
    }

    #[test]
    fn px43_vertices_needing_the_exceptional_coset() {
        let params = p(4, 3);
        let g = PxGraph::build(params);
        let blocked: Vec<String> = (1..32u32)
            .map(|vid| g.vertex_from_id(vid).unwrap())
            .filter(|w| !z_interchangeable(params, *w).unwrap())
            .map(|w| w.to_string())
            .collect();
        assert_eq!(
            blocked,
            ["1:010", "1:011", "1:100", "1:101", "3:001", "3:010", "3:101", "3:110"]
        );
    }

    #[test]
    fn witness_construction_swaps_the_pair() {
        // Same-fibre clause: flip exactly the differing bits.
        let alpha = interchange_witness(p(3, 2), v("0:00"), v("0:11")).unwrap();
        assert!(alpha.tau().exponent(0) && alpha.tau().exponent(1));
        assert!(alpha.delta().is_identity());

        // Antipodal rotation clause with no differing bits.
        let alpha = interchange_witness(p(10, 3), v("0:000"), v("5:000")).unwrap();
        assert!(alpha.tau().is_identity());
        assert_eq!(alpha.delta(), Dihedral::Rotation(5));

        // Reflection clause.
        let alpha = interchange_witness(p(5, 2), v("0:01"), v("2:10")).unwrap();
        assert!(alpha.delta().is_reflection());

        assert!(matches!(
            interchange_witness(p(5, 3), v("0:101"), v("1:001")),
            Err(Error::NoWitness(_))
        ));
    }

    #[test]
    fn witnesses_swap_for_every_interchangeable_pair() {
        for (n, k) in [(5usize, 2usize), (6, 3), (4, 3)] {
            let params = p(n, k);
            let g = PxGraph::build(params);
            for uid in 0..g.vertex_count() as u32 {
                for vid in (uid + 1)..g.vertex_count() as u32 {
                    let u = g.vertex_from_id(uid).unwrap();
                    let w = g.vertex_from_id(vid).unwrap();
                    let query = InterchangeQuery::new(params, u, w).unwrap();
                    if query.interchangeable_in_a() {
                        let alpha = query.witness().unwrap();
                        assert_eq!(alpha.apply(u).unwrap(), w);
                        assert_eq!(alpha.apply(w).unwrap(), u);
                        assert!(!alpha.has_xi_factor());
                    }
                }
            }
        }
    }

    #[test]
    fn predicate_matches_search_on_a_sample() {
        let params = p(5, 3);
        let g = PxGraph::build(params);
        let group: Vec<PermTable> = enumerate_a(params)
            .unwrap()
            .map(|a| a.perm_table())
            .collect();
        for uid in (0..g.vertex_count() as u32).step_by(3) {
            for vid in (uid + 1..g.vertex_count() as u32).step_by(2) {
                let u = g.vertex_from_id(uid).unwrap();
                let w = g.vertex_from_id(vid).unwrap();
                let by_formula = interchangeable_predicate(params, u, w).unwrap();
                let by_search = crate::symmetry::interchangeable_bruteforce(group.iter(), uid, vid)
                    .unwrap()
                    .is_some();
                assert_eq!(by_formula, by_search, "{u} vs {w}");
            }
        }
    }

    #[test]
    fn padded_construction_sizes() {
        let red = generic_cost_upper_witness(p(13, 4)).unwrap();
        assert_eq!(
            names(&red),
            ["0:0000", "4:0000", "8:0000", "12:0000", "1:1111"]
        );
        assert!(generic_cost_upper_witness(p(3, 2)).is_err());
        assert!(generic_cost_upper_witness(p(5, 1)).is_err());
    }

    #[test]
    fn window_shapes() {
        let q = InterchangeQuery::new(p(5, 3), v("0:101"), v("1:001")).unwrap();
        assert_eq!(q.window(), [1, 2]);
        let q = InterchangeQuery::new(p(4, 3), v("0:000"), v("2:110")).unwrap();
        assert_eq!(q.window(), [0, 2]);
        let q = InterchangeQuery::new(p(10, 3), v("0:000"), v("5:000")).unwrap();
        assert!(q.window().is_empty());
    }
}
