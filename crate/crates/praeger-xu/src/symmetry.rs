//! Definition-level checkers and brute-force oracles for determining
//! sets, distinguishing colorings, 2-distinguishing cost and full
//! automorphism search.
//!
//! Nothing here knows anything about the PX group structure: the
//! parameter oracles take the acting group as an explicit argument, and
//! the automorphism search works from adjacency lists alone. Searches
//! are deterministic for any worker count: parallel subset scans find
//! the first (lexicographically least) witness, and budget accounting
//! is done per phase rather than per worker.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::PxGraph;
use crate::group::{Automorphism, PermTable};

/// Caps for the exhaustive searches.
#[derive(Clone, Debug)]
pub struct SearchBudget {
    /// Largest subset size tried by the set searches.
    pub max_subset_size: usize,
    /// Total colorings the coloring search may enumerate.
    pub max_colorings: u64,
    /// Total elementary checks (subset x group estimates, backtracking
    /// nodes) a single search may spend.
    pub node_limit: u64,
    /// Vertex cap for the structure-blind automorphism search.
    pub generic_vertex_cap: usize,
    /// Optional wall-clock cap, checked between phases.
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_subset_size: 6,
            max_colorings: 10_000_000,
            node_limit: 1_000_000_000,
            generic_vertex_cap: 120,
            time_limit: None,
        }
    }
}

/// Anything that acts on vertex ids: explicit permutation tables and
/// algebraic group elements alike.
pub trait VertexAction {
    fn image_id(&self, id: u32) -> u32;
    fn is_trivial(&self) -> bool;
}

impl VertexAction for PermTable {
    fn image_id(&self, id: u32) -> u32 {
        self.image(id)
    }

    fn is_trivial(&self) -> bool {
        self.is_identity()
    }
}

impl VertexAction for Automorphism {
    fn image_id(&self, id: u32) -> u32 {
        self.apply_id(id)
    }

    fn is_trivial(&self) -> bool {
        self.is_identity()
    }
}

impl<T: VertexAction + ?Sized> VertexAction for &T {
    fn image_id(&self, id: u32) -> u32 {
        (**self).image_id(id)
    }

    fn is_trivial(&self) -> bool {
        (**self).is_trivial()
    }
}

/// A total coloring of vertex ids with colors 0..c.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    assignment: Vec<u8>,
    num_colors: u8,
}

impl Coloring {
    /// Colors must be used densely starting from 0.
    pub fn new(assignment: Vec<u8>) -> Result<Self> {
        if assignment.is_empty() {
            return Err(Error::InvalidParams(
                "coloring of an empty vertex set".into(),
            ));
        }
        let max = *assignment.iter().max().unwrap();
        let mut used = vec![false; max as usize + 1];
        for &c in &assignment {
            used[c as usize] = true;
        }
        if used.iter().any(|&u| !u) {
            return Err(Error::InvalidParams(
                "color indices are not dense from 0".into(),
            ));
        }
        Ok(Coloring {
            assignment,
            num_colors: max + 1,
        })
    }

    /// The 2-coloring with the given class as color 0 (the red class).
    pub fn two_class(vertex_count: usize, red: &[u32]) -> Result<Self> {
        if red.is_empty() || red.len() >= vertex_count {
            return Err(Error::InvalidParams(
                "a proper 2-coloring needs a nonempty proper red class".into(),
            ));
        }
        let mut assignment = vec![1u8; vertex_count];
        for &id in red {
            if id as usize >= vertex_count {
                return Err(Error::InvalidParams(format!("vertex id {id} out of range")));
            }
            assignment[id as usize] = 0;
        }
        Ok(Coloring {
            assignment,
            num_colors: 2,
        })
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors as usize
    }

    pub fn color(&self, id: u32) -> u8 {
        self.assignment[id as usize]
    }

    pub fn class(&self, color: u8) -> Vec<u32> {
        (0..self.len() as u32)
            .filter(|&id| self.color(id) == color)
            .collect()
    }

    /// Splits part of one class off into a fresh color (a refinement).
    pub fn split_class(&self, part: &[u32]) -> Result<Self> {
        if part.is_empty() {
            return Err(Error::InvalidParams("nothing to split off".into()));
        }
        let color = self.color(part[0]);
        if part.iter().any(|&id| self.color(id) != color) {
            return Err(Error::InvalidParams(
                "split must stay within one class".into(),
            ));
        }
        if part.len() == self.class(color).len() {
            return Err(Error::InvalidParams("split must be proper".into()));
        }
        let mut assignment = self.assignment.clone();
        for &id in part {
            assignment[id as usize] = self.num_colors;
        }
        Ok(Coloring {
            assignment,
            num_colors: self.num_colors + 1,
        })
    }
}

/// True iff the only group element fixing every vertex of `set`
/// point-wise is the identity. This is the definitional primitive all
/// determining-number claims reduce to.
pub fn is_determining<A, I>(group: I, set: &[u32]) -> bool
where
    A: VertexAction,
    I: IntoIterator<Item = A>,
{
    !group
        .into_iter()
        .any(|g| set.iter().all(|&s| g.image_id(s) == s) && !g.is_trivial())
}

/// True iff the only group element mapping every color class onto
/// itself is the identity.
pub fn is_distinguishing<A, I>(group: I, coloring: &Coloring) -> bool
where
    A: VertexAction,
    I: IntoIterator<Item = A>,
{
    let len = coloring.len() as u32;
    !group.into_iter().any(|g| {
        (0..len).all(|id| coloring.color(g.image_id(id)) == coloring.color(id)) && !g.is_trivial()
    })
}

/// Some group element swapping `u` and `v`, scanning the group in its
/// given order; `None` if the pair is not interchangeable.
pub fn interchangeable_bruteforce<A, I>(group: I, u: u32, v: u32) -> Result<Option<A>>
where
    A: VertexAction,
    I: IntoIterator<Item = A>,
{
    if u == v {
        return Err(Error::InvalidParams(
            "interchange query needs distinct vertices".into(),
        ));
    }
    Ok(group
        .into_iter()
        .find(|g| g.image_id(u) == v && g.image_id(v) == u))
}

fn check_bitset_capacity(vertex_count: usize) -> Result<()> {
    if vertex_count > 128 {
        return Err(Error::Capacity(format!(
            "subset searches support at most 128 vertices, got {vertex_count}"
        )));
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut result = 1u128;
    for t in 0..k.min(n - k) {
        result = result * (n - t) as u128 / (t + 1) as u128;
        if result > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    result as u64
}

/// Writes the `rank`-th m-subset of {0..v-1} in lexicographic order.
fn unrank_subset(v: usize, m: usize, mut rank: u64, out: &mut Vec<u32>) {
    out.clear();
    let mut next = 0usize;
    for t in 0..m {
        let mut candidate = next;
        loop {
            let below = binomial(v - 1 - candidate, m - t - 1);
            if rank < below {
                break;
            }
            rank -= below;
            candidate += 1;
        }
        out.push(candidate as u32);
        next = candidate + 1;
    }
}

struct PhaseLedger {
    spent: u64,
    limit: u64,
    deadline: Option<Instant>,
}

impl PhaseLedger {
    fn new(budget: &SearchBudget) -> Self {
        PhaseLedger {
            spent: 0,
            limit: budget.node_limit,
            deadline: budget.time_limit.map(|limit| Instant::now() + limit),
        }
    }

    /// Reserves an upfront estimate for a whole phase, so budget trips
    /// do not depend on worker scheduling.
    fn reserve(&mut self, phase_cost: u64, what: &str) -> Result<()> {
        if let Some(deadline) = self.deadline {
            if Instant::now() > deadline {
                return Err(Error::BudgetExhausted(format!(
                    "time limit hit before {what}"
                )));
            }
        }
        self.spent = self.spent.saturating_add(phase_cost);
        if self.spent > self.limit {
            return Err(Error::BudgetExhausted(format!(
                "{what} would exceed the check budget ({} > {})",
                self.spent, self.limit
            )));
        }
        Ok(())
    }
}

/// Non-identity elements ordered by ascending support, so that
/// near-trivial preservers are found first when scanning.
fn scan_order(group: &[PermTable]) -> Vec<&PermTable> {
    let mut order: Vec<&PermTable> = group.iter().filter(|p| !p.is_identity()).collect();
    order.sort_by_cached_key(|p| (p.support_size(), p.images().to_vec()));
    order
}

/// Minimum determining set: smallest size first, lexicographically
/// least witness within that size.
pub fn det_bruteforce(
    vertex_count: usize,
    group: &[PermTable],
    budget: &SearchBudget,
) -> Result<(usize, Vec<u32>)> {
    check_bitset_capacity(vertex_count)?;
    // Fixed-point sets of non-identity elements; a set S fails exactly
    // when S lands inside one of them, so only maximal ones matter.
    let mut fixed_sets: Vec<u128> = group
        .iter()
        .filter(|p| !p.is_identity())
        .map(|p| {
            let mut bits = 0u128;
            for id in 0..vertex_count as u32 {
                if p.image(id) == id {
                    bits |= 1u128 << id;
                }
            }
            bits
        })
        .collect();
    if fixed_sets.is_empty() {
        return Ok((0, Vec::new()));
    }
    fixed_sets.sort_unstable();
    fixed_sets.dedup();
    let maximal: Vec<u128> = fixed_sets
        .iter()
        .filter(|&&s| !fixed_sets.iter().any(|&t| t != s && s & t == s))
        .copied()
        .collect();

    let mut ledger = PhaseLedger::new(budget);
    for size in 1..=budget.max_subset_size.min(vertex_count) {
        let total = binomial(vertex_count, size);
        ledger.reserve(
            total.saturating_mul(group.len() as u64),
            &format!("determining-set scan at size {size}"),
        )?;
        let found = (0..total).into_par_iter().find_first(|&rank| {
            let mut subset = Vec::with_capacity(size);
            unrank_subset(vertex_count, size, rank, &mut subset);
            let mask: u128 = subset.iter().map(|&id| 1u128 << id).sum();
            maximal.iter().all(|&fixed| mask & fixed != mask)
        });
        if let Some(rank) = found {
            let mut witness = Vec::with_capacity(size);
            unrank_subset(vertex_count, size, rank, &mut witness);
            return Ok((size, witness));
        }
    }
    Err(Error::BudgetExhausted(format!(
        "no determining set of size <= {} found",
        budget.max_subset_size.min(vertex_count)
    )))
}

fn red_set_is_distinguishing(order: &[&PermTable], subset: &[u32], mask: u128) -> bool {
    !order
        .iter()
        .any(|p| subset.iter().all(|&id| mask >> p.image(id) & 1 == 1))
}

/// Minimum red-class size over 2-distinguishing colorings, with the
/// lexicographically least witness.
pub fn cost2_bruteforce(
    vertex_count: usize,
    group: &[PermTable],
    budget: &SearchBudget,
) -> Result<(usize, Vec<u32>)> {
    check_bitset_capacity(vertex_count)?;
    let order = scan_order(group);
    if order.is_empty() {
        return Ok((1, vec![0]));
    }
    let mut ledger = PhaseLedger::new(budget);
    for size in 1..=budget.max_subset_size.min(vertex_count.saturating_sub(1)) {
        let total = binomial(vertex_count, size);
        ledger.reserve(
            total.saturating_mul(group.len() as u64),
            &format!("red-class scan at size {size}"),
        )?;
        let found = (0..total).into_par_iter().find_first(|&rank| {
            let mut subset = Vec::with_capacity(size);
            unrank_subset(vertex_count, size, rank, &mut subset);
            let mask: u128 = subset.iter().map(|&id| 1u128 << id).sum();
            red_set_is_distinguishing(&order, &subset, mask)
        });
        if let Some(rank) = found {
            let mut witness = Vec::with_capacity(size);
            unrank_subset(vertex_count, size, rank, &mut witness);
            return Ok((size, witness));
        }
    }
    Err(Error::BudgetExhausted(format!(
        "no distinguishing red class of size <= {} found",
        budget.max_subset_size.min(vertex_count)
    )))
}

/// Minimum number of colors in a distinguishing coloring.
///
/// Two colors are decided by scanning red classes in ascending size
/// (complement classes are equivalent); three or more colors enumerate
/// colorings canonically, with vertex 0 pinned to color 0 and colors
/// introduced in first-use order, so each partition is seen once.
pub fn dist_bruteforce(
    vertex_count: usize,
    group: &[PermTable],
    budget: &SearchBudget,
) -> Result<usize> {
    check_bitset_capacity(vertex_count)?;
    let order = scan_order(group);
    if order.is_empty() {
        return Ok(1);
    }

    let mut ledger = PhaseLedger::new(budget);
    for size in 1..=vertex_count / 2 {
        let total = binomial(vertex_count, size);
        ledger.reserve(
            total.saturating_mul(group.len() as u64),
            &format!("two-coloring scan at red size {size}"),
        )?;
        let found = (0..total).into_par_iter().any(|rank| {
            let mut subset = Vec::with_capacity(size);
            unrank_subset(vertex_count, size, rank, &mut subset);
            let mask: u128 = subset.iter().map(|&id| 1u128 << id).sum();
            red_set_is_distinguishing(&order, &subset, mask)
        });
        if found {
            return Ok(2);
        }
    }

    let mut colorings_left = budget.max_colorings;
    for colors in 3..=vertex_count {
        if let Some(deadline) = ledger.deadline {
            if Instant::now() > deadline {
                return Err(Error::BudgetExhausted(format!(
                    "time limit hit before the {colors}-coloring scan"
                )));
            }
        }
        let mut search = GrowthStringSearch {
            order: &order,
            assignment: vec![0u8; vertex_count],
            colors: colors as u8,
            colorings_left: &mut colorings_left,
        };
        if search.run(1, 0)? {
            return Ok(colors);
        }
    }
    unreachable!("a coloring with all colors distinct is always distinguishing")
}

struct GrowthStringSearch<'a> {
    order: &'a [&'a PermTable],
    assignment: Vec<u8>,
    colors: u8,
    colorings_left: &'a mut u64,
}

impl GrowthStringSearch<'_> {
    fn run(&mut self, position: usize, max_used: u8) -> Result<bool> {
        if position == self.assignment.len() {
            if max_used + 1 != self.colors {
                return Ok(false); // fewer colors: already covered
            }
            if *self.colorings_left == 0 {
                return Err(Error::BudgetExhausted("coloring budget exhausted".into()));
            }
            *self.colorings_left -= 1;
            let preserved = self.order.iter().any(|p| {
                (0..self.assignment.len() as u32)
                    .all(|id| self.assignment[p.image(id) as usize] == self.assignment[id as usize])
            });
            return Ok(!preserved);
        }
        let ceiling = (max_used + 1).min(self.colors - 1);
        for color in 0..=ceiling {
            self.assignment[position] = color;
            if self.run(position + 1, max_used.max(color))? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Iterated refinement of the degree partition by neighbour-class
/// multisets; the resulting classes are invariant under every
/// automorphism.
pub fn equitable_classes(adj: &[Vec<u32>]) -> Vec<u32> {
    use std::collections::BTreeMap;
    let mut colors: Vec<u32> = adj.iter().map(|nbrs| nbrs.len() as u32).collect();
    // Dense-rank the initial degrees.
    loop {
        let mut signatures: Vec<(u32, Vec<u32>)> = Vec::with_capacity(adj.len());
        for (u, nbrs) in adj.iter().enumerate() {
            let mut around: Vec<u32> = nbrs.iter().map(|&nbr| colors[nbr as usize]).collect();
            around.sort_unstable();
            signatures.push((colors[u], around));
        }
        let mut ranks: BTreeMap<&(u32, Vec<u32>), u32> = BTreeMap::new();
        for signature in &signatures {
            let next = ranks.len() as u32;
            ranks.entry(signature).or_insert(next);
        }
        let refined: Vec<u32> = signatures.iter().map(|s| ranks[s]).collect();
        if refined == colors {
            return colors;
        }
        colors = refined;
    }
}

/// The complete automorphism group of an arbitrary simple graph, found
/// by backtracking over candidate images with equitable-partition
/// pruning. Output is sorted; the input graph's structure is the only
/// thing consulted.
pub fn generic_automorphisms(adj: &[Vec<u32>], budget: &SearchBudget) -> Result<Vec<PermTable>> {
    let v = adj.len();
    if v > budget.generic_vertex_cap || v > 128 {
        return Err(Error::Capacity(format!(
            "automorphism search supports at most {} vertices, got {v}",
            budget.generic_vertex_cap.min(128)
        )));
    }
    if v == 0 {
        return Ok(vec![PermTable::identity(0)]);
    }

    let colors = equitable_classes(adj);
    let rows: Vec<u128> = adj
        .iter()
        .map(|nbrs| nbrs.iter().map(|&nbr| 1u128 << nbr).sum())
        .collect();

    // Breadth-first order over the (possibly disconnected) graph, so
    // all but the root of each component have a placed neighbour.
    let mut position_of = vec![usize::MAX; v];
    let mut order = Vec::with_capacity(v);
    for root in 0..v {
        if position_of[root] != usize::MAX {
            continue;
        }
        position_of[root] = order.len();
        order.push(root as u32);
        let mut head = order.len() - 1;
        while head < order.len() {
            let u = order[head] as usize;
            head += 1;
            for &nbr in &adj[u] {
                if position_of[nbr as usize] == usize::MAX {
                    position_of[nbr as usize] = order.len();
                    order.push(nbr);
                }
            }
        }
    }

    let placed_neighbors: Vec<Vec<u32>> = order
        .iter()
        .enumerate()
        .map(|(t, &u)| {
            adj[u as usize]
                .iter()
                .copied()
                .filter(|&nbr| position_of[nbr as usize] < t)
                .collect()
        })
        .collect();

    struct Search<'a> {
        adj: &'a [Vec<u32>],
        rows: &'a [u128],
        colors: &'a [u32],
        order: &'a [u32],
        placed_neighbors: &'a [Vec<u32>],
        image: Vec<u32>,
        used: u128,
        placed: u128,
        nodes_left: u64,
        results: Vec<PermTable>,
    }

    impl Search<'_> {
        fn recurse(&mut self, t: usize) -> Result<()> {
            if t == self.order.len() {
                self.results
                    .push(PermTable::from_images(self.image.clone()).unwrap());
                return Ok(());
            }
            let u = self.order[t] as usize;
            let mut required = 0u128;
            for &nbr in &self.placed_neighbors[t] {
                required |= 1u128 << self.image[nbr as usize];
            }
            for w in 0..self.adj.len() as u32 {
                if self.used >> w & 1 == 1 || self.colors[w as usize] != self.colors[u] {
                    continue;
                }
                // w must be adjacent to exactly the images of u's placed
                // neighbours among all placed images.
                if self.rows[w as usize] & self.placed != required {
                    continue;
                }
                if self.nodes_left == 0 {
                    return Err(Error::BudgetExhausted(
                        "automorphism search node budget exhausted".into(),
                    ));
                }
                self.nodes_left -= 1;
                self.image[u] = w;
                self.used |= 1u128 << w;
                self.placed |= 1u128 << w;
                self.recurse(t + 1)?;
                self.used &= !(1u128 << w);
                self.placed &= !(1u128 << w);
            }
            Ok(())
        }
    }

    let mut search = Search {
        adj,
        rows: &rows,
        colors: &colors,
        order: &order,
        placed_neighbors: &placed_neighbors,
        image: vec![0u32; v],
        used: 0,
        placed: 0,
        nodes_left: budget.node_limit,
        results: Vec::new(),
    };
    search.recurse(0)?;
    let mut results = search.results;
    results.sort_unstable();
    Ok(results)
}

/// Adjacency lists of the cycle on `n` vertices.
pub fn cycle_adjacency(n: usize) -> Vec<Vec<u32>> {
    (0..n)
        .map(|i| {
            let mut nbrs = vec![((i + 1) % n) as u32, ((i + n - 1) % n) as u32];
            nbrs.sort_unstable();
            nbrs.dedup();
            nbrs
        })
        .collect()
}

/// Convenience: the full automorphism group of a PX graph's underlying
/// simple graph, by structure-blind search.
pub fn generic_automorphisms_of(g: &PxGraph, budget: &SearchBudget) -> Result<Vec<PermTable>> {
    generic_automorphisms(&g.adjacency_lists(), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PxParams;
    use crate::group::{enumerate_a, full_aut};

    fn px(n: usize, k: usize) -> PxGraph {
        PxGraph::build(PxParams::new(n, k).unwrap())
    }

    fn group_of(g: &PxGraph) -> Vec<PermTable> {
        full_aut(g, &SearchBudget::default()).unwrap()
    }

    #[test]
    fn cycle_group_has_dihedral_order() {
        let budget = SearchBudget::default();
        let auts = generic_automorphisms(&cycle_adjacency(6), &budget).unwrap();
        assert_eq!(auts.len(), 12);
        for p in &auts {
            assert!(!p.is_empty());
        }
        let auts4 = generic_automorphisms(&cycle_adjacency(4), &budget).unwrap();
        assert_eq!(auts4.len(), 8);
    }

    #[test]
    fn generic_search_agrees_with_the_algebraic_group() {
        for (n, k) in [(3, 2), (5, 2)] {
            let g = px(n, k);
            let generic = generic_automorphisms_of(&g, &SearchBudget::default()).unwrap();
            let mut algebraic: Vec<PermTable> = enumerate_a(g.params())
                .unwrap()
                .map(|alpha| alpha.perm_table())
                .collect();
            algebraic.sort_unstable();
            assert_eq!(generic, algebraic);
        }
    }

    #[test]
    fn determining_oracle_examples() {
        let g = px(5, 2);
        let group = group_of(&g);
        let set: Vec<u32> = ["0:00", "2:00", "4:00"]
            .iter()
            .map(|s| g.vertex_id(s.parse().unwrap()).unwrap())
            .collect();
        assert!(is_determining(group.iter(), &set));

        let g63 = px(6, 3);
        let group63 = group_of(&g63);
        let antipodal_pair: Vec<u32> = ["0:000", "3:000"]
            .iter()
            .map(|s| g63.vertex_id(s.parse().unwrap()).unwrap())
            .collect();
        assert!(!is_determining(group63.iter(), &antipodal_pair));

        // The whole vertex set always determines.
        let everything: Vec<u32> = (0..g.vertex_count() as u32).collect();
        assert!(is_determining(group.iter(), &everything));
    }

    #[test]
    fn det_bruteforce_small_values() {
        let budget = SearchBudget::default();
        let g = px(3, 2);
        let group = group_of(&g);
        let (size, witness) = det_bruteforce(g.vertex_count(), &group, &budget).unwrap();
        assert_eq!(size, 2);
        assert!(is_determining(group.iter(), &witness));

        let g41 = px(4, 1);
        let group41 = group_of(&g41);
        assert_eq!(group41.len(), 1152);
        let (size, witness) = det_bruteforce(g41.vertex_count(), &group41, &budget).unwrap();
        assert_eq!(size, 6);
        assert!(is_determining(group41.iter(), &witness));
    }

    #[test]
    fn distinguishing_oracle_examples() {
        let g = px(3, 2);
        let group = group_of(&g);
        let red: Vec<u32> = ["0:00", "0:01", "1:00"]
            .iter()
            .map(|s| g.vertex_id(s.parse().unwrap()).unwrap())
            .collect();
        let coloring = Coloring::two_class(g.vertex_count(), &red).unwrap();
        assert!(is_distinguishing(group.iter(), &coloring));

        // No red pair works: every two vertices are interchangeable.
        let pair = Coloring::two_class(g.vertex_count(), &[0, 5]).unwrap();
        assert!(!is_distinguishing(group.iter(), &pair));

        let all_one = Coloring::new(vec![0; g.vertex_count()]).unwrap();
        assert!(!is_distinguishing(group.iter(), &all_one));
    }

    #[test]
    fn published_px32_red_set_has_a_preserver() {
        // {(0,00),(1,01),(2,00)} is fixed setwise by the reflection
        // through fibre 0 followed by the flip with exponent word 001,
        // so it is not a distinguishing class.
        use crate::group::{Automorphism, Dihedral, TauWord};
        let g = px(3, 2);
        let preserver = Automorphism::from_parts(
            g.params(),
            TauWord::generator(2, 3),
            Dihedral::mu(1, g.params()),
            false,
        )
        .unwrap();
        assert!(crate::group::is_automorphism(&g, &preserver.perm_table()));
        let red: Vec<u32> = ["0:00", "1:01", "2:00"]
            .iter()
            .map(|s| g.vertex_id(s.parse().unwrap()).unwrap())
            .collect();
        let coloring = Coloring::two_class(g.vertex_count(), &red).unwrap();
        assert!((0..12u32).all(|id| coloring.color(preserver.apply_id(id)) == coloring.color(id)));
        assert!(!is_distinguishing(group_of(&g).iter(), &coloring));
    }

    #[test]
    fn cost_oracle_on_px32() {
        let g = px(3, 2);
        let group = group_of(&g);
        let (size, red) =
            cost2_bruteforce(g.vertex_count(), &group, &SearchBudget::default()).unwrap();
        assert_eq!(size, 3);
        let coloring = Coloring::two_class(g.vertex_count(), &red).unwrap();
        assert!(is_distinguishing(group.iter(), &coloring));
    }

    #[test]
    fn dist_oracle_values() {
        let budget = SearchBudget::default();
        let g = px(3, 2);
        assert_eq!(
            dist_bruteforce(g.vertex_count(), &group_of(&g), &budget).unwrap(),
            2
        );

        let g61 = px(6, 1);
        assert_eq!(
            dist_bruteforce(g61.vertex_count(), &group_of(&g61), &budget).unwrap(),
            3
        );

        // Cycles, as plain test graphs: 3 colors for C_4, 2 for C_6.
        let c4 = cycle_adjacency(4);
        let c4_group = generic_automorphisms(&c4, &budget).unwrap();
        assert_eq!(dist_bruteforce(4, &c4_group, &budget).unwrap(), 3);
        let c6_group = generic_automorphisms(&cycle_adjacency(6), &budget).unwrap();
        assert_eq!(dist_bruteforce(6, &c6_group, &budget).unwrap(), 2);
    }

    #[test]
    fn interchange_oracle() {
        let g = px(3, 2);
        let group = group_of(&g);
        let witness = interchangeable_bruteforce(group.iter(), 0, 7).unwrap();
        let w = witness.expect("interchangeable pair");
        assert_eq!(w.image_id(0), 7);
        assert_eq!(w.image_id(7), 0);
        assert!(interchangeable_bruteforce(group.iter(), 3, 3).is_err());
    }

    #[test]
    fn budget_trips_are_reported() {
        let g = px(3, 2);
        let group = group_of(&g);
        let budget = SearchBudget {
            node_limit: 10,
            ..SearchBudget::default()
        };
        assert!(matches!(
            det_bruteforce(g.vertex_count(), &group, &budget),
            Err(Error::BudgetExhausted(_))
        ));
    }

    #[test]
    fn coloring_validation_and_refinement() {
        assert!(Coloring::new(vec![0, 2]).is_err());
        let coloring = Coloring::new(vec![0, 0, 1, 1, 0]).unwrap();
        assert_eq!(coloring.num_colors(), 2);
        assert_eq!(coloring.class(0), vec![0, 1, 4]);
        let refined = coloring.split_class(&[1]).unwrap();
        assert_eq!(refined.num_colors(), 3);
        assert_eq!(refined.class(2), vec![1]);
        assert!(coloring.split_class(&[0, 1, 4]).is_err());
        assert!(coloring.split_class(&[0, 2]).is_err());
    }

    #[test]
    fn subset_unranking_is_lexicographic() {
        let mut out = Vec::new();
        let mut seen = Vec::new();
        for rank in 0..binomial(5, 3) {
            unrank_subset(5, 3, rank, &mut out);
            seen.push(out.clone());
        }
        let mut sorted = seen.clone();
        sorted.sort();
        assert_eq!(seen, sorted);
        assert_eq!(seen[0], vec![0, 1, 2]);
        assert_eq!(seen.last().unwrap(), &vec![2, 3, 4]);
        assert_eq!(seen.len(), 10);
    }
}
