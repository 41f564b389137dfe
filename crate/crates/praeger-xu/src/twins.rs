//! Twin vertices, the twin quotient graph, minimum twin covers, and the
//! quotient-based transfer of distinguishing numbers.
//!
//! Two distinct vertices are twins when their open neighbourhoods are
//! equal; swapping a twin pair and fixing everything else is always an
//! automorphism. PX(n,1) is full of twins (the fibres, or the antipodal
//! fibre unions when n = 4) while every PX(n,k) with k >= 2 is
//! twin-free. Quotienting by the twin relation turns PX(n,1) into a
//! cycle (or an edge for n = 4), which is where its determining and
//! distinguishing numbers come from.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::PxGraph;
use crate::symmetry::{
    cycle_adjacency, generic_automorphisms, is_distinguishing, Coloring, SearchBudget,
};

/// The partition of the vertex ids into twin equivalence classes.
#[derive(Clone, Debug)]
pub struct TwinPartition {
    classes: Vec<Vec<u32>>,
    class_of: Vec<u32>,
}

impl TwinPartition {
    /// Classes sorted by their minimum member; members sorted by id.
    pub fn classes(&self) -> &[Vec<u32>] {
        &self.classes
    }

    pub fn class_index_of(&self, id: u32) -> u32 {
        self.class_of[id as usize]
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// The common class size, when every class has the same size.
    pub fn uniform_class_size(&self) -> Option<usize> {
        let size = self.classes.first()?.len();
        self.classes.iter().all(|c| c.len() == size).then_some(size)
    }

    pub fn is_twin_free(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }
}

/// Groups vertices by open neighbourhood.
pub fn twin_classes(g: &PxGraph) -> TwinPartition {
    let mut by_neighbourhood: HashMap<&[u32; 4], Vec<u32>> = HashMap::new();
    for id in 0..g.vertex_count() as u32 {
        by_neighbourhood
            .entry(g.neighbor_ids(id))
            .or_default()
            .push(id);
    }
    let mut classes: Vec<Vec<u32>> = by_neighbourhood.into_values().collect();
    for class in &mut classes {
        class.sort_unstable();
    }
    classes.sort_unstable();
    let mut class_of = vec![0u32; g.vertex_count()];
    for (index, class) in classes.iter().enumerate() {
        for &id in class {
            class_of[id as usize] = index as u32;
        }
    }
    TwinPartition { classes, class_of }
}

/// The quotient of a graph by its twin relation. Class ids are the
/// classes' positions in the partition (ordered by minimum member).
#[derive(Clone, Debug)]
pub struct QuotientGraph {
    representatives: Vec<u32>,
    class_sizes: Vec<usize>,
    adj: Vec<Vec<u32>>,
}

impl QuotientGraph {
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|nbrs| nbrs.len()).sum::<usize>() / 2
    }

    /// Minimum original vertex id in each class.
    pub fn representatives(&self) -> &[u32] {
        &self.representatives
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adj
    }

    pub fn is_cycle(&self) -> bool {
        let n = self.vertex_count();
        n >= 3 && self.adj.iter().all(|nbrs| nbrs.len() == 2) && self.is_connected()
    }

    pub fn is_single_edge(&self) -> bool {
        self.vertex_count() == 2 && self.edge_count() == 1
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &nbr in &self.adj[u as usize] {
                if !seen[nbr as usize] {
                    seen[nbr as usize] = true;
                    count += 1;
                    stack.push(nbr);
                }
            }
        }
        count == n
    }

    /// Edge list export in the `repA repB` line format, sorted.
    pub fn export_edges(&self, g: &PxGraph) -> String {
        let mut lines: Vec<String> = Vec::new();
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if (u as u32) < v {
                    let a = g
                        .vertex_from_id(self.representatives[u])
                        .unwrap()
                        .to_string();
                    let b = g
                        .vertex_from_id(self.representatives[v as usize])
                        .unwrap()
                        .to_string();
                    lines.push(if a <= b {
                        format!("{a} {b}")
                    } else {
                        format!("{b} {a}")
                    });
                }
            }
        }
        lines.sort_unstable();
        lines.join("\n") + "\n"
    }

    /// JSON export with class sizes and members.
    pub fn export_json(&self, g: &PxGraph, partition: &TwinPartition) -> String {
        let classes: Vec<serde_json::Value> = partition
            .classes()
            .iter()
            .enumerate()
            .map(|(index, members)| {
                serde_json::json!({
                    "id": index,
                    "representative": g.vertex_from_id(self.representatives[index]).unwrap().to_string(),
                    "size": members.len(),
                    "members": members
                        .iter()
                        .map(|&id| g.vertex_from_id(id).unwrap().to_string())
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        let mut edges: Vec<[u32; 2]> = Vec::new();
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if (u as u32) < v {
                    edges.push([u as u32, v]);
                }
            }
        }
        edges.sort_unstable();
        let value = serde_json::json!({
            "n": g.params().n(),
            "k": g.params().k(),
            "classes": classes,
            "edges": edges,
        });
        serde_json::to_string_pretty(&value).expect("quotient json") + "\n"
    }
}

/// Builds the twin quotient, checking that the some-pair and all-pairs
/// edge rules coincide (they must, for twin classes).
pub fn twin_quotient(g: &PxGraph, partition: &TwinPartition) -> QuotientGraph {
    let classes = partition.classes();
    let count = classes.len();
    let mut adjacent = vec![false; count * count];
    for id in 0..g.vertex_count() as u32 {
        let cu = partition.class_index_of(id) as usize;
        for &nbr in g.neighbor_ids(id) {
            let cv = partition.class_index_of(nbr) as usize;
            adjacent[cu * count + cv] = true;
        }
    }
    for (cu, class_u) in classes.iter().enumerate() {
        for (cv, class_v) in classes.iter().enumerate() {
            if cu < cv && adjacent[cu * count + cv] {
                // Twins share neighbourhoods, so one cross edge means all.
                for &p in class_u {
                    for &q in class_v {
                        assert!(
                            g.neighbor_ids(p).contains(&q),
                            "twin quotient edge rule mismatch between classes {cu} and {cv}"
                        );
                    }
                }
            }
        }
    }
    let adj: Vec<Vec<u32>> = (0..count)
        .map(|cu| {
            (0..count as u32)
                .filter(|&cv| cu as u32 != cv && adjacent[cu * count + cv as usize])
                .collect()
        })
        .collect();
    QuotientGraph {
        representatives: classes.iter().map(|c| c[0]).collect(),
        class_sizes: classes.iter().map(|c| c.len()).collect(),
        adj,
    }
}

/// All but the largest-id vertex of each twin class.
pub fn min_twin_cover(g: &PxGraph) -> Vec<u32> {
    let partition = twin_classes(g);
    let mut cover: Vec<u32> = partition
        .classes()
        .iter()
        .flat_map(|class| class[..class.len() - 1].iter().copied())
        .collect();
    cover.sort_unstable();
    cover
}

/// Smallest d with binomial(d, t) >= quotient_dist, the transfer rule
/// from quotient distinguishing numbers when every vertex sits in a
/// class of t mutual twins.
pub fn dist_from_quotient(t: usize, quotient_dist: u64) -> u64 {
    let mut d = 1u64;
    loop {
        if binomial_u64(d, t as u64) >= quotient_dist {
            return d;
        }
        d += 1;
    }
}

fn binomial_u64(n: u64, k: u64) -> u64 {
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

/// Distinguishing number of the cycle C_n: 3 for n in {3,4,5}, 2 from
/// n = 6 on.
pub fn cycle_dist(n: usize) -> Result<u64> {
    if n < 3 {
        return Err(Error::InvalidParams(format!("cycles need n >= 3, got {n}")));
    }
    Ok(if n <= 5 { 3 } else { 2 })
}

/// Lexicographically least distinguishing coloring of C_n with the
/// given number of colors, by direct search against the dihedral group.
pub fn cycle_distinguishing_coloring(n: usize, colors: u64) -> Result<Vec<u8>> {
    let budget = SearchBudget::default();
    let group = generic_automorphisms(&cycle_adjacency(n), &budget)?;
    let mut assignment = vec![0u8; n];
    fn search(
        assignment: &mut Vec<u8>,
        position: usize,
        max_used: u8,
        colors: u8,
        group: &[crate::group::PermTable],
    ) -> bool {
        if position == assignment.len() {
            let coloring = Coloring::new(assignment.clone()).expect("dense growth string");
            return coloring.num_colors() == colors as usize
                && is_distinguishing(group.iter(), &coloring);
        }
        for color in 0..=(max_used + 1).min(colors - 1) {
            assignment[position] = color;
            if search(assignment, position + 1, max_used.max(color), colors, group) {
                return true;
            }
        }
        false
    }
    if search(&mut assignment, 1, 0, colors as u8, &group) {
        Ok(assignment)
    } else {
        Err(Error::NoWitness(format!(
            "C_{n} has no distinguishing {colors}-coloring"
        )))
    }
}

/// Lifts a distinguishing coloring of the twin quotient to the original
/// graph: each quotient color is assigned a distinct t-subset of the
/// lifted palette, and each class is colored bijectively with the
/// subset of its quotient color.
pub fn lift_quotient_coloring(
    g: &PxGraph,
    partition: &TwinPartition,
    quotient_coloring: &[u8],
    palette: usize,
) -> Result<Coloring> {
    let t = partition
        .uniform_class_size()
        .ok_or_else(|| Error::NotApplicable("lift needs uniform twin class sizes".into()))?;
    let quotient_colors = 1 + *quotient_coloring
        .iter()
        .max()
        .ok_or_else(|| Error::InvalidParams("empty quotient coloring".into()))?
        as usize;
    let subsets = lex_subsets(palette, t, quotient_colors)?;
    let mut assignment = vec![0u8; g.vertex_count()];
    for (class, &qc) in partition.classes().iter().zip(quotient_coloring.iter()) {
        if class.len() != t {
            return Err(Error::NotApplicable(
                "lift needs uniform twin class sizes".into(),
            ));
        }
        for (&id, &color) in class.iter().zip(subsets[qc as usize].iter()) {
            assignment[id as usize] = color;
        }
    }
    Coloring::new(assignment)
}

/// The first `count` t-subsets of {0..palette-1} in lexicographic order.
fn lex_subsets(palette: usize, t: usize, count: usize) -> Result<Vec<Vec<u8>>> {
    let mut subsets = Vec::with_capacity(count);
    let mut current: Vec<u8> = (0..t as u8).collect();
    loop {
        if t > palette {
            break;
        }
        subsets.push(current.clone());
        if subsets.len() == count {
            return Ok(subsets);
        }
        // Advance to the next subset.
        let mut pos = t;
        loop {
            if pos == 0 {
                return Err(Error::InvalidParams(format!(
                    "need {count} distinct {t}-subsets of a {palette}-color palette"
                )));
            }
            pos -= 1;
            if current[pos] < (palette - t + pos) as u8 {
                current[pos] += 1;
                for later in pos + 1..t {
                    current[later] = current[later - 1] + 1;
                }
                break;
            }
        }
    }
    Err(Error::InvalidParams(format!(
        "need {count} distinct {t}-subsets of a {palette}-color palette"
    )))
}
