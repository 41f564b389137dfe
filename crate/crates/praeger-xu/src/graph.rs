//! Construction of the graphs PX(n,k) together with fibres,
//! adjacency queries and deterministic exports.
//!
//! PX(n,k) has vertex set Z_n x {0,1}^k. A vertex `(i, x)` is joined to
//! `(i+1, y)` exactly when the last k-1 bits of `x` equal the first k-1
//! bits of `y`, i.e. the word slides one position when moving to the
//! next fibre. The graph is 4-regular and connected, each fibre is an
//! independent set of 2^k vertices, and every vertex has exactly two
//! neighbours in each adjacent fibre.

use std::fmt;
use std::str::FromStr;

use crate::bitstring::{BitWord, MAX_WORD_LEN};
use crate::error::{Error, Result};

/// Largest vertex count we are willing to materialize.
pub const MAX_VERTICES: usize = 1 << 22;

/// Validated parameter pair (n, k) with n >= 3 and 1 <= k < n.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PxParams {
    n: usize,
    k: usize,
}

impl PxParams {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 3 || k == 0 || k >= n {
            return Err(Error::InvalidParams(format!(
                "PX(n,k) requires n >= 3 and 1 <= k < n, got n={n}, k={k}"
            )));
        }
        if k > MAX_WORD_LEN {
            return Err(Error::Capacity(format!(
                "k={k} exceeds the supported word length {MAX_WORD_LEN}"
            )));
        }
        let vertices = n.checked_shl(k as u32).filter(|&v| v <= MAX_VERTICES);
        if vertices.is_none() {
            return Err(Error::Capacity(format!(
                "PX({n},{k}) has more than {MAX_VERTICES} vertices"
            )));
        }
        Ok(PxParams { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// n * 2^k.
    pub fn vertex_count(&self) -> usize {
        self.n << self.k
    }

    /// Number of words per fibre, 2^k.
    pub fn fibre_size(&self) -> usize {
        1 << self.k
    }
}

impl fmt::Display for PxParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PX({},{})", self.n, self.k)
    }
}

/// A vertex `(i, x)`: fibre index `i` in Z_n plus a k-bit word.
///
/// The derived ordering agrees with [`vertex_id`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    fibre: usize,
    word: BitWord,
}

impl Vertex {
    pub fn new(fibre: usize, word: BitWord) -> Self {
        Vertex { fibre, word }
    }

    pub fn fibre(&self) -> usize {
        self.fibre
    }

    pub fn word(&self) -> BitWord {
        self.word
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.fibre, self.word)
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.fibre, self.word)
    }
}

impl FromStr for Vertex {
    type Err = Error;

    /// Parses the `i:bits` form, e.g. `0:101`.
    fn from_str(s: &str) -> Result<Self> {
        let (fibre, word) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected i:bits, got {s:?}")))?;
        let fibre = fibre
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad fibre index in {s:?}")))?;
        Ok(Vertex {
            fibre,
            word: word.parse()?,
        })
    }
}

/// True iff fibres i and j are antipodal in Z_n: n is even and
/// i - j = n/2 (mod n).
pub fn antipodal(i: usize, j: usize, n: usize) -> bool {
    n % 2 == 0 && (i % n + n - j % n) % n == n / 2
}

/// Dense id of a vertex: `i * 2^k + numeral(x)`.
pub fn vertex_id(params: PxParams, v: Vertex) -> Result<u32> {
    if v.fibre >= params.n || v.word.len() != params.k {
        return Err(Error::ForeignVertex(format!(
            "{v} is not a vertex of {params}"
        )));
    }
    Ok(((v.fibre << params.k) as u32) | v.word.numeral())
}

/// Inverse of [`vertex_id`].
pub fn vertex_from_id(params: PxParams, id: u32) -> Result<Vertex> {
    if id as usize >= params.vertex_count() {
        return Err(Error::ForeignVertex(format!(
            "id {id} out of range for {params}"
        )));
    }
    let word = BitWord::from_numeral(id & ((1u32 << params.k) - 1), params.k)?;
    Ok(Vertex {
        fibre: (id >> params.k) as usize,
        word,
    })
}

/// Export formats understood by [`PxGraph::export`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExportFormat {
    Dot,
    Edges,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "edges" => Ok(ExportFormat::Edges),
            "json" => Ok(ExportFormat::Json),
            _ => Err(Error::Parse(format!("unknown export format {s:?}"))),
        }
    }
}

/// An immutable PX(n,k) graph with precomputed, id-sorted adjacency.
#[derive(Clone)]
pub struct PxGraph {
    params: PxParams,
    adj: Vec<[u32; 4]>,
}

impl PxGraph {
    /// Builds the graph from the sliding-window edge rule.
    pub fn build(params: PxParams) -> Self {
        let k = params.k;
        let n = params.n;
        let words = params.fibre_size() as u32;
        let low = words - 1;
        let mut adj = Vec::with_capacity(params.vertex_count());
        for i in 0..n {
            let up = ((i + 1) % n) as u32;
            let down = ((i + n - 1) % n) as u32;
            for w in 0..words {
                // Up-neighbours drop the first bit and append 0/1; down-
                // neighbours drop the last bit and prepend 0/1.
                let shifted_up = (w << 1) & low;
                let shifted_down = w >> 1;
                let mut nbrs = [
                    (up << k) | shifted_up,
                    (up << k) | shifted_up | 1,
                    (down << k) | shifted_down,
                    (down << k) | shifted_down | (words >> 1),
                ];
                nbrs.sort_unstable();
                adj.push(nbrs);
            }
        }
        PxGraph { params, adj }
    }

    pub fn params(&self) -> PxParams {
        self.params
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.len() * 2 // 4-regular
    }

    pub fn vertex_id(&self, v: Vertex) -> Result<u32> {
        vertex_id(self.params, v)
    }

    pub fn vertex_from_id(&self, id: u32) -> Result<Vertex> {
        vertex_from_id(self.params, id)
    }

    /// Sorted neighbour ids of vertex `id`.
    pub fn neighbor_ids(&self, id: u32) -> &[u32; 4] {
        &self.adj[id as usize]
    }

    /// The four neighbours of `v`, sorted by id.
    pub fn neighbors(&self, v: Vertex) -> Result<[Vertex; 4]> {
        let id = self.vertex_id(v)?;
        let mut out = [v; 4];
        for (slot, &nbr) in out.iter_mut().zip(self.adj[id as usize].iter()) {
            *slot = self.vertex_from_id(nbr)?;
        }
        Ok(out)
    }

    pub fn are_adjacent(&self, u: Vertex, v: Vertex) -> Result<bool> {
        let uid = self.vertex_id(u)?;
        let vid = self.vertex_id(v)?;
        Ok(self.adj[uid as usize].contains(&vid))
    }

    /// All 2^k vertices of fibre `i`.
    pub fn fibre(&self, i: usize) -> Result<Vec<Vertex>> {
        if i >= self.params.n {
            return Err(Error::InvalidParams(format!(
                "fibre index {i} out of range for {}",
                self.params
            )));
        }
        BitWord::all(self.params.k).map(|words| words.map(|w| Vertex::new(i, w)).collect())
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vertex_count() as u32).map(|id| self.vertex_from_id(id).unwrap())
    }

    /// Generic adjacency lists, for algorithms that do not care about
    /// the PX structure.
    pub fn adjacency_lists(&self) -> Vec<Vec<u32>> {
        self.adj.iter().map(|nbrs| nbrs.to_vec()).collect()
    }

    /// Breadth-first reachability from vertex 0 covers everything.
    pub fn is_connected(&self) -> bool {
        let v = self.vertex_count();
        let mut seen = vec![false; v];
        let mut queue = std::collections::VecDeque::from([0u32]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &nbr in &self.adj[u as usize] {
                if !seen[nbr as usize] {
                    seen[nbr as usize] = true;
                    count += 1;
                    queue.push_back(nbr);
                }
            }
        }
        count == v
    }

    /// Edges as id pairs (u < v), sorted.
    pub fn edge_ids(&self) -> Vec<(u32, u32)> {
        let mut edges = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if (u as u32) < v {
                    edges.push((u as u32, v));
                }
            }
        }
        edges.sort_unstable();
        edges
    }

    /// Deterministic textual export.
    pub fn export(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Edges => self.export_edges(),
            ExportFormat::Json => self.export_json(),
            ExportFormat::Dot => self.export_dot(),
        }
    }

    fn label(&self, id: u32) -> String {
        self.vertex_from_id(id).unwrap().to_string()
    }

    fn export_edges(&self) -> String {
        let mut lines: Vec<String> = self
            .edge_ids()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (self.label(u), self.label(v));
                if a <= b {
                    format!("{a} {b}")
                } else {
                    format!("{b} {a}")
                }
            })
            .collect();
        lines.sort_unstable();
        lines.join("\n") + "\n"
    }

    fn export_json(&self) -> String {
        let vertices: Vec<String> = (0..self.vertex_count() as u32)
            .map(|id| self.label(id))
            .collect();
        let edges: Vec<[u32; 2]> = self.edge_ids().into_iter().map(|(u, v)| [u, v]).collect();
        let value = serde_json::json!({
            "n": self.params.n,
            "k": self.params.k,
            "vertices": vertices,
            "edges": edges,
        });
        serde_json::to_string_pretty(&value).expect("json export") + "\n"
    }

    /// DOT with explicit positions: fibre 0 at 12 o'clock, fibres
    /// clockwise, words laid out from the innermost ring (numeral 0)
    /// outwards.
    fn export_dot(&self) -> String {
        let n = self.params.n as f64;
        let mut out = String::from("graph px {\n");
        for id in 0..self.vertex_count() as u32 {
            let v = self.vertex_from_id(id).unwrap();
            let angle =
                std::f64::consts::FRAC_PI_2 - (v.fibre() as f64) * std::f64::consts::TAU / n;
            let radius = 2.0 + 0.75 * v.word().numeral() as f64;
            let (x, y) = (radius * angle.cos(), radius * angle.sin());
            out.push_str(&format!(
                "  \"{}\" [pos=\"{x:.3},{y:.3}!\"];\n",
                self.label(id)
            ));
        }
        for (u, v) in self.edge_ids() {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\";\n",
                self.label(u),
                self.label(v)
            ));
        }
        out.push_str("}\n");
        out
    }
}
