//! The automorphism group of PX(n,k).
//!
//! Every element of the group `A = K x| D_n` is stored algebraically as a
//! pair (flip word, dihedral part): the dihedral part acts on the fibre
//! ring, and the flip word `u_0 ... u_{n-1}` toggles word bits through a
//! sliding window, with exponent `u_s` flipping bit `s - i` of every word
//! in fibre `i` whenever `i <= s <= i + k - 1`. An element is applied
//! dihedral part first, then flip word. For n = 4 the group `A` is a
//! proper subgroup of the full automorphism group: PX(4,2) is the
//! 4-dimensional hypercube (see [`hypercube_to_px42`]), and PX(4,3) has
//! an exceptional involution [`Automorphism::xi`] lying outside `A`.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::bitstring::BitWord;
use crate::error::{Error, Result};
use crate::graph::{vertex_from_id, vertex_id, PxGraph, PxParams, Vertex};
use crate::symmetry::{generic_automorphisms, SearchBudget};

/// Largest n for which algebraic group elements are representable.
pub const MAX_GROUP_N: usize = 63;

/// Largest n for which [`enumerate_a`] will stream all of `A`.
pub const MAX_ENUM_N: usize = 48;

fn check_group_params(params: PxParams) -> Result<()> {
    if params.n() > MAX_GROUP_N {
        return Err(Error::Capacity(format!(
            "group elements support n <= {MAX_GROUP_N}, got n={}",
            params.n()
        )));
    }
    Ok(())
}

/// An element of the dihedral group acting on the fibre ring Z_n.
///
/// `Rotation(s)` sends `i` to `i + s`; `Reflection(c)` sends `i` to
/// `c - i`. The reflection written `mu_s` elsewhere corresponds to the
/// offset `c = s + 1 - k`, so its fibre action is `i -> s + 1 - k - i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Dihedral {
    Rotation(usize),
    Reflection(usize),
}

impl Dihedral {
    pub fn identity() -> Self {
        Dihedral::Rotation(0)
    }

    pub fn rotation(s: usize, n: usize) -> Self {
        Dihedral::Rotation(s % n)
    }

    pub fn reflection_with_offset(c: usize, n: usize) -> Self {
        Dihedral::Reflection(c % n)
    }

    /// The reflection `mu_s` for the given graph parameters.
    pub fn mu(s: usize, params: PxParams) -> Self {
        let n = params.n();
        Dihedral::Reflection((s % n + 1 + n - params.k() % n) % n)
    }

    /// Recovers `s` with `self = mu_s`, if this is a reflection.
    pub fn mu_index(&self, params: PxParams) -> Option<usize> {
        match self {
            Dihedral::Rotation(_) => None,
            Dihedral::Reflection(c) => Some((c + params.k() - 1) % params.n()),
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, Dihedral::Rotation(0))
    }

    pub fn is_reflection(&self) -> bool {
        matches!(self, Dihedral::Reflection(_))
    }

    /// Image of fibre index `i`.
    pub fn apply(&self, i: usize, n: usize) -> usize {
        match self {
            Dihedral::Rotation(s) => (i + s) % n,
            Dihedral::Reflection(c) => (c + n - i % n) % n,
        }
    }

    /// `self` after `other`.
    pub fn compose(&self, other: Dihedral, n: usize) -> Dihedral {
        match (*self, other) {
            (Dihedral::Rotation(a), Dihedral::Rotation(b)) => Dihedral::Rotation((a + b) % n),
            (Dihedral::Rotation(a), Dihedral::Reflection(d)) => Dihedral::Reflection((a + d) % n),
            (Dihedral::Reflection(c), Dihedral::Rotation(b)) => {
                Dihedral::Reflection((c + n - b) % n)
            }
            (Dihedral::Reflection(c), Dihedral::Reflection(d)) => {
                Dihedral::Rotation((c + n - d) % n)
            }
        }
    }

    pub fn inverse(&self, n: usize) -> Dihedral {
        match self {
            Dihedral::Rotation(s) => Dihedral::Rotation((n - s % n) % n),
            Dihedral::Reflection(c) => Dihedral::Reflection(*c),
        }
    }

    /// Fibre indices fixed by this element, in increasing order.
    ///
    /// A reflection with offset `c` fixes `i` exactly when `2i = c`
    /// (mod n): one solution for odd n; zero or two antipodal solutions
    /// for even n.
    pub fn fixed_fibres(&self, n: usize) -> Vec<usize> {
        match self {
            Dihedral::Rotation(0) => (0..n).collect(),
            Dihedral::Rotation(_) => Vec::new(),
            Dihedral::Reflection(c) => (0..n).filter(|&i| (2 * i) % n == *c).collect(),
        }
    }
}

/// Fibres preserved by the reflection `mu_s` of PX(n,k).
pub fn mu_fixed_fibres(s: usize, params: PxParams) -> Vec<usize> {
    Dihedral::mu(s, params).fixed_fibres(params.n())
}

/// An element of the elementary abelian group `K = Z_2^n` of window bit
/// flips, stored as the exponent word `u_0 ... u_{n-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TauWord {
    n: u8,
    mask: u64,
}

impl TauWord {
    pub fn identity(n: usize) -> Self {
        TauWord {
            n: n as u8,
            mask: 0,
        }
    }

    /// The generator with exponent 1 at position `s` only.
    pub fn generator(s: usize, n: usize) -> Self {
        TauWord {
            n: n as u8,
            mask: 1u64 << (s % n),
        }
    }

    pub fn from_mask(mask: u64, n: usize) -> Result<Self> {
        if n > MAX_GROUP_N {
            return Err(Error::Capacity(format!(
                "flip words support n <= {MAX_GROUP_N}"
            )));
        }
        if n < 64 && mask >> n != 0 {
            return Err(Error::InvalidParams(format!(
                "mask {mask:#x} has bits beyond n={n}"
            )));
        }
        Ok(TauWord { n: n as u8, mask })
    }

    pub fn from_exponents(exponents: &[bool]) -> Result<Self> {
        let mut mask = 0u64;
        for (s, &on) in exponents.iter().enumerate() {
            if on {
                mask |= 1u64 << s;
            }
        }
        Self::from_mask(mask, exponents.len())
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn exponent(&self, s: usize) -> bool {
        (self.mask >> (s % self.n())) & 1 == 1
    }

    pub fn is_identity(&self) -> bool {
        self.mask == 0
    }

    /// Product in `K` (exponents add mod 2); every element is its own
    /// inverse.
    pub fn product(&self, other: TauWord) -> TauWord {
        debug_assert_eq!(self.n, other.n);
        TauWord {
            n: self.n,
            mask: self.mask ^ other.mask,
        }
    }

    fn low_mask(n: usize) -> u64 {
        if n == 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    /// Word whose bit `t` is exponent `(m + t) mod n`.
    fn rotated_window(&self, m: usize) -> u64 {
        let n = self.n();
        if m == 0 {
            return self.mask;
        }
        ((self.mask >> m) | (self.mask << (n - m))) & Self::low_mask(n)
    }

    /// XOR mask (in word-numeral bit positions) this element applies to
    /// the words of fibre `m`: bit j of the word is flipped iff
    /// exponent `(m + j) mod n` is 1.
    pub(crate) fn flip_mask(&self, fibre: usize, k: usize) -> u32 {
        let window = (self.rotated_window(fibre) & Self::low_mask(k)) as u32;
        window.reverse_bits() >> (32 - k)
    }

    /// The word `w` with `tau_w = d tau_self d^{-1}` as vertex maps.
    pub fn conjugated_by(&self, delta: Dihedral, params: PxParams) -> TauWord {
        let n = self.n();
        debug_assert_eq!(n, params.n());
        match delta {
            Dihedral::Rotation(a) => {
                // w_m = u_{m - a}
                if a == 0 {
                    return *self;
                }
                let mask = ((self.mask << a) | (self.mask >> (n - a))) & Self::low_mask(n);
                TauWord { n: self.n, mask }
            }
            Dihedral::Reflection(c) => {
                // w_m = u_{c + k - 1 - m}
                let base = c + params.k() - 1;
                let mut mask = 0u64;
                for m in 0..n {
                    if self.exponent((base + n - m % n) % n) {
                        mask |= 1u64 << m;
                    }
                }
                TauWord { n: self.n, mask }
            }
        }
    }
}

impl fmt::Display for TauWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in 0..self.n() {
            write!(f, "{}", u8::from(self.exponent(s)))?;
        }
        Ok(())
    }
}

/// The disjoint transpositions defining the exceptional automorphism of
/// PX(4,3). Vertices absent from this list are fixed.
const XI_TWO_CYCLES: [[(usize, &str); 2]; 12] = [
    [(0, "010"), (0, "101")],
    [(2, "001"), (2, "110")],
    [(0, "001"), (2, "000")],
    [(0, "100"), (2, "010")],
    [(0, "011"), (2, "101")],
    [(0, "110"), (2, "111")],
    [(1, "100"), (1, "011")],
    [(3, "010"), (3, "101")],
    [(1, "000"), (3, "100")],
    [(1, "010"), (3, "001")],
    [(1, "101"), (3, "110")],
    [(1, "111"), (3, "011")],
];

fn px43_params() -> PxParams {
    PxParams::new(4, 3).expect("PX(4,3) parameters")
}

fn xi_image_table() -> &'static [u32; 32] {
    static TABLE: OnceLock<[u32; 32]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let params = px43_params();
        let mut table: [u32; 32] = std::array::from_fn(|id| id as u32);
        for [(i1, w1), (i2, w2)] in XI_TWO_CYCLES {
            let a = vertex_id(params, Vertex::new(i1, w1.parse().unwrap())).unwrap();
            let b = vertex_id(params, Vertex::new(i2, w2.parse().unwrap())).unwrap();
            table[a as usize] = b;
            table[b as usize] = a;
        }
        table
    })
}

/// The eight vertices of PX(4,3) fixed by the exceptional involution.
pub fn xi_fixed_points() -> Vec<Vertex> {
    let params = px43_params();
    xi_image_table()
        .iter()
        .enumerate()
        .filter(|&(id, &image)| id as u32 == image)
        .map(|(id, _)| vertex_from_id(params, id as u32).unwrap())
        .collect()
}

/// An automorphism of PX(n,k): a flip word, a dihedral part, and (for
/// PX(4,3) only) an optional factor of the exceptional involution.
///
/// The action applies the exceptional factor first (when present), then
/// the dihedral part, then the flip word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Automorphism {
    params: PxParams,
    tau: TauWord,
    delta: Dihedral,
    xi: bool,
}

impl Automorphism {
    pub fn from_parts(params: PxParams, tau: TauWord, delta: Dihedral, xi: bool) -> Result<Self> {
        check_group_params(params)?;
        if tau.n() != params.n() {
            return Err(Error::ParamMismatch(format!(
                "flip word is over Z_{}, graph ring is Z_{}",
                tau.n(),
                params.n()
            )));
        }
        let offset = match delta {
            Dihedral::Rotation(s) | Dihedral::Reflection(s) => s,
        };
        if offset >= params.n() {
            return Err(Error::InvalidParams(format!(
                "dihedral offset {offset} out of range for n={}",
                params.n()
            )));
        }
        if xi && (params.n(), params.k()) != (4, 3) {
            return Err(Error::InvalidParams(format!(
                "the exceptional factor only exists for PX(4,3), not {params}"
            )));
        }
        Ok(Automorphism {
            params,
            tau,
            delta,
            xi,
        })
    }

    pub fn identity(params: PxParams) -> Result<Self> {
        Self::from_parts(
            params,
            TauWord::identity(params.n()),
            Dihedral::identity(),
            false,
        )
    }

    /// The rotation by `s` fibres.
    pub fn rotation(params: PxParams, s: usize) -> Result<Self> {
        Self::from_parts(
            params,
            TauWord::identity(params.n()),
            Dihedral::rotation(s, params.n()),
            false,
        )
    }

    /// The reflection `mu_s`.
    pub fn reflection(params: PxParams, s: usize) -> Result<Self> {
        Self::from_parts(
            params,
            TauWord::identity(params.n()),
            Dihedral::mu(s, params),
            false,
        )
    }

    /// The flip generator `tau_s`.
    pub fn bit_flip(params: PxParams, s: usize) -> Result<Self> {
        Self::from_parts(
            params,
            TauWord::generator(s, params.n()),
            Dihedral::identity(),
            false,
        )
    }

    /// The exceptional involution of PX(4,3).
    pub fn xi(params: PxParams) -> Result<Self> {
        Self::from_parts(
            params,
            TauWord::identity(params.n()),
            Dihedral::identity(),
            true,
        )
    }

    pub fn params(&self) -> PxParams {
        self.params
    }

    pub fn tau(&self) -> TauWord {
        self.tau
    }

    pub fn delta(&self) -> Dihedral {
        self.delta
    }

    pub fn has_xi_factor(&self) -> bool {
        self.xi
    }

    /// Exact because the algebraic representation is faithful: distinct
    /// (tau, delta, xi) triples act as distinct vertex permutations.
    pub fn is_identity(&self) -> bool {
        !self.xi && self.tau.is_identity() && self.delta.is_identity()
    }

    /// Image of the vertex with the given id; ids encode (fibre, word)
    /// as in [`vertex_id`].
    pub fn apply_id(&self, id: u32) -> u32 {
        let k = self.params.k();
        let n = self.params.n();
        debug_assert!((id as usize) < self.params.vertex_count());
        let low = (1u32 << k) - 1;
        let mut fibre = (id >> k) as usize;
        let mut word = id & low;
        if self.xi {
            let image = xi_image_table()[id as usize];
            fibre = (image >> k) as usize;
            word = image & low;
        }
        match self.delta {
            Dihedral::Rotation(s) => fibre = (fibre + s) % n,
            Dihedral::Reflection(c) => {
                fibre = (c + n - fibre) % n;
                word = word.reverse_bits() >> (32 - k);
            }
        }
        word ^= self.tau.flip_mask(fibre, k);
        ((fibre as u32) << k) | word
    }

    /// Image of a vertex.
    pub fn apply(&self, v: Vertex) -> Result<Vertex> {
        let id = vertex_id(self.params, v)?;
        vertex_from_id(self.params, self.apply_id(id))
    }

    /// The induced permutation of the fibre ring; the exceptional factor
    /// does not permute fibres blockwise, so it is rejected.
    pub fn induced_fibre_action(&self) -> Result<Dihedral> {
        if self.xi {
            return Err(Error::NotApplicable(
                "fibres are not a block system for elements with the exceptional factor".into(),
            ));
        }
        Ok(self.delta)
    }

    /// `self` after `other` as vertex maps.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism> {
        if self.params != other.params {
            return Err(Error::ParamMismatch(format!(
                "cannot compose an element of Aut({}) with one of Aut({})",
                self.params, other.params
            )));
        }
        if !self.xi && !other.xi {
            let delta = self.delta.compose(other.delta, self.params.n());
            let tau = self
                .tau
                .product(other.tau.conjugated_by(self.delta, self.params));
            return Automorphism::from_parts(self.params, tau, delta, false);
        }
        // Element involving the exceptional factor: compose as vertex
        // permutations and canonicalize by lookup in the 256-element
        // group of PX(4,3).
        let images: Vec<u32> = (0..self.params.vertex_count() as u32)
            .map(|v| self.apply_id(other.apply_id(v)))
            .collect();
        px43_canonical_form(&images)
    }

    pub fn inverse(&self) -> Automorphism {
        if !self.xi {
            let delta = self.delta.inverse(self.params.n());
            let tau = self.tau.conjugated_by(delta, self.params);
            return Automorphism {
                params: self.params,
                tau,
                delta,
                xi: false,
            };
        }
        let mut images = vec![0u32; self.params.vertex_count()];
        for id in 0..self.params.vertex_count() as u32 {
            images[self.apply_id(id) as usize] = id;
        }
        px43_canonical_form(&images).expect("inverse of a PX(4,3) automorphism")
    }

    /// Explicit image table over vertex ids.
    pub fn perm_table(&self) -> PermTable {
        PermTable {
            images: (0..self.params.vertex_count() as u32)
                .map(|id| self.apply_id(id))
                .collect(),
        }
    }
}

impl fmt::Display for Automorphism {
    /// Canonical textual form, e.g. `tau=0110 delta=m2 xi=0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tau={} delta=", self.tau)?;
        match self.delta {
            Dihedral::Rotation(s) => write!(f, "r{s}")?,
            Dihedral::Reflection(_) => write!(f, "m{}", self.delta.mu_index(self.params).unwrap())?,
        }
        write!(f, " xi={}", u8::from(self.xi))
    }
}

fn px43_canonical_form(images: &[u32]) -> Result<Automorphism> {
    static CANON: OnceLock<HashMap<Vec<u32>, (TauWord, Dihedral, bool)>> = OnceLock::new();
    let map = CANON.get_or_init(|| {
        let params = px43_params();
        let mut map = HashMap::with_capacity(256);
        for xi in [false, true] {
            for alpha in enumerate_a(params).unwrap() {
                let element = Automorphism {
                    params,
                    tau: alpha.tau,
                    delta: alpha.delta,
                    xi,
                };
                map.insert(
                    element.perm_table().images,
                    (element.tau, element.delta, element.xi),
                );
            }
        }
        map
    });
    let (tau, delta, xi) = map.get(images).copied().ok_or_else(|| {
        Error::NotApplicable("permutation is not an automorphism of PX(4,3)".into())
    })?;
    Ok(Automorphism {
        params: px43_params(),
        tau,
        delta,
        xi,
    })
}

/// Number of elements of `A = K x| D_n`: 2^n * 2n.
pub fn a_order(params: PxParams) -> Result<u64> {
    if params.n() > MAX_ENUM_N {
        return Err(Error::Capacity(format!(
            "enumeration supports n <= {MAX_ENUM_N}, got n={}",
            params.n()
        )));
    }
    Ok((1u64 << params.n()) * (2 * params.n() as u64))
}

/// The element of `A` at the given enumeration index. Indices sweep the
/// flip-word mask fastest, with the dihedral part ordered as all
/// rotations (by shift) followed by all reflections (by offset); index 0
/// is the identity.
pub fn a_element(params: PxParams, index: u64) -> Automorphism {
    let n = params.n();
    let masks = 1u64 << n;
    let delta_index = (index / masks) as usize;
    let delta = if delta_index < n {
        Dihedral::Rotation(delta_index)
    } else {
        Dihedral::Reflection(delta_index - n)
    };
    Automorphism {
        params,
        tau: TauWord {
            n: n as u8,
            mask: index % masks,
        },
        delta,
        xi: false,
    }
}

/// Streams all 2^n * 2n elements of `A`, identity first, without
/// duplicates.
pub fn enumerate_a(params: PxParams) -> Result<impl Iterator<Item = Automorphism> + Clone> {
    check_group_params(params)?;
    let total = a_order(params)?;
    Ok((0..total).map(move |index| a_element(params, index)))
}

/// An explicit vertex permutation, the bridge between algebraic group
/// elements and the structure-blind search oracles.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PermTable {
    images: Vec<u32>,
}

impl PermTable {
    pub fn identity(len: usize) -> Self {
        PermTable {
            images: (0..len as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &image in &images {
            if image as usize >= images.len() || seen[image as usize] {
                return Err(Error::InvalidParams(
                    "image table is not a bijection".into(),
                ));
            }
            seen[image as usize] = true;
        }
        Ok(PermTable { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, id: u32) -> u32 {
        self.images[id as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &img)| i as u32 == img)
    }

    /// Number of points moved.
    pub fn support_size(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &img)| i as u32 != img)
            .count()
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &PermTable) -> PermTable {
        PermTable {
            images: other
                .images
                .iter()
                .map(|&mid| self.images[mid as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> PermTable {
        let mut images = vec![0u32; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u32;
        }
        PermTable { images }
    }

    /// A transposition of `a` and `b`, all other points fixed.
    pub fn transposition(len: usize, a: u32, b: u32) -> Self {
        let mut table = Self::identity(len);
        table.images.swap(a as usize, b as usize);
        table
    }
}

/// Definition-level check: `p` is a bijection on the vertex ids mapping
/// neighbourhoods onto neighbourhoods.
pub fn is_automorphism(g: &PxGraph, p: &PermTable) -> bool {
    if p.len() != g.vertex_count() {
        return false;
    }
    let mut seen = vec![false; p.len()];
    for &image in p.images() {
        if image as usize >= p.len() || seen[image as usize] {
            return false;
        }
        seen[image as usize] = true;
    }
    for id in 0..g.vertex_count() as u32 {
        let mut mapped: Vec<u32> = g.neighbor_ids(id).iter().map(|&nbr| p.image(nbr)).collect();
        mapped.sort_unstable();
        if &mapped[..] != g.neighbor_ids(p.image(id)) {
            return false;
        }
    }
    true
}

/// The full automorphism group as explicit permutations, sorted.
///
/// For n != 4 this is the image of `A`. PX(4,3) adds the coset of the
/// exceptional involution (256 elements in total); PX(4,2) and PX(4,1)
/// fall back to the structure-blind search.
pub fn full_aut(g: &PxGraph, budget: &SearchBudget) -> Result<Vec<PermTable>> {
    let params = g.params();
    let mut perms: Vec<PermTable> = if params.n() != 4 {
        enumerate_a(params)?
            .map(|alpha| alpha.perm_table())
            .collect()
    } else if params.k() == 3 {
        let mut all = Vec::with_capacity(256);
        for alpha in enumerate_a(params)? {
            all.push(alpha.perm_table());
            let with_xi = Automorphism {
                params,
                tau: alpha.tau,
                delta: alpha.delta,
                xi: true,
            };
            all.push(with_xi.perm_table());
        }
        all
    } else {
        generic_automorphisms(&g.adjacency_lists(), budget)?
    };
    perms.sort_unstable();
    perms.dedup();
    Ok(perms)
}

/// The isomorphism from the 4-dimensional hypercube onto PX(4,2).
///
/// The fibre index is decided by the parities of the two halves of the
/// input word, and the word component keeps bits 1 and 3 (swapped for
/// even fibres).
pub fn hypercube_to_px42(word: BitWord) -> Result<Vertex> {
    if word.len() != 4 {
        return Err(Error::InvalidParams(format!(
            "expected a 4-bit hypercube vertex, got a word of length {}",
            word.len()
        )));
    }
    let bit = |j: usize| word.get(j).unwrap();
    let first_odd = bit(0) ^ bit(1);
    let second_odd = bit(2) ^ bit(3);
    let fibre = match (first_odd, second_odd) {
        (true, true) => 0,
        (true, false) => 1,
        (false, false) => 2,
        (false, true) => 3,
    };
    let pair = if fibre % 2 == 1 {
        [bit(1), bit(3)]
    } else {
        [bit(3), bit(1)]
    };
    Ok(Vertex::new(fibre, BitWord::from_bits(&pair)?))
}

/// One verified row of the swap table for PX(4,3): an element `alpha` of
/// `A` such that `alpha` followed by the exceptional involution
/// interchanges `(0,000)` with `v`.
pub struct CosetSwapRow {
    pub v: Vertex,
    pub xi_image: Vertex,
    pub alpha: Automorphism,
}

/// The eight published swap witnesses for the vertices of PX(4,3) that
/// are not interchangeable with `(0,000)` inside `A`.
pub fn px43_coset_swap_table() -> Vec<CosetSwapRow> {
    let params = px43_params();
    let n = params.n();
    let rows: [(&str, &str, &[usize], Dihedral); 8] = [
        ("1:010", "3:001", &[2], Dihedral::rotation(1, n)),
        ("1:011", "1:100", &[2, 3], Dihedral::mu(3, params)),
        ("1:100", "1:011", &[0, 1], Dihedral::mu(3, params)),
        ("1:101", "3:110", &[0, 1, 3], Dihedral::rotation(1, n)),
        ("3:010", "3:101", &[0, 2], Dihedral::mu(1, params)),
        ("3:110", "1:101", &[0, 2, 3], Dihedral::rotation(3, n)),
        ("3:001", "1:010", &[1], Dihedral::rotation(3, n)),
        ("3:101", "3:010", &[1, 3], Dihedral::mu(1, params)),
    ];
    rows.iter()
        .map(|(v, xi_image, flips, delta)| {
            let mut tau = TauWord::identity(n);
            for &s in *flips {
                tau = tau.product(TauWord::generator(s, n));
            }
            CosetSwapRow {
                v: v.parse().unwrap(),
                xi_image: xi_image.parse().unwrap(),
                alpha: Automorphism::from_parts(params, tau, *delta, false).unwrap(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn params(n: usize, k: usize) -> PxParams {
        PxParams::new(n, k).unwrap()
    }

    fn v(s: &str) -> Vertex {
        s.parse().unwrap()
    }

    #[test]
    fn flip_generator_action() {
        let p = params(3, 2);
        let tau1 = Automorphism::bit_flip(p, 1).unwrap();
        assert_eq!(tau1.apply(v("0:00")).unwrap(), v("0:01"));
        assert_eq!(tau1.apply(v("1:00")).unwrap(), v("1:10"));
        assert_eq!(tau1.apply(v("2:00")).unwrap(), v("2:00"));
    }

    #[test]
    fn reflection_action() {
        let p = params(3, 2);
        // The plain reflection is mu_{k-1}: i -> -i with word reversal.
        let mu = Automorphism::reflection(p, 1).unwrap();
        assert_eq!(mu.apply(v("1:01")).unwrap(), v("2:10"));
        assert_eq!(mu.apply(v("0:01")).unwrap(), v("0:10"));
    }

    #[test]
    fn rotation_action_and_order() {
        let p = params(5, 2);
        let rho = Automorphism::rotation(p, 1).unwrap();
        assert_eq!(rho.apply(v("4:10")).unwrap(), v("0:10"));
        let mut power = Automorphism::identity(p).unwrap();
        for _ in 0..5 {
            power = rho.compose(&power).unwrap();
        }
        assert!(power.is_identity());
    }

    #[test]
    fn reflection_interchanges_the_advertised_fibres() {
        for (n, k) in [(5, 2), (6, 3), (7, 4), (4, 3)] {
            let p = params(n, k);
            for s in 0..n {
                let mu_s = Dihedral::mu(s, p);
                for i in 0..n {
                    let expected = (s + 1 + 2 * n - k - i) % n;
                    assert_eq!(mu_s.apply(i, n), expected);
                    // mu_{i+j+k-1} interchanges fibres i and j
                    let j = mu_s.apply(i, n);
                    assert_eq!(Dihedral::mu((i + j + k - 1) % n, p).apply(i, n), j);
                }
                assert_eq!(mu_s.mu_index(p), Some(s));
            }
        }
    }

    #[test]
    fn fixed_fibres_of_reflections() {
        // 2i = 1 (mod 5) has the single solution i = 3.
        assert_eq!(mu_fixed_fibres(2, params(5, 2)), vec![3]);
        for s in 0..5 {
            assert_eq!(mu_fixed_fibres(s, params(5, 2)).len(), 1);
        }
        for s in 0..6 {
            let fixed = mu_fixed_fibres(s, params(6, 3));
            assert!(fixed.is_empty() || fixed.len() == 2);
            if let [a, b] = fixed[..] {
                assert!(crate::graph::antipodal(a, b, 6));
            }
            // Parity criterion for even n.
            assert_eq!(fixed.is_empty(), s % 2 == 3 % 2);
        }
    }

    #[test]
    fn composition_matches_pointwise_action() {
        let p = params(5, 3);
        let g = PxGraph::build(p);
        let elements: Vec<Automorphism> = enumerate_a(p).unwrap().collect();
        // A deterministic sample of pairs.
        for step in [1usize, 7, 31, 101] {
            for (a_idx, alpha) in elements.iter().enumerate().step_by(37) {
                let beta = &elements[(a_idx * step + 13) % elements.len()];
                let composed = alpha.compose(beta).unwrap();
                for id in 0..g.vertex_count() as u32 {
                    assert_eq!(composed.apply_id(id), alpha.apply_id(beta.apply_id(id)));
                }
            }
        }
    }

    #[test]
    fn inverses_cancel() {
        let p = params(6, 3);
        for (i, alpha) in enumerate_a(p).unwrap().enumerate().step_by(97) {
            let inv = alpha.inverse();
            assert!(alpha.compose(&inv).unwrap().is_identity(), "element {i}");
            assert!(inv.compose(&alpha).unwrap().is_identity(), "element {i}");
        }
        // Generator inverses.
        let tau = Automorphism::bit_flip(p, 4).unwrap();
        assert_eq!(tau.inverse(), tau);
        let rho2 = Automorphism::rotation(p, 2).unwrap();
        assert_eq!(rho2.inverse(), Automorphism::rotation(p, 4).unwrap());
    }

    #[test]
    fn every_enumerated_element_is_an_automorphism() {
        for (n, k) in [(3, 2), (4, 3), (5, 1)] {
            let p = params(n, k);
            let g = PxGraph::build(p);
            for alpha in enumerate_a(p).unwrap() {
                assert!(is_automorphism(&g, &alpha.perm_table()));
            }
        }
    }

    #[test]
    fn enumeration_is_faithful_on_px32() {
        let p = params(3, 2);
        let tables: HashSet<PermTable> = enumerate_a(p)
            .unwrap()
            .map(|alpha| alpha.perm_table())
            .collect();
        assert_eq!(tables.len(), 48);
    }

    #[test]
    fn xi_matches_its_transposition_table() {
        let p = params(4, 3);
        let xi = Automorphism::xi(p).unwrap();
        assert_eq!(xi.apply(v("0:010")).unwrap(), v("0:101"));
        assert_eq!(xi.apply(v("3:001")).unwrap(), v("1:010"));
        assert_eq!(xi.apply(v("1:000")).unwrap(), v("3:100"));
        assert_eq!(xi.apply(v("0:000")).unwrap(), v("0:000"));
        // Involution.
        let squared = xi.compose(&xi).unwrap();
        assert!(squared.is_identity());
        // The reconciled fixed-point set: two vertices per fibre.
        let fixed: Vec<String> = xi_fixed_points().iter().map(|u| u.to_string()).collect();
        assert_eq!(
            fixed,
            ["0:000", "0:111", "1:001", "1:110", "2:011", "2:100", "3:000", "3:111"]
        );
    }

    #[test]
    fn xi_is_an_automorphism_outside_the_semidirect_product() {
        let p = params(4, 3);
        let g = PxGraph::build(p);
        let xi_table = Automorphism::xi(p).unwrap().perm_table();
        assert!(is_automorphism(&g, &xi_table));
        assert!(enumerate_a(p)
            .unwrap()
            .all(|alpha| alpha.perm_table() != xi_table));
    }

    #[test]
    fn xi_preserves_the_palindromic_half_fibres() {
        let p = params(4, 3);
        let g = PxGraph::build(p);
        let xi = Automorphism::xi(p).unwrap();
        let block = |u: Vertex| (u.fibre(), u.word().is_palindrome());
        for i in 0..4 {
            for palindromic in [false, true] {
                let members: Vec<Vertex> = g
                    .fibre(i)
                    .unwrap()
                    .into_iter()
                    .filter(|u| u.word().is_palindrome() == palindromic)
                    .collect();
                let images: HashSet<(usize, bool)> = members
                    .iter()
                    .map(|&u| block(xi.apply(u).unwrap()))
                    .collect();
                assert_eq!(images.len(), 1, "half-fibre ({i}, {palindromic}) split");
            }
        }
    }

    #[test]
    fn coset_swap_table_rows_check_out() {
        let p = params(4, 3);
        let origin = v("0:000");
        let xi = Automorphism::xi(p).unwrap();
        for row in px43_coset_swap_table() {
            assert_eq!(xi.apply(row.v).unwrap(), row.xi_image);
            let alpha_xi = row.alpha.compose(&xi).unwrap();
            assert_eq!(alpha_xi.apply(origin).unwrap(), row.v);
            assert_eq!(alpha_xi.apply(row.v).unwrap(), origin);
        }
    }

    #[test]
    fn group_orders() {
        let budget = SearchBudget::default();
        assert_eq!(a_order(params(5, 2)).unwrap(), 320);
        let g43 = PxGraph::build(params(4, 3));
        assert_eq!(full_aut(&g43, &budget).unwrap().len(), 256);
        let g52 = PxGraph::build(params(5, 2));
        assert_eq!(full_aut(&g52, &budget).unwrap().len(), 320);
    }

    #[test]
    fn hypercube_map_is_an_isomorphism() {
        assert_eq!(
            hypercube_to_px42("0000".parse().unwrap()).unwrap(),
            v("2:00")
        );
        assert_eq!(
            hypercube_to_px42("1000".parse().unwrap()).unwrap(),
            v("1:00")
        );
        let p = params(4, 2);
        let g = PxGraph::build(p);
        let images: Vec<Vertex> = BitWord::all(4)
            .unwrap()
            .map(|w| hypercube_to_px42(w).unwrap())
            .collect();
        let distinct: HashSet<Vertex> = images.iter().copied().collect();
        assert_eq!(distinct.len(), 16);
        let mut edge_count = 0;
        for (a, word) in BitWord::all(4).unwrap().enumerate() {
            for j in 0..4 {
                let other = word.flip(j).unwrap();
                let b = other.numeral() as usize;
                if a < b {
                    assert!(g.are_adjacent(images[a], images[b]).unwrap());
                    edge_count += 1;
                }
            }
        }
        assert_eq!(edge_count, 32);
    }

    #[test]
    fn twin_swap_is_an_automorphism_and_adjacent_swap_is_not() {
        let g61 = PxGraph::build(params(6, 1));
        let swap = PermTable::transposition(g61.vertex_count(), 0, 1);
        assert!(is_automorphism(&g61, &swap));

        let g32 = PxGraph::build(params(3, 2));
        let neighbour = g32.neighbor_ids(0)[0];
        let bad = PermTable::transposition(g32.vertex_count(), 0, neighbour);
        assert!(!is_automorphism(&g32, &bad));
        assert!(is_automorphism(&g32, &PermTable::identity(12)));
    }

    #[test]
    fn element_display_form() {
        let p = params(4, 2);
        let alpha = Automorphism::from_parts(
            p,
            TauWord::from_exponents(&[false, true, true, false]).unwrap(),
            Dihedral::mu(2, p),
            false,
        )
        .unwrap();
        assert_eq!(alpha.to_string(), "tau=0110 delta=m2 xi=0");
        let rho = Automorphism::rotation(p, 3).unwrap();
        assert_eq!(rho.to_string(), "tau=0000 delta=r3 xi=0");
    }
}
