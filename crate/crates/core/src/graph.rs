//! Immutable simple graphs on at most 64 vertices.
//!
//! Every adjacency row is a single `u64`: bit `u` of `adj[v]` is set iff
//! `{u, v}` is an edge. Vertex sets are the same bitmasks wrapped in
//! [`VertexSet`].

use std::collections::VecDeque;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of `{0, .., n-1}` stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    /// All vertices of a graph on `n` vertices.
    #[inline]
    pub const fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn mask(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// Every subset of `self`, in increasing order of the underlying mask.
    pub fn subsets(self) -> SubsetIter {
        SubsetIter {
            universe: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Subset enumeration by the `(s - u) & u` trick.
pub struct SubsetIter {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for SubsetIter {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let current = self.next?;
        self.next = if current == self.universe {
            None
        } else {
            Some(current.wrapping_sub(self.universe) & self.universe)
        };
        Some(VertexSet(current))
    }
}

/// Two-coloring of a bipartite graph, normalized so that `|U| >= |V|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub u: VertexSet,
    pub v: VertexSet,
}

impl Bipartition {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        (self.u & self.v).is_empty()
            && (self.u | self.v) == g.vertices()
            && g.edges().all(|(a, b)| self.u.contains(a) != self.u.contains(b))
    }
}

/// A finite simple graph on `n <= 64` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, n });
                }
            }
            if a == b {
                return Err(Error::InvalidEdge(a));
            }
            g.adj[a] |= 1 << b;
            g.adj[b] |= 1 << a;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and looplessness.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        for (v, &row) in adj.iter().enumerate() {
            if row & !low_bits(n) != 0 {
                let index = (row & !low_bits(n)).trailing_zeros() as usize;
                return Err(Error::IndexOutOfRange { index, n });
            }
            if (row >> v) & 1 == 1 {
                return Err(Error::InvalidEdge(v));
            }
            for u in VertexSet(row) {
                if (adj[u] >> v) & 1 == 0 {
                    return Err(Error::InternalInconsistency(format!(
                        "adjacency not symmetric between {u} and {v}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Rows must already be symmetric and loop-free.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        (self.adj[a] >> b) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(a, b)` with `a < b`, ordered by `a` then `b`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| {
            VertexSet(self.adj[a] & !low_bits(a + 1)).iter().map(move |b| (a, b))
        })
    }

    /// `N(S)`: every vertex adjacent to some member of `s`.
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        VertexSet(s.iter().fold(0, |acc, v| acc | self.adj[v]))
    }

    /// Vertices of degree exactly one.
    pub fn leaves(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Neighbors of leaves.
    pub fn whiskered(&self) -> VertexSet {
        self.neighborhood(self.leaves())
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = (self.neighborhood(frontier) & within) - seen;
            seen = seen | next;
            frontier = next;
        }
        seen
    }

    /// True iff every vertex is reachable from vertex 0 (true for `n <= 1`).
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.reachable_within(0, self.vertices()) == self.vertices()
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reachable_within(v, rest);
            rest = rest - comp;
            out.push(comp);
        }
        out
    }

    /// Two-coloring with `|U| >= |V|`, or `None` if an odd cycle exists.
    ///
    /// Each component is colored from its smallest vertex, which lands in
    /// `U`. If that leaves `U` smaller than `V` the sides are swapped, so on
    /// ties vertex 0 stays in `U`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(true);
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                let cx = color[x].unwrap();
                for y in self.neighbors(x) {
                    match color[y] {
                        None => {
                            color[y] = Some(!cx);
                            queue.push_back(y);
                        }
                        Some(cy) if cy == cx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let u: VertexSet = (0..self.n).filter(|&v| color[v] == Some(true)).collect();
        let v = self.vertices() - u;
        Some(if u.len() >= v.len() {
            Bipartition { u, v }
        } else {
            Bipartition { u: v, v: u }
        })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Subgraph induced on `w`, relabeled by the increasing-order map.
    pub fn induced_subgraph(&self, w: VertexSet) -> Graph {
        let w = w & self.vertices();
        let members: Vec<usize> = w.iter().collect();
        let adj = members
            .iter()
            .map(|&v| compress(self.adj[v] & w.mask(), w.mask()))
            .collect();
        Graph::from_adjacency_unchecked(adj)
    }

    /// Graph with vertex `v` of `self` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (a, b) in self.edges() {
            adj[perm[a]] |= 1 << perm[b];
            adj[perm[b]] |= 1 << perm[a];
        }
        Graph::from_adjacency_unchecked(adj)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Path `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidFamilyParameter("path needs n >= 1".into()));
        }
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// Cycle `0 - 1 - .. - (n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidFamilyParameter(format!("cycle needs n >= 3, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Graph::from_edge_list(n, &edges)
    }

    /// `K_{a,b}` with sides `{0..a-1}` and `{a..a+b-1}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidFamilyParameter(format!(
                "complete bipartite needs both sides non-empty, got {a},{b}"
            )));
        }
        let edges: Vec<_> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
        Graph::from_edge_list(a + b, &edges)
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Graph> {
        if leaves == 0 {
            return Err(Error::InvalidFamilyParameter("star needs at least one leaf".into()));
        }
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edge_list(leaves + 1, &edges)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// `t` triangles glued at the common vertex 0; triangle `i` is `{0, 2i+1, 2i+2}`.
    pub fn triangle_star(t: usize) -> Result<Graph> {
        if t == 0 {
            return Err(Error::InvalidFamilyParameter("triangle star needs t >= 1".into()));
        }
        let mut edges = Vec::with_capacity(3 * t);
        for i in 0..t {
            let (a, b) = (2 * i + 1, 2 * i + 2);
            edges.extend([(0, a), (0, b), (a, b)]);
        }
        Graph::from_edge_list(2 * t + 1, &edges)
    }
}

/// Packs the bits of `x` selected by `sel` into the low bits, in order.
#[inline]
pub(crate) fn compress(x: u64, sel: u64) -> u64 {
    let mut out = 0u64;
    let mut k = 0;
    let mut s = sel;
    while s != 0 {
        let b = s.trailing_zeros();
        if (x >> b) & 1 == 1 {
            out |= 1 << k;
        }
        k += 1;
        s &= s - 1;
    }
    out
}

/// Spreads the low bits of `x` onto the positions selected by `sel`; inverse of [`compress`].
#[inline]
pub(crate) fn deposit(x: u64, sel: u64) -> u64 {
    let mut out = 0u64;
    let mut k = 0;
    let mut s = sel;
    while s != 0 {
        let b = s.trailing_zeros();
        if (x >> k) & 1 == 1 {
            out |= 1 << b;
        }
        k += 1;
        s &= s - 1;
    }
    out
}
