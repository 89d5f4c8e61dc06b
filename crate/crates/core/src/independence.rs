//! Independent-set counting and the matching invariants.
//!
//! Everything here is exact enumeration; these values are the ground truth
//! the closed-form modules are checked against.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::families::binomial;
use crate::graph::{Graph, VertexSet};

/// Counts `g_j` of independent sets of size `j = 1..=alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    counts: Vec<BigInt>,
}

impl FVector {
    /// `counts[j-1]` is the number of independent sets of size `j`.
    pub fn new(counts: Vec<BigInt>) -> Self {
        debug_assert!(counts.iter().all(|c| c.is_positive()));
        FVector { counts }
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// Independence number.
    pub fn alpha(&self) -> usize {
        self.counts.len()
    }

    /// `g_j`, zero outside `1..=alpha`.
    pub fn g(&self, j: usize) -> BigInt {
        if j == 0 || j > self.counts.len() {
            BigInt::zero()
        } else {
            self.counts[j - 1].clone()
        }
    }

    /// Face count `f_{i-1}`: number of independent sets of size `i`, with `f_{-1} = 1`.
    pub fn face_count(&self, i: usize) -> BigInt {
        if i == 0 {
            BigInt::one()
        } else {
            self.g(i)
        }
    }
}

/// The ladder `D_0, .., D_{alpha-1}` together with the alternating sum `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DLadder {
    pub values: Vec<BigInt>,
    pub g: BigInt,
}

impl DLadder {
    /// Smallest `s` with `D_s != 0`.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.values.iter().position(|d| !d.is_zero())
    }
}

/// Exact f-vector of `g`.
pub fn f_vector(g: &Graph) -> FVector {
    let poly = independence_polynomial(g.adjacency(), g.vertices().mask());
    let counts: Vec<BigInt> = poly[1..].iter().map(|&c| BigInt::from(c)).collect();
    let fv = FVector::new(counts);
    #[cfg(debug_assertions)]
    if g.n() <= 12 {
        let brute = independent_set_counts_brute(g);
        debug_assert_eq!(fv.counts.len() + 1, brute.len());
        debug_assert!(brute[1..].iter().zip(&fv.counts).all(|(b, c)| BigInt::from(*b) == *c));
    }
    fv
}

/// Coefficients of the independence polynomial of the subgraph induced on `p`.
///
/// Splits into connected components and otherwise branches on a vertex of
/// maximum degree inside `p`.
pub(crate) fn independence_polynomial(adj: &[u64], p: u64) -> Vec<u128> {
    if p == 0 {
        return vec![1];
    }
    let start = p.trailing_zeros() as usize;
    let comp = component_of(adj, start, p);
    if comp != p {
        let a = independence_polynomial(adj, comp);
        let b = independence_polynomial(adj, p & !comp);
        return poly_mul_u128(&a, &b);
    }

    let size = p.count_ones() as u64;
    let mut best = (0usize, 0u64);
    let mut rest = p;
    let mut is_clique = true;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & p).count_ones() as u64;
        if d + 1 != size {
            is_clique = false;
        }
        if d > best.1 {
            best = (v, d);
        }
    }
    if is_clique {
        return vec![1, size as u128];
    }
    let v = best.0;
    let without = independence_polynomial(adj, p & !(1 << v));
    let with = independence_polynomial(adj, p & !(adj[v] | 1 << v));
    let mut out = without;
    if out.len() < with.len() + 1 {
        out.resize(with.len() + 1, 0);
    }
    for (i, c) in with.iter().enumerate() {
        out[i + 1] += c;
    }
    out
}

fn component_of(adj: &[u64], start: usize, within: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

fn poly_mul_u128(a: &[u128], b: &[u128]) -> Vec<u128> {
    let mut out = vec![0u128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Independent-set counts by size (index 0 is the empty set), by checking
/// every vertex subset. Only for small graphs.
pub fn independent_set_counts_brute(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 24, "brute-force enumeration is limited to 24 vertices");
    let mut counts = vec![0u64; g.n() + 1];
    for s in g.vertices().subsets() {
        if is_independent(g, s) {
            counts[s.len()] += 1;
        }
    }
    while counts.len() > 1 && *counts.last().unwrap() == 0 {
        counts.pop();
    }
    counts
}

#[inline]
pub fn is_independent(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| g.adjacency()[v] & s.mask() == 0)
}

pub fn independence_number(g: &Graph) -> usize {
    independence_polynomial(g.adjacency(), g.vertices().mask()).len() - 1
}

/// Maximum matching size via Edmonds' blossom algorithm.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// A maximum matching as a list of edges `(a, b)` with `a < b`.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    let mut b = Blossom::new(g);
    b.run();
    (0..g.n())
        .filter_map(|v| match b.mate[v] {
            NONE => None,
            w if v < w => Some((v, w)),
            _ => None,
        })
        .collect()
}

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: Vec::with_capacity(n),
        }
    }

    fn run(&mut self) {
        for root in 0..self.g.n() {
            if self.mate[root] != NONE {
                continue;
            }
            let mut v = self.find_path(root);
            while v != NONE {
                let pv = self.parent[v];
                let ppv = self.mate[pv];
                self.mate[v] = pv;
                self.mate[pv] = v;
                v = ppv;
            }
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> usize {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let t = self.mate[to];
                    self.used[t] = true;
                    self.queue.push(t);
                }
            }
        }
        NONE
    }
}

/// Maximum size of an induced matching.
///
/// Branches on the smallest non-isolated vertex `u` of the remaining set:
/// either `u` stays uncovered, or some edge `uv` is taken and the closed
/// neighborhoods of both endpoints are removed.
pub fn induced_matching_number(g: &Graph) -> usize {
    let mut memo = HashMap::new();
    induced_rec(g.adjacency(), g.vertices().mask(), &mut memo)
}

fn induced_rec(adj: &[u64], p: u64, memo: &mut HashMap<u64, usize>) -> usize {
    let mut live = 0u64;
    let mut rest = p;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if adj[v] & p != 0 {
            live |= 1 << v;
        }
    }
    if live == 0 {
        return 0;
    }
    if let Some(&r) = memo.get(&live) {
        return r;
    }
    let u = live.trailing_zeros() as usize;
    let mut best = induced_rec(adj, live & !(1 << u), memo);
    let mut nbrs = adj[u] & live;
    while nbrs != 0 {
        let v = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        let closed = adj[u] | adj[v] | (1 << u) | (1 << v);
        best = best.max(1 + induced_rec(adj, live & !closed, memo));
    }
    memo.insert(live, best);
    best
}

/// `g = sum_j (-1)^(j-1) g_j`.
pub fn alternating_g(fv: &FVector) -> BigInt {
    fv.counts
        .iter()
        .enumerate()
        .fold(BigInt::zero(), |acc, (i, c)| if i % 2 == 0 { acc + c } else { acc - c })
}

/// `D_s = sum_{j=s+1}^{alpha} (-1)^(j-1-s) g_j C(j, j-1-s)` for `0 <= s < alpha`.
pub fn d_ladder(fv: &FVector) -> Result<DLadder> {
    let alpha = fv.alpha();
    if alpha == 0 {
        return Err(Error::EmptyGraphNoLadder);
    }
    let values: Vec<BigInt> = (0..alpha)
        .map(|s| {
            (s + 1..=alpha).fold(BigInt::zero(), |acc, j| {
                let term = fv.g(j) * binomial(j as u64, (j - 1 - s) as i64);
                if (j - 1 - s) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    let g = alternating_g(fv);
    let total: BigInt = values.iter().sum();
    assert_eq!(total, g, "ladder sum must equal the alternating sum");
    assert_eq!(values[alpha - 1], fv.g(alpha), "top rung must equal g_alpha");
    Ok(DLadder { values, g })
}

/// Number of degree-`d` monomials whose support is independent, by walking
/// exponent vectors vertex by vertex.
pub fn hilbert_function_by_monomials(g: &Graph, d: usize) -> BigInt {
    fn rec(adj: &[u64], i: usize, rem: usize, allowed: u64, memo: &mut HashMap<(usize, usize, u64), BigInt>) -> BigInt {
        if rem == 0 {
            return BigInt::one();
        }
        if i == adj.len() {
            return BigInt::zero();
        }
        if let Some(v) = memo.get(&(i, rem, allowed)) {
            return v.clone();
        }
        let mut total = rec(adj, i + 1, rem, allowed, memo);
        if (allowed >> i) & 1 == 1 {
            let next_allowed = allowed & !adj[i];
            for e in 1..=rem {
                total += rec(adj, i + 1, rem - e, next_allowed, memo);
            }
        }
        memo.insert((i, rem, allowed), total.clone());
        total
    }
    rec(g.adjacency(), 0, d, g.vertices().mask(), &mut HashMap::new())
}

/// `HF(d) = sum_j g_j C(d-1, j-1)` for `d >= 1`, and `HF(0) = 1`.
pub fn hilbert_function_from_fvector(fv: &FVector, d: usize) -> BigInt {
    if d == 0 {
        return BigInt::one();
    }
    (1..=fv.alpha())
        .map(|j| fv.g(j) * binomial((d - 1) as u64, j as i64 - 1))
        .sum()
}

/// Hilbert function value computed both ways; errors if they disagree.
pub fn hilbert_function_oracle(g: &Graph, d: usize) -> Result<BigInt> {
    let a = hilbert_function_by_monomials(g, d);
    let b = hilbert_function_from_fvector(&f_vector(g), d);
    if a != b {
        return Err(Error::InternalInconsistency(format!(
            "Hilbert function at degree {d}: monomial count {a} vs f-vector formula {b}"
        )));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn two_triangles() -> Graph {
        Graph::triangle_star(2).unwrap()
    }

    fn three_triangles() -> Graph {
        Graph::triangle_star(3).unwrap()
    }

    /// Maximum matching and induced matching by trying every edge subset.
    pub(crate) fn matchings_brute(g: &Graph) -> (usize, usize) {
        let edges: Vec<_> = g.edges().collect();
        assert!(edges.len() <= 20);
        let (mut mu, mut nu) = (0, 0);
        for mask in 0u32..(1 << edges.len()) {
            let chosen: Vec<_> = (0..edges.len()).filter(|i| (mask >> i) & 1 == 1).map(|i| edges[i]).collect();
            let covered: VertexSet = chosen.iter().flat_map(|&(a, b)| [a, b]).collect();
            if covered.len() != 2 * chosen.len() {
                continue;
            }
            mu = mu.max(chosen.len());
            if g.induced_subgraph(covered).edge_count() == chosen.len() {
                nu = nu.max(chosen.len());
            }
        }
        (mu, nu)
    }

    #[test]
    fn f_vectors_of_triangle_stars() {
        assert_eq!(f_vector(&two_triangles()).counts(), &big(&[5, 4])[..]);
        assert_eq!(f_vector(&three_triangles()).counts(), &big(&[7, 12, 8])[..]);
        assert_eq!(alternating_g(&f_vector(&two_triangles())), BigInt::from(1));
        assert_eq!(alternating_g(&f_vector(&three_triangles())), BigInt::from(3));
    }

    #[test]
    fn f_vector_edgeless_and_empty() {
        assert_eq!(f_vector(&Graph::empty(3).unwrap()).counts(), &big(&[3, 3, 1])[..]);
        assert_eq!(f_vector(&Graph::empty(0).unwrap()).alpha(), 0);
    }

    #[test]
    fn c6_alternating_sum() {
        let fv = f_vector(&Graph::cycle(6).unwrap());
        assert_eq!(fv.counts(), &big(&[6, 9, 2])[..]);
        assert_eq!(alternating_g(&fv), BigInt::from(-1));
    }

    #[test]
    fn alpha_of_paths_and_cycles() {
        for n in 1..=20 {
            assert_eq!(independence_number(&Graph::path(n).unwrap()), n.div_ceil(2));
        }
        for n in 3..=20 {
            assert_eq!(independence_number(&Graph::cycle(n).unwrap()), n / 2);
        }
    }

    #[test]
    fn c5_matchings() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(matchings_brute(&c5), (2, 1));
        assert_eq!(matching_number(&c5), 2);
        assert_eq!(induced_matching_number(&c5), 1);
    }

    #[test]
    fn matchings_agree_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..400 {
            let n = rng.gen_range(1..=10);
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if rng.gen_bool(0.3) && edges.len() < 18 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edge_list(n, &edges).unwrap();
            let (mu, nu) = matchings_brute(&g);
            assert_eq!(matching_number(&g), mu, "{g:?}");
            assert_eq!(induced_matching_number(&g), nu, "{g:?}");
            let m = maximum_matching(&g);
            assert!(m.iter().all(|&(a, b)| g.has_edge(a, b)));
        }
    }

    #[test]
    fn ladders() {
        let p4 = d_ladder(&f_vector(&Graph::path(4).unwrap())).unwrap();
        assert_eq!(p4.values[0], BigInt::from(-2));
        let p1 = d_ladder(&f_vector(&Graph::path(1).unwrap())).unwrap();
        assert_eq!(p1.values, big(&[1]));
        let g = d_ladder(&f_vector(&two_triangles())).unwrap();
        assert_eq!(g.values, big(&[-3, 4]));
        assert_eq!(g.g, BigInt::from(1));
        assert_eq!(g.first_nonzero(), Some(0));
        assert_eq!(d_ladder(&f_vector(&Graph::empty(0).unwrap())), Err(Error::EmptyGraphNoLadder));
    }

    #[test]
    fn hilbert_function_small_degrees() {
        let g = two_triangles();
        assert_eq!(hilbert_function_oracle(&g, 0).unwrap(), BigInt::from(1));
        assert_eq!(hilbert_function_oracle(&g, 1).unwrap(), BigInt::from(5));
        assert_eq!(hilbert_function_oracle(&g, 2).unwrap(), BigInt::from(9));
        let k = Graph::empty(2).unwrap();
        for d in 0..6 {
            assert_eq!(hilbert_function_oracle(&k, d).unwrap(), BigInt::from(d + 1));
        }
    }

    #[test]
    fn degree_two_monomials_by_hand() {
        // squares x_v^2 (5) plus products x_a x_b over non-edges (4)
        let g = two_triangles();
        let squares = g.n();
        let pairs = g.n() * (g.n() - 1) / 2 - g.edge_count();
        assert_eq!(hilbert_function_by_monomials(&g, 2), BigInt::from(squares + pairs));
    }

    #[test]
    fn path64_is_fast_and_exact() {
        // component splitting keeps long paths cheap
        let fv = f_vector(&Graph::path(64).unwrap());
        assert_eq!(fv.alpha(), 32);
        assert_eq!(fv.g(1), BigInt::from(64));
        assert_eq!(fv.g(32), BigInt::from(33));
    }
}
