//! Graph corpora: labeled enumeration, isomorphism classes, and seeded random families.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::graph::{deposit, Bipartition, Graph, VertexSet};

/// Edge probabilities used by the random corpora.
pub const EDGE_PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Labeled graph on `n` vertices whose edge `k` (in `(0,1), (0,2), (1,2), (0,3), ..` order)
/// is present iff bit `k` of `code` is set.
pub fn labeled_graph(n: usize, code: u64) -> Graph {
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (code >> k) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_adjacency_unchecked(adj)
}

/// Number of labeled graphs on `n <= 11` vertices.
pub fn labeled_count(n: usize) -> u64 {
    assert!(pair_count(n) < 64, "labeled enumeration only up to 11 vertices");
    1u64 << pair_count(n)
}

/// Every connected labeled graph on `n` vertices.
pub fn labeled_connected(n: usize) -> impl ParallelIterator<Item = Graph> {
    (0..labeled_count(n))
        .into_par_iter()
        .map(move |code| labeled_graph(n, code))
        .filter(Graph::is_connected)
}

/// Every connected labeled bipartite graph on `n >= 2` vertices, each once,
/// with its bipartition oriented so that vertex 0 lies in `U`.
pub fn labeled_connected_bipartite(n: usize) -> impl ParallelIterator<Item = (Graph, Bipartition)> {
    assert!((2..=10).contains(&n));
    let full = VertexSet::full(n);
    // U always contains vertex 0, so each graph's bipartition is counted once
    (0u64..1 << (n - 1))
        .into_par_iter()
        .map(move |rest| VertexSet::from_mask(1 | (rest << 1)))
        .filter(move |&u| u != full)
        .flat_map(move |u| {
            let v = full - u;
            let pairs: Vec<(usize, usize)> = u.iter().flat_map(|a| v.iter().map(move |b| (a, b))).collect();
            let bip = Bipartition { u, v };
            (0u64..1 << pairs.len()).into_par_iter().filter_map(move |code| {
                let edges: Vec<(usize, usize)> = VertexSet::from_mask(code).iter().map(|k| pairs[k]).collect();
                let g = Graph::from_edge_list(n, &edges).expect("valid edges");
                g.is_connected().then_some((g, bip))
            })
        })
}

/// Refines `colors` until the partition into color classes is equitable.
fn refine(adj: &[u64], colors: &mut [u32]) {
    let mut classes = {
        let mut c = colors.to_vec();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..adj.len())
            .map(|v| {
                let mut nb: Vec<u32> = VertexSet::from_mask(adj[v]).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        for (v, s) in sigs.iter().enumerate() {
            colors[v] = uniq.binary_search(s).expect("present") as u32;
        }
        if uniq.len() == classes {
            return;
        }
        classes = uniq.len();
    }
}

fn search(adj: &[u64], mut colors: Vec<u32>, best: &mut Option<Vec<u64>>) {
    refine(adj, &mut colors);
    let n = adj.len();
    let mut counts = vec![0usize; n];
    for &c in &colors {
        counts[c as usize] += 1;
    }
    let Some(target) = (0..n).find(|&c| counts[c] > 1) else {
        let mut code = vec![0u64; n];
        for v in 0..n {
            code[colors[v] as usize] = VertexSet::from_mask(adj[v])
                .iter()
                .fold(0u64, |acc, u| acc | 1 << colors[u]);
        }
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    for v in (0..n).filter(|&v| colors[v] as usize == target) {
        let split = colors
            .iter()
            .enumerate()
            .map(|(u, &c)| 2 * c + u32::from(c as usize == target && u != v))
            .collect();
        search(adj, split, best);
    }
}

/// Adjacency rows of a canonical relabeling: isomorphic graphs give equal forms.
pub fn canonical_form(g: &Graph) -> Vec<u64> {
    let mut best = None;
    search(g.adjacency(), vec![0; g.n()], &mut best);
    best.unwrap_or_default()
}

pub fn canonical_graph(g: &Graph) -> Graph {
    Graph::from_adjacency_unchecked(canonical_form(g))
}

/// One canonical representative of every isomorphism class on `n` vertices.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0).expect("empty graph")];
    for m in 1..=n {
        let forms: HashSet<Vec<u64>> = level
            .par_iter()
            .flat_map_iter(|g| {
                (0u64..1 << (m - 1)).map(move |nb| {
                    let mut adj = g.adjacency().to_vec();
                    for (v, row) in adj.iter_mut().enumerate() {
                        if (nb >> v) & 1 == 1 {
                            *row |= 1 << (m - 1);
                        }
                    }
                    adj.push(nb);
                    canonical_form(&Graph::from_adjacency_unchecked(adj))
                })
            })
            .collect();
        let mut forms: Vec<Vec<u64>> = forms.into_iter().collect();
        forms.sort();
        level = forms.into_iter().map(Graph::from_adjacency_unchecked).collect();
    }
    level
}

pub fn nonisomorphic_connected(n: usize) -> Vec<Graph> {
    nonisomorphic_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph `G(n, p)` conditioned on being connected.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                if rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges).expect("valid edges");
        if g.is_connected() {
            return g;
        }
    }
}

/// Random connected bipartite graph on `n >= 2` vertices: a random split,
/// cross edges with probability `p`, rejected until connected.
pub fn random_connected_bipartite<R: Rng>(rng: &mut R, n: usize, p: f64) -> (Graph, Bipartition) {
    assert!(n >= 2);
    loop {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let a = rng.gen_range(1..n);
        let u: VertexSet = order[..a].iter().copied().collect();
        let v = VertexSet::full(n) - u;
        let mut edges = Vec::new();
        for x in u {
            for y in v {
                if rng.gen_bool(p) {
                    edges.push((x, y));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges).expect("valid edges");
        if g.is_connected() {
            return (g, Bipartition { u, v });
        }
    }
}

/// Random connected bipartite core on `core_n` vertices with leaves hung on
/// random vertices of `V`, so that whiskers are common. Total size `core_n + leaves`.
pub fn random_whiskered_bipartite<R: Rng>(rng: &mut R, core_n: usize, leaves: usize, p: f64) -> (Graph, Bipartition) {
    let (core, bip) = random_connected_bipartite(rng, core_n, p);
    let mut edges: Vec<(usize, usize)> = core.edges().collect();
    let vs: Vec<usize> = bip.v.iter().collect();
    let mut u = bip.u;
    for i in 0..leaves {
        let leaf = core_n + i;
        edges.push((*vs.choose(rng).expect("V is non-empty"), leaf));
        u = u.with(leaf);
    }
    let n = core_n + leaves;
    let g = Graph::from_edge_list(n, &edges).expect("valid edges");
    (g, Bipartition { u, v: VertexSet::full(n) - u })
}

/// Mixed corpus of `count` connected bipartite graphs with `2..=max_n` vertices.
pub fn random_bipartite_corpus(seed: u64, count: usize, max_n: usize) -> Vec<(Graph, Bipartition)> {
    let mut rng = rng_from_seed(seed);
    (0..count)
        .map(|i| {
            let p = EDGE_PROBABILITIES[i % 3];
            if i % 2 == 0 {
                let n = rng.gen_range(2..=max_n);
                random_connected_bipartite(&mut rng, n, p)
            } else {
                let total = rng.gen_range(4..=max_n.max(4));
                let leaves = rng.gen_range(1..=(total - 2).min(4));
                random_whiskered_bipartite(&mut rng, total - leaves, leaves, p)
            }
        })
        .collect()
}

/// Mixed corpus of `count` connected graphs with `min_n..=max_n` vertices.
pub fn random_connected_corpus(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = rng_from_seed(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(min_n..=max_n);
            random_connected(&mut rng, n, EDGE_PROBABILITIES[i % 3])
        })
        .collect()
}

/// Parameters a random structured graph was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CWConstruction {
    pub graph: Graph,
    pub r: usize,
    pub d: usize,
    pub k: usize,
    pub leaf_count: usize,
    pub triangle_count: usize,
}

/// Random graph made of a connected bipartite core `R ∪ D`, at least one
/// leaf on every vertex of `R`, and pendant triangles on random vertices of
/// `D`; vertices are shuffled. At most `max_n` vertices (at least 4).
pub fn random_cw<R: Rng>(rng: &mut R, max_n: usize) -> CWConstruction {
    assert!(max_n >= 4);
    loop {
        let r = rng.gen_range(1..=4);
        let d = rng.gen_range(1..=4);
        let leaf_count = r + rng.gen_range(0..=r);
        let triangle_count = rng.gen_range(0..=3);
        let n = r + d + leaf_count + 2 * triangle_count;
        if n > max_n {
            continue;
        }
        // core: R = 0..r, D = r..r+d, grown as a random tree then densified
        let mut edges = vec![(0, r)];
        let (mut have_r, mut have_d) = (1, 1);
        while have_r < r || have_d < d {
            let grow_r = have_d == d || (have_r < r && rng.gen_bool(0.5));
            if grow_r {
                edges.push((have_r, r + rng.gen_range(0..have_d)));
                have_r += 1;
            } else {
                edges.push((rng.gen_range(0..have_r), r + have_d));
                have_d += 1;
            }
        }
        for x in 0..r {
            for y in r..r + d {
                if !edges.contains(&(x, y)) && rng.gen_bool(0.3) {
                    edges.push((x, y));
                }
            }
        }
        let mut next = r + d;
        for x in 0..r {
            edges.push((x, next));
            next += 1;
        }
        for _ in r..leaf_count {
            edges.push((rng.gen_range(0..r), next));
            next += 1;
        }
        let mut apexes = VertexSet::EMPTY;
        for _ in 0..triangle_count {
            let x = r + rng.gen_range(0..d);
            apexes = apexes.with(x);
            edges.extend([(x, next), (x, next + 1), (next, next + 1)]);
            next += 2;
        }
        debug_assert_eq!(next, n);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let g = Graph::from_edge_list(n, &edges).expect("valid edges").relabel(&perm);
        return CWConstruction {
            graph: g,
            r,
            d,
            k: apexes.len(),
            leaf_count,
            triangle_count,
        };
    }
}

pub fn random_cw_corpus(seed: u64, count: usize, max_n: usize) -> Vec<CWConstruction> {
    let mut rng = rng_from_seed(seed);
    (0..count).map(|_| random_cw(&mut rng, max_n)).collect()
}

/// Subsets of `0..n` in parallel, as vertex sets.
pub fn all_subsets(n: usize) -> impl ParallelIterator<Item = VertexSet> {
    let full = VertexSet::full(n).mask();
    (0u64..1 << n).into_par_iter().map(move |i| VertexSet::from_mask(deposit(i, full)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cameron_walker::is_cameron_walker;

    #[test]
    fn class_counts() {
        let all: Vec<usize> = (1..=7).map(|n| nonisomorphic_graphs(n).len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156, 1044]);
        let conn: Vec<usize> = (1..=7).map(|n| nonisomorphic_connected(n).len()).collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let mut rng = rng_from_seed(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=9);
            let g = random_connected(&mut rng, n, 0.4);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
        }
        assert_ne!(
            canonical_form(&Graph::path(4).unwrap()),
            canonical_form(&Graph::star(3).unwrap())
        );
    }

    #[test]
    fn labeled_counts() {
        // connected labeled graphs: 1, 1, 4, 38, 728
        let counts: Vec<usize> = (1..=5).map(|n| labeled_connected(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
        // connected labeled bipartite graphs: 1, 3, 19, 195
        let bip: Vec<usize> = (2..=5).map(|n| labeled_connected_bipartite(n).count()).collect();
        assert_eq!(bip, vec![1, 3, 19, 195]);
        assert!(labeled_connected_bipartite(5).all(|(g, b)| b.is_valid_for(&g) && b.u.contains(0)));
    }

    #[test]
    fn random_families_are_well_formed() {
        let gs = random_connected_corpus(1, 60, 2, 12);
        assert!(gs.iter().all(Graph::is_connected));
        for (g, b) in random_bipartite_corpus(2, 60, 12) {
            assert!(g.is_connected() && b.is_valid_for(&g) && g.n() <= 12);
        }
        for c in random_cw_corpus(3, 60, 14) {
            assert!(c.graph.n() <= 14);
            assert_eq!(c.graph.n(), c.r + c.d + c.leaf_count + 2 * c.triangle_count);
            assert!(c.graph.is_connected());
            assert!(is_cameron_walker(&c.graph));
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        assert_eq!(random_connected_corpus(9, 10, 3, 9), random_connected_corpus(9, 10, 3, 9));
        assert_eq!(random_cw_corpus(9, 10, 14), random_cw_corpus(9, 10, 14));
    }
}
