//! Whisker decoration of a connected bipartite graph and the signed count `q`
//! that decides whether the h-polynomial reaches degree `alpha`.
//!
//! Fix a bipartition `(U, V)`. `V_W` holds the vertices of `V` adjacent to a
//! leaf of `U`, and `U_L` picks one such leaf for each of them. For
//! `S ⊆ U \ U_L`, `g(S)` is the alternating count of non-empty independent
//! sets whose trace on `U \ U_L` is exactly `S`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::binomial;
use crate::graph::{deposit, Bipartition, Graph, VertexSet};
use crate::independence::{alternating_g, f_vector};

pub const DEFAULT_SUBSET_CAP: usize = 24;
const MAX_LEAF_CHOICES: usize = 1 << 12;

/// How to pick the representative leaf of each whiskered vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum LeafChoice {
    #[default]
    SmallestIndex,
    LargestIndex,
    /// A complete `U_L`, validated by [`decorate`].
    Explicit(VertexSet),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteDecoration {
    pub graph: Graph,
    pub bip: Bipartition,
    pub v_w: VertexSet,
    pub u_l: VertexSet,
    pub u_l_bar: VertexSet,
    pub v_w_bar: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetAnalysis {
    pub s: VertexSet,
    pub w_s: VertexSet,
    pub w_s_prime: VertexSet,
    pub g_of_s: BigInt,
    pub in_x: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QReport {
    pub x_members: Vec<VertexSet>,
    pub q: i64,
    pub g_total: BigInt,
    pub attains_alpha: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecificCase {
    /// Every vertex of `V` is whiskered.
    FullyWhiskered,
    /// `X ∪ {∅}` is the power set of some non-empty `T`.
    PowerSet { t: VertexSet },
    /// `X` is every subset of `T` with at least `k >= 2` elements.
    Threshold { t: VertexSet, k: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpecificVerdict {
    pub case: SpecificCase,
    pub attains_alpha: bool,
}

/// Leaves of `U` adjacent to `v`.
fn leaf_neighbors(g: &Graph, bip: &Bipartition, v: usize) -> VertexSet {
    g.neighbors(v) & bip.u & g.leaves()
}

fn whiskered_v(g: &Graph, bip: &Bipartition) -> VertexSet {
    g.neighborhood(g.leaves() & bip.u) & bip.v
}

fn check_input(g: &Graph, bip: &Bipartition) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::NotApplicable("needs a connected bipartite graph on at least 2 vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::NotApplicable("graph is not connected".into()));
    }
    if !bip.is_valid_for(g) {
        return Err(Error::NotApplicable("not a bipartition of this graph".into()));
    }
    Ok(())
}

/// Computes `V_W`, `U_L` and their complements.
pub fn decorate(g: &Graph, bip: Bipartition, choice: &LeafChoice) -> Result<BipartiteDecoration> {
    check_input(g, &bip)?;
    let v_w = whiskered_v(g, &bip);
    let u_l = match choice {
        LeafChoice::SmallestIndex => v_w
            .iter()
            .map(|v| leaf_neighbors(g, &bip, v).first().expect("whiskered"))
            .collect(),
        LeafChoice::LargestIndex => v_w
            .iter()
            .map(|v| leaf_neighbors(g, &bip, v).iter().last().expect("whiskered"))
            .collect(),
        LeafChoice::Explicit(set) => {
            let ok = set.len() == v_w.len()
                && v_w.iter().all(|v| (leaf_neighbors(g, &bip, v) & *set).len() == 1);
            if !ok {
                return Err(Error::NotApplicable(format!(
                    "{set:?} is not one leaf per whiskered vertex {v_w:?}"
                )));
            }
            *set
        }
    };
    Ok(BipartiteDecoration {
        graph: g.clone(),
        bip,
        v_w,
        u_l,
        u_l_bar: bip.u - u_l,
        v_w_bar: bip.v - v_w,
    })
}

/// Decoration with the graph's own bipartition and the smallest-index leaves.
pub fn decorate_default(g: &Graph) -> Result<BipartiteDecoration> {
    let bip = g
        .bipartition()
        .ok_or_else(|| Error::NotApplicable("graph is not bipartite".into()))?;
    decorate(g, bip, &LeafChoice::SmallestIndex)
}

/// Every valid `U_L`, up to a fixed cap on the number of combinations.
pub fn all_leaf_choices(g: &Graph, bip: &Bipartition) -> Result<Vec<VertexSet>> {
    check_input(g, bip)?;
    let mut out = vec![VertexSet::EMPTY];
    for v in whiskered_v(g, bip) {
        let leaves = leaf_neighbors(g, bip, v);
        if out.len() * leaves.len() > MAX_LEAF_CHOICES {
            return Err(Error::SubsetBudgetExceeded {
                size: out.len() * leaves.len(),
                cap: MAX_LEAF_CHOICES,
            });
        }
        out = out
            .iter()
            .flat_map(|&partial| leaves.iter().map(move |l| partial.with(l)))
            .collect();
    }
    Ok(out)
}

fn check_subset(dec: &BipartiteDecoration, s: VertexSet) -> Result<()> {
    if s.is_subset(dec.u_l_bar) {
        Ok(())
    } else {
        Err(Error::InvalidSubset)
    }
}

/// Signed sum over the independent subsets of `pool`, each contributing
/// `(-1)^(|C| + offset - 1)`, skipping the empty set when `offset == 0`.
fn alternating_independent_sum(g: &Graph, pool: VertexSet, offset: usize) -> BigInt {
    fn rec(adj: &[u64], pool: u64, size: usize, offset: usize, acc: &mut i64) {
        if pool == 0 {
            let total = size + offset;
            if total > 0 {
                *acc += if total % 2 == 1 { 1 } else { -1 };
            }
            return;
        }
        let v = pool.trailing_zeros() as usize;
        let rest = pool & !(1u64 << v);
        rec(adj, rest, size, offset, acc);
        rec(adj, rest & !adj[v], size + 1, offset, acc);
    }
    let mut acc = 0i64;
    rec(g.adjacency(), pool.mask(), 0, offset, &mut acc);
    BigInt::from(acc)
}

/// `g(S)` by enumerating the independent sets whose trace on `U \ U_L` is `S`.
pub fn g_subset_brute(dec: &BipartiteDecoration, s: VertexSet) -> Result<BigInt> {
    check_subset(dec, s)?;
    // S ⊆ U is independent; extend by independent sets of the allowed rest
    let pool = (dec.bip.v | dec.u_l) - dec.graph.neighborhood(s);
    Ok(alternating_independent_sum(&dec.graph, pool, s.len()))
}

/// `g(S)` for every `S ⊆ U \ U_L`, indexed by the compressed mask of `S`,
/// from a single pass over all independent sets of the graph.
pub fn g_subsets_brute_all(dec: &BipartiteDecoration) -> Result<Vec<i64>> {
    let k = dec.u_l_bar.len();
    if k > DEFAULT_SUBSET_CAP {
        return Err(Error::SubsetBudgetExceeded { size: k, cap: DEFAULT_SUBSET_CAP });
    }
    let mut table = vec![0i64; 1 << k];
    fn rec(adj: &[u64], pool: u64, chosen: u64, size: usize, sel: u64, table: &mut [i64]) {
        if pool == 0 {
            if size > 0 {
                let idx = crate::graph::compress(chosen, sel) as usize;
                table[idx] += if size % 2 == 1 { 1 } else { -1 };
            }
            return;
        }
        let v = pool.trailing_zeros() as usize;
        let rest = pool & !(1u64 << v);
        rec(adj, rest, chosen, size, sel, table);
        rec(adj, rest & !adj[v], chosen | (1 << v), size + 1, sel, table);
    }
    rec(
        dec.graph.adjacency(),
        dec.graph.vertices().mask(),
        0,
        0,
        dec.u_l_bar.mask(),
        &mut table,
    );
    Ok(table)
}

fn sign(exp: usize) -> i64 {
    if exp.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `g(S)` from the closed forms for the fully whiskered and partly whiskered cases.
pub fn g_subset_closed(dec: &BipartiteDecoration, s: VertexSet) -> Result<BigInt> {
    check_subset(dec, s)?;
    let value = if dec.v_w_bar.is_empty() {
        match (s.is_empty(), dec.bip.v.len() % 2) {
            (false, _) => 0,
            (true, 0) => 0,
            (true, _) => 2,
        }
    } else if s.is_empty() {
        1
    } else if dec.graph.neighborhood(s) == dec.v_w_bar {
        sign(s.len() + dec.v_w.len() + 1)
    } else {
        0
    };
    Ok(BigInt::from(value))
}

pub fn analyze_subset(dec: &BipartiteDecoration, s: VertexSet) -> Result<SubsetAnalysis> {
    let g_of_s = g_subset_closed(dec, s)?;
    let ns = dec.graph.neighborhood(s);
    Ok(SubsetAnalysis {
        s,
        w_s: dec.v_w - ns,
        w_s_prime: dec.v_w_bar - ns,
        g_of_s,
        in_x: !s.is_empty() && ns == dec.v_w_bar,
    })
}

/// Collects `X = {S ⊆ U \ U_L : S ≠ ∅, N(S) = V \ V_W}`, computes `q`, and
/// checks the subset sum of `g(S)` against the alternating sum of the graph.
pub fn q_report(dec: &BipartiteDecoration, cap: usize) -> Result<QReport> {
    if dec.u_l_bar.len() > cap {
        return Err(Error::SubsetBudgetExceeded {
            size: dec.u_l_bar.len(),
            cap,
        });
    }
    let g = &dec.graph;
    let mut x_members = Vec::new();
    if !dec.v_w_bar.is_empty() {
        // only vertices whose neighbors avoid V_W can sit in a member of X
        let candidates: VertexSet = dec
            .u_l_bar
            .iter()
            .filter(|&u| (g.neighbors(u) & dec.v_w).is_empty())
            .collect();
        let sel = candidates.mask();
        x_members = (1u64..1u64 << candidates.len())
            .into_par_iter()
            .map(|i| VertexSet::from_mask(deposit(i, sel)))
            .filter(|&s| g.neighborhood(s) == dec.v_w_bar)
            .collect();
        x_members.sort();
    }
    let q: i64 = x_members.iter().map(|s| sign(s.len())).sum();

    // every S outside X ∪ {∅} contributes zero
    let mut g_total = g_subset_closed(dec, VertexSet::EMPTY)?;
    for &s in &x_members {
        g_total += g_subset_closed(dec, s)?;
    }
    let direct = alternating_g(&f_vector(g));
    if g_total != direct {
        return Err(Error::TheoremViolation(format!(
            "subset sum of g(S) is {g_total}, the alternating sum of the graph is {direct}"
        )));
    }
    if !dec.v_w_bar.is_empty() {
        let predicted = BigInt::one() - BigInt::from(sign(dec.v_w.len()) * q);
        if predicted != direct {
            return Err(Error::TheoremViolation(format!(
                "g = {direct} but 1 - (-1)^|V_W| q = {predicted}"
            )));
        }
    }
    Ok(QReport {
        x_members,
        q,
        g_total,
        attains_alpha: dec.v_w_bar.is_empty() || q != 0,
    })
}

/// Verdicts readable straight off the shape of `X`, cross-checked with `q`.
pub fn specific_cases(dec: &BipartiteDecoration, cap: usize) -> Result<Option<SpecificVerdict>> {
    if dec.v_w_bar.is_empty() {
        return Ok(Some(SpecificVerdict {
            case: SpecificCase::FullyWhiskered,
            attains_alpha: true,
        }));
    }
    let report = q_report(dec, cap)?;
    if report.x_members.is_empty() {
        return Ok(None);
    }
    let t = report.x_members.iter().fold(VertexSet::EMPTY, |acc, &s| acc | s);
    let k = report.x_members.iter().map(|s| s.len()).min().unwrap_or(0);
    let full_count: BigInt = (k..=t.len()).map(|j| binomial(t.len() as u64, j as i64)).sum();
    if BigInt::from(report.x_members.len()) != full_count {
        return Ok(None);
    }
    let case = if k == 1 {
        SpecificCase::PowerSet { t }
    } else {
        SpecificCase::Threshold { t, k }
    };
    // q = sum_{j >= k} (-1)^j C(|T|, j) = (-1)^k C(|T|-1, k-1), never zero
    let expected_q = binomial(t.len() as u64 - 1, k as i64 - 1) * sign(k);
    if expected_q != BigInt::from(report.q) || expected_q.is_zero() {
        return Err(Error::TheoremViolation(format!(
            "X has the shape {case:?} but q = {} instead of {expected_q}",
            report.q
        )));
    }
    Ok(Some(SpecificVerdict {
        case,
        attains_alpha: true,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::summarize;

    /// Builds a graph from `u_i`/`v_j` labels, `u_i -> i-1`, `v_j -> nu + j - 1`.
    pub(crate) fn labeled(nu: usize, nv: usize, edges: &[(usize, usize)]) -> (Graph, Bipartition) {
        let e: Vec<_> = edges.iter().map(|&(u, v)| (u - 1, nu + v - 1)).collect();
        let g = Graph::from_edge_list(nu + nv, &e).unwrap();
        let bip = Bipartition {
            u: VertexSet::full(nu),
            v: VertexSet::full(nu + nv) - VertexSet::full(nu),
        };
        (g, bip)
    }

    fn set(nu: usize, us: &[usize], vs: &[usize]) -> VertexSet {
        us.iter().map(|u| u - 1).chain(vs.iter().map(|v| nu + v - 1)).collect()
    }

    fn subset_example() -> (Graph, Bipartition) {
        labeled(
            6,
            5,
            &[(1, 1), (1, 2), (1, 3), (2, 3), (3, 3), (3, 4), (3, 5), (4, 1), (5, 2), (6, 3)],
        )
    }

    fn q_minus_one() -> (Graph, Bipartition) {
        labeled(
            6,
            5,
            &[(1, 1), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 1), (5, 2), (6, 3)],
        )
    }

    fn q_zero() -> (Graph, Bipartition) {
        labeled(
            5,
            4,
            &[(5, 1), (1, 1), (1, 2), (2, 2), (3, 2), (2, 4), (3, 4), (4, 4), (4, 2), (3, 3)],
        )
    }

    fn threshold_x() -> (Graph, Bipartition) {
        labeled(
            5,
            4,
            &[(5, 1), (1, 1), (1, 2), (2, 2), (3, 2), (2, 3), (3, 4), (4, 4), (4, 3), (1, 3), (1, 4)],
        )
    }

    /// Counts independent sets of size `j` with trace `s` on `U \ U_L`.
    fn g_j_of_subset(dec: &BipartiteDecoration, s: VertexSet, j: usize) -> usize {
        dec.graph
            .vertices()
            .subsets()
            .filter(|c| {
                c.len() == j && (*c & dec.u_l_bar) == s && crate::independence::is_independent(&dec.graph, *c)
            })
            .count()
    }

    #[test]
    fn decoration_of_subset_example() {
        let (g, bip) = subset_example();
        // v3 carries two leaves, u2 and u6; the default picks u2
        let default = decorate(&g, bip, &LeafChoice::SmallestIndex).unwrap();
        assert_eq!(default.u_l, set(6, &[2, 4, 5], &[]));
        let dec = decorate(&g, bip, &LeafChoice::Explicit(set(6, &[4, 5, 6], &[]))).unwrap();
        assert_eq!(dec.v_w, set(6, &[], &[1, 2, 3]));
        assert_eq!(dec.u_l, set(6, &[4, 5, 6], &[]));
        assert_eq!(dec.u_l_bar, set(6, &[1, 2, 3], &[]));
        assert_eq!(dec.v_w_bar, set(6, &[], &[4, 5]));
        assert_eq!(g_j_of_subset(&dec, set(6, &[2, 3], &[]), 3), 5);
        assert_eq!(g_j_of_subset(&dec, set(6, &[1, 3], &[]), 3), 3);
        // N({u1,u2}) = {v1,v2,v3}, leaving v4, v5, u4, u5, u6 as third members
        assert_eq!(g_j_of_subset(&dec, set(6, &[1, 2], &[]), 3), 5);
    }

    #[test]
    fn decoration_of_q_zero_graph_and_complete_bipartite() {
        let (g, bip) = q_zero();
        let dec = decorate(&g, bip, &LeafChoice::SmallestIndex).unwrap();
        assert_eq!(dec.v_w, set(5, &[], &[1]));
        assert_eq!(dec.u_l, set(5, &[5], &[]));
        assert_eq!(dec.v_w_bar, set(5, &[], &[2, 3, 4]));
        let u3 = set(5, &[3], &[]);
        assert_eq!(g_subset_closed(&dec, u3).unwrap(), BigInt::from(-1));
        assert_eq!(g_subset_brute(&dec, u3).unwrap(), BigInt::from(-1));
        assert_eq!(g_subset_closed(&dec, VertexSet::EMPTY).unwrap(), BigInt::one());

        let k32 = Graph::complete_bipartite(3, 2).unwrap();
        let dec = decorate_default(&k32).unwrap();
        assert!(dec.v_w.is_empty() && dec.u_l.is_empty());
        assert_eq!(dec.u_l_bar.len(), 3);
        assert_eq!(dec.v_w_bar.len(), 2);
    }

    #[test]
    fn k2_fully_whiskered() {
        let dec = decorate_default(&Graph::path(2).unwrap()).unwrap();
        assert!(dec.v_w_bar.is_empty());
        assert_eq!(g_subset_closed(&dec, VertexSet::EMPTY).unwrap(), BigInt::from(2));
        assert_eq!(g_subset_brute(&dec, VertexSet::EMPTY).unwrap(), BigInt::from(2));
    }

    #[test]
    fn invalid_inputs() {
        let (g, bip) = q_zero();
        let dec = decorate(&g, bip, &LeafChoice::SmallestIndex).unwrap();
        assert_eq!(g_subset_closed(&dec, set(5, &[5], &[])), Err(Error::InvalidSubset));
        assert!(decorate_default(&Graph::cycle(5).unwrap()).is_err());
        assert!(decorate_default(&Graph::empty(1).unwrap()).is_err());
        let split = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(decorate_default(&split).is_err());
        assert!(decorate(&g, bip, &LeafChoice::Explicit(VertexSet::EMPTY)).is_err());
    }

    #[test]
    fn q_of_example_graphs() {
        let (g, bip) = q_minus_one();
        let dec = decorate(&g, bip, &LeafChoice::SmallestIndex).unwrap();
        let r = q_report(&dec, DEFAULT_SUBSET_CAP).unwrap();
        assert_eq!(r.x_members, vec![set(6, &[3], &[])]);
        assert_eq!(r.q, -1);
        assert!(r.attains_alpha);
        let s = summarize(&g).unwrap();
        assert_eq!((s.deg_h, s.alpha), (6, 6));

        let (g, bip) = q_zero();
        let dec = decorate(&g, bip, &LeafChoice::SmallestIndex).unwrap();
        let r = q_report(&dec, DEFAULT_SUBSET_CAP).unwrap();
        assert_eq!(r.x_members.len(), 4);
        assert_eq!(r.q, 0);
        assert!(!r.attains_alpha);
        // g = 1 and D_0 = 1, so the degree drops by exactly one
        let s = summarize(&g).unwrap();
        assert_eq!((s.deg_h, s.alpha), (4, 5));
        assert_eq!(s.d_prime, Some(0));

        let dec = decorate_default(&Graph::complete_bipartite(4, 3).unwrap()).unwrap();
        assert_eq!(q_report(&dec, DEFAULT_SUBSET_CAP).unwrap().q, -1);
        assert!(matches!(q_report(&dec, 2), Err(Error::SubsetBudgetExceeded { .. })));
    }

    #[test]
    fn specific_shapes() {
        let (g, bip) = threshold_x();
        let dec = decorate(&g, bip, &LeafChoice::SmallestIndex).unwrap();
        let r = q_report(&dec, DEFAULT_SUBSET_CAP).unwrap();
        assert_eq!(r.q, 2);
        let v = specific_cases(&dec, DEFAULT_SUBSET_CAP).unwrap().unwrap();
        assert_eq!(
            v.case,
            SpecificCase::Threshold {
                t: set(5, &[2, 3, 4], &[]),
                k: 2
            }
        );
        assert!(v.attains_alpha);

        let dec = decorate_default(&Graph::complete_bipartite(3, 2).unwrap()).unwrap();
        let v = specific_cases(&dec, DEFAULT_SUBSET_CAP).unwrap().unwrap();
        assert!(matches!(v.case, SpecificCase::PowerSet { .. }));
        assert_eq!(summarize(&Graph::complete_bipartite(3, 2).unwrap()).unwrap().deg_h, 3);

        // caterpillar: spine 0-1-2, each with one whisker on the other side
        let cat = Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        let bip = Bipartition {
            u: VertexSet::from_iter([1, 3, 5]),
            v: VertexSet::from_iter([0, 2, 4]),
        };
        let dec = decorate(&cat, bip, &LeafChoice::SmallestIndex).unwrap();
        // V = {0, 2, 4}: 0 and 2 are whiskered by 3 and 5, 4 is a leaf itself
        assert_eq!(dec.v_w, VertexSet::from_iter([0, 2]));
        let (g, bip) = labeled(3, 2, &[(1, 1), (2, 1), (2, 2), (3, 2)]);
        let dec = decorate(&g, bip, &LeafChoice::SmallestIndex).unwrap();
        assert_eq!(specific_cases(&dec, DEFAULT_SUBSET_CAP).unwrap().unwrap().case, SpecificCase::FullyWhiskered);
        let s = summarize(&g).unwrap();
        assert_eq!((s.deg_h, s.alpha), (3, 3));

        let (g, bip) = q_zero();
        let dec = decorate(&g, bip, &LeafChoice::SmallestIndex).unwrap();
        assert_eq!(specific_cases(&dec, DEFAULT_SUBSET_CAP).unwrap(), None);
    }

    #[test]
    fn leaf_choices_do_not_change_q() {
        // v1 carries two leaves u4, u5; v2 carries u6
        let (g, bip) = labeled(6, 3, &[(1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (3, 1), (4, 1), (5, 1), (6, 2)]);
        let choices = all_leaf_choices(&g, &bip).unwrap();
        assert_eq!(choices.len(), 2);
        let reports: Vec<_> = choices
            .iter()
            .map(|&c| {
                let dec = decorate(&g, bip, &LeafChoice::Explicit(c)).unwrap();
                q_report(&dec, DEFAULT_SUBSET_CAP).unwrap()
            })
            .collect();
        assert!(reports.iter().all(|r| r.q == reports[0].q && r.attains_alpha == reports[0].attains_alpha));
        let large = decorate(&g, bip, &LeafChoice::LargestIndex).unwrap();
        assert_eq!(large.u_l, set(6, &[5, 6], &[]));
    }

    #[test]
    fn closed_matches_brute_on_example_graphs() {
        for (g, bip) in [subset_example(), q_minus_one(), q_zero(), threshold_x()] {
            let dec = decorate(&g, bip, &LeafChoice::SmallestIndex).unwrap();
            let table = g_subsets_brute_all(&dec).unwrap();
            let mut total = BigInt::zero();
            for s in dec.u_l_bar.subsets() {
                let closed = g_subset_closed(&dec, s).unwrap();
                assert_eq!(closed, g_subset_brute(&dec, s).unwrap());
                let idx = crate::graph::compress(s.mask(), dec.u_l_bar.mask()) as usize;
                assert_eq!(closed, BigInt::from(table[idx]));
                total += closed;
            }
            assert_eq!(total, alternating_g(&f_vector(&g)));
            let attains = q_report(&dec, DEFAULT_SUBSET_CAP).unwrap().attains_alpha;
            let s = summarize(&g).unwrap();
            assert_eq!(attains, s.deg_h == s.alpha);
        }
    }

    #[test]
    fn analysis_fields() {
        let (g, bip) = q_zero();
        let dec = decorate(&g, bip, &LeafChoice::SmallestIndex).unwrap();
        let a = analyze_subset(&dec, set(5, &[3], &[])).unwrap();
        assert!(a.in_x);
        assert!(a.w_s_prime.is_empty());
        assert_eq!(a.w_s, set(5, &[], &[1]));
        let b = analyze_subset(&dec, set(5, &[1], &[])).unwrap();
        assert!(!b.in_x);
        assert_eq!(b.w_s_prime, set(5, &[], &[3, 4]));
    }
}
