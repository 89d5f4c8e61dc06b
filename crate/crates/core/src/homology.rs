//! Reduced simplicial homology of independence complexes over the rationals,
//! and the regularity of `R/I(G)` read off it.
//!
//! `reg = max { s + 1 : W ⊆ V, H̃_s(Ind(G[W])) ≠ 0 }`. Ranks are exact:
//! fraction-free elimination in `i128`, redone in `BigInt` if a product overflows.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{deposit, Graph, VertexSet};

pub const DEFAULT_HOMOLOGY_CAP: usize = 18;

/// Faces of `Ind(g)` grouped by size: `faces[k]` holds the independent sets
/// with `k` vertices, as masks in increasing order. `faces[0] = [∅]`.
pub fn independence_complex_faces(g: &Graph) -> Vec<Vec<u64>> {
    fn rec(adj: &[u64], pool: u64, chosen: u64, size: usize, out: &mut Vec<Vec<u64>>) {
        if out.len() <= size {
            out.resize(size + 1, Vec::new());
        }
        out[size].push(chosen);
        let mut rest = pool;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            rec(adj, rest & !adj[v], chosen | (1 << v), size + 1, out);
        }
    }
    let mut out = Vec::new();
    rec(g.adjacency(), g.vertices().mask(), 0, 0, &mut out);
    for level in out.iter_mut() {
        level.sort_unstable();
    }
    out
}

trait Entry: Clone + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    /// `a * x - b * y`, or `None` on overflow.
    fn lin(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl Entry for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn lin(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
}

impl Entry for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn lin(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs() == BigInt::from(1)
    }
}

type Row<T> = Vec<(u32, T)>;

/// `b * r - a * p` for sorted sparse rows, with zeros dropped.
fn combine<T: Entry>(r: &Row<T>, b: &T, p: &Row<T>, a: &T) -> Option<Row<T>> {
    let zero = T::zero();
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let (col, x, y) = match (r.get(i), p.get(j)) {
            (Some((cr, xr)), Some((cp, _))) if cr < cp => {
                i += 1;
                (*cr, xr, &zero)
            }
            (Some((cr, _)), Some((cp, yp))) if cp < cr => {
                j += 1;
                (*cp, &zero, yp)
            }
            (Some((cr, xr)), Some((_, yp))) => {
                i += 1;
                j += 1;
                (*cr, xr, yp)
            }
            (Some((cr, xr)), None) => {
                i += 1;
                (*cr, xr, &zero)
            }
            (None, Some((cp, yp))) => {
                j += 1;
                (*cp, &zero, yp)
            }
            (None, None) => unreachable!(),
        };
        let v = T::lin(b, x, a, y)?;
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    // keep entries small
    let mut g = T::zero();
    for (_, v) in &out {
        g = g.gcd(v);
        if g.is_unit() {
            return Some(out);
        }
    }
    if !g.is_zero() {
        for (_, v) in out.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
    Some(out)
}

fn rank_generic<T: Entry>(rows: Vec<Row<T>>, ncols: usize) -> Option<usize> {
    let mut pivots: Vec<Option<Row<T>>> = vec![None; ncols];
    let mut rank = 0;
    for mut r in rows {
        while let Some((c, a)) = r.first().cloned() {
            match &pivots[c as usize] {
                Some(p) => {
                    let b = p[0].1.clone();
                    r = combine(&r, &b, p, &a)?;
                }
                None => {
                    pivots[c as usize] = Some(r);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Some(rank)
}

/// Exact rank over the rationals of a sparse integer matrix.
pub fn exact_rank(rows: &[Vec<(u32, i64)>], ncols: usize) -> usize {
    let small: Vec<Row<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&(c, v)| (c, v as i128)).collect())
        .collect();
    if let Some(r) = rank_generic(small, ncols) {
        return r;
    }
    let big: Vec<Row<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect())
        .collect();
    rank_generic(big, ncols).expect("BigInt arithmetic cannot overflow")
}

/// Rank of the boundary map from faces with `k` vertices to faces with `k - 1`.
fn boundary_rank(faces: &[Vec<u64>], k: usize) -> usize {
    if k == 0 || k >= faces.len() || faces[k].is_empty() {
        return 0;
    }
    let index: HashMap<u64, u32> = faces[k - 1]
        .iter()
        .enumerate()
        .map(|(i, &f)| (f, i as u32))
        .collect();
    let rows: Vec<Vec<(u32, i64)>> = faces[k]
        .iter()
        .map(|&f| {
            let mut row: Vec<(u32, i64)> = VertexSet::from_mask(f)
                .iter()
                .enumerate()
                .map(|(pos, v)| {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    (index[&(f & !(1u64 << v))], sign)
                })
                .collect();
            row.sort_unstable_by_key(|e| e.0);
            row
        })
        .collect();
    exact_rank(&rows, faces[k - 1].len())
}

/// `rank H̃_s(Ind(g))` for `s = -1, 0, .., alpha - 1`; entry `i` is degree `s = i - 1`.
pub fn reduced_betti_numbers(g: &Graph) -> Vec<usize> {
    let faces = independence_complex_faces(g);
    let ranks: Vec<usize> = (0..=faces.len()).map(|k| boundary_rank(&faces, k)).collect();
    (0..faces.len())
        .map(|k| faces[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}

/// `sum_s (-1)^s f_s` over faces of every dimension, including the empty face.
pub fn reduced_euler_characteristic(g: &Graph) -> i64 {
    independence_complex_faces(g)
        .iter()
        .enumerate()
        .map(|(k, level)| if k % 2 == 1 { level.len() as i64 } else { -(level.len() as i64) })
        .sum()
}

/// Checks the reduced Euler characteristic against the alternating Betti sum.
pub fn euler_check(g: &Graph) -> Result<()> {
    let chi = reduced_euler_characteristic(g);
    let betti: i64 = reduced_betti_numbers(g)
        .iter()
        .enumerate()
        .map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) })
        .sum();
    if chi != betti {
        return Err(Error::InternalInconsistency(format!(
            "reduced Euler characteristic {chi} but alternating Betti sum {betti}"
        )));
    }
    Ok(())
}

/// True iff `H̃_s(Ind(g)) ≠ 0`, where `faces` is the face list of `g`.
fn homology_nonzero(faces: &[Vec<u64>], s: usize) -> bool {
    let k = s + 1;
    let dim = faces[k].len();
    dim > boundary_rank(faces, k) + boundary_rank(faces, k + 1)
}

/// Subset `w` and degree `s` realizing the regularity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegularityWitness {
    pub reg: usize,
    pub w: VertexSet,
    pub s: Option<usize>,
}

fn regularity_uncalibrated(g: &Graph, cap: usize) -> Result<RegularityWitness> {
    let n = g.n();
    if n > cap {
        return Err(Error::BudgetExceeded { n, cap });
    }
    let best = AtomicUsize::new(0);
    let full = g.vertices().mask();
    let witness = (1u64..1u64 << n)
        .into_par_iter()
        .filter_map(|i| {
            let w = VertexSet::from_mask(deposit(i, full));
            let sub = g.induced_subgraph(w);
            // an isolated vertex makes the complex a cone
            if sub.vertices().iter().any(|v| sub.degree(v) == 0) {
                return None;
            }
            let faces = independence_complex_faces(&sub);
            let alpha = faces.len() - 1;
            let floor = best.load(Ordering::Relaxed);
            // degrees s < floor cannot improve the maximum
            (floor..alpha).rev().find(|&s| homology_nonzero(&faces, s)).map(|s| {
                best.fetch_max(s + 1, Ordering::Relaxed);
                (s + 1, w, s)
            })
        })
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.mask().cmp(&a.1.mask())));
    Ok(match witness {
        Some((reg, w, s)) => RegularityWitness { reg, w, s: Some(s) },
        None => RegularityWitness {
            reg: 0,
            w: VertexSet::EMPTY,
            s: None,
        },
    })
}

fn calibration() -> &'static std::result::Result<(), String> {
    static CHECK: OnceLock<std::result::Result<(), String>> = OnceLock::new();
    CHECK.get_or_init(|| {
        let anchors = [
            ("K2", Graph::path(2), 1),
            ("C5", Graph::cycle(5), 2),
            ("P4", Graph::path(4), 1),
        ];
        for (name, g, expect) in anchors {
            let g = g.map_err(|e| e.to_string())?;
            let got = regularity_uncalibrated(&g, DEFAULT_HOMOLOGY_CAP)
                .map_err(|e| e.to_string())?
                .reg;
            if got != expect {
                return Err(format!("reg({name}) computed as {got}, expected {expect}"));
            }
        }
        Ok(())
    })
}

/// Regularity of `R/I(g)` with a witness, after the one-time calibration check.
pub fn regularity_with_witness(g: &Graph, cap: usize) -> Result<RegularityWitness> {
    calibration().clone().map_err(Error::CalibrationFailed)?;
    regularity_uncalibrated(g, cap)
}

pub fn regularity(g: &Graph, cap: usize) -> Result<usize> {
    Ok(regularity_with_witness(g, cap)?.reg)
}
