//! Graphs with equal matching and induced matching numbers, their structure,
//! and the regularity/degree formulas that hold for them.
//!
//! A connected such graph is a star, a triangle star (triangles glued at one
//! vertex), or a connected bipartite core `R ∪ D` where every vertex of `R`
//! carries at least one leaf and vertices of `D` may carry pendant triangles.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::hilbert::summarize;
use crate::homology::regularity;
use crate::independence::{induced_matching_number, matching_number};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CWShape {
    Star,
    TriangleStar,
    General,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CWStructure {
    pub shape: CWShape,
    /// Core side whose vertices carry the leaves.
    pub r: usize,
    /// Core side where triangles may hang.
    pub d: usize,
    /// Vertices of the `d` side carrying at least one triangle.
    pub k: usize,
    pub leaf_count: usize,
    pub triangle_count: usize,
    pub r_side: VertexSet,
    pub d_side: VertexSet,
    pub leaves: VertexSet,
    /// `(apex, wing, wing)`.
    pub triangles: Vec<(usize, usize, usize)>,
}

impl CWStructure {
    pub fn vertex_count(&self) -> usize {
        self.r + self.d + self.leaf_count + 2 * self.triangle_count
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RegularityMethod {
    Homology,
    CwFormula,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub reg: usize,
    pub nu: usize,
    pub mu: usize,
    pub method: RegularityMethod,
}

pub fn is_cameron_walker(g: &Graph) -> bool {
    induced_matching_number(g) == matching_number(g)
}

/// Connected, five vertices, every degree two.
pub fn is_c5(g: &Graph) -> bool {
    g.n() == 5 && g.is_connected() && g.vertices().iter().all(|v| g.degree(v) == 2)
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::NotApplicable("needs a connected graph on at least 2 vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::NotApplicable("graph is not connected".into()));
    }
    Ok(())
}

fn star_center(g: &Graph) -> Option<usize> {
    let n = g.n();
    if g.edge_count() != n - 1 {
        return None;
    }
    g.vertices().iter().find(|&c| g.degree(c) == n - 1)
}

fn triangle_star_center(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n < 3 || n.is_multiple_of(2) || g.edge_count() != 3 * (n - 1) / 2 {
        return None;
    }
    let c = g.vertices().iter().find(|&c| g.degree(c) == n - 1)?;
    (g.vertices() - VertexSet::singleton(c))
        .iter()
        .all(|v| g.degree(v) == 2)
        .then_some(c)
}

/// Triangles `{x, a, b}` with `deg a = deg b = 2`.
fn pendant_triangles(g: &Graph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (a, b) in g.edges() {
        if g.degree(a) != 2 || g.degree(b) != 2 {
            continue;
        }
        if let Some(x) = (g.neighbors(a) & g.neighbors(b)).first() {
            out.push((x, a, b));
        }
    }
    out
}

/// Structure of a connected graph with `nu = mu`.
pub fn cw_decompose(g: &Graph) -> Result<CWStructure> {
    require_connected(g)?;
    if !is_cameron_walker(g) {
        return Err(Error::NotApplicable("matching and induced matching numbers differ".into()));
    }
    let n = g.n();
    if let Some(c) = star_center(g) {
        let leaves = g.vertices() - VertexSet::singleton(c);
        return Ok(CWStructure {
            shape: CWShape::Star,
            r: 1,
            d: 0,
            k: 0,
            leaf_count: n - 1,
            triangle_count: 0,
            r_side: VertexSet::singleton(c),
            d_side: VertexSet::EMPTY,
            leaves,
            triangles: Vec::new(),
        });
    }
    if let Some(c) = triangle_star_center(g) {
        // in C3 every vertex qualifies as the center; take the edges away from it
        let triangles: Vec<_> = g
            .edges()
            .filter(|&(a, b)| a != c && b != c)
            .map(|(a, b)| (c, a, b))
            .collect();
        debug_assert_eq!(triangles.len(), (n - 1) / 2);
        return Ok(CWStructure {
            shape: CWShape::TriangleStar,
            r: 0,
            d: 1,
            k: 1,
            leaf_count: 0,
            triangle_count: triangles.len(),
            r_side: VertexSet::EMPTY,
            d_side: VertexSet::singleton(c),
            leaves: VertexSet::EMPTY,
            triangles,
        });
    }

    let triangles = pendant_triangles(g);
    let wings: VertexSet = triangles.iter().flat_map(|&(_, a, b)| [a, b]).collect();
    let apexes: VertexSet = triangles.iter().map(|&(x, _, _)| x).collect();
    let leaves = g.leaves();
    let core = g.vertices() - wings - leaves;
    let fail = |why: &str| Error::DecompositionFailed(format!("{why} in {g:?}"));
    let Some(root) = core.first() else {
        return Err(fail("empty core"));
    };
    if g.reachable_within(root, core) != core {
        return Err(fail("core is disconnected"));
    }
    let bip = g
        .induced_subgraph(core)
        .bipartition()
        .ok_or_else(|| fail("core is not bipartite"))?;
    let members: Vec<usize> = core.iter().collect();
    let lift = |s: VertexSet| -> VertexSet { s.iter().map(|i| members[i]).collect() };
    let (side_a, side_b) = (lift(bip.u), lift(bip.v));
    let leaf_parents = g.neighborhood(leaves);

    for (r_side, d_side) in [(side_a, side_b), (side_b, side_a)] {
        if !apexes.is_subset(d_side) || !leaf_parents.is_subset(r_side) {
            continue;
        }
        if r_side.iter().any(|v| (g.neighbors(v) & leaves).is_empty()) {
            continue;
        }
        if r_side.is_empty() || d_side.is_empty() {
            continue;
        }
        let s = CWStructure {
            shape: CWShape::General,
            r: r_side.len(),
            d: d_side.len(),
            k: apexes.len(),
            leaf_count: leaves.len(),
            triangle_count: triangles.len(),
            r_side,
            d_side,
            leaves,
            triangles,
        };
        if s.vertex_count() != n {
            return Err(fail("vertex count identity broken"));
        }
        return Ok(s);
    }
    Err(fail("no side assignment puts leaves on one side and triangles on the other"))
}

/// `(deg h, reg)` predicted by the structure.
pub fn cw_invariants(s: &CWStructure) -> (usize, usize) {
    match s.shape {
        CWShape::Star => (s.leaf_count, 1),
        CWShape::TriangleStar => {
            let t = s.triangle_count;
            (if t % 2 == 1 { t } else { t - 1 }, t)
        }
        CWShape::General => (s.leaf_count + s.triangle_count + (s.d - s.k), s.r + s.triangle_count),
    }
}

/// Regularity by homology, with the matching bounds alongside.
pub fn regularity_homology(g: &Graph, cap: usize) -> Result<RegularityReport> {
    Ok(RegularityReport {
        reg: regularity(g, cap)?,
        nu: induced_matching_number(g),
        mu: matching_number(g),
        method: RegularityMethod::Homology,
    })
}

/// Regularity from the structure formula; only for connected graphs with `nu = mu`.
pub fn regularity_cw_formula(g: &Graph) -> Result<RegularityReport> {
    let s = cw_decompose(g)?;
    Ok(RegularityReport {
        reg: cw_invariants(&s).1,
        nu: induced_matching_number(g),
        mu: matching_number(g),
        method: RegularityMethod::CwFormula,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MaxSumWitness {
    pub n: usize,
    pub reg: usize,
    pub deg_h: usize,
    pub cw_without_triangles: bool,
}

impl MaxSumWitness {
    pub fn reaches_n(&self) -> bool {
        self.reg + self.deg_h == self.n
    }
}

/// Whether `reg + deg h = n`, checked against "`nu = mu` and no pendant triangles".
pub fn classify_max_sum(g: &Graph, cap: usize) -> Result<MaxSumWitness> {
    require_connected(g)?;
    let reg = regularity(g, cap)?;
    let deg_h = summarize(g)?.deg_h;
    let cw_without_triangles = is_cameron_walker(g) && cw_decompose(g)?.triangle_count == 0;
    let w = MaxSumWitness {
        n: g.n(),
        reg,
        deg_h,
        cw_without_triangles,
    };
    if w.reaches_n() != cw_without_triangles {
        return Err(Error::TheoremViolation(format!(
            "reg {reg} + deg h {deg_h} vs n {} disagrees with the structure test in {g:?}",
            g.n()
        )));
    }
    Ok(w)
}

/// Whether `reg = mu`, checked against "`nu = mu` or the 5-cycle".
pub fn reg_equals_mu(g: &Graph, cap: usize) -> Result<bool> {
    require_connected(g)?;
    let reg = regularity(g, cap)?;
    let mu = matching_number(g);
    let predicted = is_cameron_walker(g) || is_c5(g);
    if (reg == mu) != predicted {
        return Err(Error::TheoremViolation(format!(
            "reg {reg}, mu {mu}, structural prediction {predicted} in {g:?}"
        )));
    }
    Ok(reg == mu)
}
