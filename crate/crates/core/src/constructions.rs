//! Constructions that move the gap `γ_R - γ_r2`: adding a disjoint `C4`
//! raises it by one, and linking all components through a star keeps it while
//! making the graph connected.

use serde::Serialize;
use thiserror::Error;

use crate::domination::{gamma_r2, gamma_roman, DominationError};
use crate::graph::{named, Graph, GraphError};

/// Largest gap `gap_instance` builds.
pub const GAP_MAX: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("star_link needs a graph with at least one vertex")]
    EmptyGraph,
    #[error("gap {k} exceeds the limit of {limit}")]
    GapTooLarge { k: usize, limit: usize },
    #[error("constructed graph failed verification: {0}")]
    Verification(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Domination(#[from] DominationError),
}

/// `G ∪ C4`.
pub fn add_c4(graph: &Graph) -> Result<Graph, ConstructionError> {
    Ok(graph.disjoint_union(&named::cycle(4))?)
}

/// Appends a star `K_{1,k+2}` for a graph with `k` components and joins
/// leaf `i` to the smallest vertex of component `i`; two leaves stay
/// pendant. The centre is vertex `order(G)`, the leaves follow it.
pub fn star_link(graph: &Graph) -> Result<Graph, ConstructionError> {
    let components = graph.components();
    if components.is_empty() {
        return Err(ConstructionError::EmptyGraph);
    }
    let leaves = components.len() + 2;
    let centre = graph.order();
    let mut linked = graph.disjoint_union(&named::star(leaves))?;
    for (i, comp) in components.iter().copied().enumerate() {
        let anchor = comp.min().expect("components are non-empty");
        linked.add_edge(centre + 1 + i, anchor)?;
    }
    Ok(linked)
}

/// Parameters of a graph before and after a construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Shift {
    pub gamma_r2_before: usize,
    #[serde(rename = "gamma_R_before")]
    pub gamma_roman_before: usize,
    pub gamma_r2_after: usize,
    #[serde(rename = "gamma_R_after")]
    pub gamma_roman_after: usize,
}

impl Shift {
    pub fn measure(before: &Graph, after: &Graph) -> Result<Shift, DominationError> {
        Ok(Shift {
            gamma_r2_before: gamma_r2(before)?.value,
            gamma_roman_before: gamma_roman(before)?.value,
            gamma_r2_after: gamma_r2(after)?.value,
            gamma_roman_after: gamma_roman(after)?.value,
        })
    }

    /// `(Δγ_r2, Δγ_R)`.
    pub fn increments(&self) -> (isize, isize) {
        (
            self.gamma_r2_after as isize - self.gamma_r2_before as isize,
            self.gamma_roman_after as isize - self.gamma_roman_before as isize,
        )
    }
}

/// Verification stanza for a gap instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GapCheck {
    pub k: usize,
    pub order: usize,
    pub connected: bool,
    pub k4_free: bool,
    pub gamma_r2: usize,
    #[serde(rename = "gamma_R")]
    pub gamma_roman: usize,
    pub gap: usize,
}

impl GapCheck {
    pub fn measure(graph: &Graph, k: usize) -> Result<GapCheck, DominationError> {
        let r2 = gamma_r2(graph)?.value;
        let roman = gamma_roman(graph)?.value;
        Ok(GapCheck {
            k,
            order: graph.order(),
            connected: graph.is_connected(),
            k4_free: graph.is_k4_free(),
            gamma_r2: r2,
            gamma_roman: roman,
            gap: roman - r2,
        })
    }

    pub fn holds(&self) -> bool {
        self.connected && self.k4_free && self.gap == self.k
    }
}

/// A connected K4-free graph with `γ_R - γ_r2 = k`: `K1` for `k = 0`,
/// otherwise `K1` plus `k` disjoint copies of `C4`, linked by a star.
/// The result is checked with the exact solvers before it is returned.
pub fn gap_instance(k: usize) -> Result<(Graph, GapCheck), ConstructionError> {
    if k > GAP_MAX {
        return Err(ConstructionError::GapTooLarge { k, limit: GAP_MAX });
    }
    let graph = if k == 0 {
        named::complete(1)
    } else {
        let mut g = named::complete(1);
        for _ in 0..k {
            g = add_c4(&g)?;
        }
        star_link(&g)?
    };
    let check = GapCheck::measure(&graph, k)?;
    if !check.holds() {
        return Err(ConstructionError::Verification(format!("{check:?}")));
    }
    Ok((graph, check))
}
