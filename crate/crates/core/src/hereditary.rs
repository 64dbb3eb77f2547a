//! Forbidden induced subgraphs and the two hereditary characterisations:
//! `γ_r2(H) = γ_R(H)` for every induced `H` exactly on `{P5, C5, C4}`-free
//! graphs, and `γ_R(H) = 3/2 γ_r2(H)` whenever `γ_r2(H) >= 3` exactly on
//! `{3K1, K2+K1}`-free graphs.

use thiserror::Error;

use crate::domination::{
    all_min_2rdf, gamma_r2, gamma_roman, ColorSet, DominationError, RainbowAssignment, RomanAssignment,
};
use crate::graph::{canonical_form, named, Graph, GraphError, VertexSet};

/// Largest pattern order for induced-subgraph search.
pub const PATTERN_MAX_ORDER: usize = 6;
/// Largest order for the checks that solve every induced subgraph.
pub const DIRECT_MAX_ORDER: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HereditaryError {
    #[error("pattern order {order} exceeds the limit of {limit}")]
    PatternTooLarge { order: usize, limit: usize },
    #[error("order {order} exceeds the limit of {limit} for direct checks")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("k must be positive")]
    NonPositiveK,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Domination(#[from] DominationError),
}

/// A named list of forbidden graphs.
#[derive(Debug, Clone)]
pub struct Family {
    pub members: Vec<(String, Graph)>,
}

impl Family {
    pub fn new(members: Vec<(String, Graph)>) -> Self {
        Family { members }
    }

    /// `{P5, C5, C4}`.
    pub fn equality_obstructions() -> Self {
        Family::new(vec![("P5".into(), named::path(5)), ("C5".into(), named::cycle(5)), ("C4".into(), named::cycle(4))])
    }

    /// `{3K1, K2+K1}`, the complement of a triangle and an edge plus a point.
    pub fn g3_obstructions() -> Self {
        let k2_k1 = named::complete(2).disjoint_union(&named::complete(1)).expect("tiny graph");
        Family::new(vec![("3K1".into(), named::empty(3)), ("K2+K1".into(), k2_k1)])
    }

    /// Looks up a preset by its CLI name.
    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "theorem2" => Some(Family::equality_obstructions()),
            "theorem3" => Some(Family::g3_obstructions()),
            _ => None,
        }
    }
}

/// Calls `f` on every `k`-subset of `start..n` joined to `chosen`, in
/// lexicographic order, until it returns true.
fn for_each_subset(n: usize, k: usize, start: usize, chosen: u64, f: &mut impl FnMut(VertexSet) -> bool) -> bool {
    if k == 0 {
        return f(VertexSet::from_bits(chosen));
    }
    if n < k {
        return false;
    }
    for v in start..=n - k {
        if for_each_subset(n, k - 1, v + 1, chosen | 1 << v, f) {
            return true;
        }
    }
    false
}

/// A vertex set of `graph` inducing a copy of `pattern`, if any.
pub fn find_induced(graph: &Graph, pattern: &Graph) -> Result<Option<VertexSet>, HereditaryError> {
    let k = pattern.order();
    if k > PATTERN_MAX_ORDER {
        return Err(HereditaryError::PatternTooLarge { order: k, limit: PATTERN_MAX_ORDER });
    }
    if k > graph.order() {
        return Ok(None);
    }
    let target = canonical_form(pattern)?;
    let edges = pattern.edge_count();
    let mut found = None;
    for_each_subset(graph.order(), k, 0, 0, &mut |set| {
        let sub = graph.induced_subgraph(set);
        if sub.edge_count() == edges && canonical_form(&sub).expect("small subgraph") == target {
            found = Some(set);
            return true;
        }
        false
    });
    Ok(found)
}

pub fn has_induced(graph: &Graph, pattern: &Graph) -> Result<bool, HereditaryError> {
    Ok(find_induced(graph, pattern)?.is_some())
}

/// The first family member found as an induced subgraph, with its vertices.
pub fn find_forbidden<'f>(graph: &Graph, family: &'f Family) -> Result<Option<(&'f str, VertexSet)>, HereditaryError> {
    for (name, pattern) in &family.members {
        if let Some(set) = find_induced(graph, pattern)? {
            return Ok(Some((name.as_str(), set)));
        }
    }
    Ok(None)
}

pub fn is_free(graph: &Graph, family: &Family) -> Result<bool, HereditaryError> {
    Ok(find_forbidden(graph, family)?.is_none())
}

fn check_direct_order(graph: &Graph) -> Result<(), HereditaryError> {
    if graph.order() > DIRECT_MAX_ORDER {
        return Err(HereditaryError::OrderTooLarge { order: graph.order(), limit: DIRECT_MAX_ORDER });
    }
    Ok(())
}

/// `(γ_r2, γ_R)` of every induced subgraph, indexed by vertex-set bitmask.
fn induced_parameters(graph: &Graph) -> Result<Vec<(usize, usize)>, HereditaryError> {
    (0u64..1 << graph.order())
        .map(|mask| {
            let sub = graph.induced_subgraph(VertexSet::from_bits(mask));
            Ok((gamma_r2(&sub)?.value, gamma_roman(&sub)?.value))
        })
        .collect()
}

/// Solves every induced subgraph and checks `γ_r2 = γ_R` on each.
pub fn hereditary_equality_direct(graph: &Graph) -> Result<bool, HereditaryError> {
    check_direct_order(graph)?;
    Ok(induced_parameters(graph)?.into_iter().all(|(r2, roman)| r2 == roman))
}

/// Membership in `G_k`: every induced subgraph with `γ_r2 >= k` has
/// `2 γ_R = 3 γ_r2`.
pub fn in_gk_direct(graph: &Graph, k: usize) -> Result<bool, HereditaryError> {
    if k == 0 {
        return Err(HereditaryError::NonPositiveK);
    }
    check_direct_order(graph)?;
    Ok(induced_parameters(graph)?.into_iter().all(|(r2, roman)| r2 < k || 2 * roman == 3 * r2))
}

fn branch_rank(c: ColorSet) -> u8 {
    match c {
        ColorSet::Both => 0,
        ColorSet::One => 1,
        ColorSet::Two => 2,
        ColorSet::Empty => 3,
    }
}

/// A minimum 2-rainbow dominating function with as many `{1,2}` vertices as
/// possible; ties go to the lexicographically least in the solver's branch
/// order (`{1,2} < {1} < {2} < ∅`).
pub fn canonical_min_2rdf(graph: &Graph) -> Result<RainbowAssignment, HereditaryError> {
    let all = all_min_2rdf(graph)?;
    let best = all
        .into_iter()
        .min_by_key(|f| {
            let ranks: Vec<u8> = f.colors().iter().map(|&c| branch_rank(c)).collect();
            (std::cmp::Reverse(f.count(ColorSet::Both)), ranks)
        })
        .expect("every graph has a minimum function");
    Ok(best)
}

/// `∅ -> 0`, `{1}` or `{2} -> 1`, `{1,2} -> 2`; keeps the weight.
pub fn weight_preserving_roman(f: &RainbowAssignment) -> RomanAssignment {
    let values = f.colors().iter().map(|c| c.size() as u8).collect();
    RomanAssignment::new(values).expect("sizes are at most 2")
}
