//! Independent check of `γ_r2`: the domination number of the prism `G □ K2`.

use super::{check_order, DominationError};
use crate::graph::Graph;

pub const PRISM_MAX_ORDER: usize = 20;

/// Closed neighbourhoods of `G □ K2`; vertex `v` of layer `l` is `v + l·n`.
fn prism_rows(graph: &Graph) -> Vec<u64> {
    let n = graph.order();
    (0..2 * n)
        .map(|x| {
            let (v, layer) = (x % n, x / n);
            let row = graph.neighbors(v).bits() << (layer * n);
            let twin = if layer == 0 { v + n } else { v };
            row | 1 << x | 1 << twin
        })
        .collect()
}

/// Is there a dominating set of size at most `budget` extending `covered`?
/// Branches on which vertex dominates the lowest undominated vertex.
fn dominate(rows: &[u64], all: u64, covered: u64, budget: usize) -> bool {
    let open = all & !covered;
    if open == 0 {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let x = open.trailing_zeros() as usize;
    let mut options = rows[x];
    while options != 0 {
        let y = options.trailing_zeros() as usize;
        options &= options - 1;
        if dominate(rows, all, covered | rows[y], budget - 1) {
            return true;
        }
    }
    false
}

/// `γ(G □ K2)`, found by trying set sizes `0, 1, 2, ..` in turn.
pub fn gamma_r2_product_check(graph: &Graph) -> Result<usize, DominationError> {
    check_order(graph, PRISM_MAX_ORDER)?;
    let rows = prism_rows(graph);
    let all = if rows.is_empty() { 0 } else { u64::MAX >> (64 - rows.len()) };
    Ok((0..=rows.len()).find(|&k| dominate(&rows, all, 0, k)).expect("the whole vertex set dominates"))
}
