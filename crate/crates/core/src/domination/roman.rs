//! Exact Roman domination by enumerating the set `V2 = g^{-1}(2)`.
//!
//! Once `V2` is fixed the best completion puts 0 on `N(V2) \ V2` and 1 on
//! every vertex outside `N[V2]`, so a set of size `k` costs
//! `2k + |V \ N[V2]|`. Sets are tried by increasing size and the scan stops
//! as soon as `2k` reaches the incumbent; partial sets are cut when even
//! maximal coverage by the remaining picks cannot beat it.

use super::{check_order, DominationError, RomanAssignment, SolveResult, SOLVER_MAX_ORDER};
use crate::graph::{Graph, VertexSet};

fn cost(graph: &Graph, twos: VertexSet) -> usize {
    2 * twos.len() + graph.order() - graph.closed_neighborhood_of(twos).len()
}

/// Weight of the best prefix of a greedy max-coverage choice of 2-vertices,
/// starting from the all-1 function.
pub(crate) fn greedy_roman_weight(graph: &Graph) -> usize {
    let mut best = graph.order();
    let mut twos = VertexSet::EMPTY;
    let mut covered = VertexSet::EMPTY;
    loop {
        let pick = (0..graph.order())
            .filter(|&v| !twos.contains(v))
            .map(|v| ((graph.closed_neighbors(v) - covered).len(), v))
            .filter(|&(gain, _)| gain >= 2)
            .max_by_key(|&(gain, v)| (gain, std::cmp::Reverse(v)));
        let Some((_, v)) = pick else { break };
        twos.insert(v);
        covered = covered | graph.closed_neighbors(v);
        best = best.min(cost(graph, twos));
    }
    best
}

struct Scan<'g> {
    graph: &'g Graph,
    closed: Vec<u64>,
    incumbent: usize,
    best: Option<VertexSet>,
    nodes: u64,
}

impl Scan<'_> {
    /// Visits the `remaining`-element extensions of `chosen` drawn from
    /// vertices `>= start`, in lexicographic order.
    fn extend(&mut self, start: usize, remaining: usize, chosen: u64, covered: u64) {
        let n = self.graph.order();
        self.nodes += 1;
        if remaining == 0 {
            let size = chosen.count_ones() as usize;
            let weight = 2 * size + n - covered.count_ones() as usize;
            if weight < self.incumbent {
                self.incumbent = weight;
                self.best = Some(VertexSet::from_bits(chosen));
            }
            return;
        }
        // the remaining picks cover at most the sum of their best reaches
        let uncovered = n - covered.count_ones() as usize;
        let mut reach: Vec<usize> = (start..n).map(|v| (self.closed[v] & !covered).count_ones() as usize).collect();
        reach.sort_unstable_by(|a, b| b.cmp(a));
        let coverable: usize = reach.iter().take(remaining).sum();
        let size = chosen.count_ones() as usize + remaining;
        if 2 * size + uncovered.saturating_sub(coverable) >= self.incumbent {
            return;
        }
        for v in start..=n - remaining {
            self.extend(v + 1, remaining - 1, chosen | 1 << v, covered | self.closed[v]);
        }
    }
}

/// `γ_R(G)` with the optimal function whose 2-set is smallest, ties broken
/// lexicographically.
pub fn gamma_roman(graph: &Graph) -> Result<SolveResult<RomanAssignment>, DominationError> {
    check_order(graph, SOLVER_MAX_ORDER)?;
    let n = graph.order();
    let mut scan = Scan {
        graph,
        closed: (0..n).map(|v| graph.closed_neighbors(v).bits()).collect(),
        incumbent: greedy_roman_weight(graph) + 1,
        best: None,
        nodes: 0,
    };
    let mut k = 0;
    while k <= n && 2 * k < scan.incumbent {
        scan.extend(0, k, 0, 0);
        k += 1;
    }
    let twos = scan.best.expect("the greedy weight is attainable");
    Ok(SolveResult { value: scan.incumbent, witness: RomanAssignment::completing(graph, twos), nodes: scan.nodes })
}
