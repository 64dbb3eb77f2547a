//! Exact 2-rainbow domination by depth-first branch and bound.
//!
//! Every vertex is branched over its four colour sets. Two covering bounds
//! prune the search: empty vertices missing colour `c` must be served by
//! undecided `c`-carriers (the two carrier counts add up to the remaining
//! weight), and every vertex not yet seeing both colours needs a non-empty
//! undecided vertex in its closed neighbourhood.

use super::roman::greedy_roman_weight;
use super::{check_order, ColorSet, DominationError, RainbowAssignment, SolveResult, SOLVER_MAX_ORDER};
use crate::graph::Graph;

/// Largest order for which all minimum functions are listed.
pub const ENUMERATION_MAX_ORDER: usize = 16;

/// Branch order used when optimising: covering codes first.
const OPTIMISE_CODES: [ColorSet; 4] = [ColorSet::Both, ColorSet::One, ColorSet::Two, ColorSet::Empty];

enum Goal {
    Minimise { incumbent: usize, best: Option<Vec<ColorSet>> },
    Collect { limit: usize, found: Vec<RainbowAssignment> },
}

struct Search<'g> {
    graph: &'g Graph,
    closed: Vec<u64>,
    order: Vec<usize>,
    codes: [ColorSet; 4],
    current: Vec<ColorSet>,
    nodes: u64,
    goal: Goal,
}

#[derive(Clone, Copy)]
struct Node {
    depth: usize,
    weight: usize,
    undecided: u64,
    empty: u64,
    /// Open neighbourhoods of the vertices carrying colour 1 / 2.
    seen: [u64; 2],
}

impl Search<'_> {
    /// Largest number of `targets` one undecided vertex can serve through its
    /// closed neighbourhood.
    fn best_reach(&self, undecided: u64, targets: u64) -> u32 {
        let mut best = 0;
        let mut rest = undecided;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            best = best.max((self.closed[x] & targets).count_ones());
        }
        best
    }

    /// Minimum extra weight any completion needs, or `None` if no completion
    /// is valid.
    fn remaining_bound(&self, node: &Node) -> Option<usize> {
        // Per colour: empty vertices still missing c need a c-carrier among
        // their undecided neighbours.
        let mut per_colour = 0;
        for c in 0..2 {
            let needy = node.empty & !node.seen[c];
            if needy == 0 {
                continue;
            }
            let reach = self.best_reach(node.undecided, needy);
            if reach == 0 {
                return None;
            }
            per_colour += needy.count_ones().div_ceil(reach) as usize;
        }
        // Any colour: an undecided vertex not yet seeing both colours is
        // either non-empty itself or has a non-empty undecided neighbour.
        let needy = (node.empty | node.undecided) & !(node.seen[0] & node.seen[1]);
        let mut any = 0;
        if needy != 0 {
            let reach = self.best_reach(node.undecided, needy);
            if reach == 0 {
                return None;
            }
            any = needy.count_ones().div_ceil(reach) as usize;
        }
        Some(per_colour.max(any))
    }

    fn descend(&mut self, node: Node) {
        self.nodes += 1;
        let Some(rest) = self.remaining_bound(&node) else { return };
        let bound = node.weight + rest;
        match &self.goal {
            Goal::Minimise { incumbent, .. } if bound >= *incumbent => return,
            Goal::Collect { limit, .. } if bound > *limit => return,
            _ => {}
        }
        if node.depth == self.order.len() {
            match &mut self.goal {
                Goal::Minimise { incumbent, best } => {
                    *incumbent = node.weight;
                    *best = Some(self.current.clone());
                }
                Goal::Collect { found, .. } => found.push(RainbowAssignment::new(self.current.clone())),
            }
            return;
        }
        let v = self.order[node.depth];
        let bit = 1u64 << v;
        let nb = self.graph.neighbors(v).bits();
        for code in self.codes {
            self.current[v] = code;
            let mut child = node;
            child.depth += 1;
            child.weight += code.size();
            child.undecided &= !bit;
            if code == ColorSet::Empty {
                child.empty |= bit;
            }
            if code.has_one() {
                child.seen[0] |= nb;
            }
            if code.has_two() {
                child.seen[1] |= nb;
            }
            self.descend(child);
        }
        self.current[v] = ColorSet::Empty;
    }

    fn run(graph: &Graph, order: Vec<usize>, codes: [ColorSet; 4], goal: Goal) -> Search<'_> {
        let n = graph.order();
        let mut search = Search {
            graph,
            closed: (0..n).map(|v| graph.closed_neighbors(v).bits()).collect(),
            order,
            codes,
            current: vec![ColorSet::Empty; n],
            nodes: 0,
            goal,
        };
        let root = Node { depth: 0, weight: 0, undecided: graph.vertices().bits(), empty: 0, seen: [0; 2] };
        search.descend(root);
        search
    }
}

/// `γ_r2(G)` with the first optimal function in branch order (vertices by
/// non-increasing degree, codes `{1,2}, {1}, {2}, ∅`).
pub fn gamma_r2(graph: &Graph) -> Result<SolveResult<RainbowAssignment>, DominationError> {
    check_order(graph, SOLVER_MAX_ORDER)?;
    let mut order: Vec<usize> = (0..graph.order()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(graph.degree(v)));
    // A Roman function maps onto a rainbow function of equal weight, so the
    // greedy Roman weight is attainable.
    let goal = Goal::Minimise { incumbent: greedy_roman_weight(graph) + 1, best: None };
    let search = Search::run(graph, order, OPTIMISE_CODES, goal);
    let Goal::Minimise { incumbent, best } = search.goal else { unreachable!() };
    let witness = RainbowAssignment::new(best.expect("an attainable incumbent was supplied"));
    Ok(SolveResult { value: incumbent, witness, nodes: search.nodes })
}

/// Every 2-rainbow dominating function of weight `γ_r2(G)`, in lexicographic
/// order of the code vector (`∅ < {1} < {2} < {1,2}`).
pub fn all_min_2rdf(graph: &Graph) -> Result<Vec<RainbowAssignment>, DominationError> {
    check_order(graph, ENUMERATION_MAX_ORDER)?;
    let gamma = gamma_r2(graph)?.value;
    let order = (0..graph.order()).collect();
    let search = Search::run(graph, order, ColorSet::ALL, Goal::Collect { limit: gamma, found: Vec::new() });
    let Goal::Collect { found, .. } = search.goal else { unreachable!() };
    Ok(found)
}
