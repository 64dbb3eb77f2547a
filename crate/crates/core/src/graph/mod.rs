//! Simple undirected graphs on at most 64 vertices, stored as one machine
//! word of adjacency bits per vertex.

mod canon;
mod io;

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};
use std::str::FromStr;

use thiserror::Error;

pub use canon::{canonical_form, CanonicalForm, CANONICAL_MAX_ORDER};
pub use io::{parse_edge_list, ParseError};

/// Largest order any [`Graph`] may have.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("order {order} exceeds the limit of {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("unknown graph constructor `{0}`")]
    UnknownConstructor(String),
    #[error("{name} expects {expected} parameter(s), got {got}")]
    WrongParameterCount { name: &'static str, expected: usize, got: usize },
    #[error("{name} parameter {value} is below the minimum {min}")]
    ParameterBelowMinimum { name: &'static str, value: usize, min: usize },
}

/// A set of vertices of one graph, as a bitmask over vertex indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// The set `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A finite simple undirected graph on vertices `0..order`.
///
/// Vertex names are display metadata only; equality compares the order and
/// the adjacency rows.
#[derive(Clone)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
    names: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("order", &self.order).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

impl Graph {
    /// The edgeless graph of the given order.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { order, limit: MAX_ORDER });
        }
        Ok(Graph { order, adj: vec![0; order], names: None })
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.order {
                return Err(GraphError::VertexOutOfRange { vertex: x, order: self.order });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.order, "one name per vertex");
        self.names = Some(names);
        self
    }

    pub fn name(&self, v: usize) -> Option<&str> {
        self.names.as_ref().map(|n| n[v].as_str())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    /// Union of closed neighbourhoods of the members of `set`.
    pub fn closed_neighborhood_of(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(set, |acc, v| acc | self.neighbors(v))
    }

    pub fn adjacency_rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            let higher = self.adj[u] & !VertexSet::full(u + 1).0;
            VertexSet(higher).iter().map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        (0..self.order).all(|v| self.degree(v) + 1 == self.order)
    }

    /// `G[S]`, relabelled `0..|S|` in ascending order of `S`.
    pub fn induced_subgraph(&self, subset: VertexSet) -> Graph {
        debug_assert!(subset.is_subset(self.vertices()));
        let members: Vec<usize> = subset.iter().collect();
        let adj = members
            .iter()
            .map(|&u| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.adj[u] >> v & 1 == 1)
                    .fold(0u64, |row, (j, _)| row | 1 << j)
            })
            .collect();
        let names = self.names.as_ref().map(|names| members.iter().map(|&v| names[v].clone()).collect());
        Graph { order: members.len(), adj, names }
    }

    /// `G ∪ H` with the vertices of `H` shifted past those of `G`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let order = self.order + other.order;
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { order, limit: MAX_ORDER });
        }
        let shift = self.order;
        let adj = self.adj.iter().copied().chain(other.adj.iter().map(|row| row << shift)).collect();
        Ok(Graph { order, adj, names: None })
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut unseen = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = unseen.min() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let reach = frontier.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.neighbors(v));
                frontier = reach - comp;
                comp = comp | reach;
            }
            unseen = unseen - comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order >= 1 && self.components().len() == 1
    }

    /// True when no four vertices are pairwise adjacent.
    pub fn is_k4_free(&self) -> bool {
        for (u, v) in self.edges() {
            let common = self.neighbors(u) & self.neighbors(v);
            if common.iter().any(|w| !(self.neighbors(w) & common).is_empty()) {
                return false;
            }
        }
        true
    }

    /// Applies `perm` (old vertex `v` becomes `perm[v]`).
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order);
        let mut adj = vec![0u64; self.order];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph { order: self.order, adj, names: None }
    }
}

/// The named graph families the toolkit can build directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    Path,
    Cycle,
    Complete,
    Empty,
    Star,
    Diamond,
}

impl FromStr for NamedGraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        Ok(match s {
            "path" => NamedGraph::Path,
            "cycle" => NamedGraph::Cycle,
            "complete" => NamedGraph::Complete,
            "empty" => NamedGraph::Empty,
            "star" => NamedGraph::Star,
            "diamond" => NamedGraph::Diamond,
            other => return Err(GraphError::UnknownConstructor(other.to_owned())),
        })
    }
}

impl NamedGraph {
    fn name(self) -> &'static str {
        match self {
            NamedGraph::Path => "path",
            NamedGraph::Cycle => "cycle",
            NamedGraph::Complete => "complete",
            NamedGraph::Empty => "empty",
            NamedGraph::Star => "star",
            NamedGraph::Diamond => "diamond",
        }
    }

    fn arity(self) -> usize {
        match self {
            NamedGraph::Diamond => 0,
            _ => 1,
        }
    }

    fn minimum(self) -> usize {
        match self {
            NamedGraph::Path | NamedGraph::Star => 1,
            NamedGraph::Cycle => 3,
            _ => 0,
        }
    }

    /// Builds the graph. The star has its centre at vertex 0; the diamond has
    /// its adjacent degree-3 pair at 0 and 1 and its non-adjacent pair at 2
    /// and 3.
    pub fn build(self, params: &[usize]) -> Result<Graph, GraphError> {
        if params.len() != self.arity() {
            return Err(GraphError::WrongParameterCount {
                name: self.name(),
                expected: self.arity(),
                got: params.len(),
            });
        }
        if let Some(&value) = params.first() {
            if value < self.minimum() {
                return Err(GraphError::ParameterBelowMinimum { name: self.name(), value, min: self.minimum() });
            }
        }
        match self {
            NamedGraph::Path => {
                let n = params[0];
                Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
            }
            NamedGraph::Cycle => {
                let n = params[0];
                Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
            }
            NamedGraph::Complete => {
                let n = params[0];
                Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            NamedGraph::Empty => Graph::empty(params[0]),
            NamedGraph::Star => {
                let leaves = params[0];
                Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
            }
            NamedGraph::Diamond => Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        }
    }
}

/// Builds a named graph from its constructor name and parameters.
pub fn make_named(name: &str, params: &[usize]) -> Result<Graph, GraphError> {
    name.parse::<NamedGraph>()?.build(params)
}

/// Convenience constructors for the small graphs used throughout.
pub mod named {
    use super::{Graph, NamedGraph};

    pub fn path(n: usize) -> Graph {
        NamedGraph::Path.build(&[n]).expect("valid path order")
    }

    pub fn cycle(n: usize) -> Graph {
        NamedGraph::Cycle.build(&[n]).expect("valid cycle order")
    }

    pub fn complete(n: usize) -> Graph {
        NamedGraph::Complete.build(&[n]).expect("valid complete order")
    }

    pub fn empty(n: usize) -> Graph {
        NamedGraph::Empty.build(&[n]).expect("valid order")
    }

    pub fn star(leaves: usize) -> Graph {
        NamedGraph::Star.build(&[leaves]).expect("valid leaf count")
    }

    pub fn diamond() -> Graph {
        NamedGraph::Diamond.build(&[]).expect("fixed graph")
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn degree_sequence(g: &Graph) -> Vec<usize> {
        let mut d: Vec<_> = (0..g.order()).map(|v| g.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    #[test]
    fn named_constructors() {
        let c4 = make_named("cycle", &[4]).unwrap();
        assert_eq!((c4.order(), c4.edge_count()), (4, 4));

        let d = make_named("diamond", &[]).unwrap();
        assert_eq!((d.order(), d.edge_count()), (4, 5));
        assert_eq!(degree_sequence(&d), vec![3, 3, 2, 2]);
        assert!(!d.has_edge(2, 3));
        assert!(d.has_edge(0, 1));

        let s = make_named("star", &[3]).unwrap();
        assert_eq!(s.neighbors(0), VertexSet::from_iter([1, 2, 3]));
        assert_eq!(s.edge_count(), 3);
    }

    #[test]
    fn constructor_errors() {
        assert!(matches!(make_named("wheel", &[5]), Err(GraphError::UnknownConstructor(_))));
        assert!(matches!(make_named("cycle", &[2]), Err(GraphError::ParameterBelowMinimum { .. })));
        assert!(matches!(make_named("path", &[0]), Err(GraphError::ParameterBelowMinimum { .. })));
        assert!(matches!(make_named("star", &[0]), Err(GraphError::ParameterBelowMinimum { .. })));
        assert!(matches!(make_named("diamond", &[1]), Err(GraphError::WrongParameterCount { .. })));
        assert!(matches!(Graph::empty(65), Err(GraphError::OrderTooLarge { .. })));
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = cycle(5);
        assert_eq!(c5.induced_subgraph(VertexSet::from_iter([0, 1, 2, 3])), path(4));
        assert_eq!(c5.induced_subgraph(c5.vertices()), c5);
        let d = diamond();
        assert_eq!(d.induced_subgraph(VertexSet::from_iter([2, 3])), empty(2));
        // relabelling preserves ascending order
        let p = path(4).induced_subgraph(VertexSet::from_iter([1, 2, 3]));
        assert_eq!(p, path(3));
    }

    #[test]
    fn disjoint_unions() {
        assert_eq!(complete(1).disjoint_union(&complete(1)).unwrap(), empty(2));
        let two = cycle(4).disjoint_union(&cycle(4)).unwrap();
        assert_eq!((two.order(), two.edge_count(), two.components().len()), (8, 8, 2));
        assert_eq!(c4_plus_nothing(), cycle(4));
    }

    fn c4_plus_nothing() -> Graph {
        cycle(4).disjoint_union(&empty(0)).unwrap()
    }

    #[test]
    fn components_and_connectivity() {
        assert!(cycle(4).is_connected());
        let g = complete(2).disjoint_union(&complete(1)).unwrap();
        assert_eq!(g.components(), vec![VertexSet::from_iter([0, 1]), VertexSet::singleton(2)]);
        assert_eq!(empty(3).components().len(), 3);
        assert!(!empty(0).is_connected());
        assert!(complete(1).is_connected());
    }

    #[test]
    fn k4_detection() {
        assert!(!complete(4).is_k4_free());
        assert!(diamond().is_k4_free());
        assert!(complete(3).is_k4_free());
        assert!(!complete(5).is_k4_free());
    }

    #[test]
    fn edges_are_sorted() {
        let g = Graph::from_edges(4, [(3, 2), (1, 0), (0, 3)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (2, 3)]);
    }
}
