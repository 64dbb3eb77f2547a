//! Canonical forms for isomorphism rejection on small graphs.
//!
//! The form is the lexicographically least upper-triangle adjacency bit
//! string over all relabellings that list vertices by non-increasing degree.
//! Bits are read column by column, `(0,1), (0,2), (1,2), (0,3), ..`, so a
//! partial labelling of the first `k` positions fixes a prefix of the string
//! and dominated branches can be cut early.

use std::fmt;

use super::{Graph, GraphError};

pub const CANONICAL_MAX_ORDER: usize = 10;

/// Canonical byte string: the order, then the adjacency code as eight
/// big-endian bytes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    fn code(&self) -> u64 {
        u64::from_be_bytes(self.0[1..9].try_into().expect("nine bytes"))
    }

    /// The graph in its canonical labelling.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let total = n * n.saturating_sub(1) / 2;
        let code = self.code();
        let mut g = Graph::empty(n).expect("order within bound");
        let mut bit = 0;
        for v in 1..n {
            for u in 0..v {
                if code >> (total - 1 - bit) & 1 == 1 {
                    g.add_edge(u, v).expect("valid pair");
                }
                bit += 1;
            }
        }
        g
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

struct Search<'a> {
    graph: &'a Graph,
    /// Degree class required at each position.
    slot_degree: Vec<usize>,
    total_bits: usize,
    placed: Vec<usize>,
    best: Option<u64>,
}

impl Search<'_> {
    fn run(&mut self, used: u64, code: u64) {
        let k = self.placed.len();
        let n = self.graph.order();
        if k == n {
            if self.best.is_none_or(|b| code < b) {
                self.best = Some(code);
            }
            return;
        }
        for v in 0..n {
            if used >> v & 1 == 1 || self.graph.degree(v) != self.slot_degree[k] {
                continue;
            }
            let row = self.graph.neighbors(v).bits();
            let mut next = code;
            for &u in &self.placed {
                next = next << 1 | (row >> u & 1);
            }
            let prefix_bits = (k + 1) * k / 2;
            if let Some(best) = self.best {
                let best_prefix = if prefix_bits == 0 { 0 } else { best >> (self.total_bits - prefix_bits) };
                if next > best_prefix {
                    continue;
                }
            }
            self.placed.push(v);
            self.run(used | 1 << v, next);
            self.placed.pop();
        }
    }
}

/// Computes the canonical form; two graphs get equal forms exactly when they
/// are isomorphic.
pub fn canonical_form(graph: &Graph) -> Result<CanonicalForm, GraphError> {
    let n = graph.order();
    if n > CANONICAL_MAX_ORDER {
        return Err(GraphError::OrderTooLarge { order: n, limit: CANONICAL_MAX_ORDER });
    }
    let mut slot_degree: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
    slot_degree.sort_unstable_by(|a, b| b.cmp(a));
    let mut search = Search {
        graph,
        slot_degree,
        total_bits: n * n.saturating_sub(1) / 2,
        placed: Vec::with_capacity(n),
        best: None,
    };
    search.run(0, 0);
    let code = search.best.unwrap_or(0);
    let mut bytes = Vec::with_capacity(9);
    bytes.push(n as u8);
    bytes.extend_from_slice(&code.to_be_bytes());
    Ok(CanonicalForm(bytes))
}
