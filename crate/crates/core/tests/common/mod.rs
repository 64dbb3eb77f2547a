//! Brute-force reference implementations, written against plain adjacency
//! lists so they share no logic with the library.

#![allow(dead_code)]

use rainbow_roman::Graph;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

pub fn adjacency(graph: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); graph.order()];
    for (u, v) in graph.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// Digits of `index` in base `base`, least significant first.
fn digits(mut index: u64, base: u64, len: usize) -> Vec<u8> {
    (0..len)
        .map(|_| {
            let d = (index % base) as u8;
            index /= base;
            d
        })
        .collect()
}

/// Codes 0..4 stand for ∅, {1}, {2}, {1,2}.
pub fn naive_is_2rdf(adj: &[Vec<usize>], f: &[u8]) -> bool {
    (0..adj.len()).all(|v| {
        f[v] != 0 || {
            let seen = adj[v].iter().fold(0, |acc, &u| acc | f[u]);
            seen == 3
        }
    })
}

pub fn naive_is_rdf(adj: &[Vec<usize>], g: &[u8]) -> bool {
    (0..adj.len()).all(|v| g[v] != 0 || adj[v].iter().any(|&u| g[u] == 2))
}

fn rainbow_weight(f: &[u8]) -> usize {
    f.iter().map(|&c| c.count_ones() as usize).sum()
}

/// `γ_r2` by trying all `4^n` assignments.
pub fn naive_gamma_r2(graph: &Graph) -> usize {
    naive_min_2rdfs(graph).0
}

/// `γ_r2` and every minimum assignment as code vectors, in increasing
/// lexicographic order of the codes.
pub fn naive_min_2rdfs(graph: &Graph) -> (usize, Vec<Vec<u8>>) {
    let n = graph.order();
    assert!(n <= 9, "naive 2-rainbow search is 4^n");
    let adj = adjacency(graph);
    let mut best = usize::MAX;
    let mut all = Vec::new();
    for index in 0..4u64.pow(n as u32) {
        let f = digits(index, 4, n);
        let w = rainbow_weight(&f);
        if w > best || !naive_is_2rdf(&adj, &f) {
            continue;
        }
        if w < best {
            best = w;
            all.clear();
        }
        all.push(f);
    }
    all.sort();
    (best, all)
}

/// `γ_R` by trying all `3^n` assignments.
pub fn naive_gamma_roman(graph: &Graph) -> usize {
    let n = graph.order();
    assert!(n <= 10, "naive Roman search is 3^n");
    let adj = adjacency(graph);
    (0..3u64.pow(n as u32))
        .map(|index| digits(index, 3, n))
        .filter(|g| naive_is_rdf(&adj, g))
        .map(|g| g.iter().map(|&x| x as usize).sum())
        .min()
        .unwrap_or(0)
}

/// Whether `pattern` embeds as an induced subgraph, by trying every
/// injective map.
pub fn naive_has_induced(graph: &Graph, pattern: &Graph) -> bool {
    fn extend(graph: &Graph, pattern: &Graph, image: &mut Vec<usize>) -> bool {
        let i = image.len();
        if i == pattern.order() {
            return true;
        }
        for v in 0..graph.order() {
            if image.contains(&v) {
                continue;
            }
            if (0..i).all(|j| graph.has_edge(image[j], v) == pattern.has_edge(j, i)) {
                image.push(v);
                if extend(graph, pattern, image) {
                    return true;
                }
                image.pop();
            }
        }
        false
    }
    extend(graph, pattern, &mut Vec::new())
}

/// Smallest adjacency code over all `n!` relabellings.
pub fn naive_certificate(graph: &Graph) -> (usize, u64) {
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    let n = graph.order();
    let edges: Vec<_> = graph.edges().collect();
    let code = permutations(n)
        .into_iter()
        .map(|p| {
            edges.iter().fold(0u64, |acc, &(u, v)| {
                let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                acc | 1 << (a * n + b)
            })
        })
        .min()
        .unwrap_or(0);
    (n, code)
}

pub fn naive_satisfiable(num_vars: usize, clauses: &[Vec<i32>]) -> bool {
    (0u32..1 << num_vars).any(|bits| {
        clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let value = bits >> (lit.unsigned_abs() - 1) & 1 == 1;
                value == (lit > 0)
            })
        })
    })
}

/// A seeded random graph with each edge present with probability 1/2.
pub fn random_graph(rng: &mut SplitMix64, order: usize) -> Graph {
    let mut g = Graph::empty(order).unwrap();
    for u in 0..order {
        for v in u + 1..order {
            if rng.next_u64() & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn rng(seed: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed)
}
