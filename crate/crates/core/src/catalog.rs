//! Small-graph enumeration and the scan that checks every identity over it.
//!
//! Labelled graphs of order `n` are indexed by an edge mask whose bit `i`
//! is the `i`-th pair `(u, v)`, `u < v`, in lexicographic order. Random
//! samples draw one SplitMix64 output per pair in the same order and keep
//! the edge when its top bit is set.

use std::collections::{BTreeMap, BTreeSet};

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::domination::{gamma_r2, gamma_roman, is_2rainbow_dominating, is_roman_dominating, DominationError};
use crate::graph::{canonical_form, CanonicalForm, Graph, GraphError, CANONICAL_MAX_ORDER};
use crate::hereditary::{hereditary_equality_direct, in_gk_direct, is_free, Family, HereditaryError, DIRECT_MAX_ORDER};
use crate::structure::audit_function;
use crate::transfer::{rainbow_to_roman, roman_to_rainbow, TransferError};

/// Largest order for labelled enumeration.
pub const LABELED_MAX_ORDER: usize = 6;
/// Largest order for isomorphism-class enumeration.
pub const DEDUP_MAX_ORDER: usize = 7;
/// Largest order of the exhaustive part of a scan.
pub const SCAN_MAX_ORDER: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("order {order} exceeds the limit of {limit} for {what}")]
    OrderTooLarge { order: usize, limit: usize, what: &'static str },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Domination(#[from] DominationError),
    #[error(transparent)]
    Hereditary(#[from] HereditaryError),
    #[error(transparent)]
    Transfer(#[from] TransferError),
}

fn check(order: usize, limit: usize, what: &'static str) -> Result<(), CatalogError> {
    if order > limit {
        return Err(CatalogError::OrderTooLarge { order, limit, what });
    }
    Ok(())
}

/// Vertex pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn vertex_pairs(order: usize) -> Vec<(usize, usize)> {
    (0..order).flat_map(|u| (u + 1..order).map(move |v| (u, v))).collect()
}

/// The labelled graph with the given edge mask.
pub fn graph_from_mask(order: usize, mask: u64) -> Result<Graph, GraphError> {
    let edges = vertex_pairs(order).into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e);
    Graph::from_edges(order, edges)
}

/// Every labelled graph of the given order, in edge-mask order.
pub fn labeled_graphs(order: usize) -> Result<Vec<Graph>, CatalogError> {
    check(order, LABELED_MAX_ORDER, "labelled enumeration")?;
    let pairs = vertex_pairs(order).len();
    (0u64..1 << pairs).map(|mask| Ok(graph_from_mask(order, mask)?)).collect()
}

/// One representative per isomorphism class, sorted by canonical form.
/// Representatives are the canonically labelled graphs.
pub fn isomorphism_classes(order: usize) -> Result<Vec<(CanonicalForm, Graph)>, CatalogError> {
    check(order, DEDUP_MAX_ORDER, "isomorphism-class enumeration")?;
    let mut forms = BTreeSet::from([canonical_form(&Graph::empty(0)?)?]);
    for n in 1..=order {
        // every graph on n vertices is a graph on n - 1 vertices plus one
        forms = forms
            .par_iter()
            .flat_map_iter(|form| {
                let base = form.to_graph();
                (0u64..1 << (n - 1)).map(move |mask| {
                    let mut g = base.disjoint_union(&Graph::empty(1).expect("tiny")).expect("within limits");
                    for u in 0..n - 1 {
                        if mask >> u & 1 == 1 {
                            g.add_edge(u, n - 1).expect("in range");
                        }
                    }
                    canonical_form(&g).expect("within limits")
                })
            })
            .collect::<BTreeSet<_>>();
    }
    Ok(forms
        .into_iter()
        .map(|f| {
            let g = f.to_graph();
            (f, g)
        })
        .collect())
}

/// Graphs of order `n`: labelled (`n <= 6`) or one per isomorphism class
/// (`n <= 7`), optionally only the connected ones.
pub fn enumerate_graphs(order: usize, dedup: bool, connected_only: bool) -> Result<Vec<Graph>, CatalogError> {
    let all =
        if dedup { isomorphism_classes(order)?.into_iter().map(|(_, g)| g).collect() } else { labeled_graphs(order)? };
    Ok(all.into_iter().filter(|g| !connected_only || g.is_connected()).collect())
}

/// Parameters of a seeded random sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Sample {
    pub order: usize,
    pub count: usize,
    pub seed: u64,
}

/// `count` random graphs of the given order, each edge present with
/// probability 1/2.
pub fn sample_graphs(sample: Sample) -> Result<Vec<Graph>, CatalogError> {
    check(sample.order, crate::graph::MAX_ORDER, "sampling")?;
    let pairs = vertex_pairs(sample.order);
    let mut rng = SplitMix64::seed_from_u64(sample.seed);
    (0..sample.count)
        .map(|_| {
            let edges: Vec<_> = pairs.iter().copied().filter(|_| rng.next_u64() >> 63 == 1).collect();
            Ok(Graph::from_edges(sample.order, edges)?)
        })
        .collect()
}

/// Where a scanned graph came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "index")]
pub enum Source {
    Catalog,
    Sample(usize),
}

/// Counts from auditing every minimum 2-rainbow function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AuditSummary {
    pub functions: usize,
    pub passing: usize,
}

impl AuditSummary {
    pub fn failures(&self) -> usize {
        self.functions - self.passing
    }
}

/// One scanned graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub canonical: String,
    #[serde(skip)]
    pub form: CanonicalForm,
    pub source: Source,
    pub order: usize,
    pub edges: usize,
    pub connected: bool,
    pub gamma_r2: usize,
    #[serde(rename = "gamma_R")]
    pub gamma_roman: usize,
    pub gap: usize,
    pub sandwich_ok: bool,
    pub conversions_ok: bool,
    pub free_of_p5_c5_c4: bool,
    pub free_of_3k1_k2k1: bool,
    pub extremal: bool,
    pub audit: AuditSummary,
    pub hereditary_equal: Option<bool>,
    pub in_g3: Option<bool>,
}

impl ScanRow {
    /// The extremal audit failed on some minimum function.
    pub fn audit_failed(&self) -> bool {
        self.extremal && self.audit.failures() > 0
    }

    /// Non-extremal, yet every minimum function has all five properties.
    pub fn nonextremal_passing(&self) -> bool {
        !self.extremal && self.audit.functions > 0 && self.audit.failures() == 0
    }

    pub fn hereditary_mismatch(&self) -> bool {
        self.hereditary_equal.is_some_and(|eq| eq != self.free_of_p5_c5_c4)
    }

    pub fn g3_mismatch(&self) -> bool {
        self.in_g3.is_some_and(|member| member != self.free_of_3k1_k2k1)
    }
}

/// Solves, converts, classifies and audits one graph.
pub fn scan_graph(graph: &Graph, source: Source) -> Result<ScanRow, CatalogError> {
    check(graph.order(), CANONICAL_MAX_ORDER, "scanning")?;
    let form = canonical_form(graph)?;
    let r2 = gamma_r2(graph)?;
    let roman = gamma_roman(graph)?;
    let (a, b) = (r2.value, roman.value);

    let as_rainbow = roman_to_rainbow(graph, &roman.witness)?;
    let as_roman = rainbow_to_roman(graph, &r2.witness)?;
    let conversions_ok = is_2rainbow_dominating(graph, &as_rainbow)?
        && as_rainbow.weight() == b
        && is_roman_dominating(graph, &as_roman)?
        && as_roman.weight() <= 3 * a / 2;

    let functions = crate::domination::all_min_2rdf(graph)?;
    let passing = functions.iter().filter(|f| audit_function(graph, f).properties.all()).count();

    let direct = graph.order() <= DIRECT_MAX_ORDER;
    Ok(ScanRow {
        canonical: form.to_hex(),
        form,
        source,
        order: graph.order(),
        edges: graph.edge_count(),
        connected: graph.is_connected(),
        gamma_r2: a,
        gamma_roman: b,
        gap: b.saturating_sub(a),
        sandwich_ok: a <= b && b <= 3 * a / 2,
        conversions_ok,
        free_of_p5_c5_c4: is_free(graph, &Family::equality_obstructions())?,
        free_of_3k1_k2k1: is_free(graph, &Family::g3_obstructions())?,
        extremal: 2 * b == 3 * a,
        audit: AuditSummary { functions: functions.len(), passing },
        hereditary_equal: direct.then(|| hereditary_equality_direct(graph)).transpose()?,
        in_g3: direct.then(|| in_gk_direct(graph, 3)).transpose()?,
    })
}

/// Totals over a scan. Histogram keys are order, then gap.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Aggregate {
    pub rows: usize,
    pub gap_histogram: BTreeMap<usize, BTreeMap<usize, usize>>,
    pub sandwich_violations: usize,
    pub gap_above_half: usize,
    pub conversion_violations: usize,
    pub hereditary_mismatches: usize,
    pub g3_mismatches: usize,
    pub extremal_graphs: usize,
    pub audit_failures: usize,
    pub nonextremal_passing: usize,
}

impl Aggregate {
    pub fn from_rows(rows: &[ScanRow]) -> Self {
        let mut agg = Aggregate { rows: rows.len(), ..Default::default() };
        for row in rows {
            *agg.gap_histogram.entry(row.order).or_default().entry(row.gap).or_default() += 1;
            agg.sandwich_violations += usize::from(!row.sandwich_ok);
            agg.gap_above_half += usize::from(row.gap > row.gamma_r2 / 2);
            agg.conversion_violations += usize::from(!row.conversions_ok);
            agg.hereditary_mismatches += usize::from(row.hereditary_mismatch());
            agg.g3_mismatches += usize::from(row.g3_mismatch());
            agg.extremal_graphs += usize::from(row.extremal);
            agg.audit_failures += usize::from(row.audit_failed());
            agg.nonextremal_passing += usize::from(row.nonextremal_passing());
        }
        agg
    }

    /// No identity was violated.
    pub fn is_clean(&self) -> bool {
        self.sandwich_violations == 0
            && self.gap_above_half == 0
            && self.conversion_violations == 0
            && self.hereditary_mismatches == 0
            && self.g3_mismatches == 0
            && self.audit_failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub rows: Vec<ScanRow>,
    pub aggregate: Aggregate,
}

impl GapReport {
    /// One JSON object per row, then `{"aggregate": ..}`.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.push_str(&serde_json::to_string(row).expect("plain data"));
            out.push('\n');
        }
        #[derive(Serialize)]
        struct Tail<'a> {
            aggregate: &'a Aggregate,
        }
        out.push_str(&serde_json::to_string(&Tail { aggregate: &self.aggregate }).expect("plain data"));
        out.push('\n');
        out
    }
}

/// Scans one representative per isomorphism class for every order up to
/// `max_order`, plus each random sample, and sorts the rows by canonical
/// form and source.
pub fn scan(max_order: usize, samples: &[Sample]) -> Result<GapReport, CatalogError> {
    check(max_order, SCAN_MAX_ORDER, "exhaustive scans")?;
    for s in samples {
        check(s.order, CANONICAL_MAX_ORDER, "sampled scans")?;
    }
    let mut corpus = Vec::new();
    for n in 0..=max_order {
        corpus.extend(isomorphism_classes(n)?.into_iter().map(|(_, g)| (g, Source::Catalog)));
    }
    let mut index = 0;
    for &s in samples {
        for g in sample_graphs(s)? {
            corpus.push((g, Source::Sample(index)));
            index += 1;
        }
    }
    let mut rows = corpus.par_iter().map(|(g, source)| scan_graph(g, *source)).collect::<Result<Vec<_>, _>>()?;
    rows.sort_by(|x, y| (&x.form, x.source).cmp(&(&y.form, y.source)));
    let aggregate = Aggregate::from_rows(&rows);
    Ok(GapReport { rows, aggregate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn labeled_counts_and_order() {
        assert_eq!(labeled_graphs(3).unwrap().len(), 8);
        assert_eq!(labeled_graphs(0).unwrap().len(), 1);
        let g = labeled_graphs(3).unwrap();
        assert_eq!(g[1].edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(g[4].edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert!(g[7].is_complete());
        assert!(matches!(labeled_graphs(7), Err(CatalogError::OrderTooLarge { .. })));
    }

    #[test]
    fn class_counts() {
        let counts: Vec<_> = (1..=5).map(|n| enumerate_graphs(n, true, false).unwrap().len()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34]);
        assert_eq!(enumerate_graphs(4, true, true).unwrap().len(), 6);
        assert!(matches!(enumerate_graphs(8, true, false), Err(CatalogError::OrderTooLarge { .. })));
    }

    #[test]
    fn order_three_classes() {
        let classes = enumerate_graphs(3, true, false).unwrap();
        let edges: Vec<_> = classes.iter().map(Graph::edge_count).collect();
        assert_eq!(edges.iter().copied().collect::<BTreeSet<_>>(), BTreeSet::from([0, 1, 2, 3]));
        assert!(classes.contains(&named::complete(3)));
    }

    #[test]
    fn samples_are_reproducible() {
        let s = Sample { order: 8, count: 20, seed: 42 };
        assert_eq!(sample_graphs(s).unwrap(), sample_graphs(s).unwrap());
        assert_ne!(sample_graphs(s).unwrap(), sample_graphs(Sample { seed: 43, ..s }).unwrap());
    }

    #[test]
    fn small_scan() {
        let report = scan(4, &[]).unwrap();
        let order4 = report.rows.iter().filter(|r| r.order == 4).count();
        assert_eq!(order4, 11);
        assert_eq!(report.aggregate.rows, 1 + 1 + 2 + 4 + 11);
        assert!(report.aggregate.is_clean());
        assert!(report.rows.windows(2).all(|w| w[0].form <= w[1].form));
        let c4 = report.rows.iter().find(|r| r.form == canonical_form(&named::cycle(4)).unwrap()).unwrap();
        assert_eq!((c4.gamma_r2, c4.gamma_roman, c4.gap, c4.extremal), (2, 3, 1, true));
        assert_eq!(c4.hereditary_equal, Some(false));
    }

    #[test]
    fn jsonl_layout() {
        let report = scan(2, &[Sample { order: 3, count: 2, seed: 1 }]).unwrap();
        let text = report.to_jsonl();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), report.rows.len() + 1);
        let last: serde_json::Value = serde_json::from_str(lines.last().unwrap()).unwrap();
        assert_eq!(last["aggregate"]["rows"], 6);
        let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(first["source"]["kind"], "catalog");
        assert!(first.get("gamma_R").is_some());
    }
}
