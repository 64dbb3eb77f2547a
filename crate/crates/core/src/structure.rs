//! Graphs with `γ_R = 3/2 γ_r2` and the five structural properties every
//! minimum 2-rainbow dominating function of such a graph must have.
//!
//! With `V_F = f^{-1}(F)`:
//!
//! 1. `|V_{1}| = |V_{2}|` and `V_{1,2}` is empty;
//! 2. no edge joins `V_{1}` and `V_{2}`;
//! 3. `G[V_{i}]` has maximum degree at most 1;
//! 4. every empty vertex has one or two neighbours in each `V_{i}`;
//! 5. every `u` in `V_{i}` has at least two empty neighbours whose only
//!    neighbour in `V_{i}` is `u`.

use serde::Serialize;
use thiserror::Error;

use crate::domination::{all_min_2rdf, gamma_r2, gamma_roman, ColorSet, DominationError, RainbowAssignment};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("graph is not extremal: γ_r2 = {gamma_r2}, γ_R = {gamma_roman}")]
    NotExtremal { gamma_r2: usize, gamma_roman: usize },
    #[error(transparent)]
    Domination(#[from] DominationError),
}

/// `2 γ_R(G) = 3 γ_r2(G)`.
pub fn is_extremal(graph: &Graph) -> Result<bool, DominationError> {
    Ok(2 * gamma_roman(graph)?.value == 3 * gamma_r2(graph)?.value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PropertyChecks {
    pub i: bool,
    pub ii: bool,
    pub iii: bool,
    pub iv: bool,
    pub v: bool,
}

impl PropertyChecks {
    pub fn all(&self) -> bool {
        self.i && self.ii && self.iii && self.iv && self.v
    }
}

/// `|P(u)|` for `u` in `V_{color}`, where `P(u)` is the set of empty
/// vertices whose only `V_{color}` neighbour is `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrivateCount {
    pub vertex: usize,
    pub color: u8,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureAudit {
    pub assignment: RainbowAssignment,
    /// `V_∅, V_{1}, V_{2}, V_{1,2}`, indexed by colour-set code.
    #[serde(skip)]
    pub classes: [VertexSet; 4],
    #[serde(skip)]
    pub counts: [usize; 4],
    pub properties: PropertyChecks,
    pub private_counts: Vec<PrivateCount>,
}

impl StructureAudit {
    pub fn class(&self, color: ColorSet) -> VertexSet {
        self.classes[color.code() as usize]
    }
}

/// Evaluates the five properties on one function, extremal or not.
pub fn audit_function(graph: &Graph, f: &RainbowAssignment) -> StructureAudit {
    let classes = ColorSet::ALL.map(|c| f.class(c));
    let counts = classes.map(|s| s.len());
    let empty = classes[0];
    let singles = [classes[1], classes[2]];

    let i = counts[1] == counts[2] && counts[3] == 0;
    let ii = singles[0].iter().all(|u| (graph.neighbors(u) & singles[1]).is_empty());
    let iii = singles.iter().all(|&side| side.iter().all(|u| (graph.neighbors(u) & side).len() <= 1));
    let iv = empty.iter().all(|v| singles.iter().all(|&side| (1..=2).contains(&(graph.neighbors(v) & side).len())));

    let mut private_counts = Vec::new();
    for (index, &side) in singles.iter().enumerate() {
        for u in side {
            let count = (graph.neighbors(u) & empty)
                .iter()
                .filter(|&v| graph.neighbors(v) & side == VertexSet::singleton(u))
                .count();
            private_counts.push(PrivateCount { vertex: u, color: index as u8 + 1, count });
        }
    }
    private_counts.sort_by_key(|p| (p.vertex, p.color));
    let v = private_counts.iter().all(|p| p.count >= 2);

    StructureAudit {
        assignment: f.clone(),
        classes,
        counts,
        properties: PropertyChecks { i, ii, iii, iv, v },
        private_counts,
    }
}

/// Audits every minimum 2-rainbow dominating function of an extremal graph.
pub fn audit_extremal(graph: &Graph) -> Result<Vec<StructureAudit>, StructureError> {
    let r2 = gamma_r2(graph)?.value;
    let roman = gamma_roman(graph)?.value;
    if 2 * roman != 3 * r2 {
        return Err(StructureError::NotExtremal { gamma_r2: r2, gamma_roman: roman });
    }
    Ok(all_min_2rdf(graph)?.iter().map(|f| audit_function(graph, f)).collect())
}

/// The JSON audit document.
#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub graph: Graph,
    pub gamma_r2: usize,
    #[serde(rename = "gamma_R")]
    pub gamma_roman: usize,
    pub functions: Vec<StructureAudit>,
}

impl AuditReport {
    pub fn failures(&self) -> usize {
        self.functions.iter().filter(|a| !a.properties.all()).count()
    }
}

pub fn audit_report(graph: &Graph) -> Result<AuditReport, StructureError> {
    let functions = audit_extremal(graph)?;
    Ok(AuditReport {
        graph: graph.clone(),
        gamma_r2: gamma_r2(graph)?.value,
        gamma_roman: gamma_roman(graph)?.value,
        functions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn extremality() {
        assert!(is_extremal(&cycle(4)).unwrap());
        assert!(!is_extremal(&complete(1)).unwrap());
        assert!(!is_extremal(&path(5)).unwrap());
        assert!(is_extremal(&empty(0)).unwrap());
    }

    #[test]
    fn c4_audit() {
        let f: RainbowAssignment = "1,.,2,.".parse().unwrap();
        let audit = audit_function(&cycle(4), &f);
        assert!(audit.properties.all());
        assert_eq!(audit.counts, [2, 1, 1, 0]);
        assert_eq!(
            audit.private_counts,
            vec![PrivateCount { vertex: 0, color: 1, count: 2 }, PrivateCount { vertex: 2, color: 2, count: 2 }]
        );
        let audits = audit_extremal(&cycle(4)).unwrap();
        assert!(audits.iter().any(|a| a.assignment == f));
        assert!(audits.iter().all(|a| a.properties.all()));
    }

    #[test]
    fn two_c4_audit() {
        let g = cycle(4).disjoint_union(&cycle(4)).unwrap();
        let report = audit_report(&g).unwrap();
        assert_eq!((report.gamma_r2, report.gamma_roman), (4, 6));
        assert!(!report.functions.is_empty());
        assert_eq!(report.failures(), 0);
    }

    #[test]
    fn rejects_non_extremal() {
        assert_eq!(audit_extremal(&path(5)).unwrap_err(), StructureError::NotExtremal { gamma_r2: 3, gamma_roman: 4 });
    }

    #[test]
    fn properties_fail_where_expected() {
        // K2 with {1},{2}: the two singleton classes are adjacent
        let audit = audit_function(&complete(2), &"1,2".parse().unwrap());
        assert!(audit.properties.i && !audit.properties.ii && !audit.properties.v);
        // {1,2} present breaks (i)
        let audit = audit_function(&path(3), &".,12,.".parse().unwrap());
        assert!(!audit.properties.i);
        // centre of K_{1,3} sees three {1} leaves
        let audit = audit_function(&star(3), &".,1,1,1".parse().unwrap());
        assert!(!audit.properties.iv && !audit.properties.i);
    }

    #[test]
    fn report_json_shape() {
        let report = audit_report(&cycle(4)).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["gamma_R"], 3);
        let first = &json["functions"][0];
        assert!(first["assignment"].is_string());
        assert_eq!(first["properties"].as_object().unwrap().len(), 5);
        assert!(first["private_counts"].is_array());
    }
}
