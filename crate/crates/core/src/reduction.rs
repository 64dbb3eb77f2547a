//! The 3-SAT gadget: a connected K4-free graph with `γ_r2 = 2n + 2` whose
//! Roman domination number is `2n + 2` exactly when the formula is
//! satisfiable (and `2n + 3` otherwise).
//!
//! Vertex layout for `n` variables and `m` clauses: variable `i` (0-based)
//! owns `4i..4i+4` as (positive literal, negative literal, filler, filler),
//! clause `j` is `4n + j`, and the path `u v w` ends the numbering.

use std::fmt;

use rand_core::RngCore;
use serde::Serialize;
use thiserror::Error;

use crate::domination::{
    gamma_r2, gamma_roman, is_2rainbow_dominating, is_roman_dominating, ColorSet, DominationError, RainbowAssignment,
    RomanAssignment,
};
use crate::graph::{Graph, GraphError};

/// Largest variable count `sat_brute_force` accepts.
pub const SAT_MAX_VARIABLES: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("missing `p cnf` header")]
    MissingHeader,
    #[error("line {line}: malformed header `{text}`")]
    MalformedHeader { line: usize, text: String },
    #[error("line {line}: malformed literal `{token}`")]
    BadLiteral { line: usize, token: String },
    #[error("literal {literal} out of range for {variables} variables")]
    LiteralOutOfRange { literal: i64, variables: usize },
    #[error("clause {clause} is empty")]
    EmptyClause { clause: usize },
    #[error("clause {clause} has {len} literals; at most 3 are allowed")]
    ClauseTooLong { clause: usize, len: usize },
    #[error("clause {clause} contains a variable and its negation")]
    Tautology { clause: usize },
    #[error("header announces {expected} clauses but {found} were given")]
    ClauseCountMismatch { expected: usize, found: usize },
    #[error("a formula needs at least one variable")]
    NoVariables,
    #[error("the gadget needs at least 2 clauses, got {0}")]
    TooFewClauses(usize),
    #[error("variable x{0} occurs in no clause, so its gadget would be disconnected")]
    UnusedVariable(usize),
    #[error("{variables} variables exceed the brute-force limit of {limit}")]
    TooManyVariables { variables: usize, limit: usize },
    #[error("assignment has {got} values for {expected} variables")]
    AssignmentLength { expected: usize, got: usize },
    #[error("the Roman function is not dominating on the gadget")]
    NotDominating,
    #[error("the Roman function has weight {weight}, expected {expected}")]
    WrongWeight { weight: usize, expected: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Domination(#[from] DominationError),
}

/// A literal: `+i` is `x_i`, `-i` is its negation (variables are 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal(i32);

impl Literal {
    pub fn new(value: i32) -> Option<Literal> {
        (value != 0).then_some(Literal(value))
    }

    pub fn variable(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn value(self) -> i32 {
        self.0
    }

    /// Truth value under `assignment` (indexed by variable - 1).
    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.variable() - 1] == self.is_positive()
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A CNF formula whose clauses have one to three distinct, non-complementary
/// literals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    /// Validates the clauses; repeated literals inside a clause are merged.
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self, ReductionError> {
        if num_vars == 0 {
            return Err(ReductionError::NoVariables);
        }
        let mut out = Vec::with_capacity(clauses.len());
        for (index, raw) in clauses.into_iter().enumerate() {
            let clause = index + 1;
            let mut lits: Vec<Literal> = Vec::with_capacity(raw.len());
            for value in raw {
                let literal = Literal::new(value)
                    .filter(|l| l.variable() <= num_vars)
                    .ok_or(ReductionError::LiteralOutOfRange { literal: value as i64, variables: num_vars })?;
                if lits.contains(&Literal(-value)) {
                    return Err(ReductionError::Tautology { clause });
                }
                if !lits.contains(&literal) {
                    lits.push(literal);
                }
            }
            if lits.is_empty() {
                return Err(ReductionError::EmptyClause { clause });
            }
            if lits.len() > 3 {
                return Err(ReductionError::ClauseTooLong { clause, len: lits.len() });
            }
            out.push(lits);
        }
        Ok(CnfFormula { num_vars, clauses: out })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars && self.clauses.iter().all(|c| c.iter().any(|l| l.eval(assignment)))
    }

    /// The smallest variable that occurs in no clause.
    pub fn unused_variable(&self) -> Option<usize> {
        (1..=self.num_vars).find(|&i| !self.clauses.iter().flatten().any(|l| l.variable() == i))
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for l in clause {
                s.push_str(&format!("{l} "));
            }
            s.push_str("0\n");
        }
        s
    }
}

/// Parses DIMACS CNF. Clauses may span lines; a `%` line ends the input.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, ReductionError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('%') {
            break;
        }
        if trimmed.starts_with('p') {
            let parts: Vec<&str> = trimmed.split_ascii_whitespace().collect();
            let parsed = match parts.as_slice() {
                ["p", "cnf", n, m] if header.is_none() => n.parse().ok().zip(m.parse().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or_else(|| ReductionError::MalformedHeader { line, text: trimmed.to_owned() })?);
            continue;
        }
        if header.is_none() {
            return Err(ReductionError::MissingHeader);
        }
        for token in trimmed.split_ascii_whitespace() {
            let value: i32 = token.parse().map_err(|_| ReductionError::BadLiteral { line, token: token.to_owned() })?;
            if value == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(value);
            }
        }
    }
    let (num_vars, expected) = header.ok_or(ReductionError::MissingHeader)?;
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != expected {
        return Err(ReductionError::ClauseCountMismatch { expected, found: clauses.len() });
    }
    CnfFormula::new(num_vars, clauses)
}

/// What a gadget vertex stands for. Indices are 1-based like the formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexRole {
    PosLiteral(usize),
    NegLiteral(usize),
    Filler(usize, u8),
    Clause(usize),
    U,
    V,
    W,
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VertexRole::PosLiteral(i) => write!(f, "x{i}"),
            VertexRole::NegLiteral(i) => write!(f, "~x{i}"),
            VertexRole::Filler(i, k) => write!(f, "d{i}.{k}"),
            VertexRole::Clause(j) => write!(f, "C{j}"),
            VertexRole::U => f.write_str("u"),
            VertexRole::V => f.write_str("v"),
            VertexRole::W => f.write_str("w"),
        }
    }
}

/// The gadget graph together with the role of each vertex.
#[derive(Debug, Clone)]
pub struct ReductionGraph {
    pub graph: Graph,
    pub roles: Vec<VertexRole>,
    num_vars: usize,
    num_clauses: usize,
}

impl ReductionGraph {
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.num_clauses
    }

    /// Vertex of literal `x_i` (`positive`) or its negation.
    pub fn literal_vertex(&self, variable: usize, positive: bool) -> usize {
        4 * (variable - 1) + usize::from(!positive)
    }

    pub fn clause_vertex(&self, clause: usize) -> usize {
        4 * self.num_vars + clause - 1
    }

    /// The path vertices `(u, v, w)`.
    pub fn path(&self) -> (usize, usize, usize) {
        let u = 4 * self.num_vars + self.num_clauses;
        (u, u + 1, u + 2)
    }

    /// `2n + 2`, the value of `γ_r2` on every gadget.
    pub fn target_weight(&self) -> usize {
        2 * self.num_vars + 2
    }

    /// `{1}` on `u` and every positive literal, `{2}` on `w` and every
    /// negative literal, `∅` elsewhere; weight `2n + 2`.
    pub fn rainbow_certificate(&self) -> RainbowAssignment {
        let (u, _, w) = self.path();
        let colors = (0..self.graph.order())
            .map(|x| match self.roles[x] {
                VertexRole::PosLiteral(_) => ColorSet::One,
                VertexRole::NegLiteral(_) => ColorSet::Two,
                _ if x == u => ColorSet::One,
                _ if x == w => ColorSet::Two,
                _ => ColorSet::Empty,
            })
            .collect();
        RainbowAssignment::new(colors)
    }

    /// 2 on `v` and on every true literal, 0 elsewhere; weight `2n + 2` and
    /// Roman dominating exactly when `assignment` satisfies the formula.
    pub fn roman_from_assignment(&self, assignment: &[bool]) -> Result<RomanAssignment, ReductionError> {
        if assignment.len() != self.num_vars {
            return Err(ReductionError::AssignmentLength { expected: self.num_vars, got: assignment.len() });
        }
        let (_, v, _) = self.path();
        let values = (0..self.graph.order())
            .map(|x| match self.roles[x] {
                VertexRole::PosLiteral(i) if assignment[i - 1] => 2,
                VertexRole::NegLiteral(i) if !assignment[i - 1] => 2,
                _ if x == v => 2,
                _ => 0,
            })
            .collect();
        Ok(RomanAssignment::new(values).expect("values in range"))
    }

    /// 2 on every positive literal and on `u`, 1 on `w`; a Roman dominating
    /// function of weight `2n + 3` for any formula.
    pub fn roman_upper_bound(&self) -> RomanAssignment {
        let (u, _, w) = self.path();
        let values = (0..self.graph.order())
            .map(|x| match self.roles[x] {
                VertexRole::PosLiteral(_) => 2,
                _ if x == u => 2,
                _ if x == w => 1,
                _ => 0,
            })
            .collect();
        RomanAssignment::new(values).expect("values in range")
    }
}

/// Builds the gadget for a formula with at least two clauses in which
/// every variable occurs.
pub fn build_reduction(formula: &CnfFormula) -> Result<ReductionGraph, ReductionError> {
    let (n, m) = (formula.num_vars(), formula.num_clauses());
    if m < 2 {
        return Err(ReductionError::TooFewClauses(m));
    }
    if let Some(unused) = formula.unused_variable() {
        return Err(ReductionError::UnusedVariable(unused));
    }
    let mut graph = Graph::empty(4 * n + m + 3)?;
    let mut roles = Vec::with_capacity(4 * n + m + 3);
    for i in 1..=n {
        let base = 4 * (i - 1);
        roles.extend([
            VertexRole::PosLiteral(i),
            VertexRole::NegLiteral(i),
            VertexRole::Filler(i, 1),
            VertexRole::Filler(i, 2),
        ]);
        for (a, b) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)] {
            graph.add_edge(base + a, base + b)?;
        }
    }
    let (u, v, w) = (4 * n + m, 4 * n + m + 1, 4 * n + m + 2);
    for (j, clause) in formula.clauses().iter().enumerate() {
        let c = 4 * n + j;
        roles.push(VertexRole::Clause(j + 1));
        for lit in clause {
            graph.add_edge(c, 4 * (lit.variable() - 1) + usize::from(!lit.is_positive()))?;
        }
        graph.add_edge(c, u)?;
        graph.add_edge(c, w)?;
    }
    roles.extend([VertexRole::U, VertexRole::V, VertexRole::W]);
    graph.add_edge(u, v)?;
    graph.add_edge(v, w)?;
    let names = roles.iter().map(|r| r.to_string()).collect();
    Ok(ReductionGraph { graph: graph.with_names(names), roles, num_vars: n, num_clauses: m })
}

/// The lexicographically least satisfying assignment (false before true,
/// `x_1` most significant), found by trying all `2^n`.
pub fn sat_brute_force(formula: &CnfFormula) -> Result<Option<Vec<bool>>, ReductionError> {
    let n = formula.num_vars();
    if n > SAT_MAX_VARIABLES {
        return Err(ReductionError::TooManyVariables { variables: n, limit: SAT_MAX_VARIABLES });
    }
    let found = (0u32..1 << n)
        .map(|mask| (0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect::<Vec<bool>>())
        .find(|a| formula.is_satisfied_by(a));
    Ok(found)
}

/// Reads a truth assignment off a Roman function of weight `2n + 2`:
/// `x_i` is true iff its positive literal vertex carries 2.
pub fn extract_assignment(reduction: &ReductionGraph, g: &RomanAssignment) -> Result<Vec<bool>, ReductionError> {
    if !is_roman_dominating(&reduction.graph, g)? {
        return Err(ReductionError::NotDominating);
    }
    let expected = reduction.target_weight();
    if g.weight() != expected {
        return Err(ReductionError::WrongWeight { weight: g.weight(), expected });
    }
    Ok((1..=reduction.num_vars()).map(|i| g.get(reduction.literal_vertex(i, true)) == 2).collect())
}

/// Outcome of building and solving the gadget for one formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub n: usize,
    pub m: usize,
    pub order: usize,
    pub gamma_r2: usize,
    #[serde(rename = "gamma_R")]
    pub gamma_roman: usize,
    pub gap: usize,
    pub satisfiable: bool,
    pub assignment: Option<Vec<bool>>,
    pub consistent: bool,
}

/// Structural facts every gadget must have.
pub fn gadget_is_well_formed(reduction: &ReductionGraph, formula: &CnfFormula) -> bool {
    let g = &reduction.graph;
    let (n, m) = (formula.num_vars(), formula.num_clauses());
    let (u, v, w) = reduction.path();
    let clauses_ok = formula.clauses().iter().enumerate().all(|(j, clause)| {
        let c = reduction.clause_vertex(j + 1);
        let literals: crate::graph::VertexSet =
            clause.iter().map(|l| reduction.literal_vertex(l.variable(), l.is_positive())).collect();
        g.neighbors(c) == literals | crate::graph::VertexSet::from_iter([u, w])
    });
    g.order() == 4 * n + m + 3
        && g.is_connected()
        && g.is_k4_free()
        && g.neighbors(v) == crate::graph::VertexSet::from_iter([u, w])
        && !g.has_edge(u, w)
        && clauses_ok
}

/// Builds the gadget, solves both parameters exactly, runs the SAT oracle
/// and checks every identity the construction promises.
pub fn verify_reduction(formula: &CnfFormula) -> Result<ReductionReport, ReductionError> {
    let reduction = build_reduction(formula)?;
    let satisfiable = sat_brute_force(formula)?.is_some();
    let r2 = gamma_r2(&reduction.graph)?;
    let roman = gamma_roman(&reduction.graph)?;
    let target = reduction.target_weight();

    let assignment = if roman.value == target { Some(extract_assignment(&reduction, &roman.witness)?) } else { None };
    let certificate = reduction.rainbow_certificate();
    let certificate_ok = certificate.weight() == target && is_2rainbow_dominating(&reduction.graph, &certificate)?;
    let upper = reduction.roman_upper_bound();
    let upper_ok = upper.weight() == target + 1 && is_roman_dominating(&reduction.graph, &upper)?;
    let extraction_ok = assignment.as_ref().is_none_or(|a| formula.is_satisfied_by(a));

    let consistent = gadget_is_well_formed(&reduction, formula)
        && certificate_ok
        && upper_ok
        && r2.value == target
        && (roman.value == target || roman.value == target + 1)
        && (roman.value == target) == satisfiable
        && extraction_ok;

    Ok(ReductionReport {
        n: formula.num_vars(),
        m: formula.num_clauses(),
        order: reduction.graph.order(),
        gamma_r2: r2.value,
        gamma_roman: roman.value,
        gap: roman.value.saturating_sub(r2.value),
        satisfiable,
        assignment,
        consistent,
    })
}

fn below(rng: &mut impl RngCore, bound: usize) -> usize {
    (rng.next_u64() % bound as u64) as usize
}

/// A uniform random k-CNF: each clause picks `k` distinct variables and
/// independent signs.
pub fn random_cnf(rng: &mut impl RngCore, num_vars: usize, num_clauses: usize, k: usize) -> CnfFormula {
    assert!(1 <= k && k <= num_vars.min(3), "clause width must be in 1..=min(n, 3)");
    let clauses = (0..num_clauses)
        .map(|_| {
            let mut vars: Vec<usize> = (1..=num_vars).collect();
            // partial Fisher-Yates
            for i in 0..k {
                let j = i + below(rng, num_vars - i);
                vars.swap(i, j);
            }
            vars[..k].iter().map(|&x| if rng.next_u64() & 1 == 1 { x as i32 } else { -(x as i32) }).collect()
        })
        .collect();
    CnfFormula::new(num_vars, clauses).expect("distinct variables form a valid clause")
}
