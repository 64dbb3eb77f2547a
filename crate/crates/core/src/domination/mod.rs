//! 2-rainbow and Roman dominating functions: types, validators and exact
//! solvers.

mod prism;
mod rainbow;
mod roman;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub use prism::{gamma_r2_product_check, PRISM_MAX_ORDER};
pub use rainbow::{all_min_2rdf, gamma_r2, ENUMERATION_MAX_ORDER};
pub use roman::gamma_roman;

/// Largest order accepted by the exact solvers.
pub const SOLVER_MAX_ORDER: usize = crate::graph::MAX_ORDER;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DominationError {
    #[error("assignment has {got} entries but the graph has {expected} vertices")]
    SizeMismatch { expected: usize, got: usize },
    #[error("order {order} exceeds the limit of {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("invalid token `{token}` at position {position}")]
    BadToken { token: String, position: usize },
    #[error("Roman value {0} is not in {{0, 1, 2}}")]
    BadRomanValue(u8),
}

/// A subset of the two colours `{1, 2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum ColorSet {
    Empty = 0,
    One = 1,
    Two = 2,
    Both = 3,
}

impl ColorSet {
    pub const ALL: [ColorSet; 4] = [ColorSet::Empty, ColorSet::One, ColorSet::Two, ColorSet::Both];

    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn from_code(code: u8) -> Option<ColorSet> {
        Self::ALL.get(code as usize).copied()
    }

    /// `|f(v)|`.
    pub fn size(self) -> usize {
        (self as u8).count_ones() as usize
    }

    pub fn has_one(self) -> bool {
        self as u8 & 1 != 0
    }

    pub fn has_two(self) -> bool {
        self as u8 & 2 != 0
    }

    /// Exchanges the colours 1 and 2.
    pub fn swapped(self) -> ColorSet {
        match self {
            ColorSet::One => ColorSet::Two,
            ColorSet::Two => ColorSet::One,
            other => other,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            ColorSet::Empty => ".",
            ColorSet::One => "1",
            ColorSet::Two => "2",
            ColorSet::Both => "12",
        }
    }
}

/// A function `V(G) -> 2^{1,2}`, one colour set per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RainbowAssignment(Vec<ColorSet>);

impl RainbowAssignment {
    pub fn new(colors: Vec<ColorSet>) -> Self {
        RainbowAssignment(colors)
    }

    pub fn from_codes(codes: &[u8]) -> Option<Self> {
        codes.iter().map(|&c| ColorSet::from_code(c)).collect::<Option<Vec<_>>>().map(Self)
    }

    pub fn uniform(len: usize, color: ColorSet) -> Self {
        RainbowAssignment(vec![color; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn colors(&self) -> &[ColorSet] {
        &self.0
    }

    pub fn get(&self, v: usize) -> ColorSet {
        self.0[v]
    }

    pub fn codes(&self) -> Vec<u8> {
        self.0.iter().map(|c| c.code()).collect()
    }

    /// `w(f) = Σ |f(v)|`.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|c| c.size()).sum()
    }

    /// `V_F = f^{-1}(F)`.
    pub fn class(&self, color: ColorSet) -> VertexSet {
        self.0.iter().enumerate().filter(|(_, &c)| c == color).map(|(v, _)| v).collect()
    }

    pub fn count(&self, color: ColorSet) -> usize {
        self.0.iter().filter(|&&c| c == color).count()
    }

    /// Vertices whose set contains colour 1 (resp. 2).
    pub(crate) fn carriers(&self) -> (VertexSet, VertexSet) {
        let ones = self.0.iter().enumerate().filter(|(_, c)| c.has_one()).map(|(v, _)| v).collect();
        let twos = self.0.iter().enumerate().filter(|(_, c)| c.has_two()).map(|(v, _)| v).collect();
        (ones, twos)
    }
}

impl fmt::Display for RainbowAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(c.token())?;
        }
        Ok(())
    }
}

fn tokens(s: &str) -> impl Iterator<Item = (usize, &str)> {
    let s = s.trim();
    let parts: Vec<&str> = if s.is_empty() { Vec::new() } else { s.split(',').collect() };
    parts.into_iter().map(str::trim).enumerate()
}

impl FromStr for RainbowAssignment {
    type Err = DominationError;

    fn from_str(s: &str) -> Result<Self, DominationError> {
        tokens(s)
            .map(|(position, token)| match token {
                "." => Ok(ColorSet::Empty),
                "1" => Ok(ColorSet::One),
                "2" => Ok(ColorSet::Two),
                "12" => Ok(ColorSet::Both),
                _ => Err(DominationError::BadToken { token: token.to_owned(), position }),
            })
            .collect::<Result<_, _>>()
            .map(RainbowAssignment)
    }
}

impl Serialize for RainbowAssignment {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A function `V(G) -> {0, 1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RomanAssignment(Vec<u8>);

impl RomanAssignment {
    pub fn new(values: Vec<u8>) -> Result<Self, DominationError> {
        if let Some(&bad) = values.iter().find(|&&x| x > 2) {
            return Err(DominationError::BadRomanValue(bad));
        }
        Ok(RomanAssignment(values))
    }

    /// 2 on `twos`, 0 on their other neighbours, 1 everywhere else.
    pub fn completing(graph: &Graph, twos: VertexSet) -> Self {
        let covered = graph.closed_neighborhood_of(twos);
        let values = (0..graph.order())
            .map(|v| {
                if twos.contains(v) {
                    2
                } else if covered.contains(v) {
                    0
                } else {
                    1
                }
            })
            .collect();
        RomanAssignment(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn get(&self, v: usize) -> u8 {
        self.0[v]
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }

    /// `g^{-1}(value)`.
    pub fn class(&self, value: u8) -> VertexSet {
        self.0.iter().enumerate().filter(|(_, &x)| x == value).map(|(v, _)| v).collect()
    }
}

impl fmt::Display for RomanAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for RomanAssignment {
    type Err = DominationError;

    fn from_str(s: &str) -> Result<Self, DominationError> {
        tokens(s)
            .map(|(position, token)| match token {
                "0" => Ok(0),
                "1" => Ok(1),
                "2" => Ok(2),
                _ => Err(DominationError::BadToken { token: token.to_owned(), position }),
            })
            .collect::<Result<_, _>>()
            .map(RomanAssignment)
    }
}

impl Serialize for RomanAssignment {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An exact parameter value with one optimal witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult<A> {
    pub value: usize,
    pub witness: A,
    /// Search nodes explored.
    pub nodes: u64,
}

fn check_size(graph: &Graph, len: usize) -> Result<(), DominationError> {
    if graph.order() != len {
        return Err(DominationError::SizeMismatch { expected: graph.order(), got: len });
    }
    Ok(())
}

pub(crate) fn check_order(graph: &Graph, limit: usize) -> Result<(), DominationError> {
    if graph.order() > limit {
        return Err(DominationError::OrderTooLarge { order: graph.order(), limit });
    }
    Ok(())
}

/// Every vertex with `f(u) = ∅` sees both colours in its open neighbourhood.
pub fn is_2rainbow_dominating(graph: &Graph, f: &RainbowAssignment) -> Result<bool, DominationError> {
    check_size(graph, f.len())?;
    let (ones, twos) = f.carriers();
    Ok(f.class(ColorSet::Empty).iter().all(|u| {
        let nb = graph.neighbors(u);
        !(nb & ones).is_empty() && !(nb & twos).is_empty()
    }))
}

/// Every vertex with `g(u) = 0` has a neighbour with value 2.
pub fn is_roman_dominating(graph: &Graph, g: &RomanAssignment) -> Result<bool, DominationError> {
    check_size(graph, g.len())?;
    let twos = g.class(2);
    Ok(g.class(0).iter().all(|u| !(graph.neighbors(u) & twos).is_empty()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn rb(s: &str) -> RainbowAssignment {
        s.parse().unwrap()
    }

    fn rm(s: &str) -> RomanAssignment {
        s.parse().unwrap()
    }

    #[test]
    fn rainbow_validation() {
        let c4 = cycle(4);
        assert!(is_2rainbow_dominating(&c4, &rb("1,.,2,.")).unwrap());
        assert!(!is_2rainbow_dominating(&c4, &rb("1,.,1,.")).unwrap());
        assert!(is_2rainbow_dominating(&c4, &RainbowAssignment::uniform(4, ColorSet::Both)).unwrap());
        assert_eq!(is_2rainbow_dominating(&c4, &rb("1,2")), Err(DominationError::SizeMismatch { expected: 4, got: 2 }));
    }

    #[test]
    fn roman_validation() {
        let c4 = cycle(4);
        assert!(is_roman_dominating(&c4, &rm("2,0,1,0")).unwrap());
        let p3 = path(3);
        assert!(is_roman_dominating(&p3, &rm("0,2,0")).unwrap());
        assert!(!is_roman_dominating(&p3, &rm("0,1,0")).unwrap());
        assert!(is_roman_dominating(&p3, &rm("1,1,1")).unwrap());
        assert!(is_roman_dominating(&c4, &rm("1,1")).is_err());
    }

    #[test]
    fn weights_and_classes() {
        let f = rb("12,.,1,2,1");
        assert_eq!(f.weight(), 5);
        assert_eq!(f.count(ColorSet::One), 2);
        assert_eq!(f.class(ColorSet::Empty), VertexSet::singleton(1));
        let g = rm("2,0,1");
        assert_eq!(g.weight(), 3);
        assert_eq!(g.class(2), VertexSet::singleton(0));
    }

    #[test]
    fn text_format() {
        assert_eq!(rb("12, ., 1,2").to_string(), "12,.,1,2");
        assert_eq!(rb("").len(), 0);
        assert_eq!(rm("").to_string(), "");
        assert_eq!(rm("0,1,2").to_string(), "0,1,2");
        assert!(matches!("1,3".parse::<RainbowAssignment>(), Err(DominationError::BadToken { position: 1, .. })));
        assert!(matches!("0,,1".parse::<RomanAssignment>(), Err(DominationError::BadToken { position: 1, .. })));
        assert_eq!(RomanAssignment::new(vec![0, 3]), Err(DominationError::BadRomanValue(3)));
    }

    #[test]
    fn completion_of_two_set() {
        let p5 = path(5);
        let g = RomanAssignment::completing(&p5, VertexSet::singleton(1));
        assert_eq!(g.values(), &[0, 2, 0, 1, 1]);
        assert!(is_roman_dominating(&p5, &g).unwrap());
    }
}
