//! Conversions between Roman and 2-rainbow dominating functions.
//!
//! `roman_to_rainbow` keeps the weight exactly; `rainbow_to_roman` first
//! makes colour 1 the majority singleton colour and then pays at most
//! `⌊3 w(f) / 2⌋`.

use thiserror::Error;

use crate::domination::{
    is_2rainbow_dominating, is_roman_dominating, ColorSet, DominationError, RainbowAssignment, RomanAssignment,
};
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransferError {
    #[error(transparent)]
    Domination(#[from] DominationError),
    #[error("input is not a Roman dominating function")]
    NotRoman,
    #[error("input is not a 2-rainbow dominating function")]
    NotRainbow,
}

/// `0 -> ∅`, `1 -> {1}`, `2 -> {1,2}`.
pub fn roman_to_rainbow(graph: &Graph, g: &RomanAssignment) -> Result<RainbowAssignment, TransferError> {
    if !is_roman_dominating(graph, g)? {
        return Err(TransferError::NotRoman);
    }
    let colors = g
        .values()
        .iter()
        .map(|&x| match x {
            0 => ColorSet::Empty,
            1 => ColorSet::One,
            _ => ColorSet::Both,
        })
        .collect();
    Ok(RainbowAssignment::new(colors))
}

/// Exchanges the singleton colours `{1}` and `{2}`.
pub fn swap_colors(f: &RainbowAssignment) -> RainbowAssignment {
    RainbowAssignment::new(f.colors().iter().map(|c| c.swapped()).collect())
}

/// Swaps colours only when `{2}` is strictly more frequent than `{1}`.
pub fn normalize_colors(f: &RainbowAssignment) -> RainbowAssignment {
    if f.count(ColorSet::Two) > f.count(ColorSet::One) {
        swap_colors(f)
    } else {
        f.clone()
    }
}

/// After normalising, `∅ -> 0`, `{1} -> 1`, anything else `-> 2`.
pub fn rainbow_to_roman(graph: &Graph, f: &RainbowAssignment) -> Result<RomanAssignment, TransferError> {
    if !is_2rainbow_dominating(graph, f)? {
        return Err(TransferError::NotRainbow);
    }
    let values = normalize_colors(f)
        .colors()
        .iter()
        .map(|c| match c {
            ColorSet::Empty => 0,
            ColorSet::One => 1,
            _ => 2,
        })
        .collect();
    Ok(RomanAssignment::new(values).expect("values in range"))
}

/// The three terms of the weight chain for `rainbow_to_roman(f)`, with `f`
/// already normalised: the exact Roman weight, then the value after
/// replacing the singleton terms by `3/2` each, then after replacing the
/// `{1,2}` term by 3. Values are doubled to stay integral.
pub fn doubled_weight_chain(f: &RainbowAssignment) -> [usize; 3] {
    let f = normalize_colors(f);
    let (ones, twos, both) = (f.count(ColorSet::One), f.count(ColorSet::Two), f.count(ColorSet::Both));
    [2 * (ones + 2 * twos + 2 * both), 3 * (ones + twos) + 4 * both, 3 * (ones + twos) + 6 * both]
}
