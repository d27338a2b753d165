//! Herzog-Kühl pure tables and their symmetrized counterparts.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{BettiError, Result};
use crate::rational::Rational;
use crate::sequence::DegreeSequence;
use crate::table::BettiTable;

/// `beta_i(d) = 1 / prod_{l != i} |d_l - d_i|`.
pub fn pure_value(d: &DegreeSequence, i: usize) -> Rational {
    let degrees = d.degrees();
    let di = degrees[i];
    let denom = degrees
        .iter()
        .enumerate()
        .filter(|&(l, _)| l != i)
        .fold(BigInt::one(), |acc, (_, &dl)| {
            acc * BigInt::from((dl - di).abs())
        });
    Rational::new(BigInt::one(), denom)
}

/// The pure table `beta(d)`, supported exactly on `(i, d_i)`.
pub fn pure_table(d: &DegreeSequence) -> BettiTable {
    let entries: BTreeMap<_, _> = (0..=d.length())
        .map(|i| ((i, d.degrees()[i]), pure_value(d, i)))
        .collect();
    BettiTable::from_map_unchecked(entries)
}

/// `beta_sym(d, N) = beta(d) + beta(d^{v,N})`, requiring `N >= d_0 + d_s`.
///
/// When `d` is its own dual this is `2 * beta(d)`.
pub fn symmetrized_pure_table(d: &DegreeSequence, n: i64) -> Result<BettiTable> {
    let min = d.first() + d.last();
    if n < min {
        return Err(BettiError::InvalidN { n, min });
    }
    Ok(&pure_table(d) + &pure_table(&d.dual(n)))
}
