use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{BettiError, Result};

/// A strictly increasing integer tuple `d_0 < d_1 < ... < d_s` with `s >= 1`.
///
/// The derived `Ord` is lexicographic and is only used for sorting and
/// deterministic output. The componentwise partial order on sequences is
/// exposed through [`DegreeSequence::is_below`] and
/// [`DegreeSequence::is_strictly_below`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<i64>);

impl DegreeSequence {
    pub fn new(degrees: Vec<i64>) -> Result<Self> {
        if degrees.len() < 2 {
            return Err(BettiError::InvalidSequence {
                degrees,
                reason: "length must be at least 1",
            });
        }
        if degrees.windows(2).any(|w| w[0] >= w[1]) {
            return Err(BettiError::InvalidSequence {
                degrees,
                reason: "degrees must be strictly increasing",
            });
        }
        Ok(Self(degrees))
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    /// The length `s` (one less than the number of degrees).
    pub fn length(&self) -> usize {
        self.0.len() - 1
    }

    pub fn first(&self) -> i64 {
        self.0[0]
    }

    pub fn last(&self) -> i64 {
        self.0[self.0.len() - 1]
    }

    /// `d^{v,N} = (N - d_s, ..., N - d_0)`. An involution for fixed `n`.
    pub fn dual(&self, n: i64) -> Self {
        Self(self.0.iter().rev().map(|d| n - d).collect())
    }

    /// Componentwise `self_i <= other_i` for every `i`. False for different lengths.
    pub fn is_below(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self < other`: below and not equal.
    pub fn is_strictly_below(&self, other: &Self) -> bool {
        self.is_below(other) && self != other
    }

    /// True when `N >= d_i + d_{s-i}` for every `i`, i.e. `d <= d^{v,N}`.
    pub fn fits_under_dual(&self, n: i64) -> bool {
        self.is_below(&self.dual(n))
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (idx, d) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

/// Accepts `0,2,4,8` and `(0,2,4,8)`.
impl FromStr for DegreeSequence {
    type Err = BettiError;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('(')
            .and_then(|rest| rest.strip_suffix(')'))
            .unwrap_or(inner);
        let degrees = inner
            .split(',')
            .map(|part| part.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| BettiError::InvalidSequence {
                degrees: Vec::new(),
                reason: "expected comma separated integers",
            })?;
        Self::new(degrees)
    }
}

impl<'de> Deserialize<'de> for DegreeSequence {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let degrees = Vec::<i64>::deserialize(deserializer)?;
        Self::new(degrees).map_err(serde::de::Error::custom)
    }
}
