//! Rational Betti tables.
//!
//! A table is a finitely supported map `(i, j) -> beta_{i,j}` with strictly
//! positive rational values. Absent keys are zero; zeros are never stored, so
//! structural equality is exact equality of tables.
//!
//! Validity requires the consecutiveness axiom: every nonzero `beta_{i,j}` with
//! `i > 0` has some nonzero `beta_{i-1,j'}` with `j' < j`. Since the minimum of
//! column `i` is the binding case, this is the same as asking that columns
//! `0..=length` are all nonempty and their minimal degrees strictly increase.

use std::collections::BTreeMap;
use std::ops::Add;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{BettiError, Result};
use crate::rational::{factorial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), Rational>,
}

/// Minimal and maximal shifts of every column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftProfile {
    /// Length `s` of the table.
    pub s: usize,
    /// `m_i`, the smallest degree in column `i`.
    pub min: Vec<i64>,
    /// `M_i`, the largest degree in column `i`.
    pub max: Vec<i64>,
    /// `floor(s / 2)`.
    pub k: usize,
    /// `M_s + m_0`, the only candidate for a self-duality degree.
    pub n: i64,
}

impl BettiTable {
    /// Builds a validated table from raw `(i, j, value)` triples.
    ///
    /// Zero values are dropped. Repeated keys are rejected rather than summed.
    pub fn new<I>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, i64, Rational)>,
    {
        let mut entries = BTreeMap::new();
        for (i, j, value) in raw {
            if value.is_negative() {
                return Err(BettiError::NegativeEntry { i, j, value });
            }
            if entries.contains_key(&(i, j)) {
                return Err(BettiError::DuplicateEntry { i, j });
            }
            if !value.is_zero() {
                entries.insert((i, j), value);
            }
        }
        let table = Self { entries };
        table.check_axioms()?;
        Ok(table)
    }

    /// Integer-valued convenience constructor.
    pub fn from_counts(raw: &[(usize, i64, i64)]) -> Result<Self> {
        Self::new(
            raw.iter()
                .map(|&(i, j, v)| (i, j, Rational::from_integer(BigInt::from(v)))),
        )
    }

    pub(crate) fn from_map_unchecked(entries: BTreeMap<(usize, i64), Rational>) -> Self {
        debug_assert!(entries.values().all(|v| v.is_positive()));
        Self { entries }
    }

    pub(crate) fn into_map(self) -> BTreeMap<(usize, i64), Rational> {
        self.entries
    }

    fn check_axioms(&self) -> Result<()> {
        if self.entries.is_empty() {
            return Err(BettiError::EmptyTable);
        }
        let mut prev_min: Option<i64> = None;
        for i in 0..=self.length() {
            let min = self.column(i).next().map(|(j, _)| j);
            let increasing = match (prev_min, min) {
                (_, None) => false,
                (None, Some(_)) => true,
                (Some(p), Some(m)) => p < m,
            };
            if !increasing {
                // report the first entry that lacks a smaller predecessor
                let (ci, cj) = match min {
                    Some(m) => (i, m),
                    None => self
                        .entries
                        .keys()
                        .find(|(ci, _)| *ci > i)
                        .copied()
                        .expect("length bounds a nonempty column"),
                };
                return Err(BettiError::BrokenChain { i: ci, j: cj });
            }
            prev_min = min;
        }
        Ok(())
    }

    /// `max { i : beta_{i,j} != 0 }`.
    pub fn length(&self) -> usize {
        self.entries
            .keys()
            .next_back()
            .map(|(i, _)| *i)
            .unwrap_or(0)
    }

    pub fn get(&self, i: usize, j: i64) -> Option<&Rational> {
        self.entries.get(&(i, j))
    }

    /// `beta_{i,j}`, zero when absent.
    pub fn value(&self, i: usize, j: i64) -> Rational {
        self.get(i, j).cloned().unwrap_or_else(Rational::zero)
    }

    /// Entries ordered by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, &Rational)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    /// Column `i` in increasing degree order.
    pub fn column(&self, i: usize) -> impl Iterator<Item = (i64, &Rational)> {
        self.entries
            .range((i, i64::MIN)..=(i, i64::MAX))
            .map(|(&(_, j), v)| (j, v))
    }

    /// `beta_i = sum_j beta_{i,j}`.
    pub fn column_total(&self, i: usize) -> Rational {
        self.column(i).fold(Rational::zero(), |acc, (_, v)| acc + v)
    }

    pub fn shifts(&self) -> ShiftProfile {
        let s = self.length();
        let (min, max) = (0..=s)
            .map(|i| {
                let mut col = self.column(i).map(|(j, _)| j);
                let lo = col.next().expect("valid tables have no empty columns");
                (lo, col.last().unwrap_or(lo))
            })
            .unzip::<_, _, Vec<_>, Vec<_>>();
        ShiftProfile {
            s,
            k: s / 2,
            n: max[s] + min[0],
            min,
            max,
        }
    }

    /// Peskine-Szpiro functional `sum_{i,j} (-1)^i beta_{i,j} j^l`.
    pub fn ps_functional(&self, l: u32) -> Rational {
        self.entries
            .iter()
            .fold(Rational::zero(), |acc, (&(i, j), v)| {
                let term = v * Rational::from_integer(BigInt::from(j).pow(l));
                if i % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
    }

    /// Hilbert-Samuel multiplicity `(-1)^s PS_s / s!`.
    ///
    /// Refuses when some `PS_l`, `l < s`, is nonzero; see
    /// [`BettiTable::formal_multiplicity`] for the unchecked value.
    pub fn multiplicity(&self) -> Result<Rational> {
        let s = self.length();
        for l in 0..s {
            let value = self.ps_functional(l as u32);
            if !value.is_zero() {
                return Err(BettiError::NotCohenMacaulayConsistent { l, value });
            }
        }
        Ok(self.formal_multiplicity())
    }

    /// `(-1)^s PS_s / s!` without the Cohen-Macaulay check.
    pub fn formal_multiplicity(&self) -> Rational {
        let s = self.length();
        let value = self.ps_functional(s as u32) / Rational::from_integer(factorial(s));
        if s.is_multiple_of(2) {
            value
        } else {
            -value
        }
    }

    pub fn is_cohen_macaulay_consistent(&self) -> bool {
        (0..self.length()).all(|l| self.ps_functional(l as u32).is_zero())
    }

    /// Reflects `(i, j) -> (s - i, N - j)`.
    pub fn dual(&self, s: usize, n: i64) -> Result<Self> {
        let length = self.length();
        if s < length {
            return Err(BettiError::LengthMismatch { length, s });
        }
        let entries = self
            .entries
            .iter()
            .map(|(&(i, j), v)| ((s - i, n - j), v.clone()))
            .collect();
        let table = Self { entries };
        table.check_axioms()?;
        Ok(table)
    }

    /// Returns `Some(N)` when the table is `(length, N)`-self-dual with
    /// `N = M_s + m_0`.
    pub fn self_duality(&self) -> Option<i64> {
        let profile = self.shifts();
        let s = profile.s;
        let reflected_equal = self
            .entries
            .iter()
            .all(|(&(i, j), v)| self.entries.get(&(s - i, profile.n - j)) == Some(v));
        reflected_equal.then_some(profile.n)
    }

    pub fn is_self_dual(&self) -> bool {
        self.self_duality().is_some()
    }

    /// `m_i >= M_{i-1}` for `i = 2..=s`.
    pub fn is_quasi_pure(&self) -> bool {
        let p = self.shifts();
        (2..=p.s).all(|i| p.min[i] >= p.max[i - 1])
    }

    /// Multiplies every entry by a positive scalar.
    ///
    /// # Panics
    ///
    /// Panics if `factor` is not strictly positive.
    pub fn scale(&self, factor: &Rational) -> Self {
        assert!(factor.is_positive(), "scale factor must be positive");
        Self {
            entries: self.entries.iter().map(|(k, v)| (*k, v * factor)).collect(),
        }
    }

    /// Smallest positive multiple with integer entries, and the factor used.
    pub fn clear_denominators(&self) -> (Self, Rational) {
        use num_integer::Integer;
        let (lcm, gcd) = self
            .entries
            .values()
            .fold((BigInt::one(), BigInt::zero()), |(lcm, gcd), v| {
                (lcm.lcm(v.denom()), gcd.gcd(v.numer()))
            });
        let factor = Rational::new(lcm, gcd);
        (self.scale(&factor), factor)
    }
}

/// Entrywise sum; the axioms are preserved because both summands satisfy them.
impl Add for &BettiTable {
    type Output = BettiTable;

    fn add(self, rhs: &BettiTable) -> BettiTable {
        let mut entries = self.entries.clone();
        for (k, v) in &rhs.entries {
            *entries.entry(*k).or_insert_with(Rational::zero) += v;
        }
        BettiTable { entries }
    }
}
