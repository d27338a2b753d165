//! Exhaustive and randomized checks of the combinatorial inequalities behind
//! the theorem bound.
//!
//! Surveys report; they never assert. Work is fanned out with rayon and the
//! per-item results are merged in enumeration (or trial) order, so output is
//! identical for any thread count.

use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{b_of, chain_quantities, psi, theorem_bound};
use crate::decomposition::{synthesize, SymmetrizedDecomposition, SymmetrizedTerm};
use crate::rational::{int, Rational};
use crate::sequence::DegreeSequence;

/// All `d` with `d_0 = 0`, `d_s <= max_socle` and `d <= d^{v,d_s}`, in
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct SequenceEnumerator {
    max_socle: i64,
    current: Option<Vec<i64>>,
}

impl SequenceEnumerator {
    fn advance(&mut self) -> Option<Vec<i64>> {
        let out = self.current.clone()?;
        let s = out.len() - 1;
        let mut next = out.clone();
        let pivot = (1..=s)
            .rev()
            .find(|&p| next[p] < self.max_socle - (s - p) as i64);
        self.current = pivot.map(|p| {
            next[p] += 1;
            for q in p + 1..=s {
                next[q] = next[q - 1] + 1;
            }
            next
        });
        Some(out)
    }
}

impl Iterator for SequenceEnumerator {
    type Item = DegreeSequence;

    fn next(&mut self) -> Option<DegreeSequence> {
        loop {
            let degrees = self.advance()?;
            let d = DegreeSequence::new(degrees).expect("odometer keeps degrees increasing");
            if d.fits_under_dual(d.last()) {
                return Some(d);
            }
        }
    }
}

pub fn enumerate_sequences(s: usize, max_socle: i64) -> SequenceEnumerator {
    let start = (s >= 1 && max_socle >= s as i64).then(|| (0..=s as i64).collect());
    SequenceEnumerator {
        max_socle,
        current: start,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SurveyKind {
    /// `Psi_{d'} <= Psi_d` for comparable pairs below their duals.
    Lemma,
    /// `b_d * Psi_d >= 2`.
    Proposition,
    /// `e <= theorem bound` on random synthesized self-dual tables.
    Theorem,
}

impl SurveyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SurveyKind::Lemma => "lemma",
            SurveyKind::Proposition => "proposition",
            SurveyKind::Theorem => "theorem",
        }
    }
}

impl FromStr for SurveyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lemma" => Ok(SurveyKind::Lemma),
            "prop" | "proposition" => Ok(SurveyKind::Proposition),
            "theorem" => Ok(SurveyKind::Theorem),
            other => Err(format!(
                "unknown check '{other}' (expected lemma, prop or theorem)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quantity {
    pub name: &'static str,
    #[serde(with = "crate::io::rational_string")]
    pub value: Rational,
}

fn q(name: &'static str, value: Rational) -> Quantity {
    Quantity { name, value }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyValue {
    pub sequence: DegreeSequence,
    #[serde(with = "crate::io::rational_string")]
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub sequences: Vec<DegreeSequence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<SymmetrizedDecomposition>,
    pub quantities: Vec<Quantity>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyResult {
    pub check: SurveyKind,
    pub s: usize,
    pub max_socle: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Number of enumerated sequences (or trials for the theorem check).
    pub sequences: usize,
    /// Number of individual inequality checks performed.
    pub checked: usize,
    /// Lemma check only: pairs where equality `Psi_{d'} = Psi_d` holds.
    pub ties: usize,
    /// Proposition check only: `b_d * Psi_d` for every sequence.
    pub values: Vec<SurveyValue>,
    pub violations: Vec<Violation>,
}

impl SurveyResult {
    fn empty(check: SurveyKind, s: usize, max_socle: i64) -> Self {
        Self {
            check,
            s,
            max_socle,
            trials: None,
            seed: None,
            sequences: 0,
            checked: 0,
            ties: 0,
            values: Vec::new(),
            violations: Vec::new(),
        }
    }

    pub fn has_violations(&self) -> bool {
        !self.violations.is_empty()
    }
}

/// For every pair `d < d' <= d'^{v,d_s} < d^{v,d_s}`, checks `Psi_{d'} <= Psi_d`.
pub fn survey_lemma(s: usize, max_socle: i64) -> SurveyResult {
    let all: Vec<DegreeSequence> = enumerate_sequences(s, max_socle).collect();
    let per_sequence: Vec<(usize, usize, Vec<Violation>)> = all
        .par_iter()
        .map(|d| {
            let top = d.last();
            let dual_d = d.dual(top);
            let psi_d = psi(d).expect("enumerated sequences start at 0");
            let mut checked = 0;
            let mut ties = 0;
            let mut violations = Vec::new();
            for other in all.iter().filter(|o| o.last() == top) {
                let dual_other = other.dual(top);
                let hypothesis = d.is_strictly_below(other)
                    && other.is_below(&dual_other)
                    && dual_other.is_strictly_below(&dual_d);
                if !hypothesis {
                    continue;
                }
                checked += 1;
                let psi_other = psi(other).expect("enumerated sequences start at 0");
                if psi_other == psi_d {
                    ties += 1;
                } else if psi_other > psi_d {
                    violations.push(Violation {
                        sequences: vec![d.clone(), other.clone()],
                        decomposition: None,
                        quantities: vec![q("psi_d", psi_d.clone()), q("psi_d_prime", psi_other)],
                    });
                }
            }
            (checked, ties, violations)
        })
        .collect();

    let mut result = SurveyResult::empty(SurveyKind::Lemma, s, max_socle);
    result.sequences = all.len();
    for (checked, ties, violations) in per_sequence {
        result.checked += checked;
        result.ties += ties;
        result.violations.extend(violations);
    }
    result
}

/// Records `b_d * Psi_d` for every enumerated `d`; values below 2 are violations.
pub fn survey_proposition(s: usize, max_socle: i64) -> SurveyResult {
    let all: Vec<DegreeSequence> = enumerate_sequences(s, max_socle).collect();
    let two = int(2);
    let values: Vec<SurveyValue> = all
        .par_iter()
        .map(|d| {
            let value = b_of(d).expect("starts at 0") * psi(d).expect("starts at 0");
            SurveyValue {
                sequence: d.clone(),
                value,
            }
        })
        .collect();

    let mut result = SurveyResult::empty(SurveyKind::Proposition, s, max_socle);
    result.sequences = all.len();
    result.checked = all.len();
    result.violations = values
        .iter()
        .filter(|v| v.value < two)
        .map(|v| Violation {
            sequences: vec![v.sequence.clone()],
            decomposition: None,
            quantities: vec![q("b_psi", v.value.clone())],
        })
        .collect();
    result.values = values;
    result
}

/// Random symmetrized decomposition with `s`-sequences and `N <= max_n`.
///
/// Picks `N` uniformly in `s..=max_n`, then 1 to 5 distinct candidates from
/// [`enumerate_sequences`] (restricted to `d_s = N` when `fixed_socle`),
/// sorts them and drops picks incomparable with the previous kept one.
/// Coefficients are `p/q` with `1 <= p, q <= 100`.
pub fn random_symmetrized_decomposition<R: Rng + ?Sized>(
    rng: &mut R,
    s: usize,
    max_n: i64,
    fixed_socle: bool,
) -> SymmetrizedDecomposition {
    assert!(s >= 1 && max_n >= s as i64, "need s >= 1 and max_n >= s");
    let n = rng.random_range(s as i64..=max_n);
    let candidates: Vec<DegreeSequence> = enumerate_sequences(s, n)
        .filter(|d| !fixed_socle || d.last() == n)
        .collect();
    let count = rng.random_range(1..=candidates.len().min(5));
    let mut picks: Vec<&DegreeSequence> = rand::seq::index::sample(rng, candidates.len(), count)
        .into_iter()
        .map(|i| &candidates[i])
        .collect();
    picks.sort();

    let mut chain: Vec<&DegreeSequence> = Vec::new();
    for d in picks {
        if chain.last().is_none_or(|prev| prev.is_strictly_below(d)) {
            chain.push(d);
        }
    }
    let terms = chain
        .into_iter()
        .map(|d| {
            let p = rng.random_range(1..=100i64);
            let q = rng.random_range(1..=100i64);
            SymmetrizedTerm {
                sequence: d.clone(),
                coefficient: crate::rational::frac(p, q),
                self_dual: d.dual(n) == *d,
            }
        })
        .collect();
    SymmetrizedDecomposition { n, terms }
}

/// Deterministic generator for trial `index` under `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Synthesizes `trials` random self-dual tables (generated in degree zero,
/// all sequences ending at `N`) and compares the multiplicity with the
/// theorem bound.
pub fn survey_theorem(s: usize, max_socle: i64, trials: usize, seed: u64) -> SurveyResult {
    let mut result = SurveyResult::empty(SurveyKind::Theorem, s, max_socle);
    result.trials = Some(trials);
    result.seed = Some(seed);
    if s == 0 || max_socle < s as i64 {
        return result;
    }
    let outcomes: Vec<Option<Violation>> = (0..trials as u64)
        .into_par_iter()
        .map(|index| {
            let mut rng = trial_rng(seed, index);
            let sd = random_symmetrized_decomposition(&mut rng, s, max_socle, true);
            let table = synthesize(&sd).expect("generated decompositions are valid");
            let e = table
                .multiplicity()
                .expect("synthesized tables are Cohen-Macaulay consistent");
            let bound = theorem_bound(&table).expect("generated in degree zero");
            if e <= bound {
                return None;
            }
            let (chain_e, chain_bound) = chain_quantities(&sd).expect("sequences start at 0");
            Some(Violation {
                sequences: sd.terms.iter().map(|t| t.sequence.clone()).collect(),
                quantities: vec![
                    q("e", e.clone()),
                    q("bound", bound),
                    q("chain_e", chain_e),
                    q("chain_bound", chain_bound),
                ],
                decomposition: Some(sd),
            })
        })
        .collect();
    result.sequences = trials;
    result.checked = trials;
    result.violations = outcomes.into_iter().flatten().collect();
    result
}

pub fn run_survey(
    kind: SurveyKind,
    s: usize,
    max_socle: i64,
    trials: usize,
    seed: u64,
) -> SurveyResult {
    match kind {
        SurveyKind::Lemma => survey_lemma(s, max_socle),
        SurveyKind::Proposition => survey_proposition(s, max_socle),
        SurveyKind::Theorem => survey_theorem(s, max_socle, trials, seed),
    }
}
