//! Greedy Boij-Söderberg decomposition along a chain of degree sequences,
//! and its symmetrized form for self-dual tables.
//!
//! The greedy step takes `d` to be the minimal shifts of the current
//! remainder, subtracts the largest multiple of `beta(d)` that keeps the
//! `(i, d_i)` entries nonnegative, and repeats. Any table that is a positive
//! combination of pure tables along a chain is recovered exactly this way.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{BettiError, Result};
use crate::pure::{pure_table, pure_value, symmetrized_pure_table};
use crate::rational::{factorial, Rational};
use crate::sequence::DegreeSequence;
use crate::table::BettiTable;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainTerm {
    pub sequence: DegreeSequence,
    #[serde(with = "crate::io::rational_string")]
    pub coefficient: Rational,
}

/// `t = sum r_a * beta(d^a)` with `d^0 < d^1 < ...` componentwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainDecomposition {
    terms: Vec<ChainTerm>,
}

impl ChainDecomposition {
    /// Checks positivity, common length and the strict chain condition.
    pub fn new(terms: Vec<ChainTerm>) -> Result<Self> {
        if terms.is_empty() {
            return Err(BettiError::EmptyDecomposition);
        }
        let s = terms[0].sequence.length();
        for term in &terms {
            if !term.coefficient.is_positive() {
                return Err(BettiError::InvalidDecomposition(format!(
                    "coefficient {} of {} is not positive",
                    term.coefficient, term.sequence
                )));
            }
            if term.sequence.length() != s {
                return Err(BettiError::InvalidDecomposition(format!(
                    "{} does not have length {s}",
                    term.sequence
                )));
            }
        }
        if let Some(w) = terms
            .windows(2)
            .find(|w| !w[0].sequence.is_strictly_below(&w[1].sequence))
        {
            return Err(BettiError::InvalidDecomposition(format!(
                "{} is not strictly below {}",
                w[0].sequence, w[1].sequence
            )));
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[ChainTerm] {
        &self.terms
    }

    pub fn length(&self) -> usize {
        self.terms[0].sequence.length()
    }

    /// `sum r_a * beta(d^a)`.
    pub fn to_table(&self) -> BettiTable {
        let mut sum = BTreeMap::<(usize, i64), Rational>::new();
        for term in &self.terms {
            for (i, j, v) in pure_table(&term.sequence).entries() {
                *sum.entry((i, j)).or_insert_with(Rational::zero) += v * &term.coefficient;
            }
        }
        BettiTable::from_map_unchecked(sum)
    }

    /// `sum r_a / s!`, the multiplicity implied by the decomposition.
    pub fn multiplicity(&self) -> Rational {
        let total = self
            .terms
            .iter()
            .fold(Rational::zero(), |acc, t| acc + &t.coefficient);
        total / Rational::from_integer(factorial(self.length()))
    }
}

/// Greedy decomposition of a Cohen-Macaulay consistent table of length `s >= 1`.
pub fn es_decompose(table: &BettiTable) -> Result<ChainDecomposition> {
    let s = table.length();
    if s == 0 {
        return Err(BettiError::ZeroLength);
    }
    table.multiplicity()?;

    let mut remainder = table.clone().into_map();
    let mut terms: Vec<ChainTerm> = Vec::new();
    let mut step = 0;
    while !remainder.is_empty() {
        let degrees = (0..=s)
            .map(|i| {
                remainder
                    .range((i, i64::MIN)..=(i, i64::MAX))
                    .next()
                    .map(|(&(_, j), _)| j)
                    .ok_or_else(|| BettiError::NotInCone {
                        step,
                        reason: format!("column {i} exhausted while others remain"),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        let d = DegreeSequence::new(degrees.clone()).map_err(|_| BettiError::NotInCone {
            step,
            reason: format!("minimal shifts {degrees:?} are not strictly increasing"),
        })?;
        if let Some(prev) = terms.last() {
            if !prev.sequence.is_strictly_below(&d) {
                return Err(BettiError::NotInCone {
                    step,
                    reason: format!("{d} does not lie above {}", prev.sequence),
                });
            }
        }

        let pure: Vec<Rational> = (0..=s).map(|i| pure_value(&d, i)).collect();
        let r = (0..=s)
            .map(|i| &remainder[&(i, degrees[i])] / &pure[i])
            .min()
            .expect("s >= 1");
        for (i, p) in pure.iter().enumerate() {
            let key = (i, degrees[i]);
            let left = &remainder[&key] - &r * p;
            if left.is_zero() {
                remainder.remove(&key);
            } else {
                remainder.insert(key, left);
            }
        }
        terms.push(ChainTerm {
            sequence: d,
            coefficient: r,
        });
        step += 1;
    }
    ChainDecomposition::new(terms)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetrizedTerm {
    pub sequence: DegreeSequence,
    #[serde(with = "crate::io::rational_string")]
    pub coefficient: Rational,
    pub self_dual: bool,
}

/// `t = sum r_a * beta_sym(d^a, N)`.
///
/// Fields are public so that documents read from disk can be represented
/// even when they break the structural invariants; [`verify_decomposition`]
/// reports on those.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetrizedDecomposition {
    #[serde(rename = "N")]
    pub n: i64,
    pub terms: Vec<SymmetrizedTerm>,
}

impl SymmetrizedDecomposition {
    /// `sum_a r_a * e(beta_sym(d^a, N)) = sum_a 2 r_a / s!`.
    pub fn multiplicity(&self) -> Option<Rational> {
        let s = self.terms.first()?.sequence.length();
        let total = self.terms.iter().fold(Rational::zero(), |acc, t| {
            acc + &t.coefficient * BigInt::from(2)
        });
        Some(total / Rational::from_integer(factorial(s)))
    }
}

/// Pairs every chain term with its `(s, N)`-dual.
///
/// A dual pair `(d, d^v)` sharing coefficient `r` becomes one term `(d, r)`
/// listed at the position of the lower sequence. A self-dual `d` with
/// coefficient `r` becomes `(d, r / 2)`, since `beta_sym(d, N) = 2 beta(d)`.
pub fn symmetrize(chain: &ChainDecomposition, n: i64) -> Result<SymmetrizedDecomposition> {
    let coefficients: HashMap<&DegreeSequence, &Rational> = chain
        .terms()
        .iter()
        .map(|t| (&t.sequence, &t.coefficient))
        .collect();
    let mut terms = Vec::new();
    for term in chain.terms() {
        let dual = term.sequence.dual(n);
        if dual == term.sequence {
            terms.push(SymmetrizedTerm {
                sequence: dual,
                coefficient: &term.coefficient / BigInt::from(2),
                self_dual: true,
            });
            continue;
        }
        match coefficients.get(&dual) {
            None => {
                return Err(BettiError::NotDualClosed(format!(
                    "{} has coefficient {} but its dual {dual} is absent",
                    term.sequence, term.coefficient
                )))
            }
            Some(&r) if r != &term.coefficient => {
                return Err(BettiError::NotDualClosed(format!(
                    "{} has coefficient {} but its dual {dual} has {r}",
                    term.sequence, term.coefficient
                )))
            }
            Some(_) => {}
        }
        if term.sequence.is_strictly_below(&dual) {
            terms.push(SymmetrizedTerm {
                sequence: term.sequence.clone(),
                coefficient: term.coefficient.clone(),
                self_dual: false,
            });
        }
    }
    Ok(SymmetrizedDecomposition { n, terms })
}

/// `sum_a r_a * beta_sym(d^a, N)`; self-dual by construction.
pub fn synthesize(sd: &SymmetrizedDecomposition) -> Result<BettiTable> {
    let mut sum = BTreeMap::<(usize, i64), Rational>::new();
    if sd.terms.is_empty() {
        return Err(BettiError::EmptyDecomposition);
    }
    for term in &sd.terms {
        if !term.coefficient.is_positive() {
            return Err(BettiError::InvalidDecomposition(format!(
                "coefficient {} of {} is not positive",
                term.coefficient, term.sequence
            )));
        }
        for (i, j, v) in symmetrized_pure_table(&term.sequence, sd.n)?.entries() {
            *sum.entry((i, j)).or_insert_with(Rational::zero) += v * &term.coefficient;
        }
    }
    BettiTable::new(sum.into_iter().map(|((i, j), v)| (i, j, v)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Checks that `sd` reproduces `table` and satisfies the structural
/// conditions of a symmetrized decomposition. Never fails; every problem is
/// a failed check in the report.
pub fn verify_decomposition(
    table: &BettiTable,
    sd: &SymmetrizedDecomposition,
) -> VerificationReport {
    let mut checks = Vec::new();
    let mut push = |name, passed, detail: String| {
        checks.push(Check {
            name,
            passed,
            detail,
        })
    };

    match synthesize(sd) {
        Ok(t) if &t == table => push("synthesis", true, "synthesized table equals input".into()),
        Ok(_) => push(
            "synthesis",
            false,
            "synthesized table differs from input".into(),
        ),
        Err(e) => push("synthesis", false, e.to_string()),
    }

    let positive = sd.terms.iter().all(|t| t.coefficient.is_positive());
    push(
        "positive_coefficients",
        positive && !sd.terms.is_empty(),
        format!("{} terms", sd.terms.len()),
    );

    let s = table.length();
    let wrong_length: Vec<String> = sd
        .terms
        .iter()
        .filter(|t| t.sequence.length() != s)
        .map(|t| t.sequence.to_string())
        .collect();
    push(
        "common_length",
        wrong_length.is_empty(),
        if wrong_length.is_empty() {
            format!("all sequences have length {s}")
        } else {
            format!("length differs from {s}: {}", wrong_length.join(" "))
        },
    );

    let mut dual_pairs = Vec::new();
    for (a, ta) in sd.terms.iter().enumerate() {
        for tb in &sd.terms[a + 1..] {
            if ta.sequence.dual(sd.n) == tb.sequence {
                dual_pairs.push(format!("{} ~ {}", ta.sequence, tb.sequence));
            }
        }
    }
    push(
        "no_dual_pairs",
        dual_pairs.is_empty(),
        if dual_pairs.is_empty() {
            "no two terms are mutually dual".into()
        } else {
            dual_pairs.join(", ")
        },
    );

    let bad_order: Vec<String> = sd
        .terms
        .windows(2)
        .filter(|w| !w[0].sequence.is_strictly_below(&w[1].sequence))
        .map(|w| format!("{} !< {}", w[0].sequence, w[1].sequence))
        .collect();
    push(
        "strictly_increasing",
        bad_order.is_empty(),
        if bad_order.is_empty() {
            "chain is strictly increasing".into()
        } else {
            bad_order.join(", ")
        },
    );

    let over: Vec<String> = sd
        .terms
        .iter()
        .filter(|t| !t.sequence.fits_under_dual(sd.n))
        .map(|t| t.sequence.to_string())
        .collect();
    push(
        "below_dual",
        over.is_empty(),
        if over.is_empty() {
            format!("N = {} >= d_i + d_(s-i) for every term", sd.n)
        } else {
            format!("N = {} too small for {}", sd.n, over.join(" "))
        },
    );

    let bad_flags: Vec<String> = sd
        .terms
        .iter()
        .filter(|t| t.self_dual != (t.sequence.dual(sd.n) == t.sequence))
        .map(|t| t.sequence.to_string())
        .collect();
    push(
        "self_dual_flags",
        bad_flags.is_empty(),
        if bad_flags.is_empty() {
            "flags match".into()
        } else {
            format!("wrong flag: {}", bad_flags.join(" "))
        },
    );

    // two routes: PS functionals of the table vs. e(beta_sym) = 2/s! per term
    let from_terms = sd.terms.iter().try_fold(Rational::zero(), |acc, t| {
        symmetrized_pure_table(&t.sequence, sd.n)
            .and_then(|sym| sym.multiplicity())
            .map(|e| acc + e * &t.coefficient)
    });
    match (table.multiplicity(), from_terms, sd.multiplicity()) {
        (Ok(e), Ok(sum), Some(closed)) => push(
            "multiplicity",
            e == sum && e == closed,
            format!("e = {e}, sum r*e(beta_sym) = {sum}, sum 2r/s! = {closed}"),
        ),
        (Err(e), _, _) => push("multiplicity", false, e.to_string()),
        (_, Err(e), _) => push("multiplicity", false, e.to_string()),
        (_, _, None) => push("multiplicity", false, "no terms".into()),
    }

    VerificationReport { checks }
}
