//! Multiplicity bounds for self-dual tables generated in degree zero.
//!
//! All quantities are exact; `floor(m_s / 2)` and `ceil(m_s / 2)` are integer
//! operations and comparisons never round.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{BettiError, Result};
use crate::pure::pure_value;
use crate::rational::{ceil_div2, factorial, floor_div2, int, Rational};
use crate::sequence::DegreeSequence;
use crate::table::{BettiTable, ShiftProfile};

fn product(factors: impl IntoIterator<Item = i64>) -> Rational {
    Rational::from_integer(
        factors
            .into_iter()
            .fold(BigInt::one(), |acc, f| acc * BigInt::from(f)),
    )
}

fn over_factorial(value: Rational, s: usize) -> Rational {
    value / Rational::from_integer(factorial(s))
}

fn require_zero_start(d: &DegreeSequence) -> Result<()> {
    if d.first() != 0 {
        return Err(BettiError::NonZeroStart(d.degrees().to_vec()));
    }
    Ok(())
}

/// `Psi_d = prod_{i=1}^{k} min{d_s - d_{s-i}, floor(d_s/2)} * prod_{i=k+1}^{s} max{d_i, ceil(d_s/2)}`.
pub fn psi(d: &DegreeSequence) -> Result<Rational> {
    require_zero_start(d)?;
    let deg = d.degrees();
    let s = d.length();
    let k = s / 2;
    let top = deg[s];
    let lower = (1..=k).map(|i| (top - deg[s - i]).min(floor_div2(top)));
    let upper = (k + 1..=s).map(|i| deg[i].max(ceil_div2(top)));
    Ok(product(lower.chain(upper)))
}

/// `b_d = beta_0(d) + beta_0(d^{v,d_s})`.
pub fn b_of(d: &DegreeSequence) -> Result<Rational> {
    require_zero_start(d)?;
    Ok(pure_value(d, 0) + pure_value(&d.dual(d.last()), 0))
}

/// Both sides of the identity
/// `b_d (d_s - d_j) d_j - b_{d'} (d_s - d_j - 1)(d_j + 1) = xi_2 - xi_1`
/// where `d'` raises `d_j` by one. The left side goes through [`b_of`], the
/// right side through the products `xi_1 = prod_{i != j, i < s} 1/(d_s - d_i)`
/// and `xi_2 = prod_{i != j, i > 0} 1/d_i`.
///
/// Returns `None` when `d'` is not a degree sequence or `j` is not interior.
pub fn xi_identity(d: &DegreeSequence, j: usize) -> Option<(Rational, Rational)> {
    let deg = d.degrees();
    let s = d.length();
    if deg[0] != 0 || j == 0 || j >= s {
        return None;
    }
    let mut raised = deg.to_vec();
    raised[j] += 1;
    let d_prime = DegreeSequence::new(raised).ok()?;

    let top = deg[s];
    let dj = deg[j];
    let lhs = b_of(d).ok()? * int((top - dj) * dj)
        - b_of(&d_prime).ok()? * int((top - dj - 1) * (dj + 1));

    let xi1 = (0..s)
        .filter(|&i| i != j)
        .fold(Rational::one(), |acc, i| acc / int(top - deg[i]));
    let xi2 = (1..=s)
        .filter(|&i| i != j)
        .fold(Rational::one(), |acc, i| acc / int(deg[i]));
    Some((lhs, xi2 - xi1))
}

fn require_degree_zero(profile: &ShiftProfile) -> Result<()> {
    if profile.min[0] != 0 {
        return Err(BettiError::NotDegreeZeroGenerated { m0: profile.min[0] });
    }
    if profile.s == 0 {
        return Err(BettiError::ZeroLength);
    }
    Ok(())
}

/// The upper bound
/// `beta_0/s! * prod_{i=1}^{k} min{M_i, floor(m_s/2)} * prod_{i=k+1}^{s} max{m_i, ceil(m_s/2)}`.
pub fn theorem_bound(table: &BettiTable) -> Result<Rational> {
    let p = table.shifts();
    require_degree_zero(&p)?;
    Ok(theorem_bound_from(&table.column_total(0), &p))
}

pub fn theorem_bound_from(beta0: &Rational, p: &ShiftProfile) -> Rational {
    let top = p.min[p.s];
    let lower = (1..=p.k).map(|i| p.max[i].min(floor_div2(top)));
    let upper = (p.k + 1..=p.s).map(|i| p.min[i].max(ceil_div2(top)));
    over_factorial(beta0 * product(lower.chain(upper)), p.s)
}

/// `m_1...m_k M_{k+1}...M_s / s!`, the quasi-pure lower bound formula,
/// evaluated without checking quasi-purity.
pub fn lower_formula(p: &ShiftProfile) -> Rational {
    let factors = (1..=p.k)
        .map(|i| p.min[i])
        .chain((p.k + 1..=p.s).map(|i| p.max[i]));
    over_factorial(product(factors), p.s)
}

/// `M_1...M_k m_{k+1}...m_s / s!`, evaluated without checking quasi-purity.
pub fn upper_formula(p: &ShiftProfile) -> Rational {
    let factors = (1..=p.k)
        .map(|i| p.max[i])
        .chain((p.k + 1..=p.s).map(|i| p.min[i]));
    over_factorial(product(factors), p.s)
}

/// Lower and upper bounds for quasi-pure tables generated in degree zero.
pub fn srinivasan_bounds(table: &BettiTable) -> Result<(Rational, Rational)> {
    if !table.is_quasi_pure() {
        return Err(BettiError::NotQuasiPure);
    }
    let p = table.shifts();
    require_degree_zero(&p)?;
    Ok((lower_formula(&p), upper_formula(&p)))
}

fn require_cyclic_codim3(table: &BettiTable) -> Result<ShiftProfile> {
    let p = table.shifts();
    if p.s != 3 {
        return Err(BettiError::NotCodimThree(p.s));
    }
    let mut gens = table.column(0);
    match (gens.next(), gens.next()) {
        (Some((0, v)), None) if v.is_one() => Ok(p),
        _ => Err(BettiError::NotCyclic),
    }
}

/// `N_1 = max{ j : beta_{1,j} > beta_{2,j} }` for cyclic codimension-3 tables.
pub fn n1(table: &BettiTable) -> Result<i64> {
    require_cyclic_codim3(table)?;
    table
        .column(1)
        .filter(|(j, v)| *v > &table.value(2, *j))
        .map(|(j, _)| j)
        .last()
        .ok_or(BettiError::NoSuchDegree)
}

/// `N_1 * T_2 * d_3 / 6`.
pub fn mnz_formula(n1: i64, t2: i64, d3: i64) -> Rational {
    over_factorial(product([n1, t2, d3]), 3)
}

/// `N_1 * M_2 * m_3 / 6`, reading `d_3` as the socle shift.
pub fn mnz_bound(table: &BettiTable) -> Result<Rational> {
    let n = n1(table)?;
    let p = table.shifts();
    Ok(mnz_formula(n, p.max[2], p.min[3]))
}

/// Codimension-3 rewrite of the theorem bound from `M_1`, `m_2`, `m_3`.
pub fn codim3_formula(max1: i64, min2: i64, socle: i64) -> Rational {
    if max1 <= min2 {
        over_factorial(product([max1, min2, socle]), 3)
    } else {
        socle_only_bound(socle)
    }
}

/// `floor(m_3/2) * ceil(m_3/2) * m_3 / 6`, the non-quasi-pure branch.
pub fn socle_only_bound(socle: i64) -> Rational {
    over_factorial(product([floor_div2(socle), ceil_div2(socle), socle]), 3)
}

pub fn codim3_bound(table: &BettiTable) -> Result<Rational> {
    let p = require_cyclic_codim3(table)?;
    Ok(codim3_formula(p.max[1], p.min[2], p.min[3]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Violated,
    NotApplicable,
}

impl Verdict {
    fn upper(bound: Option<&Rational>, e: &Rational) -> Self {
        match bound {
            Some(b) if e <= b => Verdict::Holds,
            Some(_) => Verdict::Violated,
            None => Verdict::NotApplicable,
        }
    }

    fn lower(bound: Option<&Rational>, e: &Rational) -> Self {
        match bound {
            Some(b) if b <= e => Verdict::Holds,
            Some(_) => Verdict::Violated,
            None => Verdict::NotApplicable,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::NotApplicable => "not applicable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundFlags {
    pub theorem: Verdict,
    pub srinivasan_lower: Verdict,
    pub srinivasan_upper: Verdict,
    /// The lower formula applied regardless of quasi-purity.
    pub lower_formula: Verdict,
    pub mnz: Verdict,
    pub codim3: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub profile: ShiftProfile,
    pub beta0: Rational,
    pub self_dual: Option<i64>,
    pub multiplicity: Rational,
    pub theorem_bound: Rational,
    pub quasi_pure: bool,
    pub srinivasan: Option<(Rational, Rational)>,
    pub lower_formula: Rational,
    pub n1: Option<i64>,
    pub mnz_bound: Option<Rational>,
    pub codim3_bound: Option<Rational>,
    pub flags: BoundFlags,
}

/// Evaluates every bound on a Cohen-Macaulay consistent table generated in
/// degree zero and compares each with the multiplicity.
pub fn bounds_report(table: &BettiTable) -> Result<BoundsReport> {
    let multiplicity = table.multiplicity()?;
    let theorem_bound = theorem_bound(table)?;
    let profile = table.shifts();
    let quasi_pure = table.is_quasi_pure();
    let srinivasan = srinivasan_bounds(table).ok();
    let lower_formula = lower_formula(&profile);

    let codim3 = require_cyclic_codim3(table).is_ok();
    let n1 = if codim3 { n1(table).ok() } else { None };
    let mnz_bound = if codim3 { mnz_bound(table).ok() } else { None };
    let codim3_bound = if codim3 {
        codim3_bound(table).ok()
    } else {
        None
    };

    let e = &multiplicity;
    let flags = BoundFlags {
        theorem: Verdict::upper(Some(&theorem_bound), e),
        srinivasan_lower: Verdict::lower(srinivasan.as_ref().map(|(l, _)| l), e),
        srinivasan_upper: Verdict::upper(srinivasan.as_ref().map(|(_, u)| u), e),
        lower_formula: Verdict::lower(Some(&lower_formula), e),
        mnz: Verdict::upper(mnz_bound.as_ref(), e),
        codim3: Verdict::upper(codim3_bound.as_ref(), e),
    };
    Ok(BoundsReport {
        beta0: table.column_total(0),
        self_dual: table.self_duality(),
        profile,
        multiplicity,
        theorem_bound,
        quasi_pure,
        srinivasan,
        lower_formula,
        n1,
        mnz_bound,
        codim3_bound,
        flags,
    })
}

/// Proof-chain quantities for a symmetrized decomposition: `sum 2 r_a / s!`
/// and `(sum r_a b_{d^a}) Psi_{d^0} / s!`. Both are computed from the
/// decomposition alone, independently of the synthesized table.
pub fn chain_quantities(
    sd: &crate::decomposition::SymmetrizedDecomposition,
) -> Result<(Rational, Rational)> {
    let first = sd.terms.first().ok_or(BettiError::EmptyDecomposition)?;
    let s = first.sequence.length();
    let mut twice = Rational::zero();
    let mut beta0 = Rational::zero();
    for t in &sd.terms {
        twice += &t.coefficient * BigInt::from(2);
        beta0 += &t.coefficient * b_of(&t.sequence)?;
    }
    Ok((
        over_factorial(twice, s),
        over_factorial(beta0 * psi(&first.sequence)?, s),
    ))
}
