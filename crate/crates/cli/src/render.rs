//! Human-readable output. Machine fields are exact; a decimal approximation
//! is appended in parentheses with a `~` marker for non-integers.

use std::fmt::Write;

use betti_core::bounds::Verdict;
use betti_core::decomposition::VerificationReport;
use betti_core::rational::{self, Rational};
use betti_core::survey::SurveyResult;
use betti_core::{BettiTable, BoundsReport};

fn exact(r: &Rational) -> String {
    if r.is_integer() {
        rational::format(r)
    } else {
        format!("{} (~{})", rational::format(r), rational::decimal(r, 6))
    }
}

fn degrees(v: &[i64]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

pub fn multiplicity(table: &BettiTable, e: &Result<Rational, Rational>) -> String {
    let s = table.length();
    let mut out = format!("s = {s}\n");
    for l in 0..=s {
        writeln!(
            out,
            "ps[{l}] = {}",
            rational::format(&table.ps_functional(l as u32))
        )
        .unwrap();
    }
    match e {
        Ok(e) => writeln!(out, "e = {}", exact(e)).unwrap(),
        Err(formal) => writeln!(
            out,
            "formal multiplicity = {} (lower functionals do not vanish)",
            exact(formal)
        )
        .unwrap(),
    }
    out
}

fn bound_line(out: &mut String, name: &str, value: Option<&Rational>, verdict: Verdict) {
    match value {
        Some(v) => writeln!(out, "{name} = {} [{}]", exact(v), verdict.as_str()).unwrap(),
        None => writeln!(out, "{name} = n/a").unwrap(),
    }
}

pub fn bounds(r: &BoundsReport) -> String {
    let p = &r.profile;
    let mut out = String::new();
    writeln!(out, "s = {}", p.s).unwrap();
    writeln!(out, "k = {}", p.k).unwrap();
    writeln!(out, "m = {}", degrees(&p.min)).unwrap();
    writeln!(out, "M = {}", degrees(&p.max)).unwrap();
    writeln!(out, "N = {}", p.n).unwrap();
    writeln!(out, "beta0 = {}", exact(&r.beta0)).unwrap();
    match r.self_dual {
        Some(n) => writeln!(out, "self_dual = yes (N = {n})").unwrap(),
        None => writeln!(out, "self_dual = no").unwrap(),
    }
    writeln!(
        out,
        "quasi_pure = {}",
        if r.quasi_pure { "yes" } else { "no" }
    )
    .unwrap();
    writeln!(out, "e = {}", exact(&r.multiplicity)).unwrap();
    let f = &r.flags;
    bound_line(&mut out, "theorem", Some(&r.theorem_bound), f.theorem);
    let (lower, upper) = match &r.srinivasan {
        Some((l, u)) => (Some(l), Some(u)),
        None => (None, None),
    };
    bound_line(&mut out, "srinivasan_lower", lower, f.srinivasan_lower);
    bound_line(&mut out, "srinivasan_upper", upper, f.srinivasan_upper);
    bound_line(
        &mut out,
        "lower_formula",
        Some(&r.lower_formula),
        f.lower_formula,
    );
    match r.n1 {
        Some(n1) => writeln!(out, "n1 = {n1}").unwrap(),
        None => writeln!(out, "n1 = n/a").unwrap(),
    }
    bound_line(&mut out, "mnz", r.mnz_bound.as_ref(), f.mnz);
    bound_line(&mut out, "codim3", r.codim3_bound.as_ref(), f.codim3);
    out
}

pub fn verification(report: &VerificationReport) -> String {
    let mut out = String::new();
    for c in &report.checks {
        let status = if c.passed { "pass" } else { "FAIL" };
        writeln!(out, "# check {}: {status} ({})", c.name, c.detail).unwrap();
    }
    out
}

pub fn survey(r: &SurveyResult) -> String {
    let mut out = format!("survey {}\n", r.check.as_str());
    writeln!(out, "s = {}", r.s).unwrap();
    writeln!(out, "max_socle = {}", r.max_socle).unwrap();
    if let (Some(trials), Some(seed)) = (r.trials, r.seed) {
        writeln!(out, "trials = {trials}").unwrap();
        writeln!(out, "seed = {seed}").unwrap();
    } else {
        writeln!(out, "sequences = {}", r.sequences).unwrap();
    }
    writeln!(out, "checked = {}", r.checked).unwrap();
    if r.check == betti_core::SurveyKind::Lemma {
        writeln!(out, "ties = {}", r.ties).unwrap();
    }
    writeln!(out, "violations = {}", r.violations.len()).unwrap();
    for v in &r.values {
        writeln!(out, "value {} {}", v.sequence, rational::format(&v.value)).unwrap();
    }
    for v in &r.violations {
        let mut line = String::from("violation");
        match &v.decomposition {
            Some(sd) => {
                write!(line, " N={}", sd.n).unwrap();
                for t in &sd.terms {
                    let flag = if t.self_dual { "self-dual" } else { "pair" };
                    write!(
                        line,
                        " {}*{}[{flag}]",
                        rational::format(&t.coefficient),
                        t.sequence
                    )
                    .unwrap();
                }
            }
            None => {
                for d in &v.sequences {
                    write!(line, " {d}").unwrap();
                }
            }
        }
        for q in &v.quantities {
            write!(line, " {}={}", q.name, rational::format(&q.value)).unwrap();
        }
        writeln!(out, "{line}").unwrap();
    }
    out
}
