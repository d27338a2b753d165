//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fail.

use std::process::{Command, ExitCode};

use betti_core::bounds::{
    bounds_report, codim3_bound, codim3_formula, mnz_bound, mnz_formula, n1, socle_only_bound,
    srinivasan_bounds, theorem_bound, xi_identity, Verdict,
};
use betti_core::decomposition::{es_decompose, symmetrize, synthesize, verify_decomposition};
use betti_core::fixtures;
use betti_core::io::parse_table;
use betti_core::pure::{pure_table, symmetrized_pure_table};
use betti_core::rational::{factorial, frac, int};
use betti_core::survey::{
    random_symmetrized_decomposition, survey_lemma, survey_proposition, trial_rng,
};
use betti_core::{DegreeSequence, Rational};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn seq(s: &str) -> DegreeSequence {
    s.parse().expect("literal sequence")
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

const TABLE_20: &str = "\
betti v1
# the e = 20 example, entered by hand
0 0 1
1 2 3
1 7 2
2 3 2
2 8 3
3 10 1
";

fn ac1() -> Outcome {
    let table = parse_table(TABLE_20).map_err(|e| e.to_string())?;
    let ps: Vec<Rational> = (0..3).map(|l| table.ps_functional(l)).collect();
    ensure!(ps.iter().all(|v| *v == int(0)), "lower functionals {ps:?}");
    let report = bounds_report(&table).map_err(|e| e.to_string())?;
    ensure!(
        report.multiplicity == int(20),
        "e = {}",
        report.multiplicity
    );
    ensure!(
        report.lower_formula == frac(160, 6),
        "lower formula = {}",
        report.lower_formula
    );
    ensure!(
        report.lower_formula > report.multiplicity,
        "lower formula does not exceed e"
    );
    ensure!(
        report.flags.lower_formula == Verdict::Violated,
        "flag {:?}",
        report.flags.lower_formula
    );
    ensure!(!report.quasi_pure, "table reported quasi-pure");
    ensure!(
        report.theorem_bound == frac(250, 6),
        "theorem bound = {}",
        report.theorem_bound
    );
    ensure!(
        report.flags.theorem == Verdict::Holds,
        "theorem flag {:?}",
        report.flags.theorem
    );
    Ok("e = 20, lower formula 80/3 exceeds it, theorem bound 125/3".into())
}

fn ac2() -> Outcome {
    let t = fixtures::complete_intersection_224();
    let e = t.multiplicity().map_err(|e| e.to_string())?;
    ensure!(e == int(16), "e = {e}");
    let n = n1(&t).map_err(|e| e.to_string())?;
    ensure!(n == 2, "N_1 = {n}");
    let mnz = mnz_bound(&t).map_err(|e| e.to_string())?;
    ensure!(mnz == int(16), "mnz = {mnz}");
    let c3 = codim3_bound(&t).map_err(|e| e.to_string())?;
    let th = theorem_bound(&t).map_err(|e| e.to_string())?;
    ensure!(
        c3 == frac(64, 3) && th == c3,
        "codim3 = {c3}, theorem = {th}"
    );
    Ok("e = 16 = mnz, codim3 = theorem = 64/3".into())
}

fn ac3() -> Outcome {
    let t = fixtures::pfaffian();
    ensure!(
        t.self_duality() == Some(12),
        "self-duality {:?}",
        t.self_duality()
    );
    ensure!(t.is_quasi_pure(), "not quasi-pure");
    let n = n1(&t).map_err(|e| e.to_string())?;
    ensure!(n == 5, "N_1 = {n}");
    let mnz = mnz_bound(&t).map_err(|e| e.to_string())?;
    let c3 = codim3_bound(&t).map_err(|e| e.to_string())?;
    ensure!(
        mnz == int(80) && c3 == int(72),
        "mnz = {mnz}, codim3 = {c3}"
    );
    let (lo, hi) = srinivasan_bounds(&t).map_err(|e| e.to_string())?;
    ensure!(hi == int(72), "srinivasan upper = {hi}");
    let e = t.multiplicity().map_err(|e| e.to_string())?;
    ensure!(lo <= e && e <= hi, "e = {e} outside [{lo}, {hi}]");
    Ok(format!(
        "N = 12, N_1 = 5, mnz 80, codim3 72, srinivasan [{lo}, {hi}], e = {e}"
    ))
}

fn ac4() -> Outcome {
    let pairs = [
        (
            mnz_formula(2, 6, 8),
            int(16),
            socle_only_bound(8),
            frac(64, 3),
        ),
        (mnz_formula(6, 7, 9), int(63), socle_only_bound(9), int(30)),
    ];
    for (mnz, want_mnz, c3, want_c3) in pairs {
        ensure!(mnz == want_mnz, "mnz {mnz} != {want_mnz}");
        ensure!(c3 == want_c3, "socle-only {c3} != {want_c3}");
    }
    ensure!(
        codim3_formula(6, 4, 8) == frac(64, 3),
        "non-quasi-pure branch of codim3_formula"
    );
    Ok("16 vs 64/3 and 63 vs 30".into())
}

fn ac5() -> Outcome {
    let t = fixtures::complete_intersection_224();
    let chain = es_decompose(&t).map_err(|e| e.to_string())?;
    let got: Vec<(String, Rational)> = chain
        .terms()
        .iter()
        .map(|c| (c.sequence.to_string(), c.coefficient.clone()))
        .collect();
    let want = ["(0,2,4,8)", "(0,2,6,8)", "(0,4,6,8)"].map(|d| (d.to_string(), int(32)));
    ensure!(got == want, "chain {got:?}");
    let sd = symmetrize(&chain, 8).map_err(|e| e.to_string())?;
    let report = verify_decomposition(&t, &sd);
    ensure!(report.all_passed(), "verification {report:?}");
    let mut total = Rational::from_integer(0.into());
    for term in &sd.terms {
        total += &term.coefficient
            * symmetrized_pure_table(&term.sequence, sd.n)
                .map_err(|e| e.to_string())?
                .multiplicity()
                .map_err(|e| e.to_string())?;
    }
    ensure!(
        total == int(16) && total == frac(64 + 32, 6),
        "sum over terms = {total}"
    );
    Ok("32/32/32 chain, symmetrized with N = 8, 16 = (64 + 32)/6".into())
}

fn ac6() -> Outcome {
    let mut socles = 0;
    for i in 0..200u64 {
        let s = 2 + (i % 3) as usize;
        let fixed = i % 2 == 0;
        let mut rng = trial_rng(6, i);
        let sd = random_symmetrized_decomposition(&mut rng, s, 20, fixed);
        let table = synthesize(&sd).map_err(|e| format!("trial {i}: {e}"))?;
        ensure!(
            table.dual(s, sd.n).as_ref() == Ok(&table),
            "trial {i}: not self-dual"
        );
        let chain = es_decompose(&table).map_err(|e| format!("trial {i}: {e}"))?;
        let back = symmetrize(&chain, sd.n).map_err(|e| format!("trial {i}: {e}"))?;
        ensure!(back == sd, "trial {i}: recovered {back:?} from {sd:?}");
        ensure!(
            verify_decomposition(&table, &back).all_passed(),
            "trial {i}: verification failed"
        );
        if fixed {
            ensure!(
                table.self_duality() == Some(sd.n),
                "trial {i}: self-duality {:?}",
                table.self_duality()
            );
            socles += 1;
        }
    }
    Ok(format!(
        "200 round trips exact ({socles} with every sequence ending at N)"
    ))
}

fn ac7() -> Outcome {
    let mut rng = trial_rng(7, 0);
    for trial in 0..100 {
        let s = rng.random_range(1..=6usize);
        let mut degrees: Vec<i64> = rand::seq::index::sample(&mut rng, 31, s + 1)
            .into_iter()
            .map(|v| v as i64)
            .collect();
        degrees.sort();
        let d = DegreeSequence::new(degrees).map_err(|e| e.to_string())?;
        let t = pure_table(&d);
        for l in 0..s as u32 {
            ensure!(
                t.ps_functional(l) == int(0),
                "trial {trial}: {d} ps[{l}] = {}",
                t.ps_functional(l)
            );
        }
        let sym = symmetrized_pure_table(&d, d.first() + d.last()).map_err(|e| e.to_string())?;
        let e = sym
            .multiplicity()
            .map_err(|e| format!("trial {trial}: {d}: {e}"))?;
        let want = Rational::new(2.into(), factorial(s));
        ensure!(
            e == want,
            "trial {trial}: {d} symmetrized e = {e}, want {want}"
        );
    }
    Ok("100 pure tables satisfy the functionals, symmetrized e = 2/s!".into())
}

fn ac8() -> Outcome {
    let mut pairs = 0;
    for s in 1..=4 {
        let r = survey_lemma(s, 10);
        ensure!(
            r.violations.is_empty(),
            "s = {s}: {} violations",
            r.violations.len()
        );
        pairs += r.checked;
        for d in betti_core::enumerate_sequences(s, 10) {
            for j in 0..=s {
                if let Some((lhs, rhs)) = xi_identity(&d, j) {
                    ensure!(lhs == rhs, "xi identity fails at {d}, j = {j}");
                }
            }
        }
    }
    Ok(format!(
        "{pairs} comparable pairs, no violations, xi identity exact"
    ))
}

fn ac9() -> Outcome {
    let r = survey_proposition(3, 12);
    ensure!(
        r.violations.is_empty(),
        "s = 3: {} violations",
        r.violations.len()
    );
    ensure!(
        r.values.len() == r.sequences,
        "{} values for {} sequences",
        r.values.len(),
        r.sequences
    );
    let value = |d: &str| {
        r.values
            .iter()
            .find(|v| v.sequence == seq(d))
            .map(|v| v.value.clone())
    };
    ensure!(
        value("(0,2,4,8)") == Some(frac(8, 3)),
        "(0,2,4,8) -> {:?}",
        value("(0,2,4,8)")
    );
    ensure!(
        value("(0,2,6,8)") == Some(int(2)),
        "(0,2,6,8) -> {:?}",
        value("(0,2,6,8)")
    );

    let two = survey_proposition(2, 12);
    let hit = two
        .violations
        .iter()
        .find(|v| v.sequences == [seq("(0,1,3)")]);
    let hit = hit.ok_or("s = 2: (0,1,3) not reported")?;
    ensure!(
        hit.quantities[0].value == frac(3, 2),
        "s = 2: (0,1,3) -> {}",
        hit.quantities[0].value
    );
    Ok(format!(
        "s = 3: {} sequences, 0 violations; s = 2: {} violations including (0,1,3) -> 3/2",
        r.sequences,
        two.violations.len()
    ))
}

fn run_binary(threads: &str, args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_betti"))
        .args(args)
        .env("BETTI_THREADS", threads)
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(out.status.code().is_some(), "killed by signal");
    Ok(out.stdout)
}

fn ac10() -> Outcome {
    let pfaffian = data("pfaffian.betti");
    let runs: [&[&str]; 4] = [
        &["bounds", &pfaffian, "--json"],
        &[
            "survey",
            "--codim",
            "3",
            "--max-socle",
            "12",
            "--check",
            "prop",
            "--json",
        ],
        &[
            "survey",
            "--codim",
            "4",
            "--max-socle",
            "10",
            "--check",
            "lemma",
        ],
        &[
            "survey",
            "--codim",
            "2",
            "--max-socle",
            "9",
            "--check",
            "theorem",
            "--trials",
            "200",
            "--seed",
            "3",
        ],
    ];
    for args in runs {
        let a = run_binary("1", args)?;
        let b = run_binary("4", args)?;
        let c = run_binary("4", args)?;
        ensure!(!a.is_empty(), "{args:?}: empty output");
        ensure!(a == b && b == c, "{args:?}: output differs across runs");
    }
    Ok("bounds and survey output byte-identical for 1 and 4 threads".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("e = 20 example and the lower formula", ac1),
        ("complete intersection (2,2,4)", ac2),
        ("Pfaffian table", ac3),
        ("formula-level codim-3 comparisons", ac4),
        ("decomposition of the complete intersection", ac5),
        ("seeded synthesis round trips", ac6),
        ("pure tables and symmetrized multiplicity", ac7),
        ("lemma survey and xi identity", ac8),
        ("proposition survey", ac9),
        ("thread-count determinism of the binary", ac10),
    ];
    let mut failed = 0;
    for (n, (title, check)) in criteria.into_iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS AC-{}: {title}: {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL AC-{}: {title}: {why}", n + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
