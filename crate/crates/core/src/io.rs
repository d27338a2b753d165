//! Text and JSON documents.
//!
//! Table text format: a `betti v1` header followed by one `i j value` line per
//! nonzero entry, value as `p/q` or an integer. Blank lines and `#` comments
//! are ignored. Serialization writes entries in `(i, j)` order with reduced
//! rationals and `\n` line endings, so `parse_table(format_table(t)) == t`.
//!
//! Decomposition text format:
//!
//! ```text
//! betti-decomposition v1
//! kind symmetrized
//! N 8
//! term 0,2,4,8 32 pair
//! term 0,2,6,8 16 self-dual
//! ```
//!
//! or `kind chain` with `term <degrees> <coefficient>` lines and no `N`.
//! JSON variants are documented in the README; every rational is a string.

use serde::{Deserialize, Serialize};

use crate::bounds::{BoundsReport, Verdict};
use crate::decomposition::{
    ChainDecomposition, ChainTerm, SymmetrizedDecomposition, SymmetrizedTerm,
};
use crate::error::{BettiError, Result};
use crate::rational::{self, Rational};
use crate::sequence::DegreeSequence;
use crate::survey::SurveyResult;
use crate::table::BettiTable;

pub const TABLE_HEADER: &str = "betti v1";
pub const DECOMPOSITION_HEADER: &str = "betti-decomposition v1";
pub const BOUNDS_FORMAT: &str = "betti-bounds v1";
pub const SURVEY_FORMAT: &str = "betti-survey v1";

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod rational_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::rational::{self, Rational};

    pub fn serialize<S: Serializer>(value: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&rational::format(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rational, D::Error> {
        #[derive(serde::Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(i64),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Text(s) => rational::parse(&s)
                .ok_or_else(|| serde::de::Error::custom(format!("invalid rational '{s}'"))),
            Raw::Int(n) => Ok(rational::int(n)),
        }
    }
}

mod optional_rational {
    use serde::Serializer;

    use crate::rational::{self, Rational};

    pub fn serialize<S: Serializer>(
        value: &Option<Rational>,
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => serializer.serialize_str(&rational::format(v)),
            None => serializer.serialize_none(),
        }
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> BettiError {
    BettiError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn json_syntax(e: serde_json::Error) -> BettiError {
    syntax(e.line(), e.column(), e.to_string())
}

/// Splits a line into whitespace separated tokens with 1-based columns,
/// dropping anything after `#`.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (idx, ch) in content.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(idx),
            (true, Some(s)) => {
                out.push((s + 1, &content[s..idx]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &content[s..]));
    }
    out
}

/// A line number with its `(column, token)` pairs.
type Line<'a> = (usize, Vec<(usize, &'a str)>);

/// Non-empty lines after the header.
fn body_lines<'a>(text: &'a str, header: &str) -> Result<Vec<Line<'a>>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, tokens(l)))
        .filter(|(_, t)| !t.is_empty());
    match lines.next() {
        Some((n, t)) => {
            let found: Vec<&str> = t.iter().map(|(_, s)| *s).collect();
            if found.join(" ") != header {
                return Err(syntax(n, t[0].0, format!("expected header '{header}'")));
            }
        }
        None => return Err(syntax(1, 1, format!("missing header '{header}'"))),
    }
    Ok(lines.collect())
}

fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

#[derive(Serialize, Deserialize)]
struct EntryDoc {
    i: usize,
    j: i64,
    #[serde(with = "rational_string")]
    value: Rational,
}

#[derive(Serialize, Deserialize)]
struct TableDoc {
    format: String,
    entries: Vec<EntryDoc>,
}

/// Parses the canonical text format or its JSON variant and validates.
pub fn parse_table(text: &str) -> Result<BettiTable> {
    if looks_like_json(text) {
        let doc: TableDoc = serde_json::from_str(text).map_err(json_syntax)?;
        if doc.format != TABLE_HEADER {
            return Err(syntax(1, 1, format!("expected format '{TABLE_HEADER}'")));
        }
        return BettiTable::new(doc.entries.into_iter().map(|e| (e.i, e.j, e.value)));
    }
    let mut raw = Vec::new();
    for (n, toks) in body_lines(text, TABLE_HEADER)? {
        if toks.len() != 3 {
            let col = toks.get(3).map_or(toks[0].0, |t| t.0);
            return Err(syntax(
                n,
                col,
                format!("expected 'i j value', found {} fields", toks.len()),
            ));
        }
        let i = toks[0].1.parse::<usize>().map_err(|_| {
            syntax(
                n,
                toks[0].0,
                "homological index must be a nonnegative integer",
            )
        })?;
        let j = toks[1]
            .1
            .parse::<i64>()
            .map_err(|_| syntax(n, toks[1].0, "degree must be an integer"))?;
        let value = rational::parse(toks[2].1)
            .ok_or_else(|| syntax(n, toks[2].0, format!("invalid rational '{}'", toks[2].1)))?;
        raw.push((i, j, value));
    }
    BettiTable::new(raw)
}

pub fn format_table(table: &BettiTable) -> String {
    let mut out = format!("{TABLE_HEADER}\n");
    for (i, j, v) in table.entries() {
        out.push_str(&format!("{i} {j} {}\n", rational::format(v)));
    }
    out
}

pub fn table_to_json(table: &BettiTable) -> String {
    let doc = TableDoc {
        format: TABLE_HEADER.to_string(),
        entries: table
            .entries()
            .map(|(i, j, v)| EntryDoc {
                i,
                j,
                value: v.clone(),
            })
            .collect(),
    };
    to_json(&doc)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionDocument {
    Chain(ChainDecomposition),
    Symmetrized(SymmetrizedDecomposition),
}

#[derive(Serialize, Deserialize)]
struct ChainTermDoc {
    sequence: DegreeSequence,
    #[serde(with = "rational_string")]
    coefficient: Rational,
}

#[derive(Serialize, Deserialize)]
struct SymTermDoc {
    sequence: DegreeSequence,
    #[serde(with = "rational_string")]
    coefficient: Rational,
    self_dual: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum DecompositionBody {
    Chain {
        s: usize,
        terms: Vec<ChainTermDoc>,
    },
    Symmetrized {
        #[serde(rename = "N")]
        n: i64,
        terms: Vec<SymTermDoc>,
    },
}

#[derive(Serialize, Deserialize)]
struct DecompositionDoc {
    format: String,
    #[serde(flatten)]
    body: DecompositionBody,
}

pub fn parse_decomposition(text: &str) -> Result<DecompositionDocument> {
    if looks_like_json(text) {
        let doc: DecompositionDoc = serde_json::from_str(text).map_err(json_syntax)?;
        if doc.format != DECOMPOSITION_HEADER {
            return Err(syntax(
                1,
                1,
                format!("expected format '{DECOMPOSITION_HEADER}'"),
            ));
        }
        return match doc.body {
            DecompositionBody::Chain { terms, .. } => ChainDecomposition::new(
                terms
                    .into_iter()
                    .map(|t| ChainTerm {
                        sequence: t.sequence,
                        coefficient: t.coefficient,
                    })
                    .collect(),
            )
            .map(DecompositionDocument::Chain),
            DecompositionBody::Symmetrized { n, terms } => Ok(DecompositionDocument::Symmetrized(
                SymmetrizedDecomposition {
                    n,
                    terms: terms
                        .into_iter()
                        .map(|t| SymmetrizedTerm {
                            sequence: t.sequence,
                            coefficient: t.coefficient,
                            self_dual: t.self_dual,
                        })
                        .collect(),
                },
            )),
        };
    }

    let mut kind: Option<&str> = None;
    let mut n: Option<i64> = None;
    let mut chain_terms = Vec::new();
    let mut sym_terms = Vec::new();
    for (line, toks) in body_lines(text, DECOMPOSITION_HEADER)? {
        let (col, keyword) = toks[0];
        match (keyword, toks.len()) {
            ("kind", 2) if kind.is_none() => match toks[1].1 {
                k @ ("chain" | "symmetrized") => kind = Some(k),
                other => return Err(syntax(line, toks[1].0, format!("unknown kind '{other}'"))),
            },
            ("N", 2) if n.is_none() => {
                n = Some(
                    toks[1]
                        .1
                        .parse()
                        .map_err(|_| syntax(line, toks[1].0, "N must be an integer"))?,
                );
            }
            ("term", len) => {
                let sequence: DegreeSequence = toks[1]
                    .1
                    .parse()
                    .map_err(|e: BettiError| syntax(line, toks[1].0, e.to_string()))?;
                let coefficient =
                    toks.get(2)
                        .and_then(|t| rational::parse(t.1))
                        .ok_or_else(|| {
                            syntax(
                                line,
                                toks.get(2).map_or(col, |t| t.0),
                                "expected a rational coefficient",
                            )
                        })?;
                match (kind, len) {
                    (Some("chain"), 3) => chain_terms.push(ChainTerm {
                        sequence,
                        coefficient,
                    }),
                    (Some("symmetrized"), 4) => {
                        let self_dual = match toks[3].1 {
                            "self-dual" => true,
                            "pair" => false,
                            other => {
                                return Err(syntax(
                                    line,
                                    toks[3].0,
                                    format!("expected 'pair' or 'self-dual', found '{other}'"),
                                ))
                            }
                        };
                        sym_terms.push(SymmetrizedTerm {
                            sequence,
                            coefficient,
                            self_dual,
                        });
                    }
                    (None, _) => return Err(syntax(line, col, "'kind' must precede terms")),
                    _ => return Err(syntax(line, col, "wrong number of fields for this kind")),
                }
            }
            _ => {
                return Err(syntax(
                    line,
                    col,
                    format!("unexpected line starting with '{keyword}'"),
                ))
            }
        }
    }
    match kind {
        Some("chain") => ChainDecomposition::new(chain_terms).map(DecompositionDocument::Chain),
        Some(_) => {
            let n = n.ok_or_else(|| syntax(1, 1, "symmetrized decomposition needs an 'N' line"))?;
            Ok(DecompositionDocument::Symmetrized(
                SymmetrizedDecomposition {
                    n,
                    terms: sym_terms,
                },
            ))
        }
        None => Err(syntax(1, 1, "missing 'kind' line")),
    }
}

fn degrees_token(d: &DegreeSequence) -> String {
    d.degrees()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn format_chain(chain: &ChainDecomposition) -> String {
    let mut out = format!("{DECOMPOSITION_HEADER}\nkind chain\n");
    for t in chain.terms() {
        out.push_str(&format!(
            "term {} {}\n",
            degrees_token(&t.sequence),
            rational::format(&t.coefficient)
        ));
    }
    out
}

pub fn format_symmetrized(sd: &SymmetrizedDecomposition) -> String {
    let mut out = format!("{DECOMPOSITION_HEADER}\nkind symmetrized\nN {}\n", sd.n);
    for t in &sd.terms {
        let flag = if t.self_dual { "self-dual" } else { "pair" };
        out.push_str(&format!(
            "term {} {} {flag}\n",
            degrees_token(&t.sequence),
            rational::format(&t.coefficient)
        ));
    }
    out
}

pub fn chain_to_json(chain: &ChainDecomposition) -> String {
    to_json(&DecompositionDoc {
        format: DECOMPOSITION_HEADER.to_string(),
        body: DecompositionBody::Chain {
            s: chain.length(),
            terms: chain
                .terms()
                .iter()
                .map(|t| ChainTermDoc {
                    sequence: t.sequence.clone(),
                    coefficient: t.coefficient.clone(),
                })
                .collect(),
        },
    })
}

pub fn symmetrized_to_json(sd: &SymmetrizedDecomposition) -> String {
    to_json(&DecompositionDoc {
        format: DECOMPOSITION_HEADER.to_string(),
        body: DecompositionBody::Symmetrized {
            n: sd.n,
            terms: sd
                .terms
                .iter()
                .map(|t| SymTermDoc {
                    sequence: t.sequence.clone(),
                    coefficient: t.coefficient.clone(),
                    self_dual: t.self_dual,
                })
                .collect(),
        },
    })
}

#[derive(Serialize)]
struct SrinivasanDoc {
    #[serde(with = "rational_string")]
    lower: Rational,
    #[serde(with = "rational_string")]
    upper: Rational,
}

#[derive(Serialize)]
struct FlagsDoc {
    theorem: Verdict,
    srinivasan_lower: Verdict,
    srinivasan_upper: Verdict,
    lower_formula: Verdict,
    mnz: Verdict,
    codim3: Verdict,
}

#[derive(Serialize)]
struct BoundsDoc {
    format: &'static str,
    s: usize,
    k: usize,
    min_shifts: Vec<i64>,
    max_shifts: Vec<i64>,
    #[serde(rename = "N")]
    n: i64,
    #[serde(with = "rational_string")]
    beta0: Rational,
    self_dual: Option<i64>,
    quasi_pure: bool,
    #[serde(with = "rational_string")]
    e: Rational,
    #[serde(with = "rational_string")]
    theorem_bound: Rational,
    srinivasan: Option<SrinivasanDoc>,
    #[serde(with = "rational_string")]
    lower_formula: Rational,
    n1: Option<i64>,
    #[serde(with = "optional_rational")]
    mnz_bound: Option<Rational>,
    #[serde(with = "optional_rational")]
    codim3_bound: Option<Rational>,
    flags: FlagsDoc,
}

pub fn bounds_report_to_json(report: &BoundsReport) -> String {
    let p = &report.profile;
    let f = &report.flags;
    to_json(&BoundsDoc {
        format: BOUNDS_FORMAT,
        s: p.s,
        k: p.k,
        min_shifts: p.min.clone(),
        max_shifts: p.max.clone(),
        n: p.n,
        beta0: report.beta0.clone(),
        self_dual: report.self_dual,
        quasi_pure: report.quasi_pure,
        e: report.multiplicity.clone(),
        theorem_bound: report.theorem_bound.clone(),
        srinivasan: report
            .srinivasan
            .as_ref()
            .map(|(lower, upper)| SrinivasanDoc {
                lower: lower.clone(),
                upper: upper.clone(),
            }),
        lower_formula: report.lower_formula.clone(),
        n1: report.n1,
        mnz_bound: report.mnz_bound.clone(),
        codim3_bound: report.codim3_bound.clone(),
        flags: FlagsDoc {
            theorem: f.theorem,
            srinivasan_lower: f.srinivasan_lower,
            srinivasan_upper: f.srinivasan_upper,
            lower_formula: f.lower_formula,
            mnz: f.mnz,
            codim3: f.codim3,
        },
    })
}

#[derive(Serialize)]
struct SurveyDoc<'a> {
    format: &'static str,
    #[serde(flatten)]
    result: &'a SurveyResult,
}

pub fn survey_to_json(result: &SurveyResult) -> String {
    to_json(&SurveyDoc {
        format: SURVEY_FORMAT,
        result,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::{frac, int};

    #[test]
    fn parse_examples() {
        let t = parse_table("betti v1\n0 0 1\n1 2 3\n1 7 2\n2 3 2\n2 8 3\n3 10 1\n").unwrap();
        assert_eq!(t, fixtures::e20_example());
        let t = parse_table("betti v1\n0 0 1\n").unwrap();
        assert_eq!(t.num_entries(), 1);
        let t = parse_table("betti v1\n0 0 1/2\n1 1 1/2\n1 2 1/2\n2 3 1/2\n").unwrap();
        assert_eq!(t.value(1, 2), frac(1, 2));
    }

    #[test]
    fn parse_tolerates_comments_and_blank_lines() {
        let text = "# header comment\n\nbetti v1\n0 0 1   # generator\n\n1 1 1\n";
        let t = parse_table(text).unwrap();
        assert_eq!(t.num_entries(), 2);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            parse_table("betti v2\n0 0 1\n"),
            Err(BettiError::Syntax {
                line: 1,
                column: 1,
                message: "expected header 'betti v1'".into()
            })
        );
        match parse_table("betti v1\n0 0 1\n1  x 3\n") {
            Err(BettiError::Syntax {
                line: 3, column: 4, ..
            }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_table("betti v1\n0 0 1.5\n") {
            Err(BettiError::Syntax {
                line: 2, column: 5, ..
            }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_table("betti v1\n0 0\n") {
            Err(BettiError::Syntax { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_table(""),
            Err(BettiError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_table("betti v1\n0 0 1\n2 5 1\n"),
            Err(BettiError::BrokenChain { .. })
        ));
        assert!(matches!(
            parse_table("{\"format\": 3}"),
            Err(BettiError::Syntax { .. })
        ));
    }

    #[test]
    fn json_table_variant() {
        let t = fixtures::complete_intersection_224();
        let json = table_to_json(&t);
        assert!(json.contains("\"value\": \"2\""));
        assert_eq!(parse_table(&json).unwrap(), t);
        let t = parse_table(r#"{"format":"betti v1","entries":[{"i":0,"j":0,"value":1},{"i":1,"j":1,"value":"1"}]}"#)
            .unwrap();
        assert_eq!(t.value(1, 1), int(1));
    }

    #[test]
    fn canonical_text_output() {
        let t = BettiTable::new([
            (1, 1, frac(2, 4)),
            (0, 0, frac(1, 2)),
            (2, 3, frac(1, 2)),
            (1, 2, frac(1, 2)),
        ])
        .unwrap();
        assert_eq!(
            format_table(&t),
            "betti v1\n0 0 1/2\n1 1 1/2\n1 2 1/2\n2 3 1/2\n"
        );
    }

    #[test]
    fn decomposition_documents() {
        let text = "betti-decomposition v1\nkind symmetrized\nN 8\nterm 0,2,4,8 32 pair\nterm 0,2,6,8 16 self-dual\n";
        let doc = parse_decomposition(text).unwrap();
        let DecompositionDocument::Symmetrized(sd) = &doc else {
            panic!("wrong kind")
        };
        assert_eq!(sd.n, 8);
        assert_eq!(format_symmetrized(sd), text);
        assert_eq!(parse_decomposition(&symmetrized_to_json(sd)).unwrap(), doc);

        let text = "betti-decomposition v1\nkind chain\nterm 0,1,3 2\nterm 0,2,3 2\n";
        let DecompositionDocument::Chain(c) = parse_decomposition(text).unwrap() else {
            panic!("wrong kind")
        };
        assert_eq!(format_chain(&c), text);
        assert_eq!(
            parse_decomposition(&chain_to_json(&c)).unwrap(),
            DecompositionDocument::Chain(c)
        );
    }

    #[test]
    fn decomposition_errors() {
        let bad = [
            "betti-decomposition v1\nterm 0,1,3 2\n",
            "betti-decomposition v1\nkind symmetrized\nterm 0,1,3 2 pair\n",
            "betti-decomposition v1\nkind chain\nterm 0,1,3 2 pair\n",
            "betti-decomposition v1\nkind symmetrized\nN 3\nterm 0,1,3 2 both\n",
            "betti-decomposition v1\nkind other\n",
            "betti-decomposition v1\nkind chain\nterm 0,3,1 2\n",
        ];
        for text in bad {
            assert!(
                matches!(parse_decomposition(text), Err(BettiError::Syntax { .. })),
                "{text}"
            );
        }
        assert!(matches!(
            parse_decomposition("betti-decomposition v1\nkind chain\nterm 0,2 1\nterm 0,1 1\n"),
            Err(BettiError::InvalidDecomposition(_))
        ));
    }

    #[test]
    fn bounds_json_shape() {
        let r = crate::bounds::bounds_report(&fixtures::e20_example()).unwrap();
        let json = bounds_report_to_json(&r);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["e"], "20");
        assert_eq!(v["theorem_bound"], "125/3");
        assert_eq!(v["lower_formula"], "80/3");
        assert_eq!(v["srinivasan"], serde_json::Value::Null);
        assert_eq!(v["flags"]["lower_formula"], "violated");
        assert_eq!(v["N"], 10);
    }
}
