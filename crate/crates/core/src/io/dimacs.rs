use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::logic::{CnfFormula, Literal, Qbf2Formula};

/// Name of DIMACS variable `k`.
pub fn dimacs_var_name(k: usize) -> String {
    format!("x{k}")
}

/// Resolves a `--target` value, accepting either `k` or `x<k>`.
pub fn dimacs_target(raw: &str) -> String {
    if raw.parse::<usize>().is_ok() {
        dimacs_var_name(raw.parse().expect("checked"))
    } else {
        raw.to_string()
    }
}

struct Header {
    vars: usize,
    clauses: usize,
}

fn parse_header(line_no: usize, line: &str) -> Result<Header> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    match tokens.as_slice() {
        ["p", "cnf", v, c] => {
            let vars = v
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad variable count {v}")))?;
            let clauses = c
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad clause count {c}")))?;
            Ok(Header { vars, clauses })
        }
        _ => Err(Error::parse(line_no, "expected 'p cnf <vars> <clauses>'")),
    }
}

/// Integers of a 0-terminated line, without the terminator.
fn zero_terminated(line_no: usize, tokens: &[&str], vars: usize) -> Result<Vec<i64>> {
    let (last, body) = tokens
        .split_last()
        .ok_or_else(|| Error::parse(line_no, "empty line"))?;
    if *last != "0" {
        return Err(Error::parse(line_no, "line must end with 0"));
    }
    body.iter()
        .map(|t| {
            let v: i64 = t
                .parse()
                .map_err(|_| Error::parse(line_no, format!("not an integer: {t}")))?;
            if v == 0 {
                return Err(Error::parse(line_no, "0 before the end of the line"));
            }
            if v.unsigned_abs() as usize > vars {
                return Err(Error::parse(line_no, format!("variable {} exceeds the declared {vars}", v.abs())));
            }
            Ok(v)
        })
        .collect()
}

fn clause_from(line_no: usize, lits: &[i64], var_of: impl Fn(usize) -> Option<usize>) -> Result<Vec<Literal>> {
    if lits.is_empty() {
        return Err(Error::parse(line_no, "empty clause"));
    }
    let present: HashSet<i64> = lits.iter().copied().collect();
    if let Some(v) = lits.iter().find(|&&v| present.contains(&-v)) {
        return Err(Error::parse(line_no, format!("tautological clause on variable {}", v.abs())));
    }
    lits.iter()
        .map(|&v| {
            let var = var_of(v.unsigned_abs() as usize)
                .ok_or_else(|| Error::parse(line_no, format!("variable {} is not quantified", v.abs())))?;
            Ok(Literal { var, negated: v < 0 })
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Stage {
    Header,
    Universal,
    Existential,
    Clauses,
}

/// Parses a QDIMACS file with at most one `a` block followed by at most one
/// `e` block. Variable `k` becomes `x<k>`; universal variables come first in
/// `a`-line order, then existential ones in `e`-line order.
pub fn parse_qdimacs(text: &str) -> Result<Qbf2Formula> {
    let mut header: Option<Header> = None;
    let mut stage = Stage::Header;
    let mut universal: Vec<usize> = Vec::new();
    let mut existential: Vec<usize> = Vec::new();
    let mut raw_clauses: Vec<(usize, Vec<i64>)> = Vec::new();
    let mut quantified: HashSet<usize> = HashSet::new();

    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(Error::parse(line_no, "second problem line"));
            }
            header = Some(parse_header(line_no, trimmed)?);
            continue;
        }
        let vars = header
            .as_ref()
            .ok_or_else(|| Error::parse(line_no, "missing 'p cnf' header"))?
            .vars;
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens[0] {
            q @ ("a" | "e") => {
                let next = if q == "a" { Stage::Universal } else { Stage::Existential };
                let allowed = match next {
                    Stage::Universal => matches!(stage, Stage::Header | Stage::Universal),
                    _ => matches!(stage, Stage::Header | Stage::Universal | Stage::Existential),
                };
                if !allowed {
                    return Err(Error::parse(
                        line_no,
                        "quantifier prefix must be one 'a' block followed by one 'e' block, before the clauses",
                    ));
                }
                stage = next;
                for v in zero_terminated(line_no, &tokens[1..], vars)? {
                    if v < 0 {
                        return Err(Error::parse(line_no, "negative variable in quantifier line"));
                    }
                    let v = v as usize;
                    if !quantified.insert(v) {
                        return Err(Error::parse(line_no, format!("variable {v} quantified twice")));
                    }
                    if next == Stage::Universal {
                        universal.push(v);
                    } else {
                        existential.push(v);
                    }
                }
            }
            _ => {
                stage = Stage::Clauses;
                raw_clauses.push((line_no, zero_terminated(line_no, &tokens, vars)?));
            }
        }
    }

    let header = header.ok_or_else(|| Error::parse(0, "missing 'p cnf' header"))?;
    if raw_clauses.len() != header.clauses {
        return Err(Error::parse(
            0,
            format!("header declares {} clauses, found {}", header.clauses, raw_clauses.len()),
        ));
    }
    let order: Vec<usize> = universal.iter().chain(&existential).copied().collect();
    let var_of = |k: usize| order.iter().position(|&v| v == k);
    let clauses = raw_clauses
        .iter()
        .map(|(line_no, lits)| clause_from(*line_no, lits, var_of))
        .collect::<Result<Vec<_>>>()?;
    Qbf2Formula::new(
        universal.iter().map(|&k| dimacs_var_name(k)).collect(),
        existential.iter().map(|&k| dimacs_var_name(k)).collect(),
        clauses,
    )
}

/// Parses a DIMACS CNF; variables `1..=n` become `x1..xn` in that order and
/// clause order is file order.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<Header> = None;
    let mut raw_clauses: Vec<(usize, Vec<i64>)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(Error::parse(line_no, "second problem line"));
            }
            header = Some(parse_header(line_no, trimmed)?);
            continue;
        }
        let vars = header
            .as_ref()
            .ok_or_else(|| Error::parse(line_no, "missing 'p cnf' header"))?
            .vars;
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        raw_clauses.push((line_no, zero_terminated(line_no, &tokens, vars)?));
    }
    let header = header.ok_or_else(|| Error::parse(0, "missing 'p cnf' header"))?;
    if raw_clauses.len() != header.clauses {
        return Err(Error::parse(
            0,
            format!("header declares {} clauses, found {}", header.clauses, raw_clauses.len()),
        ));
    }
    let clauses = raw_clauses
        .iter()
        .map(|(line_no, lits)| clause_from(*line_no, lits, |k| Some(k - 1)))
        .collect::<Result<Vec<_>>>()?;
    CnfFormula::new((1..=header.vars).map(dimacs_var_name).collect(), clauses)
}

fn emit_clauses(out: &mut String, phi: &CnfFormula) {
    for clause in phi.clauses() {
        for lit in clause {
            let k = lit.var as i64 + 1;
            let _ = write!(out, "{} ", if lit.negated { -k } else { k });
        }
        out.push_str("0\n");
    }
}

/// QDIMACS text numbering variables `1..` in formula order (universal first).
pub fn emit_qdimacs(phi: &Qbf2Formula) -> String {
    let matrix = phi.matrix();
    let mut out = format!("p cnf {} {}\n", matrix.num_vars(), matrix.clauses().len());
    let block = |range: std::ops::Range<usize>| {
        range.map(|v| format!("{} ", v + 1)).collect::<String>()
    };
    if phi.num_universal() > 0 {
        let _ = writeln!(out, "a {}0", block(phi.universal()));
    }
    if phi.num_existential() > 0 {
        let _ = writeln!(out, "e {}0", block(phi.existential()));
    }
    emit_clauses(&mut out, matrix);
    out
}

/// DIMACS text numbering variables `1..` in formula order.
pub fn emit_dimacs(phi: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", phi.num_vars(), phi.clauses().len());
    emit_clauses(&mut out, phi);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::qbf2_valid;

    const MONOTONE_EXAMPLE: &str = "p cnf 3 2\na 3 0\ne 1 2 0\n1 2 3 0\n-1 -2 -3 0";

    #[test]
    fn monotone_example_fixture() {
        let q = parse_qdimacs(MONOTONE_EXAMPLE).unwrap();
        assert_eq!(q.to_string(), "forall [x3] exists [x1 x2]: (x3 | x1 | x2) & (-x3 | -x1 | -x2)");
        assert!(qbf2_valid(&q).unwrap());
    }

    #[test]
    fn existential_only() {
        let q = parse_qdimacs("p cnf 1 1\ne 1 0\n1 0").unwrap();
        assert_eq!(q.num_universal(), 0);
        assert!(qbf2_valid(&q).unwrap());
    }

    #[test]
    fn qdimacs_errors() {
        let err = |s: &str| parse_qdimacs(s).unwrap_err();
        assert!(matches!(err("p cnf 1 1\ne 1 0\n1 -1 0"), Error::Parse { line: 3, .. }));
        assert!(matches!(err("p cnf 2 0\ne 1 0\na 2 0"), Error::Parse { line: 3, .. }));
        assert!(matches!(err("p cnf 2 1\na 1 0\n1 0\ne 2 0"), Error::Parse { line: 4, .. }));
        assert!(matches!(err("p cnf 2 1\na 1 0\n1 2"), Error::Parse { line: 3, .. }));
        assert!(matches!(err("p cnf 2 1\na 1 0\n1 2 0"), Error::Parse { line: 3, .. }));
        assert!(matches!(err("p cnf 1 2\na 1 0\n1 0"), Error::Parse { .. }));
        assert!(matches!(err("p cnf 1 1\na 1 0\n0"), Error::Parse { line: 3, .. }));
        assert!(matches!(err("a 1 0"), Error::Parse { line: 1, .. }));
    }

    #[test]
    fn qdimacs_round_trip() {
        let q = parse_qdimacs(MONOTONE_EXAMPLE).unwrap();
        let again = parse_qdimacs(&emit_qdimacs(&q)).unwrap();
        assert_eq!(again.matrix().clauses(), q.matrix().clauses());
        assert_eq!(again.num_universal(), 1);
    }

    #[test]
    fn dimacs_parse_and_emit() {
        let phi = parse_dimacs("c comment\np cnf 3 2\n1 -2 0\n3 0\n").unwrap();
        assert_eq!(phi.to_string(), "(x1 | -x2) & (x3)");
        assert_eq!(emit_dimacs(&phi), "p cnf 3 2\n1 -2 0\n3 0\n");
        assert_eq!(dimacs_target("2"), "x2");
        assert_eq!(dimacs_target("x2"), "x2");
    }
}
