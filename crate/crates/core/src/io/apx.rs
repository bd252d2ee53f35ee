use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::framework::Framework;

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && !name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '(' | ')' | ',' | '.' | '%'))
}

/// Parses `arg(NAME).` and `att(A,B).` statements. `%` starts a comment;
/// whitespace between tokens is ignored and a line may hold several
/// statements.
pub fn parse_apx(text: &str) -> Result<Framework> {
    let mut names: Vec<String> = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    let mut attacks: Vec<(usize, String, String)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('%').next().unwrap_or("");
        let mut rest = line.trim();
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::parse(line_no, format!("expected arg(..) or att(..,..), found {rest:?}")))?;
            let keyword = rest[..open].trim();
            let close = rest[open..]
                .find(')')
                .map(|c| open + c)
                .ok_or_else(|| Error::parse(line_no, "missing closing parenthesis"))?;
            let inner = &rest[open + 1..close];
            let after = rest[close + 1..].trim_start();
            rest = after
                .strip_prefix('.')
                .ok_or_else(|| Error::parse(line_no, "statement must end with '.'"))?
                .trim_start();
            match keyword {
                "arg" => {
                    let name = inner.trim();
                    if !valid_name(name) {
                        return Err(Error::parse(line_no, format!("invalid argument name {name:?}")));
                    }
                    if !seen.insert(name.to_string()) {
                        return Err(Error::parse(line_no, format!("duplicate argument {name}")));
                    }
                    names.push(name.to_string());
                }
                "att" => {
                    let mut parts = inner.split(',');
                    let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
                        return Err(Error::parse(line_no, "att takes exactly two arguments"));
                    };
                    attacks.push((line_no, a.trim().to_string(), b.trim().to_string()));
                }
                other => return Err(Error::parse(line_no, format!("unknown statement {other:?}"))),
            }
        }
    }

    for (line_no, a, b) in &attacks {
        for name in [a, b] {
            if !seen.contains(name) {
                return Err(Error::parse(*line_no, format!("attack names undeclared argument {name:?}")));
            }
        }
    }
    Framework::new(names, attacks.into_iter().map(|(_, a, b)| (a, b)))
}

/// Canonical APX text: argument lines in argument order, then attack lines
/// sorted by (attacker name, target name).
pub fn emit_apx(f: &Framework) -> String {
    let mut out = String::new();
    for name in f.names() {
        let _ = writeln!(out, "arg({name}).");
    }
    let mut attacks: Vec<(&str, &str)> = f.attacks().iter().map(|&(a, b)| (f.name(a), f.name(b))).collect();
    attacks.sort_unstable();
    for (a, b) in attacks {
        let _ = writeln!(out, "att({a},{b}).");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_basic_input() {
        let f = parse_apx("arg(a).").unwrap();
        assert_eq!(f.names(), ["a"]);
        assert!(f.attacks().is_empty());

        let f = parse_apx("arg(a).\narg(b).\natt(a,b).").unwrap();
        assert_eq!(f, Framework::new(["a", "b"], [("a", "b")]).unwrap());
    }

    #[test]
    fn tolerates_comments_and_spacing() {
        let f = parse_apx("% header\n arg( a ) . arg(b).  % two\n\natt( a , b ).\n").unwrap();
        assert_eq!(f, Framework::new(["a", "b"], [("a", "b")]).unwrap());
    }

    #[test]
    fn reports_undeclared_and_duplicate_arguments() {
        assert!(matches!(parse_apx("att(a,b)."), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_apx("arg(a).\narg(a)."), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_apx("arg(a)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_apx("foo(a)."), Err(Error::Parse { .. })));
        assert!(matches!(parse_apx("arg(a).\natt(a)."), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn canonical_emission() {
        assert_eq!(emit_apx(&Framework::empty()), "");
        let f = Framework::new(["a", "b"], [("b", "a")]).unwrap();
        assert_eq!(emit_apx(&f), "arg(a).\narg(b).\natt(b,a).\n");
        let f = Framework::new(["b", "a"], [("b", "b"), ("a", "b")]).unwrap();
        assert_eq!(emit_apx(&f), "arg(b).\narg(a).\natt(a,b).\natt(b,b).\n");
        assert_eq!(parse_apx(&emit_apx(&f)).unwrap(), f);
    }
}
