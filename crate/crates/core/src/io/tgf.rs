use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::framework::Framework;

/// Parses Trivial Graph Format: one node id per line (an optional label after
/// the id is ignored), a `#` line, then one `from to` edge per line.
pub fn parse_tgf(text: &str) -> Result<Framework> {
    let mut names: Vec<String> = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut in_edges = false;

    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line == "#" {
            if in_edges {
                return Err(Error::parse(line_no, "second '#' separator"));
            }
            in_edges = true;
            continue;
        }
        let mut tokens = line.split_whitespace();
        if in_edges {
            let (Some(a), Some(b)) = (tokens.next(), tokens.next()) else {
                return Err(Error::parse(line_no, "edge lines need two node ids"));
            };
            for id in [a, b] {
                if !seen.contains(id) {
                    return Err(Error::parse(line_no, format!("edge references unknown node {id}")));
                }
            }
            edges.push((a.to_string(), b.to_string()));
        } else {
            let id = tokens.next().expect("line is not blank");
            if !seen.insert(id.to_string()) {
                return Err(Error::parse(line_no, format!("duplicate node {id}")));
            }
            names.push(id.to_string());
        }
    }
    Framework::new(names, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let f = parse_tgf("1\n2\n#\n1 2").unwrap();
        assert_eq!(f, Framework::new(["1", "2"], [("1", "2")]).unwrap());
        assert_eq!(parse_tgf("#").unwrap(), Framework::empty());
        let f = parse_tgf("1\n#\n1 1").unwrap();
        assert!(f.is_self_attacking(0));
    }

    #[test]
    fn labels_are_ignored() {
        let f = parse_tgf("1 first\n2 second\n#\n2 1 edge label\n").unwrap();
        assert_eq!(f, Framework::new(["1", "2"], [("2", "1")]).unwrap());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_tgf("1\n#\n1 2"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_tgf("1\n1\n#"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_tgf("1\n#\n1"), Err(Error::Parse { .. })));
    }
}
