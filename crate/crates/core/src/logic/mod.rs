//! Propositional CNF, two-block QBFs and MINSAT instances, together with
//! brute-force oracles and instance generators.
//!
//! Models are identified with their sets of true atoms.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

mod generate;
mod oracle;

pub use generate::{enumerate_qbf2, CnfFamily, QbfFamily};
pub use oracle::{minimal_models, minsat_member, models, qbf2_valid, satisfies, ORACLE_MAX_VARS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    /// Index into the owning formula's variable list.
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, negated: false }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, negated: true }
    }
}

/// A CNF formula. Clauses are nonempty, non-tautological literal sets kept
/// sorted by variable; clause order is preserved as given.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    variables: Vec<String>,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    pub fn new(variables: Vec<String>, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, v) in variables.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::usage("variable names must be nonempty"));
            }
            if seen.insert(v.as_str(), i).is_some() {
                return Err(Error::usage(format!("duplicate variable {v}")));
            }
        }
        let mut normalised = Vec::with_capacity(clauses.len());
        for (ci, mut clause) in clauses.into_iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::usage(format!("clause {} is empty", ci + 1)));
            }
            clause.sort_unstable();
            clause.dedup();
            for lit in &clause {
                if lit.var >= variables.len() {
                    return Err(Error::usage(format!(
                        "clause {} references unknown variable index {}",
                        ci + 1,
                        lit.var
                    )));
                }
            }
            if clause.windows(2).any(|w| w[0].var == w[1].var) {
                return Err(Error::usage(format!("clause {} is tautological", ci + 1)));
            }
            normalised.push(clause);
        }
        Ok(CnfFormula {
            variables,
            clauses: normalised,
        })
    }

    /// Builds a formula from literal strings; `-x` denotes the negation of `x`.
    pub fn from_names(variables: &[&str], clauses: &[&[&str]]) -> Result<Self> {
        let names: Vec<String> = variables.iter().map(|s| s.to_string()).collect();
        let parsed = parse_clauses(&names, clauses)?;
        CnfFormula::new(names, parsed)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn var_name(&self, var: usize) -> &str {
        &self.variables[var]
    }

    /// Whether the atoms named in `model` (all others false) satisfy every clause.
    pub fn is_model<S: AsRef<str>>(&self, model: &[S]) -> Result<bool> {
        let mut truth = vec![false; self.num_vars()];
        for name in model {
            let name = name.as_ref();
            let v = self
                .var_index(name)
                .ok_or_else(|| Error::usage(format!("unknown variable {name}")))?;
            truth[v] = true;
        }
        Ok(self
            .clauses
            .iter()
            .all(|c| c.iter().any(|l| truth[l.var] != l.negated)))
    }

    pub fn is_monotone(&self) -> bool {
        self.monotone_partition().is_some()
    }

    /// Indices of the all-positive and all-negative clauses, or `None` if
    /// some clause mixes polarities.
    pub fn monotone_partition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for (i, c) in self.clauses.iter().enumerate() {
            if c.iter().all(|l| !l.negated) {
                positive.push(i);
            } else if c.iter().all(|l| l.negated) {
                negative.push(i);
            } else {
                return None;
            }
        }
        Some((positive, negative))
    }

    pub fn literal_name(&self, lit: Literal) -> String {
        if lit.negated {
            format!("-{}", self.variables[lit.var])
        } else {
            self.variables[lit.var].clone()
        }
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return f.write_str("T");
        }
        let rendered: Vec<String> = self
            .clauses
            .iter()
            .map(|c| {
                let lits: Vec<String> = c.iter().map(|&l| self.literal_name(l)).collect();
                format!("({})", lits.join(" | "))
            })
            .collect();
        f.write_str(&rendered.join(" & "))
    }
}

fn parse_clauses(names: &[String], clauses: &[&[&str]]) -> Result<Vec<Vec<Literal>>> {
    clauses
        .iter()
        .map(|c| {
            c.iter()
                .map(|tok| {
                    let (negated, name) = match tok.strip_prefix('-') {
                        Some(rest) => (true, rest),
                        None => (false, *tok),
                    };
                    let var = names
                        .iter()
                        .position(|n| n == name)
                        .ok_or_else(|| Error::usage(format!("unknown variable {name}")))?;
                    Ok(Literal { var, negated })
                })
                .collect()
        })
        .collect()
}

/// `∀Y ∃Z φ`. The matrix's variables are exactly `Y` followed by `Z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Qbf2Formula {
    universal: usize,
    matrix: CnfFormula,
}

impl Qbf2Formula {
    /// Literal variable indices refer to `universal ++ existential`.
    pub fn new(universal: Vec<String>, existential: Vec<String>, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        let n_univ = universal.len();
        let mut variables = universal;
        variables.extend(existential);
        Ok(Qbf2Formula {
            universal: n_univ,
            matrix: CnfFormula::new(variables, clauses)?,
        })
    }

    pub fn from_names(universal: &[&str], existential: &[&str], clauses: &[&[&str]]) -> Result<Self> {
        let mut names: Vec<String> = universal.iter().map(|s| s.to_string()).collect();
        names.extend(existential.iter().map(|s| s.to_string()));
        let parsed = parse_clauses(&names, clauses)?;
        Ok(Qbf2Formula {
            universal: universal.len(),
            matrix: CnfFormula::new(names, parsed)?,
        })
    }

    pub fn matrix(&self) -> &CnfFormula {
        &self.matrix
    }

    pub fn num_universal(&self) -> usize {
        self.universal
    }

    pub fn num_existential(&self) -> usize {
        self.matrix.num_vars() - self.universal
    }

    pub fn universal(&self) -> std::ops::Range<usize> {
        0..self.universal
    }

    pub fn existential(&self) -> std::ops::Range<usize> {
        self.universal..self.matrix.num_vars()
    }

    pub fn is_universal(&self, var: usize) -> bool {
        var < self.universal
    }

    /// Every clause contains a literal over an existential variable.
    pub fn every_clause_touches_existential(&self) -> bool {
        self.matrix
            .clauses()
            .iter()
            .all(|c| c.iter().any(|l| !self.is_universal(l.var)))
    }
}

impl fmt::Display for Qbf2Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.matrix.variables();
        let univ = &names[..self.universal];
        let exist = &names[self.universal..];
        write!(
            f,
            "forall [{}] exists [{}]: {}",
            univ.join(" "),
            exist.join(" "),
            self.matrix
        )
    }
}

/// Is `target` in some subset-minimal model of `formula`?
///
/// `clause_order` is a total order on the clauses (a permutation of clause
/// indices, smallest first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinsatInstance {
    formula: CnfFormula,
    target: usize,
    clause_order: Vec<usize>,
}

impl MinsatInstance {
    /// Clause order defaults to input order.
    pub fn new(formula: CnfFormula, target: &str) -> Result<Self> {
        let target = formula
            .var_index(target)
            .ok_or_else(|| Error::usage(format!("target {target} is not a variable of the formula")))?;
        let clause_order = (0..formula.clauses().len()).collect();
        Ok(MinsatInstance {
            formula,
            target,
            clause_order,
        })
    }

    pub fn with_clause_order(mut self, order: Vec<usize>) -> Result<Self> {
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != (0..self.formula.clauses().len()).collect::<Vec<_>>() {
            return Err(Error::usage("clause order must be a permutation of the clause indices"));
        }
        self.clause_order = order;
        Ok(self)
    }

    pub fn formula(&self) -> &CnfFormula {
        &self.formula
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn target_name(&self) -> &str {
        self.formula.var_name(self.target)
    }

    pub fn clause_order(&self) -> &[usize] {
        &self.clause_order
    }
}

impl fmt::Display for MinsatInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vars [{}] target {}: {}",
            self.formula.variables().join(" "),
            self.target_name(),
            self.formula
        )?;
        if self.clause_order.iter().enumerate().any(|(i, &c)| i != c) {
            let order: Vec<String> = self.clause_order.iter().map(|c| format!("c{}", c + 1)).collect();
            write!(f, " order [{}]", order.join(" < "))?;
        }
        Ok(())
    }
}

/// A set of variables of one formula, as a bit mask (at most 64 variables).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VarSet(pub u64);

impl VarSet {
    pub fn contains(self, var: usize) -> bool {
        var < 64 && self.0 >> var & 1 == 1
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&v| self.0 >> v & 1 == 1)
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn names(self, formula: &CnfFormula) -> Vec<&str> {
        self.iter().map(|v| formula.var_name(v)).collect()
    }
}

/// Canonical order: lexicographic over the increasing member lists.
impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
