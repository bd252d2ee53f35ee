//! Hardness reductions from two-block QBFs and MINSAT to argumentation
//! frameworks.
//!
//! Argument names: `phi`, `phi_bar`, `phi_p`, `phi_n`, `b`, `b_bar`, `g`, `q`,
//! `u`, `v`, clause arguments `c<i>` (negative clauses `nc<i>` where the
//! construction separates them), `E<i>`, a variable `x` as `x`, its negation
//! as `nx`, primed copies as `x_p` / `nx_p`. Clause numbers are 1-based
//! positions in the input.
//!
//! Each construction exists in a `literal` variant, built from the classic
//! attack sets verbatim, and a `repaired` variant (the default) that adjusts
//! the attacks for which the literal version breaks its own correctness or
//! distance claims. Where the literal construction is already consistent
//! both variants coincide.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::framework::{ArgSet, Framework};
use crate::graph_classes::{verify_deletion, GraphClass};
use crate::logic::{MinsatInstance, Qbf2Formula};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Literal,
    #[default]
    Repaired,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::Literal, Variant::Repaired];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Literal => "literal",
            Variant::Repaired => "repaired",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "literal" => Ok(Variant::Literal),
            "repaired" => Ok(Variant::Repaired),
            _ => Err(Error::usage(format!("unknown variant {s}"))),
        }
    }
}

/// A claimed deletion set together with whether it verified at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionClaim {
    pub class: GraphClass,
    pub deletion_set: ArgSet,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Qbf(Qbf2Formula),
    Minsat(MinsatInstance),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Qbf(q) => q.fmt(f),
            Source::Minsat(m) => m.fmt(f),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReductionArtifact {
    pub framework: Framework,
    /// 1 to 6.
    pub reduction: u8,
    pub variant: Variant,
    /// Role (e.g. `phi`, `x_alpha`) to argument name.
    pub query_args: BTreeMap<String, String>,
    pub claims: Vec<DeletionClaim>,
    pub source: Source,
}

/// JSON sidecar describing an artifact.
#[derive(Clone, Debug, Serialize)]
pub struct Sidecar {
    pub reduction_id: u8,
    pub variant: Variant,
    pub query_args: BTreeMap<String, String>,
    pub claimed_class: Option<GraphClass>,
    pub claimed_deletion_set: Option<Vec<String>>,
    pub claims: Vec<SidecarClaim>,
    pub source: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SidecarClaim {
    pub class: GraphClass,
    pub deletion_set: Vec<String>,
    pub verified: bool,
}

impl ReductionArtifact {
    /// Argument name playing `role`; panics if the role is absent.
    pub fn query(&self, role: &str) -> &str {
        self.query_args
            .get(role)
            .unwrap_or_else(|| panic!("reduction {} has no query argument {role}", self.reduction))
    }

    pub fn claim(&self, class: GraphClass) -> Option<&DeletionClaim> {
        self.claims.iter().find(|c| c.class == class)
    }

    pub fn claimed_class(&self) -> Option<GraphClass> {
        self.claims.first().map(|c| c.class)
    }

    pub fn sidecar(&self) -> Sidecar {
        let names = |s: &ArgSet| -> Vec<String> {
            self.framework.names_of(s).into_iter().map(String::from).collect()
        };
        Sidecar {
            reduction_id: self.reduction,
            variant: self.variant,
            query_args: self.query_args.clone(),
            claimed_class: self.claimed_class(),
            claimed_deletion_set: self.claims.first().map(|c| names(&c.deletion_set)),
            claims: self
                .claims
                .iter()
                .map(|c| SidecarClaim {
                    class: c.class,
                    deletion_set: names(&c.deletion_set),
                    verified: c.holds,
                })
                .collect(),
            source: self.source.to_string(),
        }
    }
}

/// Incremental framework construction by name.
struct Builder {
    names: Vec<String>,
    index: HashMap<String, usize>,
    attacks: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            names: Vec::new(),
            index: HashMap::new(),
            attacks: Vec::new(),
        }
    }

    fn arg(&mut self, name: impl Into<String>) -> Result<usize> {
        let name = name.into();
        if self.index.contains_key(&name) {
            return Err(Error::usage(format!(
                "argument name {name} is used twice; rename the input variables"
            )));
        }
        let i = self.names.len();
        self.index.insert(name.clone(), i);
        self.names.push(name);
        Ok(i)
    }

    fn att(&mut self, a: usize, b: usize) {
        self.attacks.push((a, b));
    }

    fn mutual(&mut self, a: usize, b: usize) {
        self.attacks.push((a, b));
        self.attacks.push((b, a));
    }

    fn finish(self) -> Result<Framework> {
        Framework::from_indices(self.names, self.attacks)
    }
}

fn neg_name(var: &str) -> String {
    format!("n{var}")
}

fn primed(name: &str) -> String {
    format!("{name}_p")
}

/// Positive and negative argument of every variable.
struct LiteralArgs {
    pos: Vec<usize>,
    neg: Vec<usize>,
}

impl LiteralArgs {
    fn add(b: &mut Builder, vars: &[String]) -> Result<Self> {
        let mut pos = Vec::with_capacity(vars.len());
        let mut neg = Vec::with_capacity(vars.len());
        for v in vars {
            pos.push(b.arg(v.clone())?);
            neg.push(b.arg(neg_name(v))?);
        }
        Ok(LiteralArgs { pos, neg })
    }

    fn of(&self, var: usize, negated: bool) -> usize {
        if negated {
            self.neg[var]
        } else {
            self.pos[var]
        }
    }
}

fn finish_artifact(
    framework: Framework,
    reduction: u8,
    variant: Variant,
    query: &[(&str, &str)],
    claims: Vec<(GraphClass, Vec<&str>)>,
    source: Source,
) -> Result<ReductionArtifact> {
    let mut checked = Vec::with_capacity(claims.len());
    for (class, members) in claims {
        let deletion_set = framework.set_from_names(members)?;
        let holds = verify_deletion(&framework, class, &deletion_set)?;
        if !holds && variant == Variant::Repaired {
            return Err(Error::usage(format!(
                "reduction {reduction} ({variant}): claimed {class} deletion set does not verify"
            )));
        }
        checked.push(DeletionClaim {
            class,
            deletion_set,
            holds,
        });
    }
    let query_args = query
        .iter()
        .map(|&(role, name)| (role.to_string(), name.to_string()))
        .collect();
    Ok(ReductionArtifact {
        framework,
        reduction,
        variant,
        query_args,
        claims: checked,
        source,
    })
}

/// Skeptical preferred acceptance of `phi` for monotone QBFs; `F - {phi}` is bipartite.
///
/// `b` attacks the negative and `b_bar` the positive literal arguments of the
/// existential variables (literal variant: of all variables). Positive
/// clauses are `c<i>`, negative ones `nc<i>`.
pub fn reduce1(phi: &Qbf2Formula, variant: Variant) -> Result<ReductionArtifact> {
    let matrix = phi.matrix();
    let (positive, negative) = matrix
        .monotone_partition()
        .ok_or_else(|| Error::usage("reduction 1 requires a monotone matrix"))?;
    let mut b = Builder::new();
    let phi_arg = b.arg("phi")?;
    let b_arg = b.arg("b")?;
    let b_bar = b.arg("b_bar")?;
    let mut clause_args = vec![0; matrix.clauses().len()];
    for &i in &positive {
        clause_args[i] = b.arg(format!("c{}", i + 1))?;
    }
    for &i in &negative {
        clause_args[i] = b.arg(format!("nc{}", i + 1))?;
    }
    let lits = LiteralArgs::add(&mut b, matrix.variables())?;

    for &c in &clause_args {
        b.att(c, phi_arg);
    }
    b.att(phi_arg, b_arg);
    b.att(phi_arg, b_bar);
    for v in 0..matrix.num_vars() {
        b.mutual(lits.pos[v], lits.neg[v]);
    }
    for (i, clause) in matrix.clauses().iter().enumerate() {
        for lit in clause {
            b.mutual(lits.of(lit.var, lit.negated), clause_args[i]);
        }
    }
    for &i in &positive {
        b.att(b_arg, clause_args[i]);
    }
    for &i in &negative {
        b.att(b_bar, clause_args[i]);
    }
    for v in 0..matrix.num_vars() {
        if variant == Variant::Literal || !phi.is_universal(v) {
            b.att(b_arg, lits.neg[v]);
            b.att(b_bar, lits.pos[v]);
        }
    }
    finish_artifact(
        b.finish()?,
        1,
        variant,
        &[("phi", "phi")],
        vec![(GraphClass::Bip, vec!["phi"])],
        Source::Qbf(phi.clone()),
    )
}

/// General CNF variant of [`reduce1`]; `F - {phi, b}` is symmetric.
///
/// All clauses are `c<i>`; no separate negative-clause arguments are created.
/// `b` attacks every clause and both literal arguments of each existential
/// variable (literal variant: of every variable).
pub fn reduce2(phi: &Qbf2Formula, variant: Variant) -> Result<ReductionArtifact> {
    let matrix = phi.matrix();
    let mut b = Builder::new();
    let phi_arg = b.arg("phi")?;
    let b_arg = b.arg("b")?;
    let clause_args: Vec<usize> = (0..matrix.clauses().len())
        .map(|i| b.arg(format!("c{}", i + 1)))
        .collect::<Result<_>>()?;
    let lits = LiteralArgs::add(&mut b, matrix.variables())?;

    for &c in &clause_args {
        b.att(c, phi_arg);
    }
    b.att(phi_arg, b_arg);
    for v in 0..matrix.num_vars() {
        b.mutual(lits.pos[v], lits.neg[v]);
    }
    for (i, clause) in matrix.clauses().iter().enumerate() {
        for lit in clause {
            b.mutual(lits.of(lit.var, lit.negated), clause_args[i]);
        }
    }
    for &c in &clause_args {
        b.att(b_arg, c);
    }
    for v in 0..matrix.num_vars() {
        if variant == Variant::Literal || !phi.is_universal(v) {
            b.att(b_arg, lits.pos[v]);
            b.att(b_arg, lits.neg[v]);
        }
    }
    finish_artifact(
        b.finish()?,
        2,
        variant,
        &[("phi", "phi")],
        vec![(GraphClass::Sym, vec!["phi", "b"])],
        Source::Qbf(phi.clone()),
    )
}

fn require_existential_in_every_clause(phi: &Qbf2Formula, reduction: u8) -> Result<()> {
    if !phi.every_clause_touches_existential() {
        return Err(Error::usage(format!(
            "reduction {reduction} requires every clause to contain an existential literal"
        )));
    }
    Ok(())
}

/// Semi-stable acceptance of `phi_p` / `phi_bar` for monotone QBFs; `F - {g}` is bipartite.
///
/// Literal variant: both clause kinds attack `phi_p` and `phi_n` is isolated.
/// Repaired variant: negative clauses attack `phi_n` instead of `phi_p`, and
/// `g` attacks negative clauses as well as positive ones.
pub fn reduce3(phi: &Qbf2Formula, variant: Variant) -> Result<ReductionArtifact> {
    let matrix = phi.matrix();
    let (positive, negative) = matrix
        .monotone_partition()
        .ok_or_else(|| Error::usage("reduction 3 requires a monotone matrix"))?;
    require_existential_in_every_clause(phi, 3)?;
    let mut b = Builder::new();
    let phi_p = b.arg("phi_p")?;
    let phi_n = b.arg("phi_n")?;
    let phi_bar = b.arg("phi_bar")?;
    let b_arg = b.arg("b")?;
    let g = b.arg("g")?;
    let mut clause_args = vec![0; matrix.clauses().len()];
    for &i in &positive {
        clause_args[i] = b.arg(format!("c{}", i + 1))?;
    }
    for &i in &negative {
        clause_args[i] = b.arg(format!("nc{}", i + 1))?;
    }
    let lits = LiteralArgs::add(&mut b, matrix.variables())?;
    let mut primes = Vec::new();
    for y in phi.universal() {
        let name = matrix.var_name(y);
        let yp = b.arg(primed(name))?;
        let nyp = b.arg(primed(&neg_name(name)))?;
        primes.push((y, yp, nyp));
    }

    for &i in &positive {
        b.att(clause_args[i], phi_p);
    }
    for &i in &negative {
        match variant {
            Variant::Literal => b.att(clause_args[i], phi_p),
            Variant::Repaired => b.att(clause_args[i], phi_n),
        }
    }
    for v in 0..matrix.num_vars() {
        b.mutual(lits.pos[v], lits.neg[v]);
    }
    for (i, clause) in matrix.clauses().iter().enumerate() {
        for lit in clause {
            b.mutual(lits.of(lit.var, lit.negated), clause_args[i]);
        }
    }
    for &(y, yp, nyp) in &primes {
        b.mutual(lits.pos[y], yp);
        b.mutual(lits.neg[y], nyp);
        b.att(g, yp);
        b.att(g, nyp);
    }
    b.mutual(phi_p, b_arg);
    b.att(g, g);
    b.att(g, b_arg);
    for &i in &positive {
        b.att(g, clause_args[i]);
    }
    if variant == Variant::Repaired {
        for &i in &negative {
            b.att(g, clause_args[i]);
        }
    }
    b.mutual(phi_p, phi_bar);
    finish_artifact(
        b.finish()?,
        3,
        variant,
        &[("phi_p", "phi_p"), ("phi_n", "phi_n"), ("phi_bar", "phi_bar")],
        vec![(GraphClass::Bip, vec!["g"])],
        Source::Qbf(phi.clone()),
    )
}

/// Semi-stable acceptance of `phi` / `phi_bar`; `F - {phi, g}` is symmetric.
pub fn reduce4(phi: &Qbf2Formula, variant: Variant) -> Result<ReductionArtifact> {
    let matrix = phi.matrix();
    require_existential_in_every_clause(phi, 4)?;
    let mut b = Builder::new();
    let phi_arg = b.arg("phi")?;
    let phi_bar = b.arg("phi_bar")?;
    let b_arg = b.arg("b")?;
    let g = b.arg("g")?;
    let clause_args: Vec<usize> = (0..matrix.clauses().len())
        .map(|i| b.arg(format!("c{}", i + 1)))
        .collect::<Result<_>>()?;
    let lits = LiteralArgs::add(&mut b, matrix.variables())?;
    let mut primes = Vec::new();
    for y in phi.universal() {
        let name = matrix.var_name(y);
        let yp = b.arg(primed(name))?;
        let nyp = b.arg(primed(&neg_name(name)))?;
        primes.push((y, yp, nyp));
    }

    for &c in &clause_args {
        b.att(c, phi_arg);
    }
    for v in 0..matrix.num_vars() {
        b.mutual(lits.pos[v], lits.neg[v]);
    }
    for (i, clause) in matrix.clauses().iter().enumerate() {
        for lit in clause {
            b.mutual(lits.of(lit.var, lit.negated), clause_args[i]);
        }
    }
    for &(y, yp, nyp) in &primes {
        b.mutual(lits.pos[y], yp);
        b.mutual(lits.neg[y], nyp);
    }
    b.mutual(phi_arg, b_arg);
    b.att(g, g);
    b.att(g, b_arg);
    for &(_, yp, nyp) in &primes {
        b.att(g, yp);
        b.att(g, nyp);
    }
    b.mutual(phi_arg, phi_bar);
    finish_artifact(
        b.finish()?,
        4,
        variant,
        &[("phi", "phi"), ("phi_bar", "phi_bar")],
        vec![(GraphClass::Sym, vec!["phi", "g"])],
        Source::Qbf(phi.clone()),
    )
}

/// Stage acceptance of the target atom / `q` from a MINSAT instance.
///
/// Literal variant: mutual `x`/`nx` attacks and `E<i>` attacking everything
/// but its clause, `phi`, `b` and earlier `E`s (so also itself and `q`).
/// Repaired variant: only `nx -> x`, and `E<i>` additionally spares `q` and
/// itself; the framework's only cycle is then the self-attack of `b`.
pub fn reduce5(inst: &MinsatInstance, variant: Variant) -> Result<ReductionArtifact> {
    let formula = inst.formula();
    let m = formula.clauses().len();
    let mut b = Builder::new();
    let phi_arg = b.arg("phi")?;
    let b_arg = b.arg("b")?;
    let q = b.arg("q")?;
    let clause_args: Vec<usize> = (0..m).map(|i| b.arg(format!("c{}", i + 1))).collect::<Result<_>>()?;
    let lits = LiteralArgs::add(&mut b, formula.variables())?;
    let e_args: Vec<usize> = (0..m).map(|i| b.arg(format!("E{}", i + 1))).collect::<Result<_>>()?;
    // rank[i]: position of clause i in the clause order
    let mut rank = vec![0; m];
    for (pos, &c) in inst.clause_order().iter().enumerate() {
        rank[c] = pos;
    }

    for &c in &clause_args {
        b.att(c, phi_arg);
    }
    b.att(phi_arg, b_arg);
    b.att(b_arg, b_arg);
    let target = lits.pos[inst.target()];
    b.att(q, target);
    for v in 0..formula.num_vars() {
        match variant {
            Variant::Literal => b.mutual(lits.pos[v], lits.neg[v]),
            Variant::Repaired => b.att(lits.neg[v], lits.pos[v]),
        }
    }
    for (i, clause) in formula.clauses().iter().enumerate() {
        for lit in clause {
            b.att(lits.of(lit.var, lit.negated), clause_args[i]);
        }
    }
    let total = b.names.len();
    for i in 0..m {
        let earlier = |a: usize| e_args.iter().enumerate().any(|(j, &e)| e == a && rank[j] < rank[i]);
        for a in 0..total {
            let spared = a == clause_args[i]
                || a == phi_arg
                || a == b_arg
                || earlier(a)
                || (variant == Variant::Repaired && (a == q || a == e_args[i]));
            if !spared {
                b.att(e_args[i], a);
            }
        }
    }
    let target_name = formula.var_name(inst.target()).to_string();
    let claims = match variant {
        Variant::Literal => vec![],
        Variant::Repaired => vec![(GraphClass::Acy, vec!["b"]), (GraphClass::NoEven, vec![])],
    };
    finish_artifact(
        b.finish()?,
        5,
        variant,
        &[("x_alpha", &target_name), ("q", "q")],
        claims,
        Source::Minsat(inst.clone()),
    )
}

/// Stage acceptance of `phi` / `phi_bar`; `F - {u, v, b, phi}` is symmetric,
/// and bipartite for monotone matrices.
pub fn reduce6(phi: &Qbf2Formula, variant: Variant) -> Result<ReductionArtifact> {
    let matrix = phi.matrix();
    let mut b = Builder::new();
    let phi_arg = b.arg("phi")?;
    let phi_bar = b.arg("phi_bar")?;
    let b_arg = b.arg("b")?;
    let u = b.arg("u")?;
    let v_arg = b.arg("v")?;
    let clause_args: Vec<usize> = (0..matrix.clauses().len())
        .map(|i| b.arg(format!("c{}", i + 1)))
        .collect::<Result<_>>()?;
    let lits = LiteralArgs::add(&mut b, matrix.variables())?;
    let mut primes = Vec::new();
    for y in phi.universal() {
        let name = matrix.var_name(y);
        let yp = b.arg(primed(name))?;
        let nyp = b.arg(primed(&neg_name(name)))?;
        primes.push((y, yp, nyp));
    }

    for &c in &clause_args {
        b.att(c, phi_arg);
    }
    b.mutual(phi_arg, phi_bar);
    b.att(phi_arg, b_arg);
    b.att(b_arg, b_arg);
    for v in 0..matrix.num_vars() {
        b.mutual(lits.pos[v], lits.neg[v]);
    }
    for &(y, yp, nyp) in &primes {
        b.mutual(lits.pos[y], yp);
        b.mutual(lits.neg[y], nyp);
    }
    for (i, clause) in matrix.clauses().iter().enumerate() {
        for lit in clause {
            b.mutual(lits.of(lit.var, lit.negated), clause_args[i]);
        }
    }
    b.att(u, v_arg);
    b.att(v_arg, v_arg);
    for &(_, yp, nyp) in &primes {
        b.att(yp, u);
        b.att(nyp, u);
    }
    let mut claims = vec![(GraphClass::Sym, vec!["u", "v", "b", "phi"])];
    if matrix.is_monotone() {
        claims.push((GraphClass::Bip, vec!["u", "v", "b", "phi"]));
    }
    finish_artifact(
        b.finish()?,
        6,
        variant,
        &[("phi", "phi"), ("phi_bar", "phi_bar")],
        claims,
        Source::Qbf(phi.clone()),
    )
}

/// Builds reduction `id` (1 to 6) for a QBF input.
pub fn reduce_qbf(id: u8, phi: &Qbf2Formula, variant: Variant) -> Result<ReductionArtifact> {
    match id {
        1 => reduce1(phi, variant),
        2 => reduce2(phi, variant),
        3 => reduce3(phi, variant),
        4 => reduce4(phi, variant),
        6 => reduce6(phi, variant),
        5 => Err(Error::usage("reduction 5 takes a MINSAT instance")),
        _ => Err(Error::usage(format!("unknown reduction {id}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_classes::{distance, is_member, simple_cycles};
    use crate::logic::CnfFormula;
    use crate::semantics::{extensions, Semantics};

    fn monotone_example() -> Qbf2Formula {
        Qbf2Formula::from_names(&["y1"], &["z1", "z2"], &[&["z1", "z2", "y1"], &["-z1", "-z2", "-y1"]]).unwrap()
    }

    fn touching_example() -> Qbf2Formula {
        Qbf2Formula::from_names(
            &["y1", "y2"],
            &["z3", "z4"],
            &[&["y1", "y2", "z3"], &["y2", "-z3", "-z4"], &["y2", "z3", "z4"]],
        )
        .unwrap()
    }

    fn minsat_example() -> MinsatInstance {
        let phi = CnfFormula::from_names(
            &["y1", "y2", "z3", "z4"],
            &[&["y1", "y2", "z3"], &["-y2", "-z3", "-z4"], &["-y1", "-y2", "z4"]],
        )
        .unwrap();
        MinsatInstance::new(phi, "y1").unwrap()
    }

    fn general_example() -> Qbf2Formula {
        Qbf2Formula::from_names(
            &["y1", "y2"],
            &["z3", "z4"],
            &[&["y1", "y2", "z3"], &["-y2", "-z3", "-z4"], &["-y1", "-y2", "z4"]],
        )
        .unwrap()
    }

    fn size(art: &ReductionArtifact) -> (usize, usize) {
        (art.framework.len(), art.framework.attacks().len())
    }

    fn attacks(art: &ReductionArtifact, a: &str, b: &str) -> bool {
        let f = &art.framework;
        f.attacks_arg(f.argument(a).unwrap(), f.argument(b).unwrap())
    }

    #[test]
    fn reduction1_counts_and_attacks() {
        let lit = reduce1(&monotone_example(), Variant::Literal).unwrap();
        assert_eq!(size(&lit), (11, 30));
        assert!(attacks(&lit, "b", "nz1"));
        assert!(attacks(&lit, "b", "ny1"));
        assert!(lit.claim(GraphClass::Bip).unwrap().holds);

        let rep = reduce1(&monotone_example(), Variant::Repaired).unwrap();
        assert_eq!(size(&rep), (11, 28));
        assert!(attacks(&rep, "b", "nz1"));
        assert!(!attacks(&rep, "b", "ny1"));
        assert!(!attacks(&rep, "b_bar", "y1"));
        assert_eq!(rep.query("phi"), "phi");
    }

    #[test]
    fn reduction1_rejects_non_monotone_input() {
        let q = Qbf2Formula::from_names(&[], &["z1", "z2"], &[&["z1", "-z2"]]).unwrap();
        assert!(matches!(reduce1(&q, Variant::Repaired), Err(Error::Usage(_))));
    }

    #[test]
    fn reduction1_distance_is_one() {
        let f = &reduce1(&monotone_example(), Variant::Repaired).unwrap().framework;
        assert!(!is_member(f, GraphClass::Bip));
        assert_eq!(distance(f, GraphClass::Bip).unwrap().k, 1);
    }

    #[test]
    fn reduction2_counts_and_claim() {
        let lit = reduce2(&monotone_example(), Variant::Literal).unwrap();
        assert_eq!(size(&lit), (10, 29));
        assert!(attacks(&lit, "b", "c1") && attacks(&lit, "b", "c2"));
        assert!(lit.claim(GraphClass::Sym).unwrap().holds);
        let rep = reduce2(&monotone_example(), Variant::Repaired).unwrap();
        assert_eq!(size(&rep), (10, 27));
    }

    #[test]
    fn reduction3_counts_and_claim() {
        let lit = reduce3(&monotone_example(), Variant::Literal).unwrap();
        assert_eq!(size(&lit), (15, 33));
        assert!(attacks(&lit, "g", "g"));
        assert!(attacks(&lit, "nc2", "phi_p"));
        let phi_n = lit.framework.argument("phi_n").unwrap();
        assert!(lit.framework.targets(phi_n).is_clear() && lit.framework.attackers(phi_n).is_clear());
        assert!(!lit.claim(GraphClass::Bip).unwrap().holds);

        let rep = reduce3(&monotone_example(), Variant::Repaired).unwrap();
        assert_eq!(size(&rep), (15, 34));
        assert!(attacks(&rep, "nc2", "phi_n") && !attacks(&rep, "nc2", "phi_p"));
        assert!(attacks(&rep, "g", "nc2"));
        assert!(rep.claim(GraphClass::Bip).unwrap().holds);
    }

    #[test]
    fn reduction3_requires_existential_literals() {
        let q = Qbf2Formula::from_names(&["y1"], &["z1"], &[&["y1"]]).unwrap();
        assert!(matches!(reduce3(&q, Variant::Repaired), Err(Error::Usage(_))));
        assert!(matches!(reduce4(&q, Variant::Repaired), Err(Error::Usage(_))));
    }

    #[test]
    fn reduction4_counts_and_claim() {
        let art = reduce4(&touching_example(), Variant::Literal).unwrap();
        assert_eq!(size(&art), (19, 47));
        assert!(attacks(&art, "phi", "b") && attacks(&art, "b", "phi"));
        assert!(art.claim(GraphClass::Sym).unwrap().holds);
        assert_eq!(art.query("phi_bar"), "phi_bar");
    }

    #[test]
    fn reduction5_literal_and_repaired() {
        let lit = reduce5(&minsat_example(), Variant::Literal).unwrap();
        assert_eq!(lit.framework.len(), 17);
        assert!(attacks(&lit, "y1", "ny1") && attacks(&lit, "ny1", "y1"));
        assert!(attacks(&lit, "E1", "q") && attacks(&lit, "E1", "E1"));
        assert!(lit.claims.is_empty());
        assert!(!is_member(&lit.framework, GraphClass::NoEven));

        let rep = reduce5(&minsat_example(), Variant::Repaired).unwrap();
        let f = &rep.framework;
        assert_eq!(f.len(), 17);
        assert!(attacks(&rep, "ny1", "y1") && !attacks(&rep, "y1", "ny1"));
        assert!(!attacks(&rep, "E1", "q") && !attacks(&rep, "E1", "E1"));
        assert!(attacks(&rep, "E1", "E2") && !attacks(&rep, "E2", "E1"));
        assert!(attacks(&rep, "q", "y1"));
        assert_eq!(simple_cycles(f).unwrap(), vec![vec![f.argument("b").unwrap()]]);
        assert!(is_member(f, GraphClass::NoEven));
        assert_eq!(rep.query("x_alpha"), "y1");
    }

    #[test]
    fn reduction5_naive_extensions_from_the_proof() {
        let rep = reduce5(&minsat_example(), Variant::Repaired).unwrap();
        let f = &rep.framework;
        let naive = extensions(f, Semantics::Naive).unwrap();
        for i in 1..=3 {
            let set = f.set_from_names([format!("E{i}"), "phi".into(), "q".into()]).unwrap();
            assert!(naive.contains(&set), "E{i}");
        }
        assert!(naive.contains(&f.set_from_names(["E1", "c1", "q"]).unwrap()));
    }

    #[test]
    fn reduction5_follows_clause_order() {
        let inst = minsat_example().with_clause_order(vec![2, 0, 1]).unwrap();
        let art = reduce5(&inst, Variant::Repaired).unwrap();
        // c3 comes first, so E3 attacks every other E and is spared by them
        assert!(attacks(&art, "E3", "E1") && attacks(&art, "E3", "E2"));
        assert!(!attacks(&art, "E1", "E3") && !attacks(&art, "E2", "E3"));
    }

    #[test]
    fn reduction6_counts_and_claims() {
        let art = reduce6(&general_example(), Variant::Literal).unwrap();
        assert_eq!(art.framework.len(), 20);
        assert!(attacks(&art, "y1_p", "u") && attacks(&art, "ny1_p", "u"));
        assert!(art.claim(GraphClass::Sym).unwrap().holds);
        assert!(art.claim(GraphClass::Bip).is_none());

        let mono = reduce6(&monotone_example(), Variant::Repaired).unwrap();
        assert!(mono.claim(GraphClass::Bip).unwrap().holds);
    }

    #[test]
    fn construction_is_deterministic() {
        let a = reduce4(&touching_example(), Variant::Repaired).unwrap();
        let b = reduce4(&touching_example(), Variant::Repaired).unwrap();
        assert_eq!(a.framework, b.framework);
        assert_eq!(a.framework.names(), b.framework.names());
    }

    #[test]
    fn name_clashes_are_rejected() {
        let q = Qbf2Formula::from_names(&[], &["phi"], &[&["phi"]]).unwrap();
        assert!(matches!(reduce2(&q, Variant::Repaired), Err(Error::Usage(_))));
    }

    #[test]
    fn sidecar_lists_claims() {
        let art = reduce1(&monotone_example(), Variant::Repaired).unwrap();
        let json = serde_json::to_value(art.sidecar()).unwrap();
        assert_eq!(json["reduction_id"], 1);
        assert_eq!(json["variant"], "repaired");
        assert_eq!(json["claimed_class"], "BIP");
        assert_eq!(json["claimed_deletion_set"], serde_json::json!(["phi"]));
        assert_eq!(json["query_args"]["phi"], "phi");
    }
}
