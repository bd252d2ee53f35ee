//! Executable checks of the reductions' correctness and distance claims over
//! generated instance families, with answers compared against the
//! brute-force oracles in [`crate::logic`].

mod family;
mod report;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::framework::{ArgSet, Framework};
use crate::graph_classes::{self, GraphClass};
use crate::logic::{self, MinsatInstance, Qbf2Formula, VarSet};
use crate::reductions::{self, ReductionArtifact, Variant};
use crate::semantics::{self, ExtensionSet, Semantics};

pub use family::{all_frameworks, random_frameworks, FamilyParams, Instance, EXHAUSTIVE_MAX_ARGS};
pub use report::{Counterexample, Verdict, VerificationReport, COUNTEREXAMPLE_CAP};

use family::InstanceKind;

/// Exact distance searches only run on frameworks up to this size.
pub const EXACT_DISTANCE_MAX_ARGS: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    Lem1Item1,
    Lem1Item2,
    Lem1Item3,
    Lem1Item4,
    Lem1Item5,
    Prop1,
    Prop2,
    Prop3,
    Prop4,
    Prop5,
    Thm1Dist,
    Thm2Dist,
    Thm3Dist,
    Thm4Dist,
    Thm5NoEven,
    Thm6Dist,
    Thm7Dist,
    Thm8Dist,
    Lattice,
    NonEmpty,
    StbCollapse,
}

impl ClaimId {
    pub const ALL: [ClaimId; 21] = [
        ClaimId::Lem1Item1,
        ClaimId::Lem1Item2,
        ClaimId::Lem1Item3,
        ClaimId::Lem1Item4,
        ClaimId::Lem1Item5,
        ClaimId::Prop1,
        ClaimId::Prop2,
        ClaimId::Prop3,
        ClaimId::Prop4,
        ClaimId::Prop5,
        ClaimId::Thm1Dist,
        ClaimId::Thm2Dist,
        ClaimId::Thm3Dist,
        ClaimId::Thm4Dist,
        ClaimId::Thm5NoEven,
        ClaimId::Thm6Dist,
        ClaimId::Thm7Dist,
        ClaimId::Thm8Dist,
        ClaimId::Lattice,
        ClaimId::NonEmpty,
        ClaimId::StbCollapse,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Lem1Item1 => "LEM1_1",
            ClaimId::Lem1Item2 => "LEM1_2",
            ClaimId::Lem1Item3 => "LEM1_3",
            ClaimId::Lem1Item4 => "LEM1_4",
            ClaimId::Lem1Item5 => "LEM1_5",
            ClaimId::Prop1 => "PROP1",
            ClaimId::Prop2 => "PROP2",
            ClaimId::Prop3 => "PROP3",
            ClaimId::Prop4 => "PROP4",
            ClaimId::Prop5 => "PROP5",
            ClaimId::Thm1Dist => "THM1_DIST",
            ClaimId::Thm2Dist => "THM2_DIST",
            ClaimId::Thm3Dist => "THM3_DIST",
            ClaimId::Thm4Dist => "THM4_DIST",
            ClaimId::Thm5NoEven => "THM5_NOEVEN",
            ClaimId::Thm6Dist => "THM6_DIST",
            ClaimId::Thm7Dist => "THM7_DIST",
            ClaimId::Thm8Dist => "THM8_DIST",
            ClaimId::Lattice => "LATTICE",
            ClaimId::NonEmpty => "NONEMPTY",
            ClaimId::StbCollapse => "STB_COLLAPSE",
        }
    }

    fn kind(self) -> InstanceKind {
        match self {
            ClaimId::Prop4 | ClaimId::Thm5NoEven | ClaimId::Thm6Dist => InstanceKind::Minsat,
            ClaimId::Lattice | ClaimId::NonEmpty | ClaimId::StbCollapse => InstanceKind::Framework,
            _ => InstanceKind::Qbf,
        }
    }

    fn requires_monotone(self) -> bool {
        matches!(
            self,
            ClaimId::Lem1Item1
                | ClaimId::Lem1Item2
                | ClaimId::Lem1Item3
                | ClaimId::Lem1Item4
                | ClaimId::Lem1Item5
                | ClaimId::Prop1
                | ClaimId::Thm1Dist
                | ClaimId::Prop2
                | ClaimId::Thm3Dist
                | ClaimId::Prop3
                | ClaimId::Thm7Dist
        )
    }

    fn requires_existential_in_every_clause(self) -> bool {
        matches!(
            self,
            ClaimId::Prop2 | ClaimId::Thm3Dist | ClaimId::Prop3 | ClaimId::Thm4Dist
        )
    }

    /// `params` with the flags the claim's hypotheses demand switched on.
    pub fn normalize(self, params: &FamilyParams) -> FamilyParams {
        let mut p = params.clone();
        p.monotone |= self.requires_monotone();
        p.clause_touches_existential |= self.requires_existential_in_every_clause();
        p
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.to_ascii_uppercase();
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str() == upper)
            .ok_or_else(|| Error::usage(format!("unknown claim {s}")))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Result of checking one claim on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Holds,
    Fails { solver: String, oracle: String },
}

impl CheckOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, CheckOutcome::Holds)
    }

    fn fails(solver: impl Into<String>, oracle: impl Into<String>) -> Self {
        CheckOutcome::Fails {
            solver: solver.into(),
            oracle: oracle.into(),
        }
    }
}

/// Per-item violations of the five `LEM1_*` claims on `F¹`; `None` means the item holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma1Outcome {
    pub items: [Option<String>; 5],
}

impl Lemma1Outcome {
    pub fn all_hold(&self) -> bool {
        self.items.iter().all(Option::is_none)
    }
}

fn y_literal_args(art: &ReductionArtifact, phi: &Qbf2Formula) -> Vec<(usize, usize)> {
    let f = &art.framework;
    phi.universal()
        .map(|y| {
            let name = phi.matrix().var_name(y);
            let pos = f.index_of(name).expect("variable argument exists");
            let neg = f.index_of(&format!("n{name}")).expect("negated argument exists");
            (pos, neg)
        })
        .collect()
}

/// `S ∪ (Y∖S)‾` for some `S ⊆ Y`.
fn is_universal_assignment(set: &ArgSet, ylits: &[(usize, usize)]) -> bool {
    let covered = ylits.iter().filter(|&&(p, n)| set.contains(p) != set.contains(n)).count();
    covered == ylits.len() && set.len() == ylits.len()
}

/// Checks the five `LEM1_*` items on `F¹_Φ` by enumerating `adm` and `prf`.
pub fn check_lemma1(phi: &Qbf2Formula, variant: Variant) -> Result<Lemma1Outcome> {
    let art = reductions::reduce1(phi, variant)?;
    let f = &art.framework;
    let matrix = phi.matrix();
    let adm = semantics::extensions(f, Semantics::Adm)?;
    let prf = semantics::extensions(f, Semantics::Prf)?;
    let phi_arg = f.argument("phi")?;
    let ylits = y_literal_args(&art, phi);
    let pos_arg = |v: usize| f.index_of(matrix.var_name(v)).expect("variable argument exists");
    let neg_arg = |v: usize| f.index_of(&format!("n{}", matrix.var_name(v))).expect("negated argument exists");
    let mut items: [Option<String>; 5] = Default::default();

    // (1)
    let mut never = vec![f.argument("b")?, f.argument("b_bar")?];
    for i in 1..=matrix.clauses().len() {
        never.extend(f.index_of(&format!("c{i}")));
        never.extend(f.index_of(&format!("nc{i}")));
    }
    if let Some((e, a)) = adm
        .iter()
        .find_map(|e| never.iter().find(|&&a| e.contains(a)).map(|&a| (e, a)))
    {
        items[0] = Some(format!("admissible {} contains {}", f.format_set(e), f.name(a)));
    }

    // (2)
    let ny = phi.num_universal();
    for s in 0..1u64 << ny {
        let set = f.set_from_indices(
            ylits
                .iter()
                .enumerate()
                .map(|(i, &(p, n))| if s >> i & 1 == 1 { p } else { n }),
        )?;
        if !f.is_admissible(&set)? {
            items[1] = Some(format!("{} is not admissible", f.format_set(&set)));
            break;
        }
    }
    if items[1].is_none() {
        let ymask = f.set_from_indices(ylits.iter().flat_map(|&(p, n)| [p, n]))?;
        if let Some(e) = prf
            .iter()
            .find(|e| e.is_subset(&ymask) && !is_universal_assignment(e, &ylits))
        {
            items[1] = Some(format!("{} is preferred but not a universal assignment", f.format_set(e)));
        }
    }

    // (3)
    if let Some(e) = prf
        .iter()
        .find(|e| !e.contains(phi_arg) && !is_universal_assignment(e, &ylits))
    {
        items[2] = Some(format!("preferred {} lacks phi but is not a universal assignment", f.format_set(e)));
    }

    // (4)
    for e in prf.iter().filter(|e| e.contains(phi_arg)) {
        let model = VarSet((0..matrix.num_vars()).filter(|&v| e.contains(pos_arg(v))).fold(0, |m, v| m | 1 << v));
        if !logic::satisfies(matrix, model) {
            items[3] = Some(format!(
                "preferred {} contains phi but {{{}}} is not a model",
                f.format_set(e),
                model.names(matrix).join(",")
            ));
            break;
        }
    }

    // (5)
    for model in logic::models(matrix)? {
        let set = f.set_from_indices(
            (0..matrix.num_vars())
                .map(|v| if model.contains(v) { pos_arg(v) } else { neg_arg(v) })
                .chain([phi_arg]),
        )?;
        if !prf.contains(&set) {
            items[4] = Some(format!("{} is not preferred", f.format_set(&set)));
            break;
        }
    }
    Ok(Lemma1Outcome { items })
}

fn as_qbf(claim: ClaimId, instance: &Instance) -> Result<&Qbf2Formula> {
    match instance {
        Instance::Qbf(q) => Ok(q),
        _ => Err(Error::usage(format!("{claim} takes a QBF instance"))),
    }
}

fn as_minsat(claim: ClaimId, instance: &Instance) -> Result<&MinsatInstance> {
    match instance {
        Instance::Minsat(m) => Ok(m),
        _ => Err(Error::usage(format!("{claim} takes a MINSAT instance"))),
    }
}

fn as_framework(claim: ClaimId, instance: &Instance) -> Result<&Framework> {
    match instance {
        Instance::Framework(f) => Ok(f),
        _ => Err(Error::usage(format!("{claim} takes a framework"))),
    }
}

/// Compares each stated equivalent (already negated where the statement is
/// a non-acceptance) against the oracle truth.
fn equivalence_chain(oracle_label: &str, truth: bool, statements: &[(String, bool)]) -> CheckOutcome {
    if statements.iter().all(|&(_, v)| v == truth) {
        return CheckOutcome::Holds;
    }
    let solver = statements
        .iter()
        .map(|(label, v)| format!("{label}={v}"))
        .collect::<Vec<_>>()
        .join(", ");
    CheckOutcome::fails(solver, format!("{oracle_label}={truth}"))
}

fn qbf_chain(art: &ReductionArtifact, phi: &Qbf2Formula, sigma: Semantics, accepted: &str, rejected: Option<&str>) -> Result<CheckOutcome> {
    let f = &art.framework;
    let truth = logic::qbf2_valid(phi)?;
    let exts = semantics::extensions(f, sigma)?;
    let acc = art.query(accepted);
    let mut statements = vec![(format!("skept({sigma},{acc})"), exts.all_contain(f.argument(acc)?))];
    if let Some(rej) = rejected {
        let rej = art.query(rej);
        statements.push((format!("not cred({sigma},{rej})"), !exts.some_contains(f.argument(rej)?)));
    }
    Ok(equivalence_chain("valid", truth, &statements))
}

fn claim_holds(art: &ReductionArtifact, class: GraphClass) -> CheckOutcome {
    match art.claim(class) {
        Some(c) if c.holds => CheckOutcome::Holds,
        Some(c) => CheckOutcome::fails(
            format!(
                "F - {} is not {class}",
                art.framework.format_set(&c.deletion_set)
            ),
            "claimed deletion set",
        ),
        None => CheckOutcome::fails(format!("no {class} deletion set in the {} construction", art.variant), "claimed deletion set"),
    }
}

/// Deletion claim plus, on small frameworks, an exact distance comparison.
fn distance_claim(art: &ReductionArtifact, class: GraphClass, exact_one_when_outside: bool) -> Result<CheckOutcome> {
    let outcome = claim_holds(art, class);
    if !outcome.holds() {
        return Ok(outcome);
    }
    let f = &art.framework;
    if f.len() > EXACT_DISTANCE_MAX_ARGS {
        return Ok(CheckOutcome::Holds);
    }
    let bound = art.claim(class).expect("checked above").deletion_set.len();
    let cert = graph_classes::distance(f, class)?;
    if exact_one_when_outside {
        if !graph_classes::is_member(f, class) && cert.k != 1 {
            return Ok(CheckOutcome::fails(format!("dist_{class}={}", cert.k), "dist=1"));
        }
    } else if cert.k > bound {
        return Ok(CheckOutcome::fails(format!("dist_{class}={}", cert.k), format!("dist<={bound}")));
    }
    Ok(CheckOutcome::Holds)
}

fn lattice(f: &Framework) -> Result<CheckOutcome> {
    use Semantics::*;
    let ext = |s| semantics::extensions(f, s);
    let (cf, naive, adm, stb, com, grd, prf, stg, sem) =
        (ext(Cf)?, ext(Naive)?, ext(Adm)?, ext(Stb)?, ext(Com)?, ext(Grd)?, ext(Prf)?, ext(Stg)?, ext(Sem)?);
    let chain: [(&str, &ExtensionSet, &ExtensionSet); 9] = [
        ("stb<=sem", &stb, &sem),
        ("sem<=prf", &sem, &prf),
        ("prf<=com", &prf, &com),
        ("com<=adm", &com, &adm),
        ("adm<=cf", &adm, &cf),
        ("grd<=com", &grd, &com),
        ("naive<=cf", &naive, &cf),
        ("stg<=naive", &stg, &naive),
        ("stb<=stg", &stb, &stg),
    ];
    for (label, sub, sup) in chain {
        if !sub.is_subset(sup) {
            return Ok(CheckOutcome::fails(format!("{label} violated"), "inclusion"));
        }
    }
    Ok(CheckOutcome::Holds)
}

fn nonempty(f: &Framework) -> Result<CheckOutcome> {
    for sigma in Semantics::ALL {
        let exts = semantics::extensions(f, sigma)?;
        if sigma != Semantics::Stb && exts.is_empty() {
            return Ok(CheckOutcome::fails(format!("{sigma} has no extension"), "nonempty"));
        }
        if sigma == Semantics::Grd && exts.len() != 1 {
            return Ok(CheckOutcome::fails(format!("grd has {} extensions", exts.len()), "exactly one"));
        }
    }
    Ok(CheckOutcome::Holds)
}

fn stb_collapse(f: &Framework) -> Result<CheckOutcome> {
    let stb = semantics::extensions(f, Semantics::Stb)?;
    if stb.is_empty() {
        return Ok(CheckOutcome::Holds);
    }
    for sigma in [Semantics::Sem, Semantics::Stg] {
        if semantics::extensions(f, sigma)?.as_slice() != stb.as_slice() {
            return Ok(CheckOutcome::fails(format!("stb != {sigma}"), "stb = sem = stg"));
        }
    }
    Ok(CheckOutcome::Holds)
}

fn lemma_item(phi: &Qbf2Formula, variant: Variant, item: usize) -> Result<CheckOutcome> {
    Ok(match &check_lemma1(phi, variant)?.items[item] {
        None => CheckOutcome::Holds,
        Some(v) => CheckOutcome::fails(v.clone(), format!("item {} of the lemma", item + 1)),
    })
}

/// Checks `claim` on a single instance using the given reduction variant.
pub fn check_claim(claim: ClaimId, instance: &Instance, variant: Variant) -> Result<CheckOutcome> {
    use ClaimId::*;
    match claim {
        Lem1Item1 | Lem1Item2 | Lem1Item3 | Lem1Item4 | Lem1Item5 => {
            let item = claim as usize - Lem1Item1 as usize;
            lemma_item(as_qbf(claim, instance)?, variant, item)
        }
        Prop1 => {
            let phi = as_qbf(claim, instance)?;
            qbf_chain(&reductions::reduce1(phi, variant)?, phi, Semantics::Prf, "phi", None)
        }
        Prop2 => {
            let phi = as_qbf(claim, instance)?;
            qbf_chain(&reductions::reduce3(phi, variant)?, phi, Semantics::Sem, "phi_p", Some("phi_bar"))
        }
        Prop3 => {
            let phi = as_qbf(claim, instance)?;
            qbf_chain(&reductions::reduce4(phi, variant)?, phi, Semantics::Sem, "phi", Some("phi_bar"))
        }
        Prop5 => {
            let phi = as_qbf(claim, instance)?;
            qbf_chain(&reductions::reduce6(phi, variant)?, phi, Semantics::Stg, "phi", Some("phi_bar"))
        }
        Prop4 => {
            let inst = as_minsat(claim, instance)?;
            let art = reductions::reduce5(inst, variant)?;
            let f = &art.framework;
            let truth = logic::minsat_member(inst)?;
            let stg = semantics::extensions(f, Semantics::Stg)?;
            let x = art.query("x_alpha");
            let statements = [
                (format!("cred(stg,{x})"), stg.some_contains(f.argument(x)?)),
                ("not skept(stg,q)".to_string(), !stg.all_contain(f.argument("q")?)),
            ];
            Ok(equivalence_chain("minsat_member", truth, &statements))
        }
        Thm1Dist => distance_claim(&reductions::reduce1(as_qbf(claim, instance)?, variant)?, GraphClass::Bip, true),
        Thm2Dist => distance_claim(&reductions::reduce2(as_qbf(claim, instance)?, variant)?, GraphClass::Sym, false),
        Thm3Dist => distance_claim(&reductions::reduce3(as_qbf(claim, instance)?, variant)?, GraphClass::Bip, false),
        Thm4Dist => distance_claim(&reductions::reduce4(as_qbf(claim, instance)?, variant)?, GraphClass::Sym, false),
        Thm7Dist => distance_claim(&reductions::reduce6(as_qbf(claim, instance)?, variant)?, GraphClass::Bip, false),
        Thm8Dist => distance_claim(&reductions::reduce6(as_qbf(claim, instance)?, variant)?, GraphClass::Sym, false),
        Thm5NoEven => {
            let art = reductions::reduce5(as_minsat(claim, instance)?, variant)?;
            Ok(if graph_classes::is_member(&art.framework, GraphClass::NoEven) {
                CheckOutcome::Holds
            } else {
                CheckOutcome::fails("framework has an even cycle", "NOEVEN")
            })
        }
        Thm6Dist => {
            let art = reductions::reduce5(as_minsat(claim, instance)?, variant)?;
            let f = &art.framework;
            let cycles = graph_classes::simple_cycles(f)?;
            let b = f.argument("b")?;
            if cycles != [vec![b]] {
                return Ok(CheckOutcome::fails(format!("{} simple cycles", cycles.len()), "exactly the cycle [b]"));
            }
            let outcome = claim_holds(&art, GraphClass::Acy);
            if !outcome.holds() {
                return Ok(outcome);
            }
            let k = graph_classes::distance(f, GraphClass::Acy)?.k;
            Ok(if k == 1 {
                CheckOutcome::Holds
            } else {
                CheckOutcome::fails(format!("dist_ACY={k}"), "dist=1")
            })
        }
        Lattice => lattice(as_framework(claim, instance)?),
        NonEmpty => nonempty(as_framework(claim, instance)?),
        StbCollapse => stb_collapse(as_framework(claim, instance)?),
    }
}

/// Every instance of the family described by `params` (normalised for
/// `claim`), in canonical order.
pub fn family_instances(claim: ClaimId, params: &FamilyParams) -> Result<Vec<Instance>> {
    family::generate(claim.kind(), &claim.normalize(params))
}

/// Checks `claim` on every member of the family. Instances are checked in
/// parallel; the report lists counterexamples in family order.
pub fn run_family(claim: ClaimId, params: &FamilyParams) -> Result<VerificationReport> {
    let start = Instant::now();
    let params = claim.normalize(params);
    let instances = family::generate(claim.kind(), &params)?;
    let outcomes: Vec<Result<CheckOutcome>> = instances
        .par_iter()
        .map(|inst| check_claim(claim, inst, params.variant))
        .collect();
    let mut skipped = 0;
    let mut failures = 0;
    let mut counterexamples = Vec::new();
    for (index, (inst, outcome)) in instances.iter().zip(outcomes).enumerate() {
        match outcome {
            Ok(CheckOutcome::Holds) => {}
            Ok(CheckOutcome::Fails { solver, oracle }) => {
                failures += 1;
                if counterexamples.len() < COUNTEREXAMPLE_CAP {
                    counterexamples.push(Counterexample {
                        index,
                        instance: inst.to_string(),
                        solver,
                        oracle,
                    });
                }
            }
            Err(e) if e.is_capacity() => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(VerificationReport {
        claim,
        instances_checked: instances.len() - skipped,
        skipped,
        failures,
        verdict: if failures == 0 { Verdict::Holds } else { Verdict::Fails },
        counterexamples,
        params,
        wall_time_ms: Some(start.elapsed().as_millis() as u64),
    })
}
