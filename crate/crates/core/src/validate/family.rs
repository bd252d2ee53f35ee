use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::framework::Framework;
use crate::logic::{CnfFamily, MinsatInstance, Qbf2Formula, QbfFamily};
use crate::reductions::Variant;

/// Largest argument count for exhaustive framework families (`2^(n*n)` graphs).
pub const EXHAUSTIVE_MAX_ARGS: usize = 4;

/// Generator bounds and seed; a report is reproducible from these alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub max_universal: usize,
    pub max_existential: usize,
    pub max_clauses: usize,
    pub max_width: usize,
    /// Variable bound for MINSAT families.
    pub max_vars: usize,
    /// Argument bound for framework families.
    pub max_args: usize,
    pub monotone: bool,
    pub clause_touches_existential: bool,
    pub seed: u64,
    /// `None` enumerates the family exhaustively.
    pub samples: Option<usize>,
    pub variant: Variant,
}

impl Default for FamilyParams {
    fn default() -> Self {
        FamilyParams {
            max_universal: 2,
            max_existential: 2,
            max_clauses: 3,
            max_width: 3,
            max_vars: 3,
            max_args: 3,
            monotone: false,
            clause_touches_existential: false,
            seed: 0,
            samples: None,
            variant: Variant::default(),
        }
    }
}

impl FamilyParams {
    pub(crate) fn qbf_family(&self) -> QbfFamily {
        QbfFamily {
            max_universal: self.max_universal,
            max_existential: self.max_existential,
            max_clauses: self.max_clauses,
            max_width: self.max_width,
            monotone: self.monotone,
            clause_touches_existential: self.clause_touches_existential,
        }
    }

    pub(crate) fn cnf_family(&self) -> CnfFamily {
        CnfFamily {
            max_vars: self.max_vars,
            max_clauses: self.max_clauses,
            max_width: self.max_width,
        }
    }
}

/// One member of a family.
#[derive(Clone, Debug)]
pub enum Instance {
    Qbf(Qbf2Formula),
    Minsat(MinsatInstance),
    Framework(Framework),
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Qbf(q) => q.fmt(f),
            Instance::Minsat(m) => m.fmt(f),
            Instance::Framework(af) => {
                write!(f, "args [{}] attacks [", af.names().join(","))?;
                for (i, &(a, b)) in af.attacks().iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "({},{})", af.name(a), af.name(b))?;
                }
                f.write_str("]")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum InstanceKind {
    Qbf,
    Minsat,
    Framework,
}

pub(crate) fn generate(kind: InstanceKind, params: &FamilyParams) -> Result<Vec<Instance>> {
    Ok(match (kind, params.samples) {
        (InstanceKind::Qbf, None) => params.qbf_family().enumerate().map(Instance::Qbf).collect(),
        (InstanceKind::Qbf, Some(k)) => params
            .qbf_family()
            .sample(params.seed, k)
            .into_iter()
            .map(Instance::Qbf)
            .collect(),
        (InstanceKind::Minsat, None) => params
            .cnf_family()
            .enumerate_up_to_renaming()
            .into_iter()
            .map(Instance::Minsat)
            .collect(),
        (InstanceKind::Minsat, Some(k)) => params
            .cnf_family()
            .sample(params.seed, k)
            .into_iter()
            .map(Instance::Minsat)
            .collect(),
        (InstanceKind::Framework, None) => all_frameworks(params.max_args)?
            .into_iter()
            .map(Instance::Framework)
            .collect(),
        (InstanceKind::Framework, Some(k)) => random_frameworks(params.seed, k, params.max_args)
            .into_iter()
            .map(Instance::Framework)
            .collect(),
    })
}

fn arg_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("a{i}")).collect()
}

/// Every attack relation over exactly `n` arguments `a1..an`, self-attacks
/// included, ordered by the bit pattern of the relation.
pub fn all_frameworks(n: usize) -> Result<Vec<Framework>> {
    if n > EXHAUSTIVE_MAX_ARGS {
        return Err(Error::capacity(format!(
            "exhaustive framework families stop at {EXHAUSTIVE_MAX_ARGS} arguments"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    (0..1u64 << pairs.len())
        .map(|bits| {
            let attacks = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| bits >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Framework::from_indices(arg_names(n), attacks)
        })
        .collect()
}

/// `count` frameworks with `0..=max_args` arguments and a per-framework
/// attack density drawn from `[0.1, 0.5]`.
pub fn random_frameworks(seed: u64, count: usize, max_args: usize) -> Vec<Framework> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(0..=max_args);
            let density: f64 = rng.gen_range(0.1..=0.5);
            let mut attacks = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    if rng.gen_bool(density) {
                        attacks.push((a, b));
                    }
                }
            }
            Framework::from_indices(arg_names(n), attacks).expect("indices are in range")
        })
        .collect()
}
