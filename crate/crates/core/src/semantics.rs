//! Extension enumeration and acceptance under the classical semantics.
//!
//! Candidate sets are produced by a depth-first search over conflict-free
//! sets on 64-bit masks; the maximality-based semantics (preferred, stage,
//! semi-stable) filter those candidates. Grounded is a fixpoint and has no
//! size bound.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::framework::{ArgSet, Framework, FrameworkId};

/// Default bound on the number of arguments for enumeration.
pub const DEFAULT_MAX_ARGS: usize = 24;

/// Identifier of an extension-based semantics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Semantics {
    /// Conflict-free sets.
    Cf,
    /// ⊆-maximal conflict-free sets.
    Naive,
    Adm,
    Stb,
    Com,
    Grd,
    Prf,
    Stg,
    Sem,
}

impl Semantics {
    pub const ALL: [Semantics; 9] = [
        Semantics::Cf,
        Semantics::Naive,
        Semantics::Adm,
        Semantics::Stb,
        Semantics::Com,
        Semantics::Grd,
        Semantics::Prf,
        Semantics::Stg,
        Semantics::Sem,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Semantics::Cf => "cf",
            Semantics::Naive => "naive",
            Semantics::Adm => "adm",
            Semantics::Stb => "stb",
            Semantics::Com => "com",
            Semantics::Grd => "grd",
            Semantics::Prf => "prf",
            Semantics::Stg => "stg",
            Semantics::Sem => "sem",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Semantics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Semantics::ALL
            .into_iter()
            .find(|sem| sem.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::usage(format!("unknown semantics {s}")))
    }
}

/// Enumeration limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_args: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_args: DEFAULT_MAX_ARGS,
        }
    }
}

/// The extensions of one framework, deduplicated and in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSet {
    framework: FrameworkId,
    extensions: Vec<ArgSet>,
}

impl ExtensionSet {
    fn from_masks(f: &Framework, mut masks: Vec<u64>) -> Self {
        masks.sort_unstable();
        masks.dedup();
        let mut extensions: Vec<ArgSet> = masks.into_iter().map(|m| f.set_from_mask(m)).collect();
        extensions.sort();
        ExtensionSet {
            framework: f.id(),
            extensions,
        }
    }

    pub fn framework(&self) -> FrameworkId {
        self.framework
    }

    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ArgSet> {
        self.extensions.iter()
    }

    pub fn as_slice(&self) -> &[ArgSet] {
        &self.extensions
    }

    pub fn contains(&self, set: &ArgSet) -> bool {
        self.extensions.binary_search(set).is_ok()
    }

    /// Every extension of `self` is also an extension of `other`.
    pub fn is_subset(&self, other: &ExtensionSet) -> bool {
        self.extensions.iter().all(|e| other.contains(e))
    }

    pub fn some_contains(&self, arg: usize) -> bool {
        self.extensions.iter().any(|e| e.contains(arg))
    }

    pub fn all_contain(&self, arg: usize) -> bool {
        self.extensions.iter().all(|e| e.contains(arg))
    }
}

impl<'a> IntoIterator for &'a ExtensionSet {
    type Item = &'a ArgSet;
    type IntoIter = std::slice::Iter<'a, ArgSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.extensions.iter()
    }
}

/// Mask-level view of a framework with at most 64 arguments.
struct Kernel {
    n: usize,
    all: u64,
    targets: Vec<u64>,
    attackers: Vec<u64>,
    self_attacking: u64,
}

impl Kernel {
    fn new(f: &Framework) -> Self {
        let n = f.len();
        debug_assert!(n <= 64);
        let mut targets = vec![0u64; n];
        let mut attackers = vec![0u64; n];
        let mut self_attacking = 0;
        for &(a, b) in f.attacks() {
            targets[a] |= 1 << b;
            attackers[b] |= 1 << a;
            if a == b {
                self_attacking |= 1 << a;
            }
        }
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Kernel {
            n,
            all,
            targets,
            attackers,
            self_attacking,
        }
    }

    fn attacked(&self, set: u64) -> u64 {
        let mut hit = 0;
        let mut m = set;
        while m != 0 {
            hit |= self.targets[m.trailing_zeros() as usize];
            m &= m - 1;
        }
        hit
    }

    fn range(&self, set: u64) -> u64 {
        set | self.attacked(set)
    }

    fn defended(&self, hit: u64) -> u64 {
        (0..self.n)
            .filter(|&a| self.attackers[a] & !hit == 0)
            .fold(0, |acc, a| acc | 1 << a)
    }

    fn is_admissible(&self, set: u64) -> bool {
        let hit = self.attacked(set);
        let mut m = set;
        while m != 0 {
            if self.attackers[m.trailing_zeros() as usize] & !hit != 0 {
                return false;
            }
            m &= m - 1;
        }
        true
    }

    fn is_complete(&self, set: u64) -> bool {
        self.is_admissible(set) && self.defended(self.attacked(set)) & !set == 0
    }

    fn grounded(&self) -> u64 {
        let mut set = 0;
        loop {
            let next = self.defended(self.attacked(set));
            if next == set {
                return set;
            }
            set = next;
        }
    }

    /// Visits every conflict-free set with the mask of arguments in conflict with it.
    fn for_each_conflict_free(&self, visit: &mut dyn FnMut(u64, u64)) {
        self.cf_search(0, 0, 0, visit);
    }

    fn cf_search(&self, i: usize, set: u64, conflict: u64, visit: &mut dyn FnMut(u64, u64)) {
        if i == self.n {
            visit(set, conflict);
            return;
        }
        self.cf_search(i + 1, set, conflict, visit);
        let bit = 1u64 << i;
        if (conflict | self.self_attacking) & bit == 0 {
            self.cf_search(
                i + 1,
                set | bit,
                conflict | self.targets[i] | self.attackers[i],
                visit,
            );
        }
    }

    fn collect(&self, keep: impl Fn(u64, u64) -> bool) -> Vec<u64> {
        let mut out = Vec::new();
        self.for_each_conflict_free(&mut |set, conflict| {
            if keep(set, conflict) {
                out.push(set);
            }
        });
        out
    }

    fn naive(&self) -> Vec<u64> {
        self.collect(|set, conflict| self.all & !(set | conflict | self.self_attacking) == 0)
    }

    fn extensions(&self, sigma: Semantics) -> Vec<u64> {
        match sigma {
            Semantics::Cf => self.collect(|_, _| true),
            Semantics::Naive => self.naive(),
            Semantics::Adm => self.collect(|set, _| self.is_admissible(set)),
            Semantics::Stb => self.collect(|set, _| self.range(set) == self.all),
            Semantics::Com => self.collect(|set, _| self.is_complete(set)),
            Semantics::Grd => vec![self.grounded()],
            Semantics::Prf => maximal_subsets(self.extensions(Semantics::Adm)),
            Semantics::Sem => self.maximal_range(self.extensions(Semantics::Prf)),
            Semantics::Stg => self.maximal_range(self.naive()),
        }
    }

    /// Keeps the candidates whose range is ⊆-maximal among candidate ranges.
    fn maximal_range(&self, candidates: Vec<u64>) -> Vec<u64> {
        let ranges: Vec<u64> = candidates.iter().map(|&s| self.range(s)).collect();
        let mut best = maximal_subsets(ranges.clone());
        best.sort_unstable();
        candidates
            .into_iter()
            .zip(ranges)
            .filter(|(_, r)| best.binary_search(r).is_ok())
            .map(|(s, _)| s)
            .collect()
    }
}

/// ⊆-maximal members of a family of masks.
fn maximal_subsets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable();
    sets.dedup();
    sets.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
    let mut kept: Vec<u64> = Vec::new();
    for s in sets {
        if !kept.iter().any(|&k| s & !k == 0) {
            kept.push(s);
        }
    }
    kept
}

fn kernel_for(f: &Framework, limits: &Limits) -> Result<Kernel> {
    let bound = limits.max_args.min(64);
    if f.len() > bound {
        return Err(Error::capacity(format!(
            "framework has {} arguments; enumeration bound is {bound}",
            f.len()
        )));
    }
    Ok(Kernel::new(f))
}

/// All extensions of `f` under `sigma`, with the default enumeration bound.
pub fn extensions(f: &Framework, sigma: Semantics) -> Result<ExtensionSet> {
    extensions_with(f, sigma, &Limits::default())
}

pub fn extensions_with(f: &Framework, sigma: Semantics, limits: &Limits) -> Result<ExtensionSet> {
    if sigma == Semantics::Grd {
        return Ok(ExtensionSet {
            framework: f.id(),
            extensions: vec![grounded(f)],
        });
    }
    let kernel = kernel_for(f, limits)?;
    Ok(ExtensionSet::from_masks(f, kernel.extensions(sigma)))
}

/// The grounded extension: least fixpoint of the characteristic function.
pub fn grounded(f: &Framework) -> ArgSet {
    let mut set = f.empty_set();
    loop {
        let next = f
            .characteristic(&set)
            .expect("set was built from this framework");
        if next == set {
            return set;
        }
        set = next;
    }
}

/// Is `arg` contained in some extension?
pub fn credulous(f: &Framework, sigma: Semantics, arg: &str) -> Result<bool> {
    credulous_with(f, sigma, arg, &Limits::default())
}

pub fn credulous_with(f: &Framework, sigma: Semantics, arg: &str, limits: &Limits) -> Result<bool> {
    let a = f.argument(arg)?;
    Ok(extensions_with(f, sigma, limits)?.some_contains(a))
}

/// Is `arg` contained in every extension? Vacuously true when there are none.
pub fn skeptical(f: &Framework, sigma: Semantics, arg: &str) -> Result<bool> {
    skeptical_with(f, sigma, arg, &Limits::default())
}

pub fn skeptical_with(f: &Framework, sigma: Semantics, arg: &str, limits: &Limits) -> Result<bool> {
    let a = f.argument(arg)?;
    Ok(extensions_with(f, sigma, limits)?.all_contain(a))
}
