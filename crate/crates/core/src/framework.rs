//! Argumentation frameworks and sets of arguments.
//!
//! A [`Framework`] is a finite directed graph: arguments are vertices, attacks
//! are edges. Arguments are indexed densely in declaration order and every
//! [`ArgSet`] is a bitset over those indices, tagged with the identity of the
//! framework it was created for.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

static NEXT_FRAMEWORK_ID: AtomicU64 = AtomicU64::new(1);

/// Identity tag shared by a framework and every set built from it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FrameworkId(u64);

impl FrameworkId {
    fn fresh() -> Self {
        FrameworkId(NEXT_FRAMEWORK_ID.fetch_add(1, AtomicOrdering::Relaxed))
    }
}

/// An immutable argumentation framework `(A, R)`.
///
/// Self-attacks are allowed. Equality compares argument names (in order) and
/// the attack relation, not the identity tag.
#[derive(Clone)]
pub struct Framework {
    id: FrameworkId,
    names: Vec<String>,
    index: HashMap<String, usize>,
    attacks: Vec<(usize, usize)>,
    targets: Vec<FixedBitSet>,
    attackers: Vec<FixedBitSet>,
}

impl Framework {
    /// Builds a framework from argument names and attacks given by name.
    pub fn new<N, A, B>(
        arguments: impl IntoIterator<Item = N>,
        attacks: impl IntoIterator<Item = (A, B)>,
    ) -> Result<Self>
    where
        N: Into<String>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let names: Vec<String> = arguments.into_iter().map(Into::into).collect();
        let index = build_index(&names)?;
        let mut edges = Vec::new();
        for (a, b) in attacks {
            let (a, b) = (a.as_ref(), b.as_ref());
            let from = *index
                .get(a)
                .ok_or_else(|| Error::usage(format!("attack ({a},{b}) names unknown argument {a}")))?;
            let to = *index
                .get(b)
                .ok_or_else(|| Error::usage(format!("attack ({a},{b}) names unknown argument {b}")))?;
            edges.push((from, to));
        }
        Ok(Self::assemble(names, index, edges))
    }

    /// Builds a framework from names and index pairs.
    pub fn from_indices(names: Vec<String>, attacks: Vec<(usize, usize)>) -> Result<Self> {
        let index = build_index(&names)?;
        let n = names.len();
        if let Some(&(a, b)) = attacks.iter().find(|&&(a, b)| a >= n || b >= n) {
            return Err(Error::usage(format!(
                "attack ({a},{b}) out of range for {n} arguments"
            )));
        }
        Ok(Self::assemble(names, index, attacks))
    }

    pub fn empty() -> Self {
        Self::assemble(Vec::new(), HashMap::new(), Vec::new())
    }

    fn assemble(names: Vec<String>, index: HashMap<String, usize>, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let n = names.len();
        let mut targets = vec![FixedBitSet::with_capacity(n); n];
        let mut attackers = vec![FixedBitSet::with_capacity(n); n];
        for &(a, b) in &edges {
            targets[a].insert(b);
            attackers[b].insert(a);
        }
        Framework {
            id: FrameworkId::fresh(),
            names,
            index,
            attacks: edges,
            targets,
            attackers,
        }
    }

    pub fn id(&self) -> FrameworkId {
        self.id
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, arg: usize) -> &str {
        &self.names[arg]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Index of `name`, or a usage error if the framework has no such argument.
    pub fn argument(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::usage(format!("unknown argument {name}")))
    }

    /// Attacks as sorted `(attacker, target)` index pairs.
    pub fn attacks(&self) -> &[(usize, usize)] {
        &self.attacks
    }

    pub fn attacks_arg(&self, a: usize, b: usize) -> bool {
        self.targets[a].contains(b)
    }

    /// Arguments attacked by `a`.
    pub fn targets(&self, a: usize) -> &FixedBitSet {
        &self.targets[a]
    }

    /// Arguments attacking `a`.
    pub fn attackers(&self, a: usize) -> &FixedBitSet {
        &self.attackers[a]
    }

    pub fn is_self_attacking(&self, a: usize) -> bool {
        self.targets[a].contains(a)
    }

    pub fn empty_set(&self) -> ArgSet {
        ArgSet {
            framework: self.id,
            bits: FixedBitSet::with_capacity(self.len()),
        }
    }

    pub fn full_set(&self) -> ArgSet {
        let mut bits = FixedBitSet::with_capacity(self.len());
        bits.insert_range(..);
        ArgSet {
            framework: self.id,
            bits,
        }
    }

    pub fn set_from_indices(&self, members: impl IntoIterator<Item = usize>) -> Result<ArgSet> {
        let mut set = self.empty_set();
        for i in members {
            if i >= self.len() {
                return Err(Error::usage(format!("argument index {i} out of range")));
            }
            set.bits.insert(i);
        }
        Ok(set)
    }

    pub fn set_from_names<S: AsRef<str>>(&self, members: impl IntoIterator<Item = S>) -> Result<ArgSet> {
        let mut set = self.empty_set();
        for name in members {
            set.bits.insert(self.argument(name.as_ref())?);
        }
        Ok(set)
    }

    pub(crate) fn set_from_mask(&self, mask: u64) -> ArgSet {
        let mut set = self.empty_set();
        let mut m = mask;
        while m != 0 {
            set.bits.insert(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        set
    }

    pub fn names_of(&self, set: &ArgSet) -> Vec<&str> {
        set.iter().map(|i| self.name(i)).collect()
    }

    /// Renders a set as `[a,b,c]` in argument order.
    pub fn format_set(&self, set: &ArgSet) -> String {
        format!("[{}]", self.names_of(set).join(","))
    }

    fn check_owned(&self, set: &ArgSet) -> Result<()> {
        if set.framework != self.id {
            return Err(Error::usage("argument set belongs to a different framework"));
        }
        Ok(())
    }

    /// `S` together with every argument attacked by `S`.
    pub fn range(&self, set: &ArgSet) -> Result<ArgSet> {
        self.check_owned(set)?;
        let mut out = set.clone();
        for a in set.iter() {
            out.bits.union_with(&self.targets[a]);
        }
        Ok(out)
    }

    /// Arguments attacked by some member of `set`.
    pub(crate) fn attacked_by(&self, set: &ArgSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.len());
        for a in set.iter() {
            out.union_with(&self.targets[a]);
        }
        out
    }

    pub fn is_conflict_free(&self, set: &ArgSet) -> Result<bool> {
        self.check_owned(set)?;
        Ok(set.iter().all(|a| self.targets[a].is_disjoint(&set.bits)))
    }

    /// Whether every attacker of `arg` is attacked by `set`.
    pub fn defends(&self, set: &ArgSet, arg: usize) -> Result<bool> {
        self.check_owned(set)?;
        if arg >= self.len() {
            return Err(Error::usage(format!("argument index {arg} out of range")));
        }
        let hit = self.attacked_by(set);
        Ok(self.attackers[arg].is_subset(&hit))
    }

    pub fn defends_named(&self, set: &ArgSet, name: &str) -> Result<bool> {
        let arg = self.argument(name)?;
        self.defends(set, arg)
    }

    /// The characteristic function: every argument defended by `set`.
    pub fn characteristic(&self, set: &ArgSet) -> Result<ArgSet> {
        self.check_owned(set)?;
        let hit = self.attacked_by(set);
        let mut out = self.empty_set();
        for a in 0..self.len() {
            if self.attackers[a].is_subset(&hit) {
                out.bits.insert(a);
            }
        }
        Ok(out)
    }

    /// Whether `set` is conflict-free and defends each of its members.
    pub fn is_admissible(&self, set: &ArgSet) -> Result<bool> {
        if !self.is_conflict_free(set)? {
            return Ok(false);
        }
        let hit = self.attacked_by(set);
        Ok(set.iter().all(|a| self.attackers[a].is_subset(&hit)))
    }

    /// The subframework induced by `keep`; argument order is preserved.
    pub fn induced(&self, keep: &ArgSet) -> Result<Framework> {
        self.check_owned(keep)?;
        let mut remap = vec![usize::MAX; self.len()];
        let mut names = Vec::with_capacity(keep.len());
        for (new, old) in keep.iter().enumerate() {
            remap[old] = new;
            names.push(self.names[old].clone());
        }
        let edges = self
            .attacks
            .iter()
            .filter(|&&(a, b)| keep.contains(a) && keep.contains(b))
            .map(|&(a, b)| (remap[a], remap[b]))
            .collect();
        Framework::from_indices(names, edges)
    }

    /// `F - S`: delete `removed` and all incident attacks.
    pub fn without(&self, removed: &ArgSet) -> Result<Framework> {
        self.check_owned(removed)?;
        let keep = self.full_set().difference(removed);
        self.induced(&keep)
    }
}

fn build_index(names: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if name.is_empty() {
            return Err(Error::usage("argument names must be nonempty"));
        }
        if index.insert(name.clone(), i).is_some() {
            return Err(Error::usage(format!("duplicate argument {name}")));
        }
    }
    Ok(index)
}

impl PartialEq for Framework {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.attacks == other.attacks
    }
}

impl Eq for Framework {}

impl fmt::Debug for Framework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let attacks: Vec<_> = self
            .attacks
            .iter()
            .map(|&(a, b)| format!("{}->{}", self.names[a], self.names[b]))
            .collect();
        f.debug_struct("Framework")
            .field("arguments", &self.names)
            .field("attacks", &attacks)
            .finish()
    }
}

/// A subset of a framework's arguments.
///
/// Sets from different frameworks must not be mixed; the binary set
/// operations panic when they are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArgSet {
    framework: FrameworkId,
    bits: FixedBitSet,
}

impl ArgSet {
    pub fn framework(&self) -> FrameworkId {
        self.framework
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, arg: usize) -> bool {
        self.bits.contains(arg)
    }

    /// Member indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    fn same_framework(&self, other: &ArgSet) {
        assert_eq!(
            self.framework, other.framework,
            "argument sets from different frameworks"
        );
    }

    pub fn is_subset(&self, other: &ArgSet) -> bool {
        self.same_framework(other);
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &ArgSet) -> bool {
        self.same_framework(other);
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union(&self, other: &ArgSet) -> ArgSet {
        self.same_framework(other);
        let mut out = self.clone();
        out.bits.union_with(&other.bits);
        out
    }

    pub fn intersection(&self, other: &ArgSet) -> ArgSet {
        self.same_framework(other);
        let mut out = self.clone();
        out.bits.intersect_with(&other.bits);
        out
    }

    pub fn difference(&self, other: &ArgSet) -> ArgSet {
        self.same_framework(other);
        let mut out = self.clone();
        out.bits.difference_with(&other.bits);
        out
    }

    pub fn with(&self, arg: usize) -> ArgSet {
        let mut out = self.clone();
        out.bits.insert(arg);
        out
    }

    pub fn without(&self, arg: usize) -> ArgSet {
        let mut out = self.clone();
        out.bits.set(arg, false);
        out
    }

    /// The set as a 64-bit mask, if every member index is below 64.
    pub fn to_mask(&self) -> Option<u64> {
        let mut mask = 0u64;
        for i in self.iter() {
            if i >= 64 {
                return None;
            }
            mask |= 1 << i;
        }
        Some(mask)
    }
}

/// Canonical order: lexicographic over the increasing member index lists.
impl Ord for ArgSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.framework
            .cmp(&other.framework)
            .then_with(|| self.bits.ones().cmp(other.bits.ones()))
    }
}

impl PartialOrd for ArgSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> Framework {
        Framework::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap()
    }

    #[test]
    fn range_of_empty_and_direct_attack() {
        let f = Framework::new(["a", "b"], [("a", "b")]).unwrap();
        assert!(f.range(&f.empty_set()).unwrap().is_empty());
        let r = f.range(&f.set_from_names(["a"]).unwrap()).unwrap();
        assert_eq!(f.names_of(&r), ["a", "b"]);
    }

    #[test]
    fn conflict_freeness() {
        let f = Framework::new(["a"], [("a", "a")]).unwrap();
        assert!(f.is_conflict_free(&f.empty_set()).unwrap());
        assert!(!f.is_conflict_free(&f.full_set()).unwrap());
    }

    #[test]
    fn defense() {
        let f = Framework::new(["a", "b", "c"], [("b", "a"), ("c", "b")]).unwrap();
        let c = f.set_from_names(["c"]).unwrap();
        assert!(f.defends_named(&c, "a").unwrap());
        assert!(f.defends_named(&f.empty_set(), "c").unwrap());
        assert!(!f.defends_named(&f.empty_set(), "a").unwrap());
    }

    #[test]
    fn characteristic_examples() {
        let f = chain();
        let out = f.characteristic(&f.set_from_names(["a"]).unwrap()).unwrap();
        assert_eq!(f.names_of(&out), ["a", "c"]);

        let mutual = Framework::new(["a", "b"], [("a", "b"), ("b", "a")]).unwrap();
        assert!(mutual.characteristic(&mutual.empty_set()).unwrap().is_empty());
    }

    #[test]
    fn foreign_sets_are_rejected() {
        let f = chain();
        let g = chain();
        let s = g.set_from_names(["a"]).unwrap();
        assert!(matches!(f.range(&s), Err(Error::Usage(_))));
        assert!(matches!(f.is_conflict_free(&s), Err(Error::Usage(_))));
        assert!(matches!(f.characteristic(&s), Err(Error::Usage(_))));
        assert!(matches!(f.defends(&s, 0), Err(Error::Usage(_))));
    }

    #[test]
    fn unknown_argument_is_usage_error() {
        let f = chain();
        assert!(matches!(
            f.defends_named(&f.empty_set(), "zz"),
            Err(Error::Usage(_))
        ));
        assert!(Framework::new(["a", "a"], Vec::<(&str, &str)>::new()).is_err());
        assert!(Framework::new(["a"], [("a", "b")]).is_err());
    }

    #[test]
    fn induced_subframework_drops_incident_attacks() {
        let f = chain();
        let g = f.without(&f.set_from_names(["b"]).unwrap()).unwrap();
        assert_eq!(g.names(), ["a", "c"]);
        assert!(g.attacks().is_empty());
    }

    #[test]
    fn canonical_order_is_lexicographic_over_members() {
        let f = chain();
        let mut sets = [
            f.set_from_names(["b"]).unwrap(),
            f.set_from_names(["a", "c"]).unwrap(),
            f.empty_set(),
            f.set_from_names(["a"]).unwrap(),
        ];
        sets.sort();
        let rendered: Vec<_> = sets.iter().map(|s| f.format_set(s)).collect();
        assert_eq!(rendered, ["[]", "[a]", "[a,c]", "[b]"]);
    }
}
