//! Recognition of the tractable graph classes and deletion distances to them.
//!
//! Conventions:
//! * `ACY`: no directed cycle; a self-attack is a cycle of length one.
//! * `NOEVEN`: no directed simple cycle of even length; a mutual attack is an
//!   even cycle of length two.
//! * `BIP`: the underlying undirected graph is 2-colourable; a self-attack
//!   makes a framework non-bipartite.
//! * `SYM`: the attack relation is symmetric and irreflexive.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::framework::{ArgSet, Framework};

/// Default cap on the number of cycles [`simple_cycles`] will emit.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

/// Default number of candidate deletion sets the exact distance search may test.
pub const DEFAULT_DISTANCE_BUDGET: u64 = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum GraphClass {
    Acy,
    NoEven,
    Bip,
    Sym,
}

impl GraphClass {
    pub const ALL: [GraphClass; 4] = [GraphClass::Acy, GraphClass::NoEven, GraphClass::Bip, GraphClass::Sym];

    pub fn as_str(self) -> &'static str {
        match self {
            GraphClass::Acy => "ACY",
            GraphClass::NoEven => "NOEVEN",
            GraphClass::Bip => "BIP",
            GraphClass::Sym => "SYM",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphClass::ALL
            .into_iter()
            .find(|g| g.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::usage(format!("unknown graph class {s}")))
    }
}

/// A deletion set witnessing `dist_class(F) <= k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceCertificate {
    pub class: GraphClass,
    pub k: usize,
    pub deletion_set: ArgSet,
}

/// The subgraph of a framework induced by the `alive` arguments.
struct View<'a> {
    f: &'a Framework,
    out: Vec<Vec<usize>>,
    alive: Vec<bool>,
}

impl<'a> View<'a> {
    fn new(f: &'a Framework) -> Self {
        let mut out = vec![Vec::new(); f.len()];
        for &(a, b) in f.attacks() {
            out[a].push(b);
        }
        View {
            f,
            out,
            alive: vec![true; f.len()],
        }
    }

    fn succ(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v].iter().copied().filter(|&w| self.alive[w])
    }

    fn pred(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.f.attackers(v).ones().filter(|&w| self.alive[w])
    }

    fn live(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.alive.len()).filter(|&v| self.alive[v])
    }

    fn self_loop(&self, v: usize) -> bool {
        self.f.is_self_attacking(v)
    }

    fn degree(&self, v: usize) -> usize {
        self.succ(v).count() + self.pred(v).count()
    }

    fn is_member(&self, class: GraphClass) -> bool {
        match class {
            GraphClass::Acy => self.is_acyclic(),
            GraphClass::NoEven => self.even_cycle(2).is_none(),
            GraphClass::Bip => self.odd_edge().is_none(),
            GraphClass::Sym => self.asymmetric_count_max().is_none(),
        }
    }

    fn is_acyclic(&self) -> bool {
        let n = self.alive.len();
        let mut indeg = vec![0usize; n];
        for v in self.live() {
            for w in self.succ(v) {
                indeg[w] += 1;
            }
        }
        let mut queue: VecDeque<usize> = self.live().filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for w in self.succ(v) {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        seen == self.live().count()
    }

    /// First even cycle of length at least `min_len`, in Johnson order.
    fn even_cycle(&self, min_len: usize) -> Option<Vec<usize>> {
        let mut found = None;
        let _ = self.cycles(&mut |c| {
            if c.len() % 2 == 0 && c.len() >= min_len {
                found = Some(c.to_vec());
                Err(Stop)
            } else {
                Ok(())
            }
        });
        found
    }

    /// An undirected edge closing an odd cycle, or a self-loop `(v, v)`.
    fn odd_edge(&self) -> Option<(usize, usize)> {
        if let Some(v) = self.live().find(|&v| self.self_loop(v)) {
            return Some((v, v));
        }
        let n = self.alive.len();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for start in self.live() {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].unwrap();
                for w in self.succ(v).chain(self.pred(v)) {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return Some((v, w)),
                        Some(_) => {}
                    }
                }
            }
        }
        None
    }

    /// The vertex with the most symmetry violations, if any.
    fn asymmetric_count_max(&self) -> Option<usize> {
        let n = self.alive.len();
        let mut bad = vec![0usize; n];
        for v in self.live() {
            for w in self.succ(v) {
                if v == w {
                    bad[v] += 2;
                } else if !self.f.attacks_arg(w, v) {
                    bad[v] += 1;
                    bad[w] += 1;
                }
            }
        }
        let best = self.live().filter(|&v| bad[v] > 0).max_by_key(|&v| (bad[v], std::cmp::Reverse(v)));
        best
    }

    /// Johnson's enumeration of elementary circuits; each cycle starts at its
    /// least vertex.
    fn cycles(&self, visit: &mut dyn FnMut(&[usize]) -> Result<(), Stop>) -> Result<(), Stop> {
        let n = self.alive.len();
        let mut blocked = vec![false; n];
        let mut blocked_by: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut stack = Vec::new();
        for s in self.live() {
            let comp = self.component_of(s);
            if !comp[s] {
                continue;
            }
            for v in 0..n {
                if comp[v] {
                    blocked[v] = false;
                    blocked_by[v].clear();
                }
            }
            let mut search = CircuitSearch {
                view: self,
                start: s,
                comp: &comp,
                blocked: &mut blocked,
                blocked_by: &mut blocked_by,
                stack: &mut stack,
                visit,
            };
            search.circuit(s)?;
        }
        Ok(())
    }

    /// Vertices `>= s` lying on a common cycle with `s` inside that subgraph.
    /// `comp[s]` is false when `s` lies on no such cycle.
    fn component_of(&self, s: usize) -> Vec<bool> {
        let n = self.alive.len();
        let allowed = |v: usize| v >= s && self.alive[v];
        let mut fwd = vec![false; n];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for w in self.succ(v) {
                if allowed(w) && !fwd[w] {
                    fwd[w] = true;
                    stack.push(w);
                }
            }
        }
        // fwd[s] is set iff s reaches itself
        if !fwd[s] {
            return vec![false; n];
        }
        let mut bwd = vec![false; n];
        bwd[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for w in self.pred(v) {
                if allowed(w) && !bwd[w] {
                    bwd[w] = true;
                    stack.push(w);
                }
            }
        }
        (0..n).map(|v| fwd[v] && bwd[v]).collect()
    }
}

/// Early-exit marker for cycle visitors.
struct Stop;

struct CircuitSearch<'v, 'a> {
    view: &'v View<'a>,
    start: usize,
    comp: &'v [bool],
    blocked: &'v mut Vec<bool>,
    blocked_by: &'v mut Vec<Vec<usize>>,
    stack: &'v mut Vec<usize>,
    visit: &'v mut dyn FnMut(&[usize]) -> Result<(), Stop>,
}

impl CircuitSearch<'_, '_> {
    fn circuit(&mut self, v: usize) -> Result<bool, Stop> {
        let mut found = false;
        self.stack.push(v);
        self.blocked[v] = true;
        let succ: Vec<usize> = self.view.succ(v).filter(|&w| self.comp[w]).collect();
        for &w in &succ {
            if w == self.start {
                (self.visit)(self.stack)?;
                found = true;
            } else if !self.blocked[w] && self.circuit(w)? {
                found = true;
            }
        }
        if found {
            self.unblock(v);
        } else {
            for &w in &succ {
                if !self.blocked_by[w].contains(&v) {
                    self.blocked_by[w].push(v);
                }
            }
        }
        self.stack.pop();
        Ok(found)
    }

    fn unblock(&mut self, u: usize) {
        self.blocked[u] = false;
        let waiting = std::mem::take(&mut self.blocked_by[u]);
        for w in waiting {
            if self.blocked[w] {
                self.unblock(w);
            }
        }
    }
}

pub fn is_member(f: &Framework, class: GraphClass) -> bool {
    View::new(f).is_member(class)
}

/// `NOEVEN` under the alternative convention where mutual attacks are not
/// counted as even cycles (only even cycles of length four or more are).
pub fn is_noeven_ignoring_mutual_attacks(f: &Framework) -> bool {
    View::new(f).even_cycle(4).is_none()
}

/// Whether deleting `removed` (and its incident attacks) leaves a member of `class`.
pub fn verify_deletion(f: &Framework, class: GraphClass, removed: &ArgSet) -> Result<bool> {
    if removed.framework() != f.id() {
        return Err(Error::usage("deletion set belongs to a different framework"));
    }
    let mut view = View::new(f);
    for v in removed.iter() {
        view.alive[v] = false;
    }
    Ok(view.is_member(class))
}

/// All directed simple cycles, each once up to rotation, starting at its
/// least argument index; self-attacks are cycles of length one.
pub fn simple_cycles(f: &Framework) -> Result<Vec<Vec<usize>>> {
    simple_cycles_capped(f, DEFAULT_CYCLE_CAP)
}

pub fn simple_cycles_capped(f: &Framework, cap: usize) -> Result<Vec<Vec<usize>>> {
    let view = View::new(f);
    let mut out = Vec::new();
    let status = view.cycles(&mut |c| {
        if out.len() == cap {
            return Err(Stop);
        }
        out.push(c.to_vec());
        Ok(())
    });
    if status.is_err() {
        return Err(Error::capacity(format!("more than {cap} simple cycles")));
    }
    out.sort();
    Ok(out)
}

/// Exact distance with the default search budget.
pub fn distance(f: &Framework, class: GraphClass) -> Result<DistanceCertificate> {
    distance_with_budget(f, class, DEFAULT_DISTANCE_BUDGET)
}

/// Minimal deletion set for `class`; the lexicographically least one among
/// those of minimal size.
pub fn distance_with_budget(f: &Framework, class: GraphClass, budget: u64) -> Result<DistanceCertificate> {
    let upper = greedy_deletion(f, class);
    let n = f.len();
    let mut view = View::new(f);
    let mut spent: u64 = 0;
    for k in 0..=upper.len() {
        let level = binomial(n as u64, k as u64);
        if spent.saturating_add(level) > budget {
            return Err(Error::DistanceBudget {
                class: class.to_string(),
                budget,
                upper_bound: upper.iter().map(|&v| f.name(v).to_string()).collect(),
            });
        }
        spent += level;
        for combo in (0..n).combinations(k) {
            for &v in &combo {
                view.alive[v] = false;
            }
            let ok = view.is_member(class);
            for &v in &combo {
                view.alive[v] = true;
            }
            if ok {
                let deletion_set = f.set_from_indices(combo)?;
                return Ok(DistanceCertificate {
                    class,
                    k,
                    deletion_set,
                });
            }
        }
    }
    unreachable!("the greedy deletion set is a member of the class")
}

/// A deletion set built by repeatedly removing a vertex on a violating structure.
fn greedy_deletion(f: &Framework, class: GraphClass) -> Vec<usize> {
    let mut view = View::new(f);
    let mut removed = Vec::new();
    while !view.is_member(class) {
        let pick = match class {
            GraphClass::Acy => view
                .live()
                .find(|&v| view.self_loop(v))
                .or_else(|| {
                    view.live()
                        .filter(|&v| on_cycle(&view, v))
                        .max_by_key(|&v| (view.degree(v), std::cmp::Reverse(v)))
                }),
            GraphClass::NoEven => view
                .even_cycle(2)
                .and_then(|c| c.into_iter().max_by_key(|&v| (view.degree(v), std::cmp::Reverse(v)))),
            GraphClass::Bip => view.odd_edge().map(|(a, b)| {
                if view.degree(b) > view.degree(a) {
                    b
                } else {
                    a
                }
            }),
            GraphClass::Sym => view.asymmetric_count_max(),
        };
        let v = pick.expect("a non-member has a violating vertex");
        view.alive[v] = false;
        removed.push(v);
    }
    removed.sort_unstable();
    removed
}

fn on_cycle(view: &View<'_>, v: usize) -> bool {
    let mut seen = vec![false; view.alive.len()];
    let mut stack: Vec<usize> = view.succ(v).collect();
    while let Some(w) = stack.pop() {
        if w == v {
            return true;
        }
        if !seen[w] {
            seen[w] = true;
            stack.extend(view.succ(w));
        }
    }
    false
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mutual() -> Framework {
        Framework::new(["a", "b"], [("a", "b"), ("b", "a")]).unwrap()
    }

    #[test]
    fn empty_framework_is_in_every_class() {
        let f = Framework::empty();
        for g in GraphClass::ALL {
            assert!(is_member(&f, g), "{g}");
        }
    }

    #[test]
    fn mutual_attack_membership() {
        let f = mutual();
        assert!(is_member(&f, GraphClass::Sym));
        assert!(is_member(&f, GraphClass::Bip));
        assert!(!is_member(&f, GraphClass::Acy));
        assert!(!is_member(&f, GraphClass::NoEven));
        assert!(is_noeven_ignoring_mutual_attacks(&f));
    }

    #[test]
    fn self_attack_breaks_everything_but_noeven() {
        let f = Framework::new(["a"], [("a", "a")]).unwrap();
        assert!(!is_member(&f, GraphClass::Acy));
        assert!(is_member(&f, GraphClass::NoEven));
        assert!(!is_member(&f, GraphClass::Bip));
        assert!(!is_member(&f, GraphClass::Sym));
        assert_eq!(simple_cycles(&f).unwrap(), vec![vec![0]]);
    }

    #[test]
    fn acyclic_has_no_cycles() {
        let f = Framework::new(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert!(simple_cycles(&f).unwrap().is_empty());
        assert!(is_member(&f, GraphClass::Acy));
    }

    #[test]
    fn cycles_of_a_complete_digraph() {
        // K3 with all six directed edges: three 2-cycles and two 3-cycles
        let names = ["a", "b", "c"];
        let edges: Vec<_> = names
            .iter()
            .flat_map(|&x| names.iter().filter(move |&&y| y != x).map(move |&y| (x, y)))
            .collect();
        let f = Framework::new(names, edges).unwrap();
        let cycles = simple_cycles(&f).unwrap();
        assert_eq!(cycles.len(), 5);
        assert!(cycles.iter().all(|c| c[0] == *c.iter().min().unwrap()));
        assert!(matches!(simple_cycles_capped(&f, 4), Err(Error::Capacity(_))));
    }

    #[test]
    fn four_cycle_is_even() {
        let f = Framework::new(
            ["a", "b", "c", "d"],
            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        )
        .unwrap();
        assert!(!is_member(&f, GraphClass::NoEven));
        assert!(!is_noeven_ignoring_mutual_attacks(&f));
        assert!(is_member(&f, GraphClass::Bip));
        let cert = distance(&f, GraphClass::NoEven).unwrap();
        assert_eq!(cert.k, 1);
        assert_eq!(f.names_of(&cert.deletion_set), ["a"]);
    }

    #[test]
    fn distance_zero_for_members() {
        let f = mutual();
        let cert = distance(&f, GraphClass::Sym).unwrap();
        assert_eq!(cert.k, 0);
        assert!(cert.deletion_set.is_empty());
    }

    #[test]
    fn odd_cycle_distance_to_bipartite() {
        let f = Framework::new(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        assert!(!is_member(&f, GraphClass::Bip));
        let cert = distance(&f, GraphClass::Bip).unwrap();
        assert_eq!(cert.k, 1);
        assert!(verify_deletion(&f, GraphClass::Bip, &cert.deletion_set).unwrap());
        let sym = distance(&f, GraphClass::Sym).unwrap();
        assert_eq!(sym.k, 2);
    }

    #[test]
    fn deleting_everything_always_verifies() {
        let f = Framework::new(["a", "b"], [("a", "a"), ("a", "b")]).unwrap();
        for g in GraphClass::ALL {
            assert!(verify_deletion(&f, g, &f.full_set()).unwrap());
        }
    }

    #[test]
    fn budget_exhaustion_reports_upper_bound() {
        let f = Framework::new(["a", "b", "c"], [("a", "a"), ("b", "b"), ("c", "c")]).unwrap();
        match distance_with_budget(&f, GraphClass::Acy, 3) {
            Err(Error::DistanceBudget { upper_bound, .. }) => assert_eq!(upper_bound, ["a", "b", "c"]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(20, 10), 184_756);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn class_names_parse() {
        for g in GraphClass::ALL {
            assert_eq!(g.as_str().to_lowercase().parse::<GraphClass>().unwrap(), g);
        }
    }
}
