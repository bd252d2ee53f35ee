//! Exhaustive and seeded-random instance families.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{CnfFormula, Literal, MinsatInstance, Qbf2Formula};

/// Bounds and flags describing a family of `∀Y∃Z φ` formulas.
///
/// Universal variables are named `y1, y2, ...` and existential ones
/// `z1, z2, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QbfFamily {
    pub max_universal: usize,
    pub max_existential: usize,
    pub max_clauses: usize,
    pub max_width: usize,
    /// Only monotone matrices (every clause all-positive or all-negative).
    pub monotone: bool,
    /// Every clause contains an existential literal.
    pub clause_touches_existential: bool,
}

impl QbfFamily {
    /// Every formula within the bounds, without duplicates, in a fixed order:
    /// by `|Y|`, then `|Z|`, then clause count, then clause combination.
    pub fn enumerate(&self) -> impl Iterator<Item = Qbf2Formula> {
        let family = self.clone();
        (0..=self.max_universal)
            .cartesian_product(0..=self.max_existential)
            .flat_map(move |(ny, nz)| {
                let candidates = family.candidate_clauses(ny, nz);
                let max_clauses = family.max_clauses;
                (0..=max_clauses).flat_map(move |k| {
                    let candidates = candidates.clone();
                    (0..candidates.len()).combinations(k).map(move |pick| {
                        let clauses = pick.iter().map(|&i| candidates[i].clone()).collect();
                        build(ny, nz, clauses)
                    })
                })
            })
    }

    fn candidate_clauses(&self, ny: usize, nz: usize) -> Vec<Vec<Literal>> {
        let n = ny + nz;
        let mut out = Vec::new();
        for width in 1..=self.max_width.min(n) {
            for vars in (0..n).combinations(width) {
                if self.clause_touches_existential && vars.iter().all(|&v| v < ny) {
                    continue;
                }
                if self.monotone {
                    out.push(vars.iter().map(|&v| Literal::pos(v)).collect());
                    out.push(vars.iter().map(|&v| Literal::neg(v)).collect());
                } else {
                    for signs in 0..1u32 << width {
                        out.push(
                            vars.iter()
                                .enumerate()
                                .map(|(i, &v)| Literal { var: v, negated: signs >> i & 1 == 1 })
                                .collect(),
                        );
                    }
                }
            }
        }
        out
    }

    /// `count` formulas drawn from the bounds with a seeded generator.
    pub fn sample(&self, seed: u64, count: usize) -> Vec<Qbf2Formula> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).map(|_| self.sample_one(&mut rng)).collect()
    }

    fn sample_one(&self, rng: &mut ChaCha8Rng) -> Qbf2Formula {
        let ny = rng.gen_range(0..=self.max_universal);
        let mut nz = rng.gen_range(0..=self.max_existential);
        if self.clause_touches_existential && nz == 0 {
            nz = self.max_existential.min(1);
        }
        let n = ny + nz;
        let mut k = rng.gen_range(0..=self.max_clauses);
        if n == 0 || (self.clause_touches_existential && nz == 0) || self.max_width == 0 {
            k = 0;
        }
        let mut seen = BTreeSet::new();
        let mut clauses = Vec::new();
        for _ in 0..k {
            let width = rng.gen_range(1..=self.max_width.min(n));
            let mut vars: Vec<usize> = if self.clause_touches_existential {
                let z = rng.gen_range(ny..n);
                let mut rest: Vec<usize> = (0..n).filter(|&v| v != z).collect();
                rest.shuffle(rng);
                rest.truncate(width - 1);
                rest.push(z);
                rest
            } else {
                let mut all: Vec<usize> = (0..n).collect();
                all.shuffle(rng);
                all.truncate(width);
                all
            };
            vars.sort_unstable();
            let polarity: bool = rng.gen();
            let clause: Vec<Literal> = vars
                .into_iter()
                .map(|v| Literal {
                    var: v,
                    negated: if self.monotone { polarity } else { rng.gen() },
                })
                .collect();
            if seen.insert(clause.clone()) {
                clauses.push(clause);
            }
        }
        build(ny, nz, clauses)
    }
}

fn build(ny: usize, nz: usize, clauses: Vec<Vec<Literal>>) -> Qbf2Formula {
    let universal = (1..=ny).map(|i| format!("y{i}")).collect();
    let existential = (1..=nz).map(|i| format!("z{i}")).collect();
    Qbf2Formula::new(universal, existential, clauses).expect("generated clauses are well formed")
}

/// Stream of every formula in `family`.
pub fn enumerate_qbf2(family: &QbfFamily) -> impl Iterator<Item = Qbf2Formula> {
    family.enumerate()
}

/// Bounds for CNF formulas over `x1, x2, ...` used as MINSAT instances.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CnfFamily {
    pub max_vars: usize,
    pub max_clauses: usize,
    pub max_width: usize,
}

type ClauseKey = Vec<(usize, bool)>;

impl CnfFamily {
    /// Every (formula, target) pair with `1..=max_vars` variables, keeping one
    /// representative per variable renaming class. Clause order is the
    /// canonical candidate order.
    pub fn enumerate_up_to_renaming(&self) -> Vec<MinsatInstance> {
        let mut out = Vec::new();
        for n in 1..=self.max_vars {
            let candidates = self.candidate_clauses(n);
            let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
            let mut seen: BTreeSet<(Vec<ClauseKey>, usize)> = BTreeSet::new();
            for k in 0..=self.max_clauses {
                for pick in (0..candidates.len()).combinations(k) {
                    let clauses: Vec<Vec<Literal>> = pick.iter().map(|&i| candidates[i].clone()).collect();
                    for target in 0..n {
                        let key = perms
                            .iter()
                            .map(|p| canonical(&clauses, target, p))
                            .min()
                            .expect("at least the identity permutation");
                        if seen.insert(key) {
                            out.push(make_instance(n, clauses.clone(), target));
                        }
                    }
                }
            }
        }
        out
    }

    fn candidate_clauses(&self, n: usize) -> Vec<Vec<Literal>> {
        let mut out = Vec::new();
        for width in 1..=self.max_width.min(n) {
            for vars in (0..n).combinations(width) {
                for signs in 0..1u32 << width {
                    out.push(
                        vars.iter()
                            .enumerate()
                            .map(|(i, &v)| Literal { var: v, negated: signs >> i & 1 == 1 })
                            .collect(),
                    );
                }
            }
        }
        out
    }

    /// `count` random instances, each with a random clause order.
    pub fn sample(&self, seed: u64, count: usize) -> Vec<MinsatInstance> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| {
                let n = rng.gen_range(1..=self.max_vars.max(1));
                let k = rng.gen_range(0..=self.max_clauses);
                let mut seen = BTreeSet::new();
                let mut clauses = Vec::new();
                for _ in 0..k {
                    let width = rng.gen_range(1..=self.max_width.clamp(1, n));
                    let mut vars: Vec<usize> = (0..n).collect();
                    vars.shuffle(&mut rng);
                    vars.truncate(width);
                    vars.sort_unstable();
                    let clause: Vec<Literal> = vars
                        .into_iter()
                        .map(|v| Literal { var: v, negated: rng.gen() })
                        .collect();
                    if seen.insert(clause.clone()) {
                        clauses.push(clause);
                    }
                }
                let target = rng.gen_range(0..n);
                let mut order: Vec<usize> = (0..clauses.len()).collect();
                order.shuffle(&mut rng);
                make_instance(n, clauses, target)
                    .with_clause_order(order)
                    .expect("a shuffled index list is a permutation")
            })
            .collect()
    }
}

fn canonical(clauses: &[Vec<Literal>], target: usize, perm: &[usize]) -> (Vec<ClauseKey>, usize) {
    let mut keyed: Vec<ClauseKey> = clauses
        .iter()
        .map(|c| {
            let mut k: ClauseKey = c.iter().map(|l| (perm[l.var], l.negated)).collect();
            k.sort_unstable();
            k
        })
        .collect();
    keyed.sort_unstable();
    (keyed, perm[target])
}

fn make_instance(n: usize, clauses: Vec<Vec<Literal>>, target: usize) -> MinsatInstance {
    let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let name = vars[target].clone();
    let formula = CnfFormula::new(vars, clauses).expect("generated clauses are well formed");
    MinsatInstance::new(formula, &name).expect("target is a variable")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(ny: usize, nz: usize, k: usize, w: usize, monotone: bool) -> QbfFamily {
        QbfFamily {
            max_universal: ny,
            max_existential: nz,
            max_clauses: k,
            max_width: w,
            monotone,
            clause_touches_existential: false,
        }
    }

    #[test]
    fn single_universal_single_clause() {
        let fam = QbfFamily {
            max_existential: 0,
            ..family(1, 0, 1, 1, false)
        };
        let all: Vec<String> = fam.enumerate().map(|q| q.to_string()).collect();
        assert!(all.contains(&"forall [y1] exists []: (y1)".to_string()));
        assert!(all.contains(&"forall [y1] exists []: (-y1)".to_string()));
    }

    #[test]
    fn monotone_flag_filters() {
        assert!(family(1, 2, 2, 3, true).enumerate().all(|q| q.matrix().is_monotone()));
    }

    #[test]
    fn touches_existential_flag_filters() {
        let fam = QbfFamily {
            clause_touches_existential: true,
            ..family(2, 1, 2, 2, true)
        };
        assert!(fam.enumerate().all(|q| q.every_clause_touches_existential()));
        assert!(fam.sample(3, 200).iter().all(|q| q.every_clause_touches_existential()));
    }

    #[test]
    fn contains_the_monotone_example() {
        let fig1 = Qbf2Formula::from_names(&["y1"], &["z1", "z2"], &[&["z1", "z2", "y1"], &["-z1", "-z2", "-y1"]])
            .unwrap();
        assert!(family(1, 2, 2, 3, true).enumerate().any(|q| q == fig1));
    }

    #[test]
    fn family_size_and_uniqueness() {
        let all: Vec<_> = family(2, 2, 3, 3, true).enumerate().collect();
        let unique: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(all.len(), unique.len());
        // per (|Y|,|Z|): 1 + 2*4 + 3*42 + 2*470 + 3683
        assert_eq!(all.len(), 4758);
    }

    #[test]
    fn deterministic_streams() {
        let fam = family(2, 2, 3, 3, false);
        assert_eq!(fam.sample(11, 50), fam.sample(11, 50));
        let a: Vec<_> = family(1, 1, 2, 2, false).enumerate().collect();
        let b: Vec<_> = family(1, 1, 2, 2, false).enumerate().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn renaming_dedup_is_smaller_than_raw() {
        let fam = CnfFamily {
            max_vars: 2,
            max_clauses: 1,
            max_width: 2,
        };
        let inst = fam.enumerate_up_to_renaming();
        // n=1: clauses {}, (x1), (-x1); n=2 classes counted by hand:
        // {} :1, width-1 clauses (x_t, -x_t, x_o, -x_o): 4, width-2 sign patterns
        // ++, --, and the two mixed ones (target positive / negative): 4
        assert_eq!(inst.len(), 3 + 1 + 4 + 4);
    }
}
