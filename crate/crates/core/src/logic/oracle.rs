//! Brute-force ground truth. Everything here enumerates assignments directly
//! and shares no code with the argumentation side.

use super::{CnfFormula, MinsatInstance, Qbf2Formula, VarSet};
use crate::error::{Error, Result};

/// Largest variable count the oracles will enumerate.
pub const ORACLE_MAX_VARS: usize = 20;

fn check_size(n: usize) -> Result<()> {
    if n > ORACLE_MAX_VARS {
        return Err(Error::capacity(format!(
            "{n} variables; brute-force oracles stop at {ORACLE_MAX_VARS}"
        )));
    }
    Ok(())
}

/// (positive mask, negative mask) per clause.
fn clause_masks(phi: &CnfFormula) -> Vec<(u64, u64)> {
    phi.clauses()
        .iter()
        .map(|c| {
            c.iter().fold((0, 0), |(p, n), l| {
                if l.negated {
                    (p, n | 1 << l.var)
                } else {
                    (p | 1 << l.var, n)
                }
            })
        })
        .collect()
}

fn eval(masks: &[(u64, u64)], m: u64) -> bool {
    masks.iter().all(|&(p, n)| p & m != 0 || n & !m != 0)
}

/// Whether the assignment making exactly `model` true satisfies `phi`.
pub fn satisfies(phi: &CnfFormula, model: VarSet) -> bool {
    eval(&clause_masks(phi), model.0)
}

fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    // all submasks of `mask`, starting from 0
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some((cur.wrapping_sub(mask)) & mask)
        };
        Some(cur)
    })
}

/// `∀ M_Y ⊆ Y ∃ M_Z ⊆ Z: M_Y ∪ M_Z ⊨ φ`.
pub fn qbf2_valid(phi: &Qbf2Formula) -> Result<bool> {
    let matrix = phi.matrix();
    check_size(matrix.num_vars())?;
    let masks = clause_masks(matrix);
    let ymask = phi.universal().fold(0u64, |m, v| m | 1 << v);
    let zmask = phi.existential().fold(0u64, |m, v| m | 1 << v);
    Ok(submasks(ymask).all(|my| submasks(zmask).any(|mz| eval(&masks, my | mz))))
}

/// Every model of `phi`, in canonical order.
pub fn models(phi: &CnfFormula) -> Result<Vec<VarSet>> {
    check_size(phi.num_vars())?;
    let masks = clause_masks(phi);
    let mut out: Vec<VarSet> = (0..1u64 << phi.num_vars())
        .filter(|&m| eval(&masks, m))
        .map(VarSet)
        .collect();
    out.sort();
    Ok(out)
}

/// The subset-minimal models of `phi`, in canonical order.
pub fn minimal_models(phi: &CnfFormula) -> Result<Vec<VarSet>> {
    let n = phi.num_vars();
    check_size(n)?;
    let masks = clause_masks(phi);
    let size = 1usize << n;
    let is_model: Vec<bool> = (0..size as u64).map(|m| eval(&masks, m)).collect();
    // below[m]: some model is a subset of m
    let mut below = is_model.clone();
    for v in 0..n {
        for m in 0..size {
            if m >> v & 1 == 1 && below[m ^ (1 << v)] {
                below[m] = true;
            }
        }
    }
    let mut out: Vec<VarSet> = (0..size)
        .filter(|&m| is_model[m] && (0..n).all(|v| m >> v & 1 == 0 || !below[m ^ (1 << v)]))
        .map(|m| VarSet(m as u64))
        .collect();
    out.sort();
    Ok(out)
}

/// Is the target atom in some minimal model?
pub fn minsat_member(inst: &MinsatInstance) -> Result<bool> {
    Ok(minimal_models(inst.formula())?
        .iter()
        .any(|m| m.contains(inst.target())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::CnfFormula;

    fn minsat_example() -> CnfFormula {
        CnfFormula::from_names(
            &["y1", "y2", "z3", "z4"],
            &[&["y1", "y2", "z3"], &["-y2", "-z3", "-z4"], &["-y1", "-y2", "z4"]],
        )
        .unwrap()
    }

    fn names(phi: &CnfFormula, sets: &[VarSet]) -> Vec<Vec<String>> {
        sets.iter()
            .map(|s| s.names(phi).into_iter().map(String::from).collect())
            .collect()
    }

    #[test]
    fn submask_enumeration() {
        let subs: Vec<u64> = submasks(0b101).collect();
        assert_eq!(subs, [0b000, 0b001, 0b100, 0b101]);
        assert_eq!(submasks(0).collect::<Vec<_>>(), [0]);
    }

    #[test]
    fn qbf_examples() {
        let q = Qbf2Formula::from_names(&[], &["x"], &[&["x"]]).unwrap();
        assert!(qbf2_valid(&q).unwrap());
        let q = Qbf2Formula::from_names(&["y"], &[], &[&["y"]]).unwrap();
        assert!(!qbf2_valid(&q).unwrap());
        let fig1 = Qbf2Formula::from_names(&["y1"], &["x1", "x2"], &[&["x1", "x2", "y1"], &["-x1", "-x2", "-y1"]])
            .unwrap();
        assert!(qbf2_valid(&fig1).unwrap());
    }

    #[test]
    fn minimal_model_examples() {
        let phi = CnfFormula::from_names(&["x1", "x2"], &[&["x1", "x2"]]).unwrap();
        assert_eq!(names(&phi, &minimal_models(&phi).unwrap()), [vec!["x1"], vec!["x2"]]);

        let unsat = CnfFormula::from_names(&["x"], &[&["x"], &["-x"]]).unwrap();
        assert!(minimal_models(&unsat).unwrap().is_empty());

        let phi = minsat_example();
        let mins = names(&phi, &minimal_models(&phi).unwrap());
        assert!(mins.contains(&vec!["z3".to_string()]));
        assert!(mins.contains(&vec!["y1".to_string()]));
    }

    #[test]
    fn minsat_examples() {
        let inst = MinsatInstance::new(minsat_example(), "y1").unwrap();
        assert!(minsat_member(&inst).unwrap());

        let phi = CnfFormula::from_names(&["x1", "x2"], &[&["x2"]]).unwrap();
        assert!(!minsat_member(&MinsatInstance::new(phi, "x1").unwrap()).unwrap());

        let unsat = CnfFormula::from_names(&["x"], &[&["x"], &["-x"]]).unwrap();
        assert!(!minsat_member(&MinsatInstance::new(unsat, "x").unwrap()).unwrap());
    }

    #[test]
    fn capacity_error_beyond_bound() {
        let vars: Vec<String> = (0..21).map(|i| format!("v{i}")).collect();
        let phi = CnfFormula::new(vars, vec![]).unwrap();
        assert!(matches!(minimal_models(&phi), Err(Error::Capacity(_))));
    }
}
