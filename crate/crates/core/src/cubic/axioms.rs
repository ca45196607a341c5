//! Exhaustive model checking of the cubic and MR axioms.
//!
//! Rules and their witness tuples:
//!
//! | rule | witness     | hypothesis     | law                                        |
//! |------|-------------|----------------|--------------------------------------------|
//! | `a`  | `[x, y]`    | `x <= y`       | `Δ(y,x) ∨ x = y`                           |
//! | `b`  | `[x, y, z]` | `x <= y <= z`  | `Δ(z,Δ(y,x)) = Δ(Δ(z,y),Δ(z,x))`           |
//! | `c`  | `[x, y]`    | `x <= y`       | `Δ(y,Δ(y,x)) = x`                          |
//! | `d`  | `[x, y, z]` | `x <= y <= z`  | `Δ(z,x) <= Δ(z,y)`                         |
//! | `e`  | `[x, y]`    |                | `(x→y)→y = x ∨ y`                          |
//! | `f`  | `[x, y, z]` |                | `x→(y→z) = y→(x→z)`                        |
//! | `mr` | `[x, a, b]` | `a, b < x`     | `Δ(x,a) ∨ b < x` iff `a ∧ b` does not exist|
//!
//! Tuples are enumerated in ascending lexicographic order, so under
//! [`WitnessPolicy::First`] each rule reports its minimal witness.

use super::{CubicAlgebra, UNDEFINED};
use crate::error::{Error, Result};
use crate::report::{AxiomReport, Collector, WitnessPolicy};

pub const CUBIC_RULES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];
pub const MR_RULE: &str = "mr";

/// Checks the table shapes: a valid semilattice order, a delta table defined
/// exactly on comparable pairs, and all values in range.
pub fn check_well_formed(alg: &CubicAlgebra) -> Result<()> {
    alg.order().validate()?;
    let n = alg.size();
    let table = alg.delta_table();
    if table.len() != n * n {
        return Err(Error::MalformedTable("delta table has wrong shape".into()));
    }
    for y in 0..n {
        for x in 0..n {
            let v = table[y * n + x];
            match (alg.leq(x, y), v) {
                (true, UNDEFINED) => {
                    return Err(Error::MalformedTable(format!(
                        "delta({y}, {x}) undefined although {x} <= {y}"
                    )))
                }
                (false, v) if v != UNDEFINED => {
                    return Err(Error::MalformedTable(format!(
                        "delta({y}, {x}) defined although {x} is not below {y}"
                    )))
                }
                (true, v) if v as usize >= n => {
                    return Err(Error::MalformedTable(format!(
                        "delta({y}, {x}) = {v} out of range"
                    )))
                }
                _ => {}
            }
        }
    }
    Ok(())
}

/// Evaluates one rule at one tuple. `None` when the tuple does not satisfy
/// the rule's hypothesis (or the rule is unknown); `Some(true)` when the law
/// holds. Checkers and witness replay both go through here.
pub fn rule_holds(alg: &CubicAlgebra, rule: &str, w: &[usize]) -> Option<bool> {
    let d = |y: usize, x: usize| alg.delta(y, x);
    match (rule, w) {
        ("a", &[x, y]) => {
            if !alg.leq(x, y) {
                return None;
            }
            Some(d(y, x).map(|t| alg.join(t, x)) == Some(y))
        }
        ("b", &[x, y, z]) => {
            if !(alg.leq(x, y) && alg.leq(y, z)) {
                return None;
            }
            let lhs = d(y, x).and_then(|t| d(z, t));
            let rhs = match (d(z, y), d(z, x)) {
                (Some(zy), Some(zx)) => d(zy, zx),
                _ => None,
            };
            Some(lhs.is_some() && lhs == rhs)
        }
        ("c", &[x, y]) => {
            if !alg.leq(x, y) {
                return None;
            }
            Some(d(y, x).and_then(|t| d(y, t)) == Some(x))
        }
        ("d", &[x, y, z]) => {
            if !(alg.leq(x, y) && alg.leq(y, z)) {
                return None;
            }
            match (d(z, x), d(z, y)) {
                (Some(zx), Some(zy)) => Some(alg.leq(zx, zy)),
                _ => Some(false),
            }
        }
        ("e", &[x, y]) => Some(alg.implies(alg.implies(x, y), y) == alg.join(x, y)),
        ("f", &[x, y, z]) => {
            Some(alg.implies(x, alg.implies(y, z)) == alg.implies(y, alg.implies(x, z)))
        }
        ("mr", &[x, a, b]) => {
            if !(alg.lt(a, x) && alg.lt(b, x)) {
                return None;
            }
            let below = d(x, a).map(|t| alg.lt(alg.join(t, b), x))?;
            Some(below == alg.meet(a, b).is_none())
        }
        _ => None,
    }
}

/// Whether a reported witness really violates its rule.
pub fn replay(alg: &CubicAlgebra, rule: &str, witness: &[usize]) -> bool {
    rule_holds(alg, rule, witness) == Some(false)
}

/// Exhaustively checks axioms (a)–(f). Fails with `MalformedTable` when the
/// tables are not well formed.
pub fn check_cubic_axioms(alg: &CubicAlgebra, policy: WitnessPolicy) -> Result<AxiomReport> {
    check_well_formed(alg)?;
    let n = alg.size();
    let mut out = Collector::new(policy);
    for x in 0..n {
        for y in alg.up_set(x).iter() {
            for rule in ["a", "c"] {
                if out.wants(rule) && rule_holds(alg, rule, &[x, y]) == Some(false) {
                    out.record(rule, vec![x, y]);
                }
            }
            for z in alg.up_set(y).iter() {
                for rule in ["b", "d"] {
                    if out.wants(rule) && rule_holds(alg, rule, &[x, y, z]) == Some(false) {
                        out.record(rule, vec![x, y, z]);
                    }
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if out.wants("e") && rule_holds(alg, "e", &[x, y]) == Some(false) {
                out.record("e", vec![x, y]);
            }
            if !out.wants("f") {
                continue;
            }
            for z in 0..n {
                if rule_holds(alg, "f", &[x, y, z]) == Some(false) {
                    out.record("f", vec![x, y, z]);
                }
            }
        }
    }
    let mut report = out.finish();
    report
        .violations
        .sort_by(|a, b| (&a.rule, &a.witness).cmp(&(&b.rule, &b.witness)));
    Ok(report)
}

/// Exhaustively checks the MR axiom on an algebra with well-formed tables.
pub fn check_mr_axiom(alg: &CubicAlgebra, policy: WitnessPolicy) -> AxiomReport {
    let mut out = Collector::new(policy);
    for x in alg.elements() {
        for a in alg.down_set(x).iter() {
            if a == x {
                continue;
            }
            for b in alg.down_set(x).iter() {
                if b == x || !out.wants(MR_RULE) {
                    continue;
                }
                if rule_holds(alg, MR_RULE, &[x, a, b]) == Some(false) {
                    out.record(MR_RULE, vec![x, a, b]);
                }
            }
        }
    }
    out.finish()
}

/// First pair (in index order) whose caret is undefined.
pub fn caret_failure(alg: &CubicAlgebra) -> Option<(usize, usize)> {
    alg.elements()
        .flat_map(|x| alg.elements().map(move |y| (x, y)))
        .find(|&(x, y)| alg.caret(x, y).is_none())
}

/// Whether `x ⋏ y` exists for every pair.
pub fn caret_total(alg: &CubicAlgebra) -> bool {
    caret_failure(alg).is_none()
}
