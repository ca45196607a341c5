//! Homomorphisms of cubic and implication algebras, and the pair functor on
//! morphisms.

use crate::constructions::{ImplicationAlgebra, PairAlgebra};
use crate::cubic::CubicAlgebra;
use crate::error::{Error, Result};
use crate::report::{AxiomReport, Collector, WitnessPolicy};

fn check_map(map: &[usize], src: usize, tgt: usize) -> Result<()> {
    if map.len() != src {
        return Err(Error::MalformedTable(format!(
            "map has {} entries for a source of size {src}",
            map.len()
        )));
    }
    if let Some(x) = map.iter().position(|&y| y >= tgt) {
        return Err(Error::MalformedTable(format!(
            "image of {x} is out of range"
        )));
    }
    Ok(())
}

/// Checks that `map` preserves `1`, `∨`, `Δ` and `∼`. Witness tuples:
/// `one: []`, `join: [x, y]`, `delta: [y, x]`, `sim: [x, y]`, `range: [x]`.
pub fn check_hom(
    src: &CubicAlgebra,
    tgt: &CubicAlgebra,
    map: &[usize],
    policy: WitnessPolicy,
) -> Result<AxiomReport> {
    check_map(map, src.size(), tgt.size())?;
    let mut out = Collector::new(policy);
    if map[src.one()] != tgt.one() {
        out.record("one", vec![]);
    }
    for x in src.elements() {
        for y in src.elements() {
            if out.wants("join") && map[src.join(x, y)] != tgt.join(map[x], map[y]) {
                out.record("join", vec![x, y]);
            }
            if out.wants("delta") && src.leq(x, y) {
                let image = tgt.delta(map[y], map[x]);
                if image != Some(map[src.d(y, x)]) {
                    out.record("delta", vec![y, x]);
                }
            }
            if out.wants("sim") && src.sim(x, y) && !tgt.sim(map[x], map[y]) {
                out.record("sim", vec![x, y]);
            }
        }
    }
    Ok(out.finish())
}

pub fn is_hom(src: &CubicAlgebra, tgt: &CubicAlgebra, map: &[usize]) -> bool {
    check_hom(src, tgt, map, WitnessPolicy::First).is_ok_and(|r| r.passed)
}

/// Checks that `map` preserves `1` and `→` (hence `∨`).
pub fn check_implication_hom(
    src: &ImplicationAlgebra,
    tgt: &ImplicationAlgebra,
    map: &[usize],
    policy: WitnessPolicy,
) -> Result<AxiomReport> {
    check_map(map, src.size(), tgt.size())?;
    let mut out = Collector::new(policy);
    if map[src.one()] != tgt.one() {
        out.record("one", vec![]);
    }
    for x in src.elements() {
        for y in src.elements() {
            if out.wants("implies") && map[src.implies(x, y)] != tgt.implies(map[x], map[y]) {
                out.record("implies", vec![x, y]);
            }
        }
    }
    Ok(out.finish())
}

pub fn is_implication_hom(
    src: &ImplicationAlgebra,
    tgt: &ImplicationAlgebra,
    map: &[usize],
) -> bool {
    check_implication_hom(src, tgt, map, WitnessPolicy::First).is_ok_and(|r| r.passed)
}

/// `⟨a, b⟩ ↦ ⟨f(a), f(b)⟩` between pair algebras.
pub fn functor_i_hom(src: &PairAlgebra, tgt: &PairAlgebra, f: &[usize]) -> Result<Vec<usize>> {
    check_map(f, src.base.size(), tgt.base.size())?;
    src.pairs()
        .iter()
        .map(|&(a, b)| {
            tgt.index_of(f[a], f[b])
                .ok_or(Error::MembershipBroken(a, b))
        })
        .collect()
}

/// `(f ∘ g)(x) = f(g(x))`
pub fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

pub fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Inverse of a permutation; `None` if `map` is not a bijection.
pub fn inverse(map: &[usize]) -> Option<Vec<usize>> {
    let mut inv = vec![usize::MAX; map.len()];
    for (x, &y) in map.iter().enumerate() {
        if y >= map.len() || inv[y] != usize::MAX {
            return None;
        }
        inv[y] = x;
    }
    Some(inv)
}

pub fn is_injective(map: &[usize]) -> bool {
    let mut seen = std::collections::HashSet::new();
    map.iter().all(|y| seen.insert(*y))
}

pub fn is_surjective(map: &[usize], target: usize) -> bool {
    let mut hit = vec![false; target];
    for &y in map {
        if y < target {
            hit[y] = true;
        }
    }
    hit.into_iter().all(|h| h)
}
