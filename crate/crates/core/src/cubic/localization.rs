//! Localization at a point and its interval coordinates.
//!
//! The localization at `a` is `{Δ(y, x) : a <= x <= y}`, which coincides with
//! `{x : a ≼ x}`. Each member `y` has coordinates `k(y) = (Δ(1,y) ∨ a) → a`
//! and `l(y) = y ∨ a`, both in `[a, 1]`, and `y ↦ (l(y), k(y))` is a bijection
//! onto the pairs `p >= q >= a`.

use super::subalgebra::{self, Subalgebra};
use super::{axioms, CubicAlgebra};
use crate::error::{Error, Result};
use crate::report::WitnessPolicy;
use crate::set::ElementSet;

#[derive(Clone, Debug)]
pub struct Localization {
    point: usize,
    members: ElementSet,
    k: Vec<usize>,
    l: Vec<usize>,
}

/// `{Δ(y, x) : a <= x <= y}`
pub fn members_by_delta(alg: &CubicAlgebra, a: usize) -> ElementSet {
    let mut set = ElementSet::new(alg.size());
    for x in alg.up_set(a).iter() {
        for y in alg.up_set(x).iter() {
            set.insert(alg.d(y, x));
        }
    }
    set
}

/// `{x : a ≼ x}`
pub fn members_by_preceq(alg: &CubicAlgebra, a: usize) -> ElementSet {
    ElementSet::from_iter(alg.size(), alg.elements().filter(|&x| alg.preceq(a, x)))
}

pub fn k_map(alg: &CubicAlgebra, a: usize, y: usize) -> usize {
    alg.implies(alg.join(alg.antipode(y), a), a)
}

pub fn l_map(alg: &CubicAlgebra, a: usize, y: usize) -> usize {
    alg.join(y, a)
}

/// Builds the localization at `a` and checks every coordinate invariant.
pub fn localize(alg: &CubicAlgebra, a: usize) -> Result<Localization> {
    let loc = localize_unchecked(alg, a)?;
    loc.verify(alg)?;
    Ok(loc)
}

/// Builds the localization at `a` from the `Δ` description alone.
pub fn localize_unchecked(alg: &CubicAlgebra, a: usize) -> Result<Localization> {
    alg.check_index(a)?;
    let members = members_by_delta(alg, a);
    let n = alg.size();
    let mut k = vec![usize::MAX; n];
    let mut l = vec![usize::MAX; n];
    for y in members.iter() {
        k[y] = k_map(alg, a, y);
        l[y] = l_map(alg, a, y);
    }
    Ok(Localization {
        point: a,
        members,
        k,
        l,
    })
}

impl Localization {
    pub fn point(&self) -> usize {
        self.point
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    /// `k(y)` for a member `y`.
    pub fn k(&self, y: usize) -> Option<usize> {
        self.contains(y).then(|| self.k[y])
    }

    /// `l(y)` for a member `y`.
    pub fn l(&self, y: usize) -> Option<usize> {
        self.contains(y).then(|| self.l[y])
    }

    /// The unique member `z` with `l(z) = p` and `k(z) = q`.
    pub fn from_pair(&self, alg: &CubicAlgebra, p: usize, q: usize) -> Result<usize> {
        alg.check_index(p)?;
        alg.check_index(q)?;
        if !(alg.leq(self.point, q) && alg.leq(q, p)) {
            return Err(Error::NoSuchPair { p, q });
        }
        self.members
            .iter()
            .find(|&z| self.l[z] == p && self.k[z] == q)
            .ok_or(Error::NoSuchPair { p, q })
    }

    /// The induced subalgebra on the members.
    pub fn subalgebra(&self, alg: &CubicAlgebra) -> Result<Subalgebra> {
        subalgebra::induced(alg, &self.members)
    }

    /// Minimal members of the localization.
    pub fn minimal_members(&self, alg: &CubicAlgebra) -> Vec<usize> {
        self.members
            .iter()
            .filter(|&x| {
                alg.down_set(x)
                    .iter()
                    .all(|y| y == x || !self.members.contains(y))
            })
            .collect()
    }

    /// Every member dominates a minimal member. Always true on a finite
    /// carrier; kept as an explicit check.
    pub fn is_atomic(&self, alg: &CubicAlgebra) -> bool {
        let minimal = self.minimal_members(alg);
        self.members
            .iter()
            .all(|x| minimal.iter().any(|&m| alg.leq(m, x)))
    }

    /// Checks the coordinate invariants: the two member descriptions agree,
    /// `a <= k(y) <= l(y)`, `(l, k)` is injective and hits every pair
    /// `p >= q >= a`, and the members form an atomic MR-subalgebra.
    pub fn verify(&self, alg: &CubicAlgebra) -> Result<()> {
        let a = self.point;
        let fail = |msg: String| Err(Error::Invariant(format!("localization at {a}: {msg}")));
        if members_by_preceq(alg, a) != self.members {
            return fail("the delta and preceq descriptions differ".into());
        }
        let mut seen = ElementSet::new(alg.size() * alg.size());
        for y in self.members.iter() {
            let (k, l) = (self.k[y], self.l[y]);
            if !(alg.leq(a, k) && alg.leq(k, l)) {
                return fail(format!("coordinates of {y} are not ordered a <= k <= l"));
            }
            if !seen.insert(l * alg.size() + k) {
                return fail(format!("coordinates of {y} repeat"));
            }
        }
        for p in alg.up_set(a).iter() {
            for q in alg.up_set(a).iter().filter(|&q| alg.leq(q, p)) {
                if !seen.contains(p * alg.size() + q) {
                    return fail(format!("pair ({p}, {q}) is not hit"));
                }
            }
        }
        let sub = self.subalgebra(alg)?;
        if let Some(v) = axioms::check_mr_axiom(&sub.algebra, WitnessPolicy::First).first() {
            let w: Vec<usize> = v.witness.iter().map(|&i| sub.parent(i)).collect();
            return fail(format!("MR fails at {w:?}"));
        }
        if !self.is_atomic(alg) {
            return fail("not atomic".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::Validity;

    fn segment() -> CubicAlgebra {
        CubicAlgebra::from_fn(
            3,
            |x, y| x == y || y == 2,
            |y, x| match (y, x) {
                (2, 0) => 1,
                (2, 1) => 0,
                (_, x) => x,
            },
            None,
            Validity::Strict,
        )
        .unwrap()
    }

    #[test]
    fn vertex_localization_is_everything() {
        let a = segment();
        let loc = localize(&a, 0).unwrap();
        assert_eq!(loc.members().to_vec(), vec![0, 1, 2]);
        assert_eq!(loc.k(1), Some(2));
        assert_eq!(loc.l(1), Some(2));
        assert_eq!(loc.from_pair(&a, 2, 2), Ok(1));
        assert_eq!(loc.from_pair(&a, 0, 0), Ok(0));
    }

    #[test]
    fn top_localization() {
        let a = segment();
        let loc = localize(&a, 2).unwrap();
        assert_eq!(loc.members().to_vec(), vec![2]);
        assert_eq!(
            loc.from_pair(&a, 2, 0),
            Err(Error::NoSuchPair { p: 2, q: 0 })
        );
    }
}
