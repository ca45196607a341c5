//! Fixed sets, their complements, and recovering an inner automorphism from
//! a Boolean filter of the quotient.

use super::is_inner;
use crate::cubic::localization::{k_map, members_by_delta};
use crate::cubic::CubicAlgebra;
use crate::error::{Error, Result};
use crate::filters::{impl_elem, is_f_boolean, Filter};
use crate::functors::quotient::Quotient;
use crate::set::ElementSet;

fn require_inner(alg: &CubicAlgebra, phi: &[usize]) -> Result<()> {
    match alg.elements().find(|&x| !alg.sim(x, phi[x])) {
        Some(x) => Err(Error::NotInner { x, image: phi[x] }),
        None => Ok(()),
    }
}

/// The whole quotient as a filter: generated by its least class.
pub fn whole_quotient(q: &Quotient) -> Result<Filter> {
    Filter::new(q.algebra.order(), ElementSet::full(q.len()))
}

/// `M_φ = {x : φ(x) = x}`
pub fn fixed_set(alg: &CubicAlgebra, phi: &[usize]) -> Result<ElementSet> {
    require_inner(alg, phi)?;
    Ok(ElementSet::from_iter(
        alg.size(),
        alg.elements().filter(|&x| phi[x] == x),
    ))
}

/// `{x : φ(x) = Δ(1, x)}`
pub fn antifixed_set(alg: &CubicAlgebra, phi: &[usize]) -> ElementSet {
    ElementSet::from_iter(
        alg.size(),
        alg.elements().filter(|&x| phi[x] == alg.antipode(x)),
    )
}

/// `Ω(φ) = 𝖢(M_φ)`, the classes met by the fixed set.
pub fn omega(alg: &CubicAlgebra, q: &Quotient, phi: &[usize]) -> Result<Filter> {
    let m = fixed_set(alg, phi)?;
    Filter::new(q.algebra.order(), q.image(&m))
}

/// `D_φ = η⁻¹[𝖢(M_φ) → 𝖢(M)]`
pub fn d_set(alg: &CubicAlgebra, q: &Quotient, phi: &[usize]) -> Result<ElementSet> {
    let g = omega(alg, q, phi)?;
    let rest = impl_elem(q.algebra.order(), &g, &whole_quotient(q)?)?;
    Ok(q.preimage(rest.members()))
}

/// `(z ∨ φ(z), z ∨ Δ(1, φ(z)))`
pub fn decompose(alg: &CubicAlgebra, phi: &[usize], z: usize) -> Result<(usize, usize)> {
    require_inner(alg, phi)?;
    alg.check_index(z)?;
    Ok((alg.join(z, phi[z]), alg.join(z, alg.antipode(phi[z]))))
}

/// `z₀ ∧ Δ(1, z₁)`
pub fn recover(alg: &CubicAlgebra, z0: usize, z1: usize) -> Result<usize> {
    alg.meet(z0, alg.antipode(z1))
        .ok_or_else(|| Error::Invariant(format!("{z0} and Δ(1, {z1}) have no meet")))
}

/// Every `(u, v) ∈ S₁ × S₂` with `u ∧ v = z`.
pub fn splittings(
    alg: &CubicAlgebra,
    s1: &ElementSet,
    s2: &ElementSet,
    z: usize,
) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in s1.iter().filter(|&u| alg.leq(z, u)) {
        for v in s2.iter().filter(|&v| alg.leq(z, v)) {
            if alg.meet(u, v) == Some(z) {
                out.push((u, v));
            }
        }
    }
    out
}

/// The sets `S₁ = η⁻¹[G]` and `S₂ = η⁻¹[G → 𝖢(M)]`.
pub fn split_sets(q: &Quotient, g: &Filter) -> Result<(ElementSet, ElementSet)> {
    let whole = whole_quotient(q)?;
    if !is_f_boolean(q.algebra.order(), g, &whole)? {
        return Err(Error::NotBoolean);
    }
    let rest = impl_elem(q.algebra.order(), g, &whole)?;
    Ok((q.preimage(g.members()), q.preimage(rest.members())))
}

/// `φ_G(x) = x₁ ∧ Δ(1, x₂)` where `x = x₁ ∧ x₂` is the unique splitting over
/// `S₁ × S₂`.
pub fn phi_from_boolean_filter(alg: &CubicAlgebra, q: &Quotient, g: &Filter) -> Result<Vec<usize>> {
    let (s1, s2) = split_sets(q, g)?;
    let phi = alg
        .elements()
        .map(|x| match splittings(alg, &s1, &s2, x)[..] {
            [(x1, x2)] => recover(alg, x1, x2),
            ref all => Err(Error::SplitFailure {
                element: x,
                found: all.len(),
            }),
        })
        .collect::<Result<Vec<_>>>()?;
    if !super::is_automorphism(alg, &phi) || !is_inner(alg, &phi) {
        return Err(Error::Invariant(
            "recovered map is not an inner automorphism".into(),
        ));
    }
    Ok(phi)
}

/// `f_ab(w) = (w ∨ b) ∧ (Δ(1, w) ∨ b)` on `[a, 1]`, as `(w, f_ab(w))` pairs.
pub fn f_ab(alg: &CubicAlgebra, a: usize, b: usize) -> Result<Vec<(usize, usize)>> {
    alg.check_index(a)?;
    alg.check_index(b)?;
    if !alg.sim(a, b) {
        return Err(Error::NotSim(a, b));
    }
    alg.up_set(a)
        .iter()
        .map(|w| Ok((w, f_ab_at(alg, b, w)?)))
        .collect()
}

fn f_ab_at(alg: &CubicAlgebra, b: usize, w: usize) -> Result<usize> {
    alg.meet(alg.join(w, b), alg.join(alg.antipode(w), b))
        .ok_or_else(|| Error::Invariant(format!("f_ab undefined at {w}")))
}

/// `f̂_ab(z) = f_ab(z ∨ a) ∧ Δ(1, f_ab(k_a(z)) → b)` on the localization at
/// `a`, as a map over the whole carrier (`usize::MAX` outside).
pub fn f_hat_ab(alg: &CubicAlgebra, a: usize, b: usize) -> Result<Vec<usize>> {
    f_ab(alg, a, b)?;
    let members = members_by_delta(alg, a);
    let mut out = vec![usize::MAX; alg.size()];
    for z in members.iter() {
        let left = f_ab_at(alg, b, alg.join(z, a))?;
        let right = alg.antipode(alg.implies(f_ab_at(alg, b, k_map(alg, a, z))?, b));
        out[z] = alg
            .meet(left, right)
            .ok_or_else(|| Error::Invariant(format!("f̂_ab undefined at {z}")))?;
    }
    Ok(out)
}
