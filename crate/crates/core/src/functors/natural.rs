//! The natural maps `e`, `η`, `ι = η ∘ e` and `κ = e ∘ η` and their squares.

use super::hom::{functor_i_hom, is_implication_hom, is_injective, is_surjective};
use super::quotient::{functor_c_hom, Quotient};
use crate::constructions::PairAlgebra;
use crate::cubic::CubicAlgebra;
use crate::error::{Error, Result};

/// `e(a) = ⟨1, a⟩` for every base element.
pub fn e_map(pairs: &PairAlgebra) -> Vec<usize> {
    pairs.base.elements().map(|a| pairs.embed_e(a)).collect()
}

/// `ι(a) = [⟨1, a⟩]`, from the base of `pairs` to the quotient `q` of
/// `pairs.algebra`.
pub fn iota(pairs: &PairAlgebra, q: &Quotient) -> Vec<usize> {
    pairs
        .base
        .elements()
        .map(|a| q.eta(pairs.embed_e(a)))
        .collect()
}

/// `[⟨a, b⟩] ↦ a ∧ b`, checked constant on classes.
pub fn iota_inverse(pairs: &PairAlgebra, q: &Quotient) -> Result<Vec<usize>> {
    let base = &pairs.base;
    let collapse = |x: usize| {
        let (a, b) = pairs.pair(x);
        base.meet(a, b).expect("member pairs have meets")
    };
    q.classes()
        .iter()
        .map(|class| {
            let v = collapse(class[0]);
            match class.iter().find(|&&x| collapse(x) != v) {
                Some(&x) => Err(Error::Invariant(format!(
                    "class of {} collapses to two values (witness {x})",
                    class[0]
                ))),
                None => Ok(v),
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IotaReport {
    pub map: Vec<usize>,
    pub bijective: bool,
    pub inverse_agrees: bool,
    pub implication_iso: bool,
}

impl IotaReport {
    pub fn holds(&self) -> bool {
        self.bijective && self.inverse_agrees && self.implication_iso
    }
}

pub fn check_iota(pairs: &PairAlgebra, q: &Quotient) -> Result<IotaReport> {
    let map = iota(pairs, q);
    let inverse = iota_inverse(pairs, q)?;
    let bijective = is_injective(&map) && is_surjective(&map, q.len());
    let inverse_agrees =
        map.len() == inverse.len() && map.iter().enumerate().all(|(a, &c)| inverse[c] == a);
    let implication_iso = bijective
        && is_implication_hom(&pairs.base, &q.algebra, &map)
        && is_implication_hom(&q.algebra, &pairs.base, &inverse);
    Ok(IotaReport {
        map,
        bijective,
        inverse_agrees,
        implication_iso,
    })
}

/// `κ(x) = e(η(x)) = ⟨1, [x]⟩` in the pair algebra `iq` over the quotient.
pub fn kappa(q: &Quotient, iq: &PairAlgebra) -> Vec<usize> {
    q.eta_map().iter().map(|&c| iq.embed_e(c)).collect()
}

/// `e₂ ∘ f = 𝖨(f) ∘ e₁` for an implication hom `f` between the bases.
pub fn e_square(p1: &PairAlgebra, p2: &PairAlgebra, f: &[usize]) -> Result<bool> {
    let lifted = functor_i_hom(p1, p2, f)?;
    Ok(p1
        .base
        .elements()
        .all(|a| p2.embed_e(f[a]) == lifted[p1.embed_e(a)]))
}

/// `η₂ ∘ φ = 𝖢(φ) ∘ η₁` for a cubic hom `φ`.
pub fn eta_square(q1: &Quotient, q2: &Quotient, phi: &[usize]) -> Result<bool> {
    let c = functor_c_hom(q1, q2, phi)?;
    Ok(phi
        .iter()
        .enumerate()
        .all(|(x, &fx)| q2.eta(fx) == c[q1.eta(x)]))
}

/// `𝖢𝖨(f) ∘ ι₁ = ι₂ ∘ f` for an implication hom `f`.
pub fn iota_square(
    p1: &PairAlgebra,
    q1: &Quotient,
    p2: &PairAlgebra,
    q2: &Quotient,
    f: &[usize],
) -> Result<bool> {
    let lifted = functor_i_hom(p1, p2, f)?;
    let ci = functor_c_hom(q1, q2, &lifted)?;
    let (i1, i2) = (iota(p1, q1), iota(p2, q2));
    Ok(p1.base.elements().all(|a| ci[i1[a]] == i2[f[a]]))
}

/// `ι` of the quotient equals `𝖢(κ)`: both send `[x]` to `[⟨1, [x]⟩]`.
pub fn kappa_iota_identity(q: &Quotient, iq: &PairAlgebra, qiq: &Quotient) -> Result<bool> {
    let k = kappa(q, iq);
    let ck = functor_c_hom(q, qiq, &k)?;
    Ok(ck == iota(iq, qiq))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaReport {
    pub injective: bool,
    pub surjective: bool,
    pub cubic_hom: bool,
}

pub fn kappa_report(alg: &CubicAlgebra, q: &Quotient, iq: &PairAlgebra) -> KappaReport {
    let k = kappa(q, iq);
    KappaReport {
        injective: is_injective(&k),
        surjective: is_surjective(&k, iq.algebra.size()),
        cubic_hom: super::hom::is_hom(alg, &iq.algebra, &k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_i;
    use crate::corpus;
    use crate::functors::quotient::quotient_c;

    #[test]
    fn iota_on_b2() {
        let c2 = corpus::c2();
        let q = quotient_c(&c2.algebra).unwrap();
        let r = check_iota(&c2, &q).unwrap();
        assert!(r.holds());
        assert_eq!(r.map[1], q.eta(c2.by_labels("1", "p").unwrap()));
    }

    #[test]
    fn kappa_identity_on_n5() {
        let n5 = corpus::n5();
        let q = quotient_c(&n5.algebra).unwrap();
        let iq = build_i(&q.algebra).unwrap();
        let qiq = quotient_c(&iq.algebra).unwrap();
        assert!(kappa_iota_identity(&q, &iq, &qiq).unwrap());
    }
}
