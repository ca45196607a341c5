//! Upward-closed subalgebras and how they collapse into the quotient.

use super::quotient::{quotient_c, Quotient};
use crate::cubic::subalgebra::{self, closure_failure, upward_failure};
use crate::cubic::CubicAlgebra;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::set::ElementSet;

/// Result of comparing an upward-closed subalgebra `M` with its ambient `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionReport {
    /// `[x]_M = [x]_A` for every `x ∈ M`.
    pub classes_agree: bool,
    /// `𝖢(incl)` is injective and preserves order and implication.
    pub collapse_is_inclusion: bool,
    /// Classes of `A` met by `M`.
    pub image: ElementSet,
}

impl InclusionReport {
    pub fn holds(&self) -> bool {
        self.classes_agree && self.collapse_is_inclusion
    }
}

fn require_upward_subalgebra(alg: &CubicAlgebra, m: &ElementSet) -> Result<()> {
    if let Some((below, above)) = upward_failure(alg, m) {
        return Err(Error::NotUpwardClosed { below, above });
    }
    if let Some((op, witness)) = closure_failure(alg, m) {
        return Err(Error::NotClosed { op, witness });
    }
    Ok(())
}

pub fn inclusion_collapse(
    alg: &CubicAlgebra,
    qa: &Quotient,
    m: &ElementSet,
) -> Result<InclusionReport> {
    require_upward_subalgebra(alg, m)?;
    let sub = subalgebra::induced(alg, m)?;
    let qm = quotient_c(&sub.algebra)?;
    let classes_agree = m.iter().all(|x| {
        let local = qm.class(qm.eta(sub.index_of(x).unwrap()));
        let mut mine: Vec<usize> = local.iter().map(|&i| sub.parent(i)).collect();
        mine.sort_unstable();
        mine == qa.class(qa.eta(x))
    });
    let collapse: Vec<usize> = (0..qm.len())
        .map(|c| qa.eta(sub.parent(qm.representative(c))))
        .collect();
    let injective = super::hom::is_injective(&collapse);
    let (cm, ca) = (&qm.algebra, &qa.algebra);
    let preserves = cm.elements().all(|c| {
        cm.elements().all(|d| {
            cm.leq(c, d) == ca.leq(collapse[c], collapse[d])
                && collapse[cm.implies(c, d)] == ca.implies(collapse[c], collapse[d])
        })
    });
    Ok(InclusionReport {
        classes_agree,
        collapse_is_inclusion: injective && preserves,
        image: qa.image(m),
    })
}

/// `𝖢(f↾M) = 𝖢(f)↾𝖢(M)` for an automorphism `f` of `A`, identifying classes
/// of `M` and of `f[M]` with classes of `A`.
pub fn restriction_commutes(
    alg: &CubicAlgebra,
    qa: &Quotient,
    m: &ElementSet,
    f: &[usize],
) -> Result<bool> {
    require_upward_subalgebra(alg, m)?;
    let fm = m.map(alg.size(), |x| f[x]);
    let sub = subalgebra::induced(alg, m)?;
    let fsub = subalgebra::induced(alg, &fm)?;
    let qm = quotient_c(&sub.algebra)?;
    let qfm = quotient_c(&fsub.algebra)?;
    let restricted: Vec<usize> = sub
        .embedding
        .iter()
        .map(|&x| fsub.index_of(f[x]).unwrap())
        .collect();
    let c_restricted = super::quotient::functor_c_hom(&qm, &qfm, &restricted)?;
    let cf = super::quotient::functor_c_hom(qa, qa, f)?;
    Ok((0..qm.len()).all(|c| {
        let lhs = qa.eta(fsub.parent(qfm.representative(c_restricted[c])));
        let rhs = cf[qa.eta(sub.parent(qm.representative(c)))];
        lhs == rhs
    }))
}

/// All upward-closed subalgebras, as unions of `∼`-classes (every such
/// subalgebra is one).
pub fn upward_closed_subalgebras(
    alg: &CubicAlgebra,
    qa: &Quotient,
    limits: &Limits,
) -> Result<Vec<ElementSet>> {
    let k = qa.len();
    if k > 20 {
        return Err(Error::CapExceeded {
            what: "class subsets",
            requested: k,
            cap: 20,
        });
    }
    limits.check_carrier("upward-closed subalgebras", alg.size())?;
    let mut out = Vec::new();
    for mask in 1u32..(1 << k) {
        let classes = ElementSet::from_iter(k, (0..k).filter(|c| mask >> c & 1 == 1));
        let set = qa.preimage(&classes);
        if upward_failure(alg, &set).is_none() && closure_failure(alg, &set).is_none() {
            out.push(set);
        }
    }
    out.sort();
    Ok(out)
}

/// A pair of distinct upward-closed subalgebras with the same collapse, if
/// one exists.
pub fn collapse_counterexample(qa: &Quotient, subs: &[ElementSet]) -> Option<(usize, usize)> {
    for i in 0..subs.len() {
        for j in 0..subs.len() {
            if (subs[i] == subs[j]) != (qa.image(&subs[i]) == qa.image(&subs[j])) {
                return Some((i, j));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn whole_algebra_and_edges_of_c2() {
        let c2 = corpus::c2();
        let a = &c2.algebra;
        let qa = quotient_c(a).unwrap();
        let all = ElementSet::full(9);
        assert!(inclusion_collapse(a, &qa, &all).unwrap().holds());
        let subs = upward_closed_subalgebras(a, &qa, &Limits::default()).unwrap();
        assert!(subs.len() >= 2);
        for s in &subs {
            assert!(inclusion_collapse(a, &qa, s).unwrap().holds());
        }
        assert_eq!(collapse_counterexample(&qa, &subs), None);
        let vertex = ElementSet::from_iter(9, [c2.by_labels("1", "0").unwrap()]);
        assert!(matches!(
            inclusion_collapse(a, &qa, &vertex),
            Err(Error::NotUpwardClosed { .. })
        ));
    }
}
