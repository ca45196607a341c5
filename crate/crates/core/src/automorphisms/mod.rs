//! Automorphism groups and the structure theory of inner automorphisms.
//!
//! Automorphisms are permutation arrays over the carrier; composition is
//! `(φ ∘ ψ)(x) = φ(ψ(x))`.

pub mod closure;
pub mod filter_aut;
pub mod recovery;
pub mod search;

pub use closure::{localize_closure, LocalClosure};
pub use filter_aut::{
    alpha_beta, decomposition, f_presentation, factor_automorphism, filter_automorphism, xi,
    AlphaBeta, FPresentation, Factorization,
};
pub use recovery::{
    d_set, decompose, f_ab, f_hat_ab, fixed_set, omega, phi_from_boolean_filter, recover,
};
pub use search::{automorphisms, find_isomorphism, is_isomorphism, isomorphisms, Structure};

use crate::cubic::CubicAlgebra;
use crate::error::Result;
use crate::functors::hom::{compose, inverse};
use crate::limits::Limits;

/// Every automorphism, sorted lexicographically by permutation array.
pub fn enumerate_aut(alg: &CubicAlgebra, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    limits.check_carrier("automorphism search", alg.size())?;
    Ok(automorphisms(&Structure::cubic(alg)))
}

pub fn is_automorphism(alg: &CubicAlgebra, map: &[usize]) -> bool {
    let s = Structure::cubic(alg);
    is_isomorphism(&s, &s, map)
}

/// `x ∼ φ(x)` for every `x`.
pub fn is_inner(alg: &CubicAlgebra, phi: &[usize]) -> bool {
    alg.elements().all(|x| alg.sim(x, phi[x]))
}

/// The inner automorphisms among `auts`, in the same order.
pub fn inner_subgroup(alg: &CubicAlgebra, auts: &[Vec<usize>]) -> Vec<Vec<usize>> {
    auts.iter()
        .filter(|phi| is_inner(alg, phi))
        .cloned()
        .collect()
}

pub fn inner_group(alg: &CubicAlgebra, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    Ok(inner_subgroup(alg, &enumerate_aut(alg, limits)?))
}

/// Group-theoretic facts about a subgroup `inner` of `group`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupReport {
    pub closed: bool,
    pub normal: bool,
    pub abelian: bool,
    pub involutions: bool,
}

impl SubgroupReport {
    pub fn holds(&self) -> bool {
        self.closed && self.normal && self.abelian && self.involutions
    }
}

pub fn subgroup_report(group: &[Vec<usize>], inner: &[Vec<usize>]) -> SubgroupReport {
    let mut sorted = inner.to_vec();
    sorted.sort();
    let contains_sorted = |p: &Vec<usize>| sorted.binary_search(p).is_ok();
    let n = inner.first().map_or(0, Vec::len);
    let id: Vec<usize> = (0..n).collect();
    let closed = inner.is_empty()
        || (contains_sorted(&id)
            && inner
                .iter()
                .all(|f| inner.iter().all(|g| contains_sorted(&compose(f, g)))));
    let normal = group.iter().all(|psi| {
        let inv = inverse(psi).expect("automorphisms are bijections");
        inner
            .iter()
            .all(|phi| contains_sorted(&compose(psi, &compose(phi, &inv))))
    });
    let abelian = inner
        .iter()
        .all(|f| inner.iter().all(|g| compose(f, g) == compose(g, f)));
    let involutions = inner.iter().all(|f| compose(f, f) == id);
    SubgroupReport {
        closed,
        normal,
        abelian,
        involutions,
    }
}

/// Least set of permutations containing the identity and `gens`, closed
/// under composition; sorted.
pub fn generated_group(n: usize, gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut group: Vec<Vec<usize>> = vec![(0..n).collect()];
    let mut i = 0;
    while i < group.len() {
        for g in gens {
            let next = compose(g, &group[i]);
            if !group.contains(&next) {
                group.push(next);
            }
        }
        i += 1;
    }
    group.sort();
    group
}
