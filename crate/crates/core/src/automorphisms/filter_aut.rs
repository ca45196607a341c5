//! Automorphisms determined by pairs of g-filters, F-presentations, and the
//! factorization of an automorphism through a fixed g-filter.

use crate::constructions::{build_i, ImplicationAlgebra, PairAlgebra};
use crate::cubic::CubicAlgebra;
use crate::error::{Error, Result};
use crate::filters::{is_gfilter, Filter};
use crate::functors::hom::{compose, functor_i_hom, inverse, is_hom};
use crate::functors::quotient::{functor_c_hom, quotient_c, Quotient};

/// For a g-filter `F`, the unique `α(x) >= β(x)` in `F` with
/// `x = Δ(α(x), β(x))`.
#[derive(Clone, Debug)]
pub struct AlphaBeta {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

/// Computes `α` and `β` for every element, failing with `NoDecomposition`
/// when some element has no decomposition and `Invariant` when one has two.
pub fn decomposition(alg: &CubicAlgebra, f: &Filter) -> Result<AlphaBeta> {
    const NONE: usize = usize::MAX;
    let n = alg.size();
    let mut alpha = vec![NONE; n];
    let mut beta = vec![NONE; n];
    for a in f.members().iter() {
        for b in f.members().iter().filter(|&b| alg.leq(b, a)) {
            let x = alg.d(a, b);
            if alpha[x] != NONE {
                return Err(Error::Invariant(format!(
                    "{x} decomposes as both ({}, {}) and ({a}, {b})",
                    alpha[x], beta[x]
                )));
            }
            alpha[x] = a;
            beta[x] = b;
        }
    }
    if let Some(x) = alpha.iter().position(|&a| a == NONE) {
        return Err(Error::NoDecomposition(x));
    }
    Ok(AlphaBeta { alpha, beta })
}

pub fn alpha_beta(alg: &CubicAlgebra, f: &Filter, x: usize) -> Result<(usize, usize)> {
    alg.check_index(x)?;
    let d = decomposition(alg, f)?;
    Ok((d.alpha[x], d.beta[x]))
}

fn require_gfilter(alg: &CubicAlgebra, f: &Filter) -> Result<()> {
    if is_gfilter(alg, f) {
        Ok(())
    } else {
        Err(Error::NotGFilter)
    }
}

/// `φ(x) = Δ(β_G(α_F(x)), β_G(β_F(x)))`, the automorphism moving `F` onto
/// `G` while keeping every element similar to its image.
pub fn filter_automorphism(alg: &CubicAlgebra, f: &Filter, g: &Filter) -> Result<Vec<usize>> {
    require_gfilter(alg, f)?;
    require_gfilter(alg, g)?;
    let df = decomposition(alg, f)?;
    let dg = decomposition(alg, g)?;
    let phi = alg
        .elements()
        .map(|x| {
            let upper = dg.beta[df.alpha[x]];
            let lower = dg.beta[df.beta[x]];
            alg.delta(upper, lower)
                .ok_or_else(|| Error::Invariant(format!("filter automorphism undefined at {x}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if inverse(&phi).is_none() || !is_hom(alg, alg, &phi) {
        return Err(Error::Invariant(
            "filter automorphism is not an automorphism".into(),
        ));
    }
    Ok(phi)
}

/// An isomorphism from `M` onto the pair algebra over the implication
/// algebra `F`, `x ↦ ⟨Δ(1,x) ∨ β(x), x ∨ β(x)⟩`.
#[derive(Clone, Debug)]
pub struct FPresentation {
    pub filter: Filter,
    /// Elements of `F`, ascending; local index `i` of the base is `members[i]`.
    pub members: Vec<usize>,
    pub pairs: PairAlgebra,
    pub quotient: Quotient,
    pub map: Vec<usize>,
    pub inverse: Vec<usize>,
}

impl FPresentation {
    pub fn local(&self, x: usize) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }
}

pub fn f_presentation(alg: &CubicAlgebra, f: &Filter) -> Result<FPresentation> {
    require_gfilter(alg, f)?;
    let members = f.to_vec();
    let pos = |x: usize| members.binary_search(&x).ok();
    let labels = members.iter().map(|&x| alg.label(x).to_string()).collect();
    let base = ImplicationAlgebra::from_fn(
        members.len(),
        |i, j| alg.leq(members[i], members[j]),
        |i, j| pos(alg.implies(members[i], members[j])).expect("filters are closed under →"),
        labels,
    )?;
    let pairs = build_i(&base)?;
    let ab = decomposition(alg, f)?;
    let map = alg
        .elements()
        .map(|x| {
            let b = ab.beta[x];
            let first = pos(alg.join(alg.antipode(x), b));
            let second = pos(alg.join(x, b));
            first
                .zip(second)
                .and_then(|(u, v)| pairs.index_of(u, v))
                .ok_or_else(|| Error::Invariant(format!("presentation of {x} is not a pair")))
        })
        .collect::<Result<Vec<_>>>()?;
    let inv = inverse(&map)
        .filter(|_| map.len() == pairs.algebra.size())
        .ok_or_else(|| Error::Invariant("presentation is not a bijection".into()))?;
    if !is_hom(alg, &pairs.algebra, &map) {
        return Err(Error::Invariant(
            "presentation is not a homomorphism".into(),
        ));
    }
    let quotient = quotient_c(&pairs.algebra)?;
    Ok(FPresentation {
        filter: f.clone(),
        members,
        pairs,
        quotient,
        map,
        inverse: inv,
    })
}

/// `Ξ(α) = ι_F⁻¹ ∘ 𝖢(φ_F) ∘ α ∘ 𝖢(φ_F⁻¹) ∘ ι_F`, evaluated pointwise. `α`
/// permutes the classes of `q`, the quotient of `M`; the result permutes the
/// local indices of `F`.
pub fn xi(q: &Quotient, pres: &FPresentation, alpha: &[usize]) -> Result<Vec<usize>> {
    let qf = &pres.quotient;
    let base = &pres.pairs.base;
    (0..pres.members.len())
        .map(|i| {
            let c1 = qf.eta(pres.pairs.embed_e(i));
            let c2 = q.eta(pres.inverse[qf.representative(c1)]);
            let c3 = alpha[c2];
            let c4 = qf.eta(pres.map[q.representative(c3)]);
            let (u, v) = pres.pairs.pair(qf.representative(c4));
            base.meet(u, v)
                .ok_or_else(|| Error::Invariant("member pair without meet".into()))
        })
        .collect()
}

/// `φ = φ_{F,G} ∘ χ̂` with `G = φ[F]`, `χ = Ξ(𝖢(φ))` and
/// `χ̂ = φ_F⁻¹ ∘ 𝖨(χ) ∘ φ_F`.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub g: Filter,
    pub chi: Vec<usize>,
    pub chi_hat: Vec<usize>,
    pub phi_fg: Vec<usize>,
    pub reconstructs: bool,
}

pub fn factor_automorphism(
    alg: &CubicAlgebra,
    q: &Quotient,
    pres: &FPresentation,
    phi: &[usize],
) -> Result<Factorization> {
    let image = pres.filter.members().map(alg.size(), |x| phi[x]);
    let g = Filter::new(alg.order(), image)?;
    let c_phi = functor_c_hom(q, q, phi)?;
    let chi = xi(q, pres, &c_phi)?;
    let lifted = functor_i_hom(&pres.pairs, &pres.pairs, &chi)?;
    let chi_hat = compose(&pres.inverse, &compose(&lifted, &pres.map));
    let phi_fg = filter_automorphism(alg, &pres.filter, &g)?;
    let reconstructs = compose(&phi_fg, &chi_hat) == phi;
    Ok(Factorization {
        g,
        chi,
        chi_hat,
        phi_fg,
        reconstructs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn c2_alpha_beta() {
        let c2 = corpus::c2();
        let a = &c2.algebra;
        let e = |x: &str, y: &str| c2.by_labels(x, y).unwrap();
        let f = Filter::principal(a.order(), e("q", "p"));
        assert_eq!(
            alpha_beta(a, &f, e("p", "q")),
            Ok((e("1", "1"), e("q", "p")))
        );
        assert_eq!(alpha_beta(a, &f, a.one()), Ok((a.one(), a.one())));
        let edge = Filter::principal(a.order(), e("1", "p"));
        assert!(matches!(
            alpha_beta(a, &edge, e("1", "0")),
            Err(Error::NoDecomposition(_))
        ));
    }

    #[test]
    fn translation() {
        let c2 = corpus::c2();
        let a = &c2.algebra;
        let e = |x: &str, y: &str| c2.by_labels(x, y).unwrap();
        let f = Filter::principal(a.order(), e("1", "0"));
        let g = Filter::principal(a.order(), e("q", "p"));
        let phi = filter_automorphism(a, &f, &g).unwrap();
        assert_eq!(phi[e("1", "0")], e("q", "p"));
        assert_eq!(phi[e("1", "p")], e("1", "p"));
        assert_eq!(phi, filter_automorphism(a, &g, &f).unwrap());
        assert_eq!(compose(&phi, &phi), (0..9).collect::<Vec<_>>());
        assert_eq!(
            filter_automorphism(a, &f, &f).unwrap(),
            (0..9).collect::<Vec<_>>()
        );
    }

    #[test]
    fn presentation_extends_e() {
        let c2 = corpus::c2();
        let a = &c2.algebra;
        let f = Filter::principal(a.order(), c2.by_labels("1", "0").unwrap());
        let pres = f_presentation(a, &f).unwrap();
        for (i, &x) in pres.members.iter().enumerate() {
            assert_eq!(pres.map[x], pres.pairs.embed_e(i));
        }
    }
}
