//! Concrete algebras: Boolean and implication algebras, pair algebras, face
//! posets, filter algebras and presentations.

pub mod boolean;
pub mod face;
pub mod implication;
pub mod pairs;
pub mod presentation;

pub use boolean::{boolean_algebra, BooleanAlgebra};
pub use face::{face_poset, FacePoset};
pub use implication::{implication_closure, implication_subalgebra, ImplicationAlgebra};
pub use pairs::{build_i, PairAlgebra};
pub use presentation::{gfilter_from_presentation, presentation_check, uncovered};

use crate::error::{Error, Result};
use crate::limits::Limits;

/// The pair algebra over the whole Boolean algebra of `atoms` atoms.
pub fn interval_algebra(atoms: usize, limits: &Limits) -> Result<PairAlgebra> {
    let b = boolean_algebra(atoms, limits)?;
    limits.check_carrier("interval algebra", 3usize.saturating_pow(atoms as u32))?;
    build_i(&ImplicationAlgebra::from_boolean(&b))
}

/// The pair algebra over a filter `F` of a Boolean algebra, together with its
/// embedding into the pair algebra over the whole Boolean algebra.
#[derive(Clone, Debug)]
pub struct FilterAlgebra {
    pub pairs: PairAlgebra,
    pub ambient: PairAlgebra,
    /// Masks of the filter, ascending; element `i` of the base of `pairs`.
    pub filter: Vec<usize>,
    /// Index in `ambient` of each element of `pairs`.
    pub embedding: Vec<usize>,
}

/// Checks that `masks` is a nonempty up-closed subset of `b` closed under
/// meets, and returns it sorted.
pub fn boolean_filter(b: &BooleanAlgebra, masks: &[usize]) -> Result<Vec<usize>> {
    let mut f = masks.to_vec();
    f.sort_unstable();
    f.dedup();
    if f.is_empty() {
        return Err(Error::NotAFilter("empty".into()));
    }
    if let Some(&x) = f.iter().find(|&&x| x >= b.size()) {
        return Err(Error::IndexOutOfRange {
            index: x,
            size: b.size(),
        });
    }
    let member = |x: usize| f.binary_search(&x).is_ok();
    for &x in &f {
        if let Some(y) = (0..b.size()).find(|&y| b.leq(x, y) && !member(y)) {
            return Err(Error::NotAFilter(format!(
                "{} is a member but {} is not",
                b.label(x),
                b.label(y)
            )));
        }
        if let Some(&y) = f.iter().find(|&&y| !member(b.meet(x, y))) {
            return Err(Error::NotAFilter(format!(
                "meet of {} and {} is missing",
                b.label(x),
                b.label(y)
            )));
        }
    }
    Ok(f)
}

pub fn filter_algebra(
    b: &BooleanAlgebra,
    masks: &[usize],
    limits: &Limits,
) -> Result<FilterAlgebra> {
    let filter = boolean_filter(b, masks)?;
    limits.check_carrier(
        "filter algebra",
        3usize.saturating_pow(b.atom_count() as u32),
    )?;
    let base = implication_subalgebra(b, &filter)?;
    let pairs = build_i(&base.algebra)?;
    let ambient = build_i(&ImplicationAlgebra::from_boolean(b))?;
    let embedding = pairs
        .pairs()
        .iter()
        .map(|&(u, v)| {
            ambient
                .index_of(base.masks[u], base.masks[v])
                .ok_or_else(|| Error::Invariant("filter pair missing from the ambient".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FilterAlgebra {
        pairs,
        ambient,
        filter,
        embedding,
    })
}

/// The Boolean algebra of `atoms` atoms sits inside the one with an extra atom
/// as the principal filter at that atom; returns its filter algebra.
pub fn ultrafilter_device(atoms: usize, limits: &Limits) -> Result<FilterAlgebra> {
    let b = boolean_algebra(atoms + 1, limits)?;
    let f = b.principal_filter(b.atom(atoms));
    filter_algebra(&b, &f, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::subalgebra::is_upward_closed;
    use crate::set::ElementSet;

    #[test]
    fn filter_algebra_at_atom() {
        let l = Limits::default();
        let b = boolean_algebra(2, &l).unwrap();
        let fa = filter_algebra(&b, &b.principal_filter(1), &l).unwrap();
        assert_eq!(fa.pairs.algebra.size(), 3);
        let image = ElementSet::from_iter(9, fa.embedding.iter().copied());
        assert!(is_upward_closed(&fa.ambient.algebra, &image));
    }

    #[test]
    fn whole_filter_is_interval_algebra() {
        let l = Limits::default();
        let b = boolean_algebra(2, &l).unwrap();
        let fa = filter_algebra(&b, &[0, 1, 2, 3], &l).unwrap();
        assert_eq!(fa.pairs.algebra.size(), 9);
        assert_eq!(fa.embedding, (0..9).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_non_filters() {
        let b = boolean_algebra(2, &Limits::default()).unwrap();
        assert!(matches!(
            boolean_filter(&b, &[1]),
            Err(Error::NotAFilter(_))
        ));
        assert!(matches!(
            boolean_filter(&b, &[1, 2, 3]),
            Err(Error::NotAFilter(_))
        ));
        assert!(matches!(boolean_filter(&b, &[]), Err(Error::NotAFilter(_))));
    }

    #[test]
    fn device_matches_square() {
        let l = Limits::default();
        let fa = ultrafilter_device(2, &l).unwrap();
        assert_eq!(fa.pairs.algebra.size(), 9);
        assert_eq!(fa.ambient.algebra.size(), 27);
    }
}
