//! Subsets closed under the cubic operations, and the algebras they induce.

use super::{CubicAlgebra, Validity, UNDEFINED};
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// A subalgebra reindexed to `0..len`, remembering where each element came
/// from. Indices follow the ascending order of the parent indices.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub algebra: CubicAlgebra,
    pub embedding: Vec<usize>,
    position: Vec<u32>,
}

impl Subalgebra {
    pub fn members(&self) -> ElementSet {
        ElementSet::from_iter(self.position.len(), self.embedding.iter().copied())
    }

    /// Local index of a parent element.
    pub fn index_of(&self, x: usize) -> Option<usize> {
        match self.position.get(x) {
            Some(&p) if p != UNDEFINED => Some(p as usize),
            _ => None,
        }
    }

    /// Parent element of a local index.
    pub fn parent(&self, i: usize) -> usize {
        self.embedding[i]
    }
}

/// First witness against closure of `set` under `1`, `∨` and `Δ`:
/// `("one", [])`, `("join", [x, y])` or `("delta", [y, x])`.
pub fn closure_failure(alg: &CubicAlgebra, set: &ElementSet) -> Option<(&'static str, Vec<usize>)> {
    if !set.contains(alg.one()) {
        return Some(("one", vec![]));
    }
    for x in set.iter() {
        for y in set.iter() {
            if !set.contains(alg.join(x, y)) {
                return Some(("join", vec![x, y]));
            }
            if alg.leq(x, y) && !set.contains(alg.d(y, x)) {
                return Some(("delta", vec![y, x]));
            }
        }
    }
    None
}

pub fn is_subalgebra(alg: &CubicAlgebra, set: &ElementSet) -> bool {
    closure_failure(alg, set).is_none()
}

/// First pair `(below, above)` with `below` in `set`, `below <= above` and
/// `above` outside `set`.
pub fn upward_failure(alg: &CubicAlgebra, set: &ElementSet) -> Option<(usize, usize)> {
    set.iter().find_map(|x| {
        alg.up_set(x)
            .iter()
            .find(|&y| !set.contains(y))
            .map(|y| (x, y))
    })
}

pub fn is_upward_closed(alg: &CubicAlgebra, set: &ElementSet) -> bool {
    upward_failure(alg, set).is_none()
}

/// Least subset containing `seeds` and `1`, closed under `∨` and `Δ`.
pub fn generate(alg: &CubicAlgebra, seeds: impl IntoIterator<Item = usize>) -> ElementSet {
    let mut set = ElementSet::from_iter(alg.size(), seeds);
    set.insert(alg.one());
    let mut frontier = set.to_vec();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for &x in &frontier {
            let current = set.to_vec();
            for y in current {
                let mut add = |z: usize, fresh: &mut Vec<usize>| {
                    if set.insert(z) {
                        fresh.push(z);
                    }
                };
                add(alg.join(x, y), &mut fresh);
                if alg.leq(x, y) {
                    add(alg.d(y, x), &mut fresh);
                }
                if alg.leq(y, x) {
                    add(alg.d(x, y), &mut fresh);
                }
            }
        }
        frontier = fresh;
    }
    set
}

/// The algebra induced on a `∨`/`Δ`-closed subset.
pub fn induced(alg: &CubicAlgebra, set: &ElementSet) -> Result<Subalgebra> {
    if let Some((op, witness)) = closure_failure(alg, set) {
        return Err(Error::NotClosed { op, witness });
    }
    let embedding = set.to_vec();
    let mut position = vec![UNDEFINED; alg.size()];
    for (i, &x) in embedding.iter().enumerate() {
        position[x] = i as u32;
    }
    let m = embedding.len();
    let order = alg.order().induced(&embedding)?;
    let mut delta = vec![UNDEFINED; m * m];
    for (j, &y) in embedding.iter().enumerate() {
        for (i, &x) in embedding.iter().enumerate() {
            if alg.leq(x, y) {
                delta[j * m + i] = position[alg.d(y, x)];
            }
        }
    }
    let labels = embedding
        .iter()
        .map(|&x| alg.label(x).to_string())
        .collect();
    let algebra = CubicAlgebra::from_parts(order, delta, Some(labels), Validity::Strict)?;
    Ok(Subalgebra {
        algebra,
        embedding,
        position,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn generation_and_closure() {
        let a = segment();
        assert_eq!(generate(&a, [0]).to_vec(), vec![0, 1, 2]);
        assert_eq!(generate(&a, []).to_vec(), vec![2]);
        let half = ElementSet::from_iter(3, [0, 2]);
        assert_eq!(closure_failure(&a, &half), Some(("delta", vec![2, 0])));
        assert!(is_upward_closed(&a, &half));
        assert_eq!(
            upward_failure(&a, &ElementSet::from_iter(3, [0])),
            Some((0, 2))
        );
    }

    #[test]
    fn induced_top() {
        let a = segment();
        let s = induced(&a, &ElementSet::from_iter(3, [2])).unwrap();
        assert_eq!(s.algebra.size(), 1);
        assert_eq!(s.index_of(2), Some(0));
        assert_eq!(s.index_of(0), None);
    }
}
