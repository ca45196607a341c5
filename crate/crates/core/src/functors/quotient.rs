//! The quotient of a cubic algebra by `∼`.
//!
//! Classes are indexed by their least member. The class order is
//! `X <= Y iff [x ∗ y] = Y` and implication `X → Y` is the complement of
//! `X ∨ Y` in the interval `[Y, 1]`; `[x → y]` is not well defined in
//! general (see [`naive_implication_conflict`]).

use petgraph::unionfind::UnionFind;

use crate::constructions::ImplicationAlgebra;
use crate::cubic::CubicAlgebra;
use crate::error::{Error, Result};
use crate::set::ElementSet;

#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: ImplicationAlgebra,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl Quotient {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    /// `η(x) = [x]`
    pub fn eta(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn eta_map(&self) -> &[usize] {
        &self.class_of
    }

    pub fn representative(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `η⁻¹[S]` for a set of classes.
    pub fn preimage(&self, classes: &ElementSet) -> ElementSet {
        ElementSet::from_iter(
            self.class_of.len(),
            classes.iter().flat_map(|c| self.classes[c].iter().copied()),
        )
    }

    /// `η[S]`
    pub fn image(&self, set: &ElementSet) -> ElementSet {
        set.map(self.len(), |x| self.class_of[x])
    }
}

pub fn quotient_c(alg: &CubicAlgebra) -> Result<Quotient> {
    let n = alg.size();
    let mut uf = UnionFind::<usize>::new(n);
    for x in 0..n {
        for y in x + 1..n {
            if alg.sim(x, y) {
                uf.union(x, y);
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut root_class = vec![usize::MAX; n];
    let mut class_of = vec![0; n];
    #[allow(clippy::needless_range_loop)]
    for x in 0..n {
        let r = uf.find(x);
        if root_class[r] == usize::MAX {
            root_class[r] = classes.len();
            classes.push(Vec::new());
        }
        class_of[x] = root_class[r];
        classes[root_class[r]].push(x);
    }
    for class in &classes {
        for &x in class {
            for &y in class {
                if !alg.sim(x, y) {
                    return Err(Error::Invariant(format!(
                        "similarity is not transitive: {x} and {y}"
                    )));
                }
            }
        }
    }
    let m = classes.len();
    let rep = |c: usize| classes[c][0];
    let join = |c: usize, d: usize| class_of[alg.star(rep(c), rep(d))];
    let leq = |c: usize, d: usize| join(c, d) == d;
    let order = crate::cubic::JoinSemilattice::from_order(m, leq)?;
    for c in 0..m {
        for d in 0..m {
            if order.join(c, d) != join(c, d) {
                return Err(Error::Invariant(format!(
                    "class join of {c} and {d} is not the order join"
                )));
            }
        }
    }
    let one = order.one();
    let mut implies = vec![0; m * m];
    for c in 0..m {
        for d in 0..m {
            let j = order.join(c, d);
            let complements: Vec<usize> = order
                .up_set(d)
                .iter()
                .filter(|&z| order.meet(z, j) == Some(d) && order.join(z, j) == one)
                .collect();
            match complements[..] {
                [z] => implies[c * m + d] = z,
                _ => {
                    return Err(Error::Invariant(format!(
                        "{} complements of class {j} in [{d}, 1]",
                        complements.len()
                    )))
                }
            }
        }
    }
    let labels = classes
        .iter()
        .map(|cl| format!("[{}]", alg.label(cl[0])))
        .collect();
    let algebra =
        ImplicationAlgebra::from_fn(m, |c, d| order.leq(c, d), |c, d| implies[c * m + d], labels)?;
    Ok(Quotient {
        algebra,
        classes,
        class_of,
    })
}

/// A triple `(x, x', y)` with `x ∼ x'` but `[x → y] != [x' → y]`, showing
/// that `∼` is not a congruence for `→`.
pub fn naive_implication_conflict(
    alg: &CubicAlgebra,
    q: &Quotient,
) -> Option<(usize, usize, usize)> {
    for class in q.classes() {
        for &x in class {
            for &x2 in class {
                for y in alg.elements() {
                    if q.eta(alg.implies(x, y)) != q.eta(alg.implies(x2, y)) {
                        return Some((x, x2, y));
                    }
                }
            }
        }
    }
    None
}

/// `𝖢(φ)([x]) = [φ(x)]`, checked to be well defined.
pub fn functor_c_hom(q1: &Quotient, q2: &Quotient, map: &[usize]) -> Result<Vec<usize>> {
    q1.classes()
        .iter()
        .map(|class| {
            let image = q2.eta(map[class[0]]);
            match class.iter().find(|&&x| q2.eta(map[x]) != image) {
                Some(&x) => Err(Error::NotHomomorphism(format!(
                    "{} and {x} are similar but their images are not",
                    class[0]
                ))),
                None => Ok(image),
            }
        })
        .collect()
}
