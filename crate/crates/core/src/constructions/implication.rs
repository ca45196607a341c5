//! Finite implication algebras: a join semilattice with top and a total
//! implication, meets partial.

use super::boolean::BooleanAlgebra;
use crate::cubic::{JoinSemilattice, UNDEFINED};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicationAlgebra {
    order: JoinSemilattice,
    implies: Vec<u32>,
    labels: Vec<String>,
}

impl ImplicationAlgebra {
    /// Builds from an order predicate and an implication function and checks
    /// the implication laws.
    pub fn from_fn(
        size: usize,
        leq: impl Fn(usize, usize) -> bool,
        implies: impl Fn(usize, usize) -> usize,
        labels: Vec<String>,
    ) -> Result<Self> {
        let order = JoinSemilattice::from_order(size, leq)?;
        let mut table = vec![UNDEFINED; size * size];
        for x in 0..size {
            for y in 0..size {
                let z = implies(x, y);
                if z >= size {
                    return Err(Error::MalformedTable(format!(
                        "{x} -> {y} = {z} out of range"
                    )));
                }
                table[x * size + y] = z as u32;
            }
        }
        if labels.len() != size {
            return Err(Error::MalformedTable("label count mismatch".into()));
        }
        let alg = ImplicationAlgebra {
            order,
            implies: table,
            labels,
        };
        if let Some((law, w)) = alg.law_failure() {
            return Err(Error::AxiomViolation {
                axiom: law.into(),
                witness: w,
            });
        }
        Ok(alg)
    }

    /// The whole Boolean algebra viewed as an implication algebra.
    pub fn from_boolean(b: &BooleanAlgebra) -> Self {
        let all: Vec<usize> = (0..b.size()).collect();
        implication_subalgebra(b, &all)
            .expect("a Boolean algebra is closed under its own operations")
            .algebra
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.size());
        self.labels = labels;
        self
    }

    pub fn order(&self) -> &JoinSemilattice {
        &self.order
    }

    pub fn size(&self) -> usize {
        self.order.size()
    }

    pub fn one(&self) -> usize {
        self.order.one()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.order.leq(x, y)
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.order.join(x, y)
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.order.meet(x, y)
    }

    #[inline]
    pub fn implies(&self, x: usize, y: usize) -> usize {
        self.implies[x * self.size() + y] as usize
    }

    /// Every pair has a greatest lower bound.
    pub fn is_lattice(&self) -> bool {
        self.elements()
            .all(|x| self.elements().all(|y| self.meet(x, y).is_some()))
    }

    /// First failure among: `(x→y)→y = x∨y`, `x→(y→z) = y→(x→z)`,
    /// `x→x = 1`, `x∨y = 1 iff x→y = y`, and `x <= y iff x→y = 1`.
    pub fn law_failure(&self) -> Option<(&'static str, Vec<usize>)> {
        let one = self.one();
        for x in self.elements() {
            if self.implies(x, x) != one {
                return Some(("self", vec![x]));
            }
            for y in self.elements() {
                if self.implies(self.implies(x, y), y) != self.join(x, y) {
                    return Some(("e", vec![x, y]));
                }
                if (self.join(x, y) == one) != (self.implies(x, y) == y) {
                    return Some(("join-one", vec![x, y]));
                }
                if self.leq(x, y) != (self.implies(x, y) == one) {
                    return Some(("order", vec![x, y]));
                }
                for z in self.elements() {
                    if self.implies(x, self.implies(y, z)) != self.implies(y, self.implies(x, z)) {
                        return Some(("f", vec![x, y, z]));
                    }
                }
            }
        }
        None
    }
}

/// An implication subalgebra of a Boolean algebra together with the masks of
/// its elements (ascending).
#[derive(Clone, Debug)]
pub struct ImplicationSubalgebra {
    pub algebra: ImplicationAlgebra,
    pub masks: Vec<usize>,
}

/// The algebra induced on `subset` (any order, duplicates ignored), which
/// must contain the top and be closed under `→` and `∨`.
pub fn implication_subalgebra(
    b: &BooleanAlgebra,
    subset: &[usize],
) -> Result<ImplicationSubalgebra> {
    let mut masks = subset.to_vec();
    masks.sort_unstable();
    masks.dedup();
    if let Some(&x) = masks.iter().find(|&&x| x >= b.size()) {
        return Err(Error::IndexOutOfRange {
            index: x,
            size: b.size(),
        });
    }
    if !masks.contains(&b.top()) {
        return Err(Error::NotClosed {
            op: "one",
            witness: vec![],
        });
    }
    let pos = |m: usize| masks.binary_search(&m).ok();
    for &x in &masks {
        for &y in &masks {
            if pos(b.implies(x, y)).is_none() {
                return Err(Error::NotClosed {
                    op: "implies",
                    witness: vec![x, y],
                });
            }
            if pos(b.join(x, y)).is_none() {
                return Err(Error::NotClosed {
                    op: "join",
                    witness: vec![x, y],
                });
            }
        }
    }
    let labels = masks.iter().map(|&m| b.label(m)).collect();
    let algebra = ImplicationAlgebra::from_fn(
        masks.len(),
        |i, j| b.leq(masks[i], masks[j]),
        |i, j| pos(b.implies(masks[i], masks[j])).unwrap(),
        labels,
    )?;
    Ok(ImplicationSubalgebra { algebra, masks })
}

/// Least subset containing `seeds` and the top, closed under `→` and `∨`.
pub fn implication_closure(b: &BooleanAlgebra, seeds: &[usize]) -> Vec<usize> {
    let mut set = vec![false; b.size()];
    let mut members = vec![b.top()];
    set[b.top()] = true;
    for &s in seeds {
        if !set[s] {
            set[s] = true;
            members.push(s);
        }
    }
    let mut i = 0;
    while i < members.len() {
        let x = members[i];
        for j in 0..=i {
            let y = members[j];
            for z in [b.implies(x, y), b.implies(y, x), b.join(x, y)] {
                if !set[z] {
                    set[z] = true;
                    members.push(z);
                }
            }
        }
        i += 1;
    }
    members.sort_unstable();
    members
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::boolean::boolean_algebra;
    use crate::limits::Limits;

    #[test]
    fn three_element_non_lattice() {
        let b = boolean_algebra(2, &Limits::default()).unwrap();
        let s = implication_subalgebra(&b, &[1, 2, 3]).unwrap();
        let i = &s.algebra;
        let (p, q) = (0, 1);
        assert_eq!(i.implies(p, q), q);
        assert_eq!(i.implies(q, p), p);
        assert_eq!(i.meet(p, q), None);
        assert!(!i.is_lattice());
    }

    #[test]
    fn closure_failures() {
        let b = boolean_algebra(2, &Limits::default()).unwrap();
        assert!(implication_subalgebra(&b, &[1, 3]).is_ok());
        assert!(matches!(
            implication_subalgebra(&b, &[0, 1, 3]),
            Err(Error::NotClosed { op: "implies", .. })
        ));
        assert!(matches!(
            implication_subalgebra(&b, &[1]),
            Err(Error::NotClosed { op: "one", .. })
        ));
        assert_eq!(implication_closure(&b, &[0]), vec![0, 3]);
        assert_eq!(implication_closure(&b, &[0, 1]), vec![0, 1, 2, 3]);
        assert_eq!(implication_closure(&b, &[1, 2]), vec![1, 2, 3]);
    }

    #[test]
    fn whole_boolean_is_lattice() {
        let b = boolean_algebra(3, &Limits::default()).unwrap();
        let i = ImplicationAlgebra::from_boolean(&b);
        assert_eq!(i.size(), 8);
        assert!(i.is_lattice());
    }
}
