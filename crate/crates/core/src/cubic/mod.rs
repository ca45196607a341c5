//! Finite cubic implication algebras as explicit tables.
//!
//! An algebra is a join semilattice with a top `1` and a partial reflection
//! `Δ(y, x)`, defined exactly when `x <= y`. Elements are carrier indices;
//! algebras are immutable once built.

pub mod axioms;
pub mod localization;
pub mod order;
pub mod subalgebra;

use crate::error::{Error, Result};
use crate::set::ElementSet;
pub use order::{JoinSemilattice, UNDEFINED};

/// Whether a constructor enforces the cubic axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validity {
    /// Tables must be well formed and satisfy every axiom.
    Strict,
    /// Tables are stored as given; used to feed the model checker.
    Raw,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicAlgebra {
    order: JoinSemilattice,
    delta: Vec<u32>,
    labels: Vec<String>,
}

impl CubicAlgebra {
    /// Assembles an algebra from an order, a `size * size` delta table
    /// (`delta[y * size + x]` holds `Δ(y, x)`, [`UNDEFINED`] elsewhere) and
    /// optional labels.
    pub fn from_parts(
        order: JoinSemilattice,
        delta: Vec<u32>,
        labels: Option<Vec<String>>,
        validity: Validity,
    ) -> Result<Self> {
        let n = order.size();
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        if labels.len() != n {
            return Err(Error::MalformedTable(format!(
                "{} labels for a carrier of size {n}",
                labels.len()
            )));
        }
        let alg = CubicAlgebra {
            order,
            delta,
            labels,
        };
        if validity == Validity::Strict {
            let report = axioms::check_cubic_axioms(&alg, crate::WitnessPolicy::First)?;
            if let Some(v) = report.first() {
                return Err(Error::AxiomViolation {
                    axiom: v.rule.clone(),
                    witness: v.witness.clone(),
                });
            }
        }
        Ok(alg)
    }

    /// Builds from an order predicate and a reflection function evaluated on
    /// comparable pairs `x <= y` as `delta(y, x)`.
    pub fn from_fn(
        size: usize,
        leq: impl Fn(usize, usize) -> bool,
        delta: impl Fn(usize, usize) -> usize,
        labels: Option<Vec<String>>,
        validity: Validity,
    ) -> Result<Self> {
        let order = JoinSemilattice::from_order(size, leq)?;
        let mut table = vec![UNDEFINED; size * size];
        for y in 0..size {
            for x in order.down_set(y).iter() {
                table[y * size + x] = delta(y, x) as u32;
            }
        }
        Self::from_parts(order, table, labels, validity)
    }

    pub fn order(&self) -> &JoinSemilattice {
        &self.order
    }

    pub fn delta_table(&self) -> &[u32] {
        &self.delta
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// Index of the element carrying `label`.
    pub fn by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.size());
        self.labels = labels;
        self
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.order.size()
    }

    #[inline]
    pub fn one(&self) -> usize {
        self.order.one()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn check_index(&self, x: usize) -> Result<usize> {
        if x < self.size() {
            Ok(x)
        } else {
            Err(Error::IndexOutOfRange {
                index: x,
                size: self.size(),
            })
        }
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.order.leq(x, y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.order.lt(x, y)
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.order.join(x, y)
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.order.meet(x, y)
    }

    /// `Δ(y, x)`, defined iff `x <= y`.
    #[inline]
    pub fn delta(&self, y: usize, x: usize) -> Option<usize> {
        match self.delta[y * self.size() + x] {
            UNDEFINED => None,
            d => Some(d as usize),
        }
    }

    pub fn try_delta(&self, y: usize, x: usize) -> Result<usize> {
        self.check_index(y)?;
        self.check_index(x)?;
        self.delta(y, x)
            .ok_or(Error::DeltaUndefined { upper: y, lower: x })
    }

    /// `Δ(y, x)` for a pair known to be comparable.
    #[inline]
    pub(crate) fn d(&self, y: usize, x: usize) -> usize {
        self.delta(y, x)
            .unwrap_or_else(|| panic!("Δ({y}, {x}) undefined"))
    }

    /// `Δ(1, x)`, the antipode.
    #[inline]
    pub fn antipode(&self, x: usize) -> usize {
        self.d(self.one(), x)
    }

    /// `x → y = Δ(1, Δ(x ∨ y, y)) ∨ y`
    pub fn implies(&self, x: usize, y: usize) -> usize {
        let xy = self.join(x, y);
        self.join(self.antipode(self.d(xy, y)), y)
    }

    /// `x ⋏ y = x ∧ Δ(x ∨ y, y)` when that meet exists.
    pub fn caret(&self, x: usize, y: usize) -> Option<usize> {
        self.meet(x, self.d(self.join(x, y), y))
    }

    /// `x ∗ y = x ∨ Δ(x ∨ y, y)`
    pub fn star(&self, x: usize, y: usize) -> usize {
        self.join(x, self.d(self.join(x, y), y))
    }

    /// `x ≼ y` iff `Δ(x ∨ y, x) <= y`
    pub fn preceq(&self, x: usize, y: usize) -> bool {
        self.leq(self.d(self.join(x, y), x), y)
    }

    /// `x ∼ y` iff `Δ(x ∨ y, x) = y`
    pub fn sim(&self, x: usize, y: usize) -> bool {
        self.d(self.join(x, y), x) == y
    }

    pub fn up_set(&self, x: usize) -> &ElementSet {
        self.order.up_set(x)
    }

    pub fn down_set(&self, x: usize) -> &ElementSet {
        self.order.down_set(x)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        self.order.minimal_elements()
    }

    /// Returns the tables with one delta entry replaced; no validation.
    pub fn patched_delta(&self, y: usize, x: usize, value: usize) -> CubicAlgebra {
        let mut c = self.clone();
        let n = c.size();
        c.delta[y * n + x] = value as u32;
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Three faces of a segment: vertices 0, 1 and the edge 2.
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
    fn segment_operations() {
        let a = segment();
        assert_eq!(a.one(), 2);
        assert_eq!(a.join(0, 1), 2);
        assert_eq!(a.meet(0, 1), None);
        assert_eq!(a.antipode(0), 1);
        assert_eq!(a.implies(0, 0), 2);
        assert_eq!(a.implies(2, 0), 0);
        assert_eq!(a.star(0, 1), 0);
        assert_eq!(a.star(0, 2), 2);
        assert!(a.sim(0, 1));
        assert_eq!(a.caret(0, 1), Some(0));
    }

    #[test]
    fn delta_errors() {
        let a = segment();
        assert_eq!(
            a.try_delta(0, 2),
            Err(Error::DeltaUndefined { upper: 0, lower: 2 })
        );
        assert!(matches!(
            a.try_delta(7, 0),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert_eq!(a.try_delta(2, 2), Ok(2));
    }

    #[test]
    fn strict_mode_rejects_broken_delta() {
        let r = CubicAlgebra::from_fn(3, |x, y| x == y || y == 2, |_, x| x, None, Validity::Strict);
        assert!(matches!(r, Err(Error::AxiomViolation { .. })));
    }
}
