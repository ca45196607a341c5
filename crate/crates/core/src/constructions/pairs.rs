//! The pair construction: cubic algebras of pairs `⟨a, b⟩` over an
//! implication algebra.
//!
//! The carrier is `{⟨a, b⟩ : a ∨ b = 1 and a ∧ b exists}`, ordered and joined
//! componentwise, with
//! `Δ(⟨a, b⟩, ⟨c, d⟩) = ⟨a ∧ (b → d), b ∧ (a → c)⟩`.
//! Over a Boolean algebra the pair `⟨a, b⟩` stands for the interval `[¬a, b]`.

use super::implication::ImplicationAlgebra;
use crate::cubic::{CubicAlgebra, JoinSemilattice, Validity, UNDEFINED};
use crate::error::{Error, Result};

/// A pair algebra with its element coordinates. Elements are indexed in
/// lexicographic order of `(a, b)`.
#[derive(Clone, Debug)]
pub struct PairAlgebra {
    pub algebra: CubicAlgebra,
    pub base: ImplicationAlgebra,
    pairs: Vec<(usize, usize)>,
    index: Vec<u32>,
}

impl PairAlgebra {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair(&self, x: usize) -> (usize, usize) {
        self.pairs[x]
    }

    /// Index of `⟨a, b⟩`, if it is a member.
    pub fn index_of(&self, a: usize, b: usize) -> Option<usize> {
        let n = self.base.size();
        if a >= n || b >= n {
            return None;
        }
        match self.index[a * n + b] {
            UNDEFINED => None,
            i => Some(i as usize),
        }
    }

    /// `e(a) = ⟨1, a⟩`
    pub fn embed_e(&self, a: usize) -> usize {
        self.index_of(self.base.one(), a)
            .expect("⟨1, a⟩ is always a member")
    }

    /// Element by pair label, e.g. `"⟨1,p⟩"`.
    pub fn by_labels(&self, a: &str, b: &str) -> Option<usize> {
        self.index_of(self.base.by_label(a)?, self.base.by_label(b)?)
    }
}

pub fn pair_label(a: &str, b: &str) -> String {
    format!("⟨{a},{b}⟩")
}

/// Builds the cubic algebra of pairs over `base`. The axiom checker is run on
/// the result; a failure is reported as an error rather than trusted.
pub fn build_i(base: &ImplicationAlgebra) -> Result<PairAlgebra> {
    let n = base.size();
    let one = base.one();
    let mut pairs = Vec::new();
    let mut index = vec![UNDEFINED; n * n];
    for a in base.elements() {
        for b in base.elements() {
            if base.join(a, b) == one && base.meet(a, b).is_some() {
                index[a * n + b] = pairs.len() as u32;
                pairs.push((a, b));
            }
        }
    }
    let m = pairs.len();
    let leq = |i: usize, j: usize| {
        let ((a, b), (c, d)) = (pairs[i], pairs[j]);
        base.leq(a, c) && base.leq(b, d)
    };
    let order = JoinSemilattice::from_order(m, leq)?;
    let mut delta = vec![UNDEFINED; m * m];
    for y in 0..m {
        let (a, b) = pairs[y];
        for x in order.down_set(y).iter() {
            let (c, d) = pairs[x];
            let first = base.meet(a, base.implies(b, d));
            let second = base.meet(b, base.implies(a, c));
            let target = match (first, second) {
                (Some(u), Some(v)) => index[u * n + v],
                _ => UNDEFINED,
            };
            if target == UNDEFINED {
                return Err(Error::Invariant(format!(
                    "Δ({y}, {x}) leaves the pair carrier"
                )));
            }
            delta[y * m + x] = target;
        }
    }
    let labels = pairs
        .iter()
        .map(|&(a, b)| pair_label(base.label(a), base.label(b)))
        .collect();
    let algebra = CubicAlgebra::from_parts(order, delta, Some(labels), Validity::Strict)?;
    Ok(PairAlgebra {
        algebra,
        base: base.clone(),
        pairs,
        index,
    })
}
