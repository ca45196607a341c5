//! Filters of finite join semilattices and cubic algebras.
//!
//! A filter is a nonempty up-closed subset in which every two members have a
//! meet that is again a member. On a finite carrier such a set has a least
//! element, so every filter is principal; [`Filter`] keeps that generator.

pub mod boolean;
pub mod ops;

pub use boolean::{
    boolean_filter_sum, delta_filter, is_boolean, is_f_boolean, is_weakly_boolean,
    is_weakly_f_boolean,
};
pub use ops::{generated_subalgebra, gfilters, impl_elem, impl_join, impl_sup, is_gfilter};

use crate::cubic::JoinSemilattice;
use crate::error::{Error, Result};
use crate::set::ElementSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filter {
    least: usize,
    members: ElementSet,
}

impl Filter {
    /// Validates `members` as a filter of `order`.
    pub fn new(order: &JoinSemilattice, members: ElementSet) -> Result<Filter> {
        if members.universe() != order.size() {
            return Err(Error::NotAFilter("set over a different carrier".into()));
        }
        if members.is_empty() {
            return Err(Error::NotAFilter("empty".into()));
        }
        for x in members.iter() {
            if let Some(y) = order.up_set(x).iter().find(|&y| !members.contains(y)) {
                return Err(Error::NotAFilter(format!(
                    "{x} is a member but {y} above it is not"
                )));
            }
            for y in members.iter() {
                match order.meet(x, y) {
                    Some(m) if members.contains(m) => {}
                    Some(m) => {
                        return Err(Error::NotAFilter(format!(
                            "meet {m} of members {x} and {y} is missing"
                        )))
                    }
                    None => {
                        return Err(Error::NotAFilter(format!(
                            "members {x} and {y} have no meet"
                        )))
                    }
                }
            }
        }
        let least = order
            .meet_all(members.iter())
            .expect("pairwise meets exist");
        Ok(Filter { least, members })
    }

    pub fn from_members(order: &JoinSemilattice, members: &[usize]) -> Result<Filter> {
        if let Some(&x) = members.iter().find(|&&x| x >= order.size()) {
            return Err(Error::IndexOutOfRange {
                index: x,
                size: order.size(),
            });
        }
        Filter::new(
            order,
            ElementSet::from_iter(order.size(), members.iter().copied()),
        )
    }

    /// `[x, 1]`
    pub fn principal(order: &JoinSemilattice, x: usize) -> Filter {
        Filter {
            least: x,
            members: order.up_set(x).clone(),
        }
    }

    /// `{1}`
    pub fn top(order: &JoinSemilattice) -> Filter {
        Filter::principal(order, order.one())
    }

    pub fn least(&self) -> usize {
        self.least
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_top(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset(&self, other: &Filter) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    /// `G ∩ H`, again a filter (generated by the join of the generators).
    pub fn intersection(&self, order: &JoinSemilattice, other: &Filter) -> Filter {
        Filter::principal(order, order.join(self.least, other.least))
    }
}

/// Whether `set` is a filter of `order`.
pub fn is_filter(order: &JoinSemilattice, set: &ElementSet) -> bool {
    Filter::new(order, set.clone()).is_ok()
}

/// Every filter of `order`, ordered by generator.
pub fn all_filters(order: &JoinSemilattice) -> Vec<Filter> {
    (0..order.size())
        .map(|x| Filter::principal(order, x))
        .collect()
}

/// The least filter containing both. Fails with `NoCommonFilter` when the
/// generators have no meet, as then no filter contains both.
pub fn filter_join(order: &JoinSemilattice, g: &Filter, h: &Filter) -> Result<Filter> {
    order
        .meet(g.least, h.least)
        .map(|m| Filter::principal(order, m))
        .ok_or(Error::NoCommonFilter)
}

/// Join of a family, folded in the given order starting from `{1}`.
pub fn join_all<'a>(
    order: &JoinSemilattice,
    filters: impl IntoIterator<Item = &'a Filter>,
) -> Result<Filter> {
    filters
        .into_iter()
        .try_fold(Filter::top(order), |acc, f| filter_join(order, &acc, f))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The four-element Boolean lattice 0 < p, q < 1 and, separately, the
    /// three-element poset p, q < 1 with no meet.
    fn square() -> JoinSemilattice {
        JoinSemilattice::from_order(4, |x, y| x & !y == 0).unwrap()
    }

    fn vee() -> JoinSemilattice {
        JoinSemilattice::from_order(3, |x, y| x == y || y == 2).unwrap()
    }

    #[test]
    fn validation() {
        let s = square();
        assert!(Filter::from_members(&s, &[1, 3]).is_ok());
        assert!(Filter::from_members(&s, &[1, 2, 3]).is_err());
        assert!(Filter::from_members(&s, &[1]).is_err());
        assert!(Filter::from_members(&s, &[]).is_err());
        let v = vee();
        assert!(Filter::from_members(&v, &[0, 1, 2]).is_err());
    }

    #[test]
    fn joins() {
        let s = square();
        let p = Filter::principal(&s, 1);
        let q = Filter::principal(&s, 2);
        assert_eq!(filter_join(&s, &p, &q).unwrap().least(), 0);
        assert_eq!(filter_join(&s, &p, &Filter::top(&s)).unwrap(), p);
        assert_eq!(p.intersection(&s, &q), Filter::top(&s));
        let v = vee();
        assert_eq!(
            filter_join(&v, &Filter::principal(&v, 0), &Filter::principal(&v, 1)),
            Err(Error::NoCommonFilter)
        );
        assert_eq!(all_filters(&s).len(), 4);
    }
}
