//! Finite join semilattices with a top element and partial meets.

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Marker for an undefined entry in a partial binary table.
pub const UNDEFINED: u32 = u32::MAX;

/// A finite poset with total joins and a top, stored as explicit tables.
///
/// Meets are partial; they are precomputed by a lower-bound scan so that
/// queries are table lookups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinSemilattice {
    size: usize,
    one: usize,
    below: Vec<ElementSet>,
    above: Vec<ElementSet>,
    join: Vec<u32>,
    meet: Vec<u32>,
}

impl JoinSemilattice {
    /// Builds from an order predicate and a join table without validating
    /// them. Use [`JoinSemilattice::validate`] before trusting the result.
    pub fn from_tables_unchecked(
        size: usize,
        leq: impl Fn(usize, usize) -> bool,
        join: Vec<u32>,
        one: usize,
    ) -> Self {
        let mut below = vec![ElementSet::new(size); size];
        let mut above = vec![ElementSet::new(size); size];
        #[allow(clippy::needless_range_loop)]
        for x in 0..size {
            for y in 0..size {
                if leq(x, y) {
                    below[y].insert(x);
                    above[x].insert(y);
                }
            }
        }
        let meet = compute_meets(size, &below);
        JoinSemilattice {
            size,
            one,
            below,
            above,
            join,
            meet,
        }
    }

    /// Builds from an order predicate alone, deriving joins and the top.
    pub fn from_order(size: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if size == 0 {
            return Err(Error::MalformedTable("empty carrier".into()));
        }
        let placeholder = Self::from_tables_unchecked(size, &leq, vec![0; size * size], 0);
        let mut join = vec![0u32; size * size];
        for x in 0..size {
            for y in 0..size {
                let ub = placeholder.above[x].intersection(&placeholder.above[y]);
                let lub = ub
                    .iter()
                    .find(|&u| placeholder.above[u].len() == ub.len())
                    .ok_or_else(|| {
                        Error::MalformedTable(format!("no least upper bound for ({x}, {y})"))
                    })?;
                join[x * size + y] = lub as u32;
            }
        }
        let one = (0..size)
            .find(|&t| placeholder.below[t].len() == size)
            .ok_or_else(|| Error::MalformedTable("no top element".into()))?;
        let s = Self::from_tables_unchecked(size, leq, join, one);
        s.validate()?;
        Ok(s)
    }

    /// Checks that the order is a partial order, the join table holds least
    /// upper bounds and `one` is the maximum.
    pub fn validate(&self) -> Result<()> {
        let n = self.size;
        if n == 0 {
            return Err(Error::MalformedTable("empty carrier".into()));
        }
        if self.join.len() != n * n {
            return Err(Error::MalformedTable("join table has wrong shape".into()));
        }
        if self.one >= n {
            return Err(Error::MalformedTable(format!(
                "one = {} out of range",
                self.one
            )));
        }
        for x in 0..n {
            if !self.leq(x, x) {
                return Err(Error::MalformedTable(format!("order not reflexive at {x}")));
            }
            for y in 0..n {
                if x != y && self.leq(x, y) && self.leq(y, x) {
                    return Err(Error::MalformedTable(format!(
                        "order not antisymmetric at ({x}, {y})"
                    )));
                }
            }
        }
        for x in 0..n {
            for y in self.above[x].iter() {
                if !self.above[y].is_subset(&self.above[x]) {
                    return Err(Error::MalformedTable(format!(
                        "order not transitive through ({x}, {y})"
                    )));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let j = self.join[x * n + y] as usize;
                if j >= n {
                    return Err(Error::MalformedTable(format!(
                        "join({x}, {y}) = {j} out of range"
                    )));
                }
                let ub = self.above[x].intersection(&self.above[y]);
                if !ub.contains(j) || !ub.is_subset(&self.above[j]) {
                    return Err(Error::MalformedTable(format!(
                        "join({x}, {y}) = {j} is not the least upper bound"
                    )));
                }
            }
        }
        if self.below[self.one].len() != n {
            return Err(Error::MalformedTable(format!(
                "one = {} is not the maximum",
                self.one
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.size + y] as usize
    }

    /// Greatest lower bound, if one exists.
    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        match self.meet[x * self.size + y] {
            UNDEFINED => None,
            m => Some(m as usize),
        }
    }

    /// `{y : y <= x}`
    pub fn down_set(&self, x: usize) -> &ElementSet {
        &self.below[x]
    }

    /// `{y : x <= y}`
    pub fn up_set(&self, x: usize) -> &ElementSet {
        &self.above[x]
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| self.below[x].len() == 1)
            .collect()
    }

    pub fn join_table(&self) -> &[u32] {
        &self.join
    }

    pub fn meet_table(&self) -> &[u32] {
        &self.meet
    }

    /// Greatest lower bound of a nonempty set, if it exists.
    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> Option<usize> {
        let mut it = xs.into_iter();
        let mut acc = it.next()?;
        for x in it {
            acc = self.meet(acc, x)?;
        }
        Some(acc)
    }

    /// Restriction of the order to `members`, reindexed ascending.
    pub fn induced(&self, members: &[usize]) -> Result<JoinSemilattice> {
        let sub =
            JoinSemilattice::from_order(members.len(), |i, j| self.leq(members[i], members[j]))?;
        Ok(sub)
    }
}

fn compute_meets(size: usize, below: &[ElementSet]) -> Vec<u32> {
    let mut meet = vec![UNDEFINED; size * size];
    for x in 0..size {
        for y in x..size {
            let lower = below[x].intersection(&below[y]);
            let m = lower.iter().find(|&m| below[m].len() == lower.len());
            if let Some(m) = m {
                meet[x * size + y] = m as u32;
                meet[y * size + x] = m as u32;
            }
        }
    }
    meet
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The "N" shaped poset 0<2, 1<2, 1<3 plus a top 4.
    fn n_poset() -> JoinSemilattice {
        let rel = [(0, 2), (1, 2), (1, 3)];
        JoinSemilattice::from_order(5, |x, y| x == y || y == 4 || rel.contains(&(x, y))).unwrap()
    }

    #[test]
    fn derived_joins_and_top() {
        let s = n_poset();
        assert_eq!(s.one(), 4);
        assert_eq!(s.join(0, 1), 2);
        assert_eq!(s.join(0, 3), 4);
        assert_eq!(s.join(2, 2), 2);
    }

    #[test]
    fn partial_meets() {
        let s = n_poset();
        assert_eq!(s.meet(2, 3), Some(1));
        assert_eq!(s.meet(0, 1), None);
        assert_eq!(s.meet(0, 4), Some(0));
        assert_eq!(s.minimal_elements(), vec![0, 1]);
    }

    #[test]
    fn rejects_non_lattice_joins() {
        // 0,1 below both 2 and 3, which are maximal-ish under 4: no lub for (0,1).
        let rel = [(0, 2), (0, 3), (1, 2), (1, 3)];
        let r = JoinSemilattice::from_order(5, |x, y| x == y || y == 4 || rel.contains(&(x, y)));
        assert!(matches!(r, Err(Error::MalformedTable(_))));
    }

    #[test]
    fn validate_catches_bad_join() {
        let good = n_poset();
        let mut join = good.join_table().to_vec();
        join[1] = 4; // join(0, 1)
        let bad = JoinSemilattice::from_tables_unchecked(5, |x, y| good.leq(x, y), join, 4);
        assert!(bad.validate().is_err());
    }
}
