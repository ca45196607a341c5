//! Generated subalgebras, g-filters and the three filter implications.

use super::{all_filters, filter_join, join_all, Filter};
use crate::cubic::{subalgebra, CubicAlgebra, JoinSemilattice};
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// `{Δ(x, y) : x, y ∈ F, y <= x}`, checked to be closed under `∨` and `Δ`.
pub fn generated_subalgebra(alg: &CubicAlgebra, f: &Filter) -> Result<ElementSet> {
    let mut set = ElementSet::new(alg.size());
    for x in f.members().iter() {
        for y in f.members().iter().filter(|&y| alg.leq(y, x)) {
            set.insert(alg.d(x, y));
        }
    }
    if let Some((op, witness)) = subalgebra::closure_failure(alg, &set) {
        return Err(Error::NotClosed { op, witness });
    }
    Ok(set)
}

/// `F` generates the whole algebra.
pub fn is_gfilter(alg: &CubicAlgebra, f: &Filter) -> bool {
    generated_subalgebra(alg, f).is_ok_and(|s| s.is_full())
}

/// Every g-filter, ordered by generator.
pub fn gfilters(alg: &CubicAlgebra) -> Vec<Filter> {
    all_filters(alg.order())
        .into_iter()
        .filter(|f| is_gfilter(alg, f))
        .collect()
}

fn require_subfilter(g: &Filter, f: &Filter) -> Result<()> {
    if g.is_subset(f) {
        Ok(())
    } else {
        Err(Error::NotSubfilter)
    }
}

/// `G ⊃ F`: the intersection of all filters `H` with `H ∨ G = F`.
pub fn impl_sup(order: &JoinSemilattice, g: &Filter, f: &Filter) -> Result<Filter> {
    require_subfilter(g, f)?;
    let witnesses: Vec<Filter> = all_filters(order)
        .into_iter()
        .filter(|h| filter_join(order, h, g).is_ok_and(|j| j == *f))
        .collect();
    let mut it = witnesses.iter();
    let first = it.next().ok_or(Error::NoWitnessFilter)?.clone();
    Ok(it.fold(first, |acc, h| acc.intersection(order, h)))
}

/// `G ⇒ F`: the join of all filters `H ⊆ F` with `H ∩ G = {1}`.
pub fn impl_join(order: &JoinSemilattice, g: &Filter, f: &Filter) -> Result<Filter> {
    require_subfilter(g, f)?;
    let family: Vec<Filter> = all_filters(order)
        .into_iter()
        .filter(|h| h.is_subset(f) && h.intersection(order, g).is_top())
        .collect();
    join_all(order, &family)
}

/// `G → F = {h ∈ F : h ∨ g = 1 for all g ∈ G}`, which must be a filter.
pub fn impl_elem(order: &JoinSemilattice, g: &Filter, f: &Filter) -> Result<Filter> {
    require_subfilter(g, f)?;
    let set = ElementSet::from_iter(
        order.size(),
        f.members()
            .iter()
            .filter(|&h| g.members().iter().all(|x| order.join(h, x) == order.one())),
    );
    Filter::new(order, set)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> JoinSemilattice {
        JoinSemilattice::from_order(4, |x, y| x & !y == 0).unwrap()
    }

    #[test]
    fn implications_agree_on_square() {
        let s = square();
        let whole = Filter::principal(&s, 0);
        let p = Filter::principal(&s, 1);
        let q = Filter::principal(&s, 2);
        assert_eq!(impl_sup(&s, &p, &whole).unwrap(), q);
        assert_eq!(impl_join(&s, &p, &whole).unwrap(), q);
        assert_eq!(impl_elem(&s, &p, &whole).unwrap(), q);
        let top = Filter::top(&s);
        assert_eq!(impl_elem(&s, &top, &p).unwrap(), p);
        assert_eq!(impl_elem(&s, &p, &p).unwrap(), top);
        assert_eq!(impl_sup(&s, &q, &p), Err(Error::NotSubfilter));
    }
}
