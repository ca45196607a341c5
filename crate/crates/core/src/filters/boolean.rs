//! Boolean filters, `Δ` on filters and the sum of Boolean filters.

use super::ops::{gfilters, impl_elem};
use super::{filter_join, Filter};
use crate::cubic::{CubicAlgebra, JoinSemilattice};
use crate::error::{Error, Result};

/// `G ⊆ F` and `G ∨ (G → F) = F`.
pub fn is_f_boolean(order: &JoinSemilattice, g: &Filter, f: &Filter) -> Result<bool> {
    let complement = impl_elem(order, g, f)?;
    Ok(filter_join(order, g, &complement).is_ok_and(|j| j == *f))
}

/// `G ⊆ F` and `(G → F) → F = G`.
pub fn is_weakly_f_boolean(order: &JoinSemilattice, g: &Filter, f: &Filter) -> Result<bool> {
    let complement = impl_elem(order, g, f)?;
    Ok(impl_elem(order, &complement, f)? == *g)
}

fn for_all_gfilters_above(
    alg: &CubicAlgebra,
    g: &Filter,
    test: impl Fn(&Filter) -> Result<bool>,
) -> Result<bool> {
    let above: Vec<Filter> = gfilters(alg)
        .into_iter()
        .filter(|h| g.is_subset(h))
        .collect();
    if above.is_empty() {
        return Ok(false);
    }
    for h in &above {
        if !test(h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Some g-filter contains `G`, and `G` is `H`-Boolean for every such `H`.
pub fn is_boolean(alg: &CubicAlgebra, g: &Filter) -> Result<bool> {
    for_all_gfilters_above(alg, g, |h| is_f_boolean(alg.order(), g, h))
}

/// Some g-filter contains `G`, and `G` is weakly `H`-Boolean for every such `H`.
pub fn is_weakly_boolean(alg: &CubicAlgebra, g: &Filter) -> Result<bool> {
    for_all_gfilters_above(alg, g, |h| is_weakly_f_boolean(alg.order(), g, h))
}

/// `Δ(G, F) = Δ(1, G → F) ∨ G`
pub fn delta_filter(alg: &CubicAlgebra, g: &Filter, f: &Filter) -> Result<Filter> {
    let order = alg.order();
    let complement = impl_elem(order, g, f)?;
    let mirrored = Filter::new(
        order,
        complement.members().map(alg.size(), |x| alg.antipode(x)),
    )?;
    filter_join(order, &mirrored, g)
}

/// `[(G1 → C) ∩ (G2 → C)] ∨ [G1 ∩ G2]` for `C`-Boolean `G1`, `G2`.
pub fn boolean_filter_sum(
    order: &JoinSemilattice,
    g1: &Filter,
    g2: &Filter,
    c: &Filter,
) -> Result<Filter> {
    for g in [g1, g2] {
        if !is_f_boolean(order, g, c)? {
            return Err(Error::NotBoolean);
        }
    }
    let left = impl_elem(order, g1, c)?.intersection(order, &impl_elem(order, g2, c)?);
    filter_join(order, &left, &g1.intersection(order, g2))
}
