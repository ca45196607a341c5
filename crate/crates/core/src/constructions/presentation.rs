//! Presentations: sets whose localizations cover the algebra, and the
//! g-filter obtained from one by iterated carets.

use crate::cubic::localization::members_by_delta;
use crate::cubic::CubicAlgebra;
use crate::error::{Error, Result};
use crate::filters::{is_gfilter, Filter};
use crate::set::ElementSet;

/// First element (by index) lying in no localization at a member of `set`.
pub fn uncovered(alg: &CubicAlgebra, set: &[usize]) -> Option<usize> {
    let mut covered = ElementSet::new(alg.size());
    for &a in set {
        covered.union_with(&members_by_delta(alg, a));
    }
    alg.elements().find(|&x| !covered.contains(x))
}

/// Whether the localizations at the members of `set` cover the algebra.
pub fn presentation_check(alg: &CubicAlgebra, set: &[usize]) -> bool {
    uncovered(alg, set).is_none()
}

/// Folds the sequence with carets, `b_0 = a_0` and `b_{i+1} = b_i ⋏ a_{i+1}`,
/// and returns the up-closure of the `b_i`. The result is checked to be a
/// g-filter.
pub fn gfilter_from_presentation(alg: &CubicAlgebra, seq: &[usize]) -> Result<Filter> {
    for &a in seq {
        alg.check_index(a)?;
    }
    if let Some(x) = uncovered(alg, seq) {
        return Err(Error::NotAPresentation(x));
    }
    let b = caret_chain(alg, seq)?;
    let filter = Filter::principal(alg.order(), *b.last().expect("nonempty presentation"));
    if !is_gfilter(alg, &filter) {
        return Err(Error::Invariant(format!(
            "caret chain ends at {} whose up-set does not generate",
            filter.least()
        )));
    }
    Ok(filter)
}

/// The sequence `b_i` of iterated carets.
pub fn caret_chain(alg: &CubicAlgebra, seq: &[usize]) -> Result<Vec<usize>> {
    let mut out: Vec<usize> = Vec::with_capacity(seq.len());
    for &a in seq {
        let next = match out.last() {
            None => a,
            Some(&b) => alg.caret(b, a).ok_or(Error::CaretUndefined(b, a))?,
        };
        out.push(next);
    }
    Ok(out)
}
