//! The least upward-closed MR-subalgebra generated by a set of points and
//! stable under a group of automorphisms.

use super::generated_group;
use crate::constructions::presentation_check;
use crate::cubic::axioms::check_mr_axiom;
use crate::cubic::localization::members_by_delta;
use crate::cubic::subalgebra::{self, is_upward_closed};
use crate::cubic::CubicAlgebra;
use crate::error::Result;
use crate::functors::hom::is_hom;
use crate::report::WitnessPolicy;
use crate::set::ElementSet;

#[derive(Clone, Debug)]
pub struct LocalClosure {
    /// The fixpoint of alternating caret closure and orbit closure.
    pub points: ElementSet,
    /// The union of the localizations at the points.
    pub members: ElementSet,
    pub upward_closed: bool,
    pub mr: bool,
    pub presented: bool,
    pub contains_seeds: bool,
    /// Every element of the generated group restricts to an automorphism.
    pub restricts: bool,
}

impl LocalClosure {
    pub fn holds(&self) -> bool {
        self.upward_closed && self.mr && self.presented && self.contains_seeds && self.restricts
    }
}

fn caret_closure(alg: &CubicAlgebra, set: &mut ElementSet) -> bool {
    let mut grew = false;
    loop {
        let current = set.to_vec();
        let mut fresh = false;
        for &x in &current {
            for &y in &current {
                if let Some(c) = alg.caret(x, y) {
                    fresh |= set.insert(c);
                }
            }
        }
        if !fresh {
            return grew;
        }
        grew = true;
    }
}

fn orbit_closure(group: &[Vec<usize>], set: &mut ElementSet) -> bool {
    let mut grew = false;
    for x in set.to_vec() {
        for g in group {
            grew |= set.insert(g[x]);
        }
    }
    grew
}

pub fn localize_closure(
    alg: &CubicAlgebra,
    seeds: &[usize],
    gens: &[Vec<usize>],
) -> Result<LocalClosure> {
    for &x in seeds {
        alg.check_index(x)?;
    }
    let group = generated_group(alg.size(), gens);
    let mut points = ElementSet::from_iter(alg.size(), seeds.iter().copied());
    loop {
        let a = caret_closure(alg, &mut points);
        let b = orbit_closure(&group, &mut points);
        if !a && !b {
            break;
        }
    }
    let mut members = ElementSet::new(alg.size());
    for z in points.iter() {
        members.union_with(&members_by_delta(alg, z));
    }
    let upward_closed = is_upward_closed(alg, &members);
    let contains_seeds = seeds.iter().all(|&x| members.contains(x));
    let (mr, presented, restricts) = match subalgebra::induced(alg, &members) {
        Ok(sub) => {
            let mr = check_mr_axiom(&sub.algebra, WitnessPolicy::First).passed;
            let local: Vec<usize> = points.iter().filter_map(|z| sub.index_of(z)).collect();
            let presented = presentation_check(&sub.algebra, &local);
            let restricts = group.iter().all(|g| {
                let map: Option<Vec<usize>> =
                    sub.embedding.iter().map(|&x| sub.index_of(g[x])).collect();
                map.is_some_and(|m| {
                    super::is_automorphism(&sub.algebra, &m)
                        && is_hom(&sub.algebra, &sub.algebra, &m)
                })
            });
            (mr, presented, restricts)
        }
        Err(_) => (false, false, false),
    };
    Ok(LocalClosure {
        points,
        members,
        upward_closed,
        mr,
        presented,
        contains_seeds,
        restricts,
    })
}
