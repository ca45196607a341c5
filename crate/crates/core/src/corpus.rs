//! The fixed test instances and the seeded random corpus.
//!
//! `B1..B3` are powerset algebras (atoms `p, q, r`), `Cn` the pair algebra over
//! `Bn`, `I3` the implication algebra `{a, b, 1}` without meet of `a` and
//! `b`, and `N5` its pair algebra. `FA1` and `FA2` are filter algebras at the
//! last atom of `B3` and `B4`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{
    boolean_algebra, build_i, filter_algebra, implication_closure, implication_subalgebra,
    interval_algebra, BooleanAlgebra, FilterAlgebra, ImplicationAlgebra, PairAlgebra,
};
use crate::cubic::CubicAlgebra;
use crate::limits::Limits;

pub fn boolean(atoms: usize) -> BooleanAlgebra {
    boolean_algebra(atoms, &Limits::default()).expect("within cap")
}

pub fn interval(atoms: usize) -> PairAlgebra {
    interval_algebra(atoms, &Limits::default()).expect("interval algebra is cubic")
}

pub fn c1() -> PairAlgebra {
    interval(1)
}

pub fn c2() -> PairAlgebra {
    interval(2)
}

pub fn c3() -> PairAlgebra {
    interval(3)
}

/// The one-element algebra.
pub fn singleton() -> CubicAlgebra {
    interval(0).algebra
}

pub fn i3() -> ImplicationAlgebra {
    implication_subalgebra(&boolean(2), &[1, 2, 3])
        .expect("{p, q, 1} is closed")
        .algebra
        .with_labels(vec!["a".into(), "b".into(), "1".into()])
}

pub fn n5() -> PairAlgebra {
    build_i(&i3()).expect("pair algebra is cubic")
}

pub fn fa1() -> FilterAlgebra {
    last_atom_filter_algebra(3)
}

pub fn fa2() -> FilterAlgebra {
    last_atom_filter_algebra(4)
}

fn last_atom_filter_algebra(atoms: usize) -> FilterAlgebra {
    let b = boolean(atoms);
    let f = b.principal_filter(b.atom(atoms - 1));
    filter_algebra(&b, &f, &Limits::default()).expect("principal filter")
}

/// Distinct implication subalgebras of `B3`, each the closure of a random
/// set of one to three elements, in draw order.
pub fn random_implication_masks(seed: u64, count: usize) -> Vec<Vec<usize>> {
    let b = boolean(3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Vec<usize>> = Vec::new();
    let elements: Vec<usize> = (0..b.size()).collect();
    for _ in 0..10_000 {
        if out.len() == count {
            break;
        }
        let k = rng.gen_range(1..=3);
        let seeds: Vec<usize> = elements.choose_multiple(&mut rng, k).copied().collect();
        let closed = implication_closure(&b, &seeds);
        if closed.len() <= 8 && !out.contains(&closed) {
            out.push(closed);
        }
    }
    out
}

pub fn random_implication_algebras(seed: u64, count: usize) -> Vec<(String, ImplicationAlgebra)> {
    let b = boolean(3);
    random_implication_masks(seed, count)
        .into_iter()
        .map(|masks| {
            let name = format!(
                "I{{{}}}",
                masks
                    .iter()
                    .map(|&m| b.label(m))
                    .collect::<Vec<_>>()
                    .join(",")
            );
            let alg = implication_subalgebra(&b, &masks)
                .expect("closure is closed")
                .algebra;
            (name, alg)
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct NamedAlgebra {
    pub name: String,
    pub algebra: CubicAlgebra,
}

impl NamedAlgebra {
    fn new(name: impl Into<String>, algebra: CubicAlgebra) -> Self {
        NamedAlgebra {
            name: name.into(),
            algebra,
        }
    }
}

/// `C1, C2, C3, N5, FA1, FA2` followed by the pair algebras over `count`
/// seeded implication subalgebras of `B3`.
pub fn standard(seed: u64, count: usize) -> Vec<NamedAlgebra> {
    let mut out = vec![
        NamedAlgebra::new("C1", c1().algebra),
        NamedAlgebra::new("C2", c2().algebra),
        NamedAlgebra::new("C3", c3().algebra),
        NamedAlgebra::new("N5", n5().algebra),
        NamedAlgebra::new("FA1", fa1().pairs.algebra),
        NamedAlgebra::new("FA2", fa2().pairs.algebra),
    ];
    for (name, base) in random_implication_algebras(seed, count) {
        let pairs = build_i(&base).expect("pair algebra is cubic");
        out.push(NamedAlgebra::new(format!("I({name})"), pairs.algebra));
    }
    out
}

/// Looks up a fixed instance by name.
pub fn by_name(name: &str) -> Option<CubicAlgebra> {
    Some(match name {
        "C0" | "singleton" => singleton(),
        "C1" => c1().algebra,
        "C2" => c2().algebra,
        "C3" => c3().algebra,
        "C4" => interval(4).algebra,
        "N5" => n5().algebra,
        "FA1" => fa1().pairs.algebra,
        "FA2" => fa2().pairs.algebra,
        _ => return None,
    })
}

/// Seeded random subset of `0..n` of size `k`, ascending.
pub fn random_subset(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<usize> {
    let all: Vec<usize> = (0..n).collect();
    let mut pick: Vec<usize> = all.choose_multiple(rng, k.min(n)).copied().collect();
    pick.sort_unstable();
    pick
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
