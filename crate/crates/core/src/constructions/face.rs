//! Face posets of the n-cube as sign vectors.
//!
//! A face is a word over `{-, +, *}`: `-` and `+` fix a coordinate, `*` spans
//! it. Each coordinate is a 2-bit code (`- = 01`, `+ = 10`, `* = 11`) naming
//! the vertex values it allows, so the order is bitwise inclusion, the join
//! is bitwise or, and reflecting `x` through the centre of `y` swaps the two
//! low/high bits of `x` on the coordinates `y` spans.

use super::boolean::boolean_algebra;
use super::implication::ImplicationAlgebra;
use super::pairs::{build_i, PairAlgebra};
use crate::cubic::{CubicAlgebra, Validity};
use crate::error::Result;
use crate::limits::Limits;

const MINUS: u64 = 0b01;
const PLUS: u64 = 0b10;
const STAR: u64 = 0b11;

#[derive(Clone, Debug)]
pub struct FacePoset {
    pub algebra: CubicAlgebra,
    pub dim: usize,
    codes: Vec<u64>,
}

fn coord(code: u64, i: usize) -> u64 {
    code >> (2 * i) & 0b11
}

/// Reflection of `x` through the centre of face `y`.
pub fn reflect(dim: usize, y: u64, x: u64) -> u64 {
    let mut out = x;
    for i in 0..dim {
        if coord(y, i) == STAR {
            let c = coord(x, i);
            let swapped = match c {
                MINUS => PLUS,
                PLUS => MINUS,
                c => c,
            };
            out = out & !(0b11 << (2 * i)) | swapped << (2 * i);
        }
    }
    out
}

pub fn sign_label(dim: usize, code: u64) -> String {
    (0..dim)
        .map(|i| match coord(code, i) {
            MINUS => '-',
            PLUS => '+',
            _ => '*',
        })
        .collect()
}

/// All `3^n` faces in lexicographic order of their sign words
/// (`-` < `+` < `*`, first coordinate most significant).
pub fn face_poset(dim: usize, limits: &Limits) -> Result<FacePoset> {
    limits.check_atoms(dim)?;
    let count = 3usize.pow(dim as u32);
    limits.check_carrier("face poset", count)?;
    let codes: Vec<u64> = (0..count)
        .map(|mut k| {
            let mut code = 0;
            for i in (0..dim).rev() {
                code |= [MINUS, PLUS, STAR][k % 3] << (2 * i);
                k /= 3;
            }
            code
        })
        .collect();
    let labels: Vec<String> = codes.iter().map(|&c| sign_label(dim, c)).collect();
    let index: std::collections::HashMap<u64, usize> =
        codes.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let algebra = CubicAlgebra::from_fn(
        count,
        |x, y| codes[x] & !codes[y] == 0,
        |y, x| index[&reflect(dim, codes[y], codes[x])],
        Some(labels.clone()),
        Validity::Strict,
    )?;
    Ok(FacePoset {
        algebra,
        dim,
        codes,
    })
}

impl FacePoset {
    pub fn code(&self, x: usize) -> u64 {
        self.codes[x]
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.algebra.minimal_elements()
    }

    /// The pair `⟨¬lo, hi⟩` of atom masks for face `x`, where `lo` holds the
    /// coordinates fixed to `+` and `hi` those that allow `+`.
    pub fn interval_pair(&self, x: usize) -> (usize, usize) {
        let mut lo = 0;
        let mut hi = 0;
        for i in 0..self.dim {
            let c = coord(self.codes[x], i);
            if c == PLUS {
                lo |= 1 << i;
            }
            if c & PLUS != 0 {
                hi |= 1 << i;
            }
        }
        let top = (1 << self.dim) - 1;
        (!lo & top, hi)
    }

    /// The map from faces to the pair algebra over the Boolean algebra of
    /// `dim` atoms, together with that algebra.
    pub fn interval_map(&self, limits: &Limits) -> Result<(PairAlgebra, Vec<usize>)> {
        let b = boolean_algebra(self.dim, limits)?;
        let pairs = build_i(&ImplicationAlgebra::from_boolean(&b))?;
        let map = self
            .algebra
            .elements()
            .map(|x| {
                let (a, h) = self.interval_pair(x);
                pairs.index_of(a, h).expect("interval pair is a member")
            })
            .collect();
        Ok((pairs, map))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let l = Limits::default();
        assert_eq!(face_poset(0, &l).unwrap().algebra.size(), 1);
        assert_eq!(face_poset(1, &l).unwrap().algebra.size(), 3);
        assert_eq!(face_poset(2, &l).unwrap().algebra.size(), 9);
        assert_eq!(face_poset(2, &l).unwrap().vertices().len(), 4);
    }

    #[test]
    fn square_reflection() {
        let f = face_poset(2, &Limits::default()).unwrap();
        let a = &f.algebra;
        let idx = |s: &str| a.by_label(s).unwrap();
        assert_eq!(a.one(), idx("**"));
        assert_eq!(a.delta(idx("**"), idx("-+")), Some(idx("+-")));
        assert_eq!(a.delta(idx("-*"), idx("--")), Some(idx("-+")));
        assert_eq!(a.join(idx("--"), idx("-+")), idx("-*"));
        assert_eq!(a.meet(idx("-*"), idx("*-")), Some(idx("--")));
        assert_eq!(a.meet(idx("-*"), idx("+*")), None);
    }
}
