//! Finite powerset Boolean algebras with elements encoded as atom masks.

use crate::error::Result;
use crate::limits::Limits;

/// The powerset of `n` atoms. Element `m` is the set of atoms whose bits are
/// set in `m`, so `0` is the bottom and `2^n - 1` the top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanAlgebra {
    atoms: usize,
}

/// Atom names used in labels: `p, q, r, s`, then `t4, t5, ...`.
pub fn atom_name(i: usize) -> String {
    match i {
        0..=3 => ["p", "q", "r", "s"][i].to_string(),
        _ => format!("t{i}"),
    }
}

pub fn boolean_algebra(atoms: usize, limits: &Limits) -> Result<BooleanAlgebra> {
    limits.check_atoms(atoms)?;
    Ok(BooleanAlgebra { atoms })
}

impl BooleanAlgebra {
    pub fn atom_count(&self) -> usize {
        self.atoms
    }

    pub fn size(&self) -> usize {
        1 << self.atoms
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.size() - 1
    }

    pub fn atom(&self, i: usize) -> usize {
        assert!(i < self.atoms);
        1 << i
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        x | y
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        x & y
    }

    #[inline]
    pub fn complement(&self, x: usize) -> usize {
        !x & self.top()
    }

    #[inline]
    pub fn implies(&self, x: usize, y: usize) -> usize {
        self.complement(x) | y
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        x & !y == 0
    }

    /// `0`, `1`, or the concatenated atom names (`pq`).
    pub fn label(&self, x: usize) -> String {
        if x == self.top() {
            "1".into()
        } else if x == 0 {
            "0".into()
        } else {
            (0..self.atoms)
                .filter(|i| x >> i & 1 == 1)
                .map(atom_name)
                .collect()
        }
    }

    /// `{x : x >= f}`, ascending.
    pub fn principal_filter(&self, f: usize) -> Vec<usize> {
        (0..self.size()).filter(|&x| self.leq(f, x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laws_on_b3() {
        let b = boolean_algebra(3, &Limits::default()).unwrap();
        assert_eq!(b.size(), 8);
        for x in 0..8 {
            assert_eq!(b.complement(b.complement(x)), x);
            for y in 0..8 {
                assert_eq!(
                    b.complement(b.join(x, y)),
                    b.meet(b.complement(x), b.complement(y))
                );
                assert_eq!(b.implies(x, y) == b.top(), b.leq(x, y));
            }
        }
    }

    #[test]
    fn labels_and_cap() {
        let b = boolean_algebra(2, &Limits::default()).unwrap();
        let names: Vec<String> = (0..4).map(|x| b.label(x)).collect();
        assert_eq!(names, ["0", "p", "q", "1"]);
        assert_eq!(boolean_algebra(0, &Limits::default()).unwrap().size(), 1);
        assert!(boolean_algebra(17, &Limits::default()).is_err());
    }
}
