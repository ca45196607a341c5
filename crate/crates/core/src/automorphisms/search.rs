//! Backtracking search for isomorphisms between finite structures given by
//! binary operation tables.
//!
//! Each structure is a set of (possibly partial) binary tables over the same
//! index set and a list of distinguished constants. A map is an isomorphism
//! when it is a bijection sending constants to constants and every table
//! entry, defined or not, to the corresponding entry. Assignments are
//! propagated through the tables, so in a cubic algebra the images of the
//! minimal elements determine everything.

use crate::constructions::ImplicationAlgebra;
use crate::cubic::{CubicAlgebra, UNDEFINED};

#[derive(Clone, Debug)]
pub struct Structure {
    size: usize,
    ops: Vec<Vec<u32>>,
    constants: Vec<usize>,
    invariant: Vec<Vec<u32>>,
}

impl Structure {
    pub fn new(size: usize, ops: Vec<Vec<u32>>, constants: Vec<usize>) -> Self {
        for op in &ops {
            assert_eq!(op.len(), size * size);
        }
        let invariant = (0..size)
            .map(|x| {
                let mut v = Vec::new();
                for op in &ops {
                    let row = &op[x * size..(x + 1) * size];
                    v.push(row.iter().filter(|&&e| e != UNDEFINED).count() as u32);
                    v.push((0..size).filter(|&y| op[y * size + x] != UNDEFINED).count() as u32);
                    v.push(row.iter().filter(|&&e| e as usize == x).count() as u32);
                    v.push(
                        (0..size)
                            .filter(|&y| op[y * size + x] as usize == x)
                            .count() as u32,
                    );
                    v.push(u32::from(op[x * size + x] as usize == x));
                }
                v.push(
                    constants
                        .iter()
                        .position(|&c| c == x)
                        .map_or(0, |i| i as u32 + 1),
                );
                v
            })
            .collect();
        Structure {
            size,
            ops,
            constants,
            invariant,
        }
    }

    /// Join and `Δ` tables with the top as constant.
    pub fn cubic(alg: &CubicAlgebra) -> Self {
        Self::new(
            alg.size(),
            vec![
                alg.order().join_table().to_vec(),
                alg.delta_table().to_vec(),
            ],
            vec![alg.one()],
        )
    }

    /// The implication table with the top as constant.
    pub fn implication(alg: &ImplicationAlgebra) -> Self {
        let n = alg.size();
        let table = (0..n * n)
            .map(|i| alg.implies(i / n, i % n) as u32)
            .collect();
        Self::new(n, vec![table], vec![alg.one()])
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Decision order: constants, then elements with the rarest invariants,
    /// ties by index.
    fn decision_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.size).collect();
        let count = |x: usize| {
            self.invariant
                .iter()
                .filter(|v| **v == self.invariant[x])
                .count()
        };
        order.sort_by_key(|&x| (!self.constants.contains(&x), count(x), x));
        order
    }
}

struct Search<'a> {
    a: &'a Structure,
    b: &'a Structure,
    map: Vec<usize>,
    used: Vec<bool>,
    trail: Vec<usize>,
    order: Vec<usize>,
    found: Vec<Vec<usize>>,
    limit: usize,
}

const FREE: usize = usize::MAX;

impl Search<'_> {
    /// Assigns `x ↦ y` and everything it forces; on conflict the partial
    /// assignments stay on the trail for the caller to undo.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let n = self.a.size;
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            if self.map[x] != FREE {
                if self.map[x] != y {
                    return false;
                }
                continue;
            }
            if self.used[y] || self.a.invariant[x] != self.b.invariant[y] {
                return false;
            }
            self.map[x] = y;
            self.used[y] = true;
            self.trail.push(x);
            for i in 0..self.trail.len() {
                let z = self.trail[i];
                let fz = self.map[z];
                for (opa, opb) in self.a.ops.iter().zip(&self.b.ops) {
                    for (u, v, fu, fv) in [(x, z, y, fz), (z, x, fz, y)] {
                        let s = opa[u * n + v];
                        let t = opb[fu * n + fv];
                        match (s == UNDEFINED, t == UNDEFINED) {
                            (true, true) => {}
                            (false, false) => queue.push((s as usize, t as usize)),
                            _ => return false,
                        }
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for x in self.trail.drain(mark..) {
            self.used[self.map[x]] = false;
            self.map[x] = FREE;
        }
    }

    fn run(&mut self, depth: usize) {
        if self.found.len() >= self.limit {
            return;
        }
        let Some(pos) = (depth..self.order.len()).find(|&i| self.map[self.order[i]] == FREE) else {
            self.found.push(self.map.clone());
            return;
        };
        let x = self.order[pos];
        for y in 0..self.b.size {
            if self.used[y] || self.a.invariant[x] != self.b.invariant[y] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(x, y) {
                self.run(pos + 1);
            }
            self.undo(mark);
            if self.found.len() >= self.limit {
                return;
            }
        }
    }
}

/// Up to `limit` isomorphisms from `a` to `b`, sorted lexicographically.
pub fn isomorphisms(a: &Structure, b: &Structure, limit: usize) -> Vec<Vec<usize>> {
    if a.size != b.size || a.ops.len() != b.ops.len() || a.constants.len() != b.constants.len() {
        return Vec::new();
    }
    let mut ia: Vec<&Vec<u32>> = a.invariant.iter().collect();
    let mut ib: Vec<&Vec<u32>> = b.invariant.iter().collect();
    ia.sort();
    ib.sort();
    if ia != ib {
        return Vec::new();
    }
    let n = a.size;
    let mut s = Search {
        a,
        b,
        map: vec![FREE; n],
        used: vec![false; n],
        trail: Vec::new(),
        order: a.decision_order(),
        found: Vec::new(),
        limit,
    };
    let constants_ok = a
        .constants
        .iter()
        .zip(&b.constants)
        .all(|(&c, &d)| s.assign(c, d));
    if constants_ok {
        s.run(0);
    }
    let mut found = s.found;
    found.retain(|m| is_isomorphism(a, b, m));
    found.sort();
    found
}

pub fn find_isomorphism(a: &Structure, b: &Structure) -> Option<Vec<usize>> {
    isomorphisms(a, b, 1).into_iter().next()
}

/// All automorphisms, sorted lexicographically; the identity is first.
pub fn automorphisms(a: &Structure) -> Vec<Vec<usize>> {
    isomorphisms(a, a, usize::MAX)
}

/// Full check of a candidate map.
pub fn is_isomorphism(a: &Structure, b: &Structure, map: &[usize]) -> bool {
    let n = a.size;
    if map.len() != n || b.size != n {
        return false;
    }
    let mut used = vec![false; n];
    for &y in map {
        if y >= n || used[y] {
            return false;
        }
        used[y] = true;
    }
    if a.constants
        .iter()
        .zip(&b.constants)
        .any(|(&c, &d)| map[c] != d)
    {
        return false;
    }
    a.ops.iter().zip(&b.ops).all(|(opa, opb)| {
        (0..n).all(|x| {
            (0..n).all(|y| {
                let s = opa[x * n + y];
                let t = opb[map[x] * n + map[y]];
                if s == UNDEFINED {
                    t == UNDEFINED
                } else {
                    t != UNDEFINED && map[s as usize] == t as usize
                }
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn small_groups() {
        assert_eq!(
            automorphisms(&Structure::cubic(&corpus::singleton())).len(),
            1
        );
        assert_eq!(
            automorphisms(&Structure::cubic(&corpus::c1().algebra)).len(),
            2
        );
        assert_eq!(
            automorphisms(&Structure::cubic(&corpus::c2().algebra)).len(),
            8
        );
        let auts = automorphisms(&Structure::cubic(&corpus::c2().algebra));
        assert_eq!(auts[0], (0..9).collect::<Vec<_>>());
    }

    #[test]
    fn non_isomorphic() {
        let c2 = Structure::cubic(&corpus::c2().algebra);
        let n5 = Structure::cubic(&corpus::n5().algebra);
        assert_eq!(find_isomorphism(&c2, &n5), None);
        let b2 = Structure::implication(&corpus::c2().base);
        assert_eq!(automorphisms(&b2).len(), 2);
    }
}
