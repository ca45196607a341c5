//! The JSON table format for algebras and quotients.
//!
//! ```json
//! {"carrier": 3, "one": 2,
//!  "leq":   [[1,0,1],[0,1,1],[0,0,1]],
//!  "join":  [[0,2,2],[2,1,2],[2,2,2]],
//!  "delta": [[0,-1,-1],[-1,1,-1],[1,0,2]],
//!  "labels": ["0","1","2"]}
//! ```
//!
//! Matrices are row-major; `delta[y][x]` holds `Δ(y, x)` and `-1` marks an
//! undefined entry. Quotients carry `implies` instead of `delta` and a
//! `classes` array of sorted member lists.

use serde::{Deserialize, Serialize};

use crate::cubic::{CubicAlgebra, JoinSemilattice, Validity, UNDEFINED};
use crate::error::{Error, Result};
use crate::functors::quotient::Quotient;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub carrier: usize,
    pub one: usize,
    pub leq: Vec<Vec<u8>>,
    pub join: Vec<Vec<usize>>,
    pub delta: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientJson {
    pub carrier: usize,
    pub one: usize,
    pub leq: Vec<Vec<u8>>,
    pub join: Vec<Vec<usize>>,
    pub implies: Vec<Vec<usize>>,
    pub classes: Vec<Vec<usize>>,
}

fn matrix<T>(n: usize, f: impl Fn(usize, usize) -> T) -> Vec<Vec<T>> {
    (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect()
}

impl AlgebraJson {
    pub fn from_algebra(alg: &CubicAlgebra) -> Self {
        let n = alg.size();
        AlgebraJson {
            carrier: n,
            one: alg.one(),
            leq: matrix(n, |x, y| alg.leq(x, y) as u8),
            join: matrix(n, |x, y| alg.join(x, y)),
            delta: matrix(n, |y, x| alg.delta(y, x).map_or(-1, |d| d as i64)),
            labels: Some(alg.labels().to_vec()),
        }
    }

    /// Checks the shapes and the semilattice tables and returns the algebra
    /// without enforcing the cubic axioms, so that a model checker can report
    /// on it.
    pub fn to_algebra(&self) -> Result<CubicAlgebra> {
        let n = self.carrier;
        let schema = |msg: String| Err(Error::Schema(msg));
        if n == 0 {
            return schema("carrier must be positive".into());
        }
        for (name, rows) in [
            ("leq", self.leq.iter().map(Vec::len).collect::<Vec<_>>()),
            ("join", self.join.iter().map(Vec::len).collect()),
            ("delta", self.delta.iter().map(Vec::len).collect()),
        ] {
            if rows.len() != n || rows.iter().any(|&r| r != n) {
                return schema(format!("{name} must be a {n}×{n} matrix"));
            }
        }
        if self.one >= n {
            return schema(format!("one = {} out of range", self.one));
        }
        if let Some(v) = self.leq.iter().flatten().find(|&&v| v > 1) {
            return schema(format!("leq entries must be 0 or 1, found {v}"));
        }
        if let Some(labels) = &self.labels {
            if labels.len() != n {
                return schema(format!("{} labels for a carrier of {n}", labels.len()));
            }
        }
        let mut join = Vec::with_capacity(n * n);
        for &j in self.join.iter().flatten() {
            if j >= n {
                return schema(format!("join entry {j} out of range"));
            }
            join.push(j as u32);
        }
        let mut delta = Vec::with_capacity(n * n);
        for &d in self.delta.iter().flatten() {
            match d {
                -1 => delta.push(UNDEFINED),
                d if (0..n as i64).contains(&d) => delta.push(d as u32),
                d => return schema(format!("delta entry {d} out of range")),
            }
        }
        let order =
            JoinSemilattice::from_tables_unchecked(n, |x, y| self.leq[x][y] == 1, join, self.one);
        order.validate().map_err(|e| Error::Schema(e.to_string()))?;
        CubicAlgebra::from_parts(order, delta, self.labels.clone(), Validity::Raw)
    }
}

impl QuotientJson {
    pub fn from_quotient(q: &Quotient) -> Self {
        let a = &q.algebra;
        let n = a.size();
        QuotientJson {
            carrier: n,
            one: a.one(),
            leq: matrix(n, |x, y| a.leq(x, y) as u8),
            join: matrix(n, |x, y| a.join(x, y)),
            implies: matrix(n, |x, y| a.implies(x, y)),
            classes: q.classes().to_vec(),
        }
    }
}

/// Canonical single-line serialization.
pub fn to_json(alg: &CubicAlgebra) -> String {
    serde_json::to_string(&AlgebraJson::from_algebra(alg)).expect("plain data serializes")
}

pub fn quotient_to_json(q: &Quotient) -> String {
    serde_json::to_string(&QuotientJson::from_quotient(q)).expect("plain data serializes")
}

/// Parses and shape-checks an algebra. Axioms are not enforced.
pub fn from_json(text: &str) -> Result<CubicAlgebra> {
    let raw: AlgebraJson = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    raw.to_algebra()
}
