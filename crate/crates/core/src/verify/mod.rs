//! The claim suite: each registered claim is re-checked exhaustively on a
//! finite algebra (or, for corpus-level claims, on a fixed family) and
//! reported as one [`Outcome`] per instance.

mod checks;
pub mod claims;

use std::cell::OnceCell;

use serde::{Deserialize, Serialize};

pub use claims::{claim, Claim, Scope, CLAIMS};

use crate::automorphisms::{enumerate_aut, inner_subgroup};
use crate::corpus::{self, NamedAlgebra};
use crate::cubic::axioms::{check_cubic_axioms, check_mr_axiom};
use crate::cubic::CubicAlgebra;
use crate::error::{Error, Result};
use crate::filters::{all_filters, gfilters, is_f_boolean, Filter};
use crate::functors::quotient::{quotient_c, Quotient};
use crate::limits::Limits;
use crate::report::WitnessPolicy;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check ran and contradicts an informal remark rather than a
    /// stated result; it does not fail the suite.
    Finding,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub claim_id: String,
    pub instance: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Whether no outcome failed.
pub fn all_pass(outcomes: &[Outcome]) -> bool {
    outcomes.iter().all(|o| o.status != Status::Fail)
}

#[derive(Debug)]
pub(crate) enum Verdict {
    NotApplicable,
    Pass,
    Fail(Vec<usize>, String),
    Finding(Vec<usize>, String),
}

/// A check that could not complete; reported as a failure.
#[derive(Debug)]
pub(crate) struct Broken(pub String);

impl From<Error> for Broken {
    fn from(e: Error) -> Self {
        Broken(e.to_string())
    }
}

pub(crate) type Check = std::result::Result<Verdict, Broken>;

type Cached<T> = OnceCell<std::result::Result<T, String>>;

/// Lazily computed structure shared by the checks on one algebra.
pub(crate) struct Ctx<'a> {
    pub alg: &'a CubicAlgebra,
    pub seed: u64,
    pub limits: &'a Limits,
    cubic: OnceCell<bool>,
    mr: OnceCell<bool>,
    quotient: Cached<Quotient>,
    auts: Cached<Vec<Vec<usize>>>,
    inner: Cached<Vec<Vec<usize>>>,
    gfilters: OnceCell<Vec<Filter>>,
    boolean_filters: Cached<Vec<Filter>>,
}

fn cached<T>(cell: &Cached<T>, f: impl FnOnce() -> Result<T>) -> std::result::Result<&T, Broken> {
    cell.get_or_init(|| f().map_err(|e| e.to_string()))
        .as_ref()
        .map_err(|e| Broken(e.clone()))
}

impl<'a> Ctx<'a> {
    pub fn new(alg: &'a CubicAlgebra, seed: u64, limits: &'a Limits) -> Self {
        Ctx {
            alg,
            seed,
            limits,
            cubic: OnceCell::new(),
            mr: OnceCell::new(),
            quotient: OnceCell::new(),
            auts: OnceCell::new(),
            inner: OnceCell::new(),
            gfilters: OnceCell::new(),
            boolean_filters: OnceCell::new(),
        }
    }

    pub fn is_cubic(&self) -> bool {
        *self.cubic.get_or_init(|| {
            check_cubic_axioms(self.alg, WitnessPolicy::First).is_ok_and(|r| r.passed)
        })
    }

    pub fn is_mr(&self) -> bool {
        *self.mr.get_or_init(|| {
            self.is_cubic() && check_mr_axiom(self.alg, WitnessPolicy::First).passed
        })
    }

    pub fn quotient(&self) -> std::result::Result<&Quotient, Broken> {
        cached(&self.quotient, || quotient_c(self.alg))
    }

    pub fn auts(&self) -> std::result::Result<&Vec<Vec<usize>>, Broken> {
        cached(&self.auts, || enumerate_aut(self.alg, self.limits))
    }

    pub fn inner(&self) -> std::result::Result<&Vec<Vec<usize>>, Broken> {
        let auts = self.auts()?;
        cached(&self.inner, || Ok(inner_subgroup(self.alg, auts)))
    }

    pub fn gfilters(&self) -> &[Filter] {
        self.gfilters.get_or_init(|| gfilters(self.alg))
    }

    /// The `𝖢(M)`-Boolean filters of the quotient.
    pub fn boolean_filters(&self) -> std::result::Result<&Vec<Filter>, Broken> {
        let q = self.quotient()?;
        cached(&self.boolean_filters, || {
            let order = q.algebra.order();
            let whole = crate::automorphisms::recovery::whole_quotient(q)?;
            let mut out = Vec::new();
            for g in all_filters(order) {
                if is_f_boolean(order, &g, &whole)? {
                    out.push(g);
                }
            }
            Ok(out)
        })
    }
}

fn outcome(
    id: &str,
    instance: &str,
    verdict: std::result::Result<Verdict, Broken>,
) -> Option<Outcome> {
    let (status, witness, note) = match verdict {
        Ok(Verdict::NotApplicable) => return None,
        Ok(Verdict::Pass) => (Status::Pass, None, None),
        Ok(Verdict::Fail(w, n)) => (Status::Fail, Some(w), Some(n)),
        Ok(Verdict::Finding(w, n)) => (Status::Finding, Some(w), Some(n)),
        Err(Broken(n)) => (Status::Fail, None, Some(n)),
    };
    Some(Outcome {
        claim_id: id.to_string(),
        instance: instance.to_string(),
        status,
        witness: witness.filter(|w| !w.is_empty()),
        note,
    })
}

/// Resolves a claim filter; an empty filter selects every claim.
pub fn select(ids: &[String]) -> Result<Vec<&'static Claim>> {
    if ids.is_empty() {
        return Ok(CLAIMS.iter().collect());
    }
    let mut out = Vec::new();
    for id in ids {
        let found: Vec<&Claim> = CLAIMS.iter().filter(|c| c.id == id).collect();
        if found.is_empty() {
            return Err(Error::Schema(format!("unknown claim id {id}")));
        }
        out.extend(found);
    }
    Ok(out)
}

/// Runs the per-algebra claims in `claims` on one algebra.
pub fn verify_algebra(
    name: &str,
    alg: &CubicAlgebra,
    claims: &[&Claim],
    seed: u64,
    limits: &Limits,
) -> Result<Vec<Outcome>> {
    limits.check_carrier("verification", alg.size())?;
    let ctx = Ctx::new(alg, seed, limits);
    Ok(claims
        .iter()
        .filter(|c| c.scope == Scope::Algebra)
        .filter_map(|c| outcome(c.id, name, checks::run_algebra(c, &ctx)))
        .collect())
}

/// The corpus algebras used by [`verify_corpus`].
pub fn corpus_algebras(seed: u64) -> Vec<NamedAlgebra> {
    corpus::standard(seed, 3)
}

/// Runs `claims` over the built-in corpus: per-algebra claims on every corpus
/// algebra, then the corpus-level claims.
pub fn verify_corpus(claims: &[&Claim], seed: u64, limits: &Limits) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for named in corpus_algebras(seed) {
        out.extend(verify_algebra(
            &named.name,
            &named.algebra,
            claims,
            seed,
            limits,
        )?);
    }
    for c in claims.iter().filter(|c| c.scope == Scope::Corpus) {
        for (instance, verdict) in checks::run_corpus(c, seed, limits) {
            out.extend(outcome(c.id, &instance, verdict));
        }
    }
    Ok(out)
}

/// One line per outcome: `PASS lem:fixed C2`.
pub fn render_text(outcomes: &[Outcome]) -> String {
    let mut s = String::new();
    for o in outcomes {
        let status = match o.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Finding => "FINDING",
        };
        s.push_str(&format!("{status} {} {}", o.claim_id, o.instance));
        if let Some(w) = &o.witness {
            s.push_str(&format!(" witness={w:?}"));
        }
        if let Some(n) = &o.note {
            s.push_str(&format!(" ({n})"));
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_fixed_passes() {
        let claims = select(&["lem:fixed".to_string()]).unwrap();
        let out =
            verify_algebra("C2", &corpus::c2().algebra, &claims, 0, &Limits::default()).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].status, Status::Pass);
    }

    #[test]
    fn unknown_claim() {
        assert!(matches!(
            select(&["lem:nope".to_string()]),
            Err(Error::Schema(_))
        ));
    }
}
