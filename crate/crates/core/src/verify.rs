//! Z_C-inequality verification campaigns.
//!
//! A campaign applies an operator to every member of a seeded corpus, counts
//! zeros exactly before and after, and records each instance where the
//! non-real count exceeds the allowed budget. Corpus members may be checked
//! concurrently; results are always reported in corpus order.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bases::BasisFamily;
use crate::corpus::{CorpusPoly, CorpusSpec, GENERATOR};
use crate::error::Result;
use crate::operators::{three_factor_op, LaguerreOp, PolyMap};
use crate::poly::Poly;
use crate::rational::{self, Rational};
use crate::sequences::{diagonal_apply, SequenceSpec};
use crate::zeros::{zero_counts, ZeroCount};

/// How many non-real zeros the image may have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "rule", content = "slack")]
pub enum Budget {
    /// `Z_C(L p) ≤ Z_C(p)`.
    NonIncreasing,
    /// `Z_C(L p) ≤ Z_C(p) + slack`.
    Slack(usize),
}

impl Budget {
    fn allowed(&self, before: &ZeroCount) -> usize {
        match self {
            Budget::NonIncreasing => before.nonreal,
            Budget::Slack(s) => before.nonreal + s,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub index: usize,
    pub input: Poly,
    /// Further operands (the `q`, `r` of pair and triple campaigns).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub aux: Vec<Poly>,
    pub output: Poly,
    pub before: ZeroCount,
    pub after: ZeroCount,
    pub allowed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<SequenceSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<BasisFamily>,
    pub generator: &'static str,
    pub seed: u64,
    pub checked: usize,
    /// Corpus members whose exact zero count disagreed with their
    /// construction. Always zero unless the counting path is broken.
    pub construction_mismatches: usize,
    pub violations: Vec<Violation>,
    /// Wall-clock time; left out of the JSON so reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.construction_mismatches == 0
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: checked {} (seed {}, {}), {} violation(s), {} construction mismatch(es), {:.2?}",
            self.label,
            self.checked,
            self.seed,
            self.generator,
            self.violations.len(),
            self.construction_mismatches,
            self.elapsed
        )
    }
}

struct Outcome {
    violation: Option<Violation>,
    mismatch: bool,
}

#[cfg(feature = "parallel")]
fn map_indexed<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_indexed<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    (0..n).map(f).collect()
}

fn counted(item: &CorpusPoly) -> (ZeroCount, bool) {
    let zc = zero_counts(&item.poly);
    (zc, zc != item.expected)
}

fn finish(label: String, seed: u64, outcomes: Vec<Outcome>, started: Instant) -> VerifyReport {
    let checked = outcomes.len();
    let construction_mismatches = outcomes.iter().filter(|o| o.mismatch).count();
    let violations = outcomes.into_iter().filter_map(|o| o.violation).collect();
    VerifyReport {
        label,
        spec: None,
        basis: None,
        generator: GENERATOR,
        seed,
        checked,
        construction_mismatches,
        violations,
        elapsed: started.elapsed(),
    }
}

/// Checks `Z_C(op(p))` against `budget` on every corpus member.
pub fn verify_czdo(
    label: impl Into<String>,
    op: &dyn PolyMap,
    corpus: &CorpusSpec,
    budget: Budget,
) -> VerifyReport {
    let started = Instant::now();
    let items = corpus.generate();
    let outcomes = map_indexed(items.len(), |i| {
        let item = &items[i];
        let (before, mismatch) = counted(item);
        let output = op.apply(&item.poly);
        let after = zero_counts(&output);
        let allowed = budget.allowed(&before);
        let violation = (after.nonreal > allowed).then(|| Violation {
            index: item.index,
            input: item.poly.clone(),
            aux: Vec::new(),
            output,
            before,
            after,
            allowed,
        });
        Outcome {
            violation,
            mismatch,
        }
    });
    finish(label.into(), corpus.seed, outcomes, started)
}

/// Runs the diagonal operator of `spec` in `family` over the corpus with the
/// non-increasing budget.
pub fn verify_sequence(
    spec: &SequenceSpec,
    family: &BasisFamily,
    corpus: &CorpusSpec,
) -> Result<VerifyReport> {
    spec.validate()?;
    family.validate()?;
    // Fail on bad input up front rather than inside the worker pool.
    diagonal_apply(spec, family, &Poly::one())?;
    let op = |p: &Poly| diagonal_apply(spec, family, p).expect("validated family and spec");
    let mut report = verify_czdo(
        format!("{spec} on {family}"),
        &op,
        corpus,
        Budget::NonIncreasing,
    );
    report.spec = Some(spec.clone());
    report.basis = Some(family.clone());
    Ok(report)
}

/// `Z_C(q p' + α q' p) ≤ Z_C(p) + Z_C(q)` over paired corpora; pair `i`
/// takes member `i` of each.
pub fn verify_laguerre_pairs(
    alpha: &Rational,
    p_corpus: &CorpusSpec,
    q_corpus: &CorpusSpec,
) -> VerifyReport {
    let started = Instant::now();
    let ps = p_corpus.generate();
    let qs = q_corpus.generate();
    let n = ps.len().min(qs.len());
    let outcomes = map_indexed(n, |i| {
        let (p, q) = (&ps[i], &qs[i]);
        let (before, mis_p) = counted(p);
        let (q_counts, mis_q) = counted(q);
        let output = LaguerreOp {
            q: q.poly.clone(),
            alpha: alpha.clone(),
        }
        .apply(&p.poly);
        let after = zero_counts(&output);
        let allowed = before.nonreal + q_counts.nonreal;
        let violation = (after.nonreal > allowed).then(|| Violation {
            index: i,
            input: p.poly.clone(),
            aux: vec![q.poly.clone()],
            output,
            before,
            after,
            allowed,
        });
        Outcome {
            violation,
            mismatch: mis_p || mis_q,
        }
    });
    let label = format!("q p' + {} q' p", rational::to_string(alpha));
    finish(label, p_corpus.seed, outcomes, started)
}

/// `Z_C(p q r' + α p' q r + β p q' r) ≤ Z_C(p) + Z_C(q) + Z_C(r)`.
pub fn verify_three_factor(
    alpha: &Rational,
    beta: &Rational,
    corpora: [&CorpusSpec; 3],
) -> VerifyReport {
    let started = Instant::now();
    let [ps, qs, rs] = corpora.map(CorpusSpec::generate);
    let n = ps.len().min(qs.len()).min(rs.len());
    let outcomes = map_indexed(n, |i| {
        let (p, q, r) = (&ps[i], &qs[i], &rs[i]);
        let (before, mis_p) = counted(p);
        let (zq, mis_q) = counted(q);
        let (zr, mis_r) = counted(r);
        let output = three_factor_op(&p.poly, &q.poly, &r.poly, alpha, beta);
        let after = zero_counts(&output);
        let allowed = before.nonreal + zq.nonreal + zr.nonreal;
        let violation = (after.nonreal > allowed).then(|| Violation {
            index: i,
            input: p.poly.clone(),
            aux: vec![q.poly.clone(), r.poly.clone()],
            output,
            before,
            after,
            allowed,
        });
        Outcome {
            violation,
            mismatch: mis_p || mis_q || mis_r,
        }
    });
    let label = format!(
        "p q r' + {} p' q r + {} p q' r",
        rational::to_string(alpha),
        rational::to_string(beta)
    );
    finish(label, corpora[0].seed, outcomes, started)
}
