//! Executable claim registry and exhaustive checker.
//!
//! Every registered claim is a predicate over a space and zero, one or two
//! quantified subsets. [`check`] decides one claim on one space by brute
//! force over all subset tuples and reports the minimal counterexample if
//! any; [`check_all`] aggregates over a stream of spaces, in parallel but
//! with byte-identical output regardless of thread count.
//!
//! Witness minimality orders tuples by (number of components equal to ∅ or
//! X, total popcount, lexicographic mask tuple), so the reported witness is
//! the smallest non-degenerate counterexample when one exists.

pub mod coverage;
pub mod ctx;
mod registry;

pub use registry::registry;

use std::fmt::Write as _;

use rayon::prelude::*;
use thiserror::Error;

use crate::classes::DeltaClosureMode;
use crate::sets::Subset;
use crate::space::InfraSpace;

use ctx::SpaceCtx;

/// How the checker treats a claim's outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    /// Provable from the constructions; a failure anywhere is an engine bug.
    Forced,
    /// Decided empirically by the sweep.
    Check,
    /// Pinned counterexample exists; must fail somewhere on a full universe.
    KnownFail,
}

impl Expectation {
    pub fn label(self) -> &'static str {
        match self {
            Expectation::Forced => "FORCED",
            Expectation::Check => "CHECK",
            Expectation::KnownFail => "KNOWN-FAIL",
        }
    }
}

/// One registered claim.
pub struct TheoremEntry {
    pub id: String,
    /// Operator-notation form of the claim, for reports.
    pub statement: String,
    /// Number of quantified subsets (0, 1 or 2); unused predicate slots
    /// receive ∅.
    pub arity: u8,
    pub expectation: Expectation,
    pub predicate: Box<dyn Fn(&SpaceCtx, Subset, Subset) -> bool + Send + Sync>,
}

impl std::fmt::Debug for TheoremEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TheoremEntry")
            .field("id", &self.id)
            .field("statement", &self.statement)
            .field("arity", &self.arity)
            .field("expectation", &self.expectation)
            .finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictStatus {
    Pass,
    Fail,
}

impl VerdictStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictStatus::Pass => "pass",
            VerdictStatus::Fail => "fail",
        }
    }
}

/// Outcome of one claim on one space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub theorem_id: String,
    /// Canonical rendering of the space's open family.
    pub space: String,
    pub status: VerdictStatus,
    /// Minimal counterexample tuples; empty exactly when the status is pass.
    pub witnesses: Vec<Vec<Subset>>,
    /// The same tuples rendered with element names.
    pub witnesses_rendered: Vec<Vec<String>>,
    /// Number of subset tuples instantiated.
    pub checked_count: u64,
}

impl TheoremVerdict {
    /// One-line JSON form: `{theorem, space_opens, status, witnesses, checked}`.
    pub fn jsonl_line(&self) -> String {
        serde_json::json!({
            "theorem": self.theorem_id,
            "space_opens": self.space,
            "status": self.status.as_str(),
            "witnesses": self.witnesses_rendered,
            "checked": self.checked_count,
        })
        .to_string()
    }
}

/// A provable claim failed: the engine itself is broken.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("forced claim {theorem} failed on {space} with witness ({})", witness.join(","))]
pub struct ForcedInvariantViolated {
    pub theorem: String,
    pub space: String,
    pub witness: Vec<String>,
}

/// First failure seen for a claim during an aggregate run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailExample {
    pub space: String,
    pub witness: Vec<Subset>,
    pub witness_rendered: Vec<String>,
}

/// Aggregate outcome of one claim over a stream of spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryReport {
    pub theorem_id: String,
    pub statement: String,
    pub expectation: Expectation,
    pub spaces_passed: u64,
    pub spaces_failed: u64,
    pub checked_count: u64,
    pub first_fail: Option<FailExample>,
}

impl EntryReport {
    pub fn status(&self) -> VerdictStatus {
        if self.spaces_failed == 0 {
            VerdictStatus::Pass
        } else {
            VerdictStatus::Fail
        }
    }

    /// One-line JSON form matching [`TheoremVerdict::jsonl_line`]; the space
    /// and witness come from the first failing space, or are empty on pass.
    pub fn jsonl_line(&self) -> String {
        let (space, witnesses) = match &self.first_fail {
            Some(f) => (f.space.clone(), vec![f.witness_rendered.clone()]),
            None => (String::new(), Vec::new()),
        };
        serde_json::json!({
            "theorem": self.theorem_id,
            "space_opens": space,
            "status": self.status().as_str(),
            "witnesses": witnesses,
            "checked": self.checked_count,
        })
        .to_string()
    }
}

/// Aggregate outcome of a claim registry over a stream of spaces, in
/// registry order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub entries: Vec<EntryReport>,
}

impl CheckReport {
    pub fn jsonl(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&e.jsonl_line());
            out.push('\n');
        }
        out
    }

    pub fn table(&self) -> String {
        let id_w = self.entries.iter().map(|e| e.theorem_id.len()).max().unwrap_or(0);
        let mut out = String::new();
        for e in &self.entries {
            let _ = write!(
                out,
                "{:4}  {:10}  {:id_w$}  spaces {}/{}  checked {}",
                e.status().as_str(),
                e.expectation.label(),
                e.theorem_id,
                e.spaces_passed,
                e.spaces_passed + e.spaces_failed,
                e.checked_count,
            );
            if let Some(f) = &e.first_fail {
                let _ = write!(out, "  witness ({}) on {}", f.witness_rendered.join(","), f.space);
            }
            out.push('\n');
        }
        out
    }

    /// Ids of KNOWN-FAIL entries that did not fail anywhere in the run.
    pub fn unfailed_known_fails(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|e| e.expectation == Expectation::KnownFail && e.spaces_failed == 0)
            .map(|e| e.theorem_id.as_str())
            .collect()
    }

    /// Whether any CHECK entry failed (drives the strict exit code).
    pub fn any_check_failure(&self) -> bool {
        self.entries
            .iter()
            .any(|e| e.expectation == Expectation::Check && e.spaces_failed > 0)
    }
}

/// Witness ordering key: degenerate components (∅ or X) first, then total
/// popcount, then the mask tuple itself.
fn witness_key(full: Subset, tuple: &[Subset]) -> (u32, u32, Vec<u32>) {
    let degenerate = tuple.iter().filter(|s| s.is_empty() || **s == full).count() as u32;
    let popcount: u32 = tuple.iter().map(|s| s.len()).sum();
    (degenerate, popcount, tuple.iter().map(|s| s.bits()).collect())
}

/// Decide one claim on one space by full instantiation.
pub fn check(ctx: &SpaceCtx, entry: &TheoremEntry) -> TheoremVerdict {
    let full = ctx.full();
    let subsets: u32 = 1u32 << ctx.size();
    let mut checked: u64 = 0;
    let mut best: Option<(Vec<Subset>, (u32, u32, Vec<u32>))> = None;
    let mut consider = |tuple: Vec<Subset>| {
        let key = witness_key(full, &tuple);
        if best.as_ref().map_or(true, |(_, k)| key < *k) {
            best = Some((tuple, key));
        }
    };
    match entry.arity {
        0 => {
            checked = 1;
            if !(entry.predicate)(ctx, Subset::EMPTY, Subset::EMPTY) {
                consider(Vec::new());
            }
        }
        1 => {
            for a in 0..subsets {
                let a = Subset::from_bits(a);
                checked += 1;
                if !(entry.predicate)(ctx, a, Subset::EMPTY) {
                    consider(vec![a]);
                }
            }
        }
        2 => {
            for a in 0..subsets {
                for b in 0..subsets {
                    let (a, b) = (Subset::from_bits(a), Subset::from_bits(b));
                    checked += 1;
                    if !(entry.predicate)(ctx, a, b) {
                        consider(vec![a, b]);
                    }
                }
            }
        }
        other => panic!("unsupported claim arity {other}"),
    }
    let witnesses: Vec<Vec<Subset>> = best.map(|(t, _)| t).into_iter().collect();
    let witnesses_rendered = witnesses
        .iter()
        .map(|t| t.iter().map(|s| ctx.ground().render(*s)).collect())
        .collect();
    TheoremVerdict {
        theorem_id: entry.id.clone(),
        space: ctx.space().opens().render(ctx.ground()),
        status: if witnesses.is_empty() { VerdictStatus::Pass } else { VerdictStatus::Fail },
        witnesses,
        witnesses_rendered,
        checked_count: checked,
    }
}

/// Convenience wrapper that builds the operator tables first.
pub fn check_space(
    space: &InfraSpace,
    entry: &TheoremEntry,
    mode: DeltaClosureMode,
) -> TheoremVerdict {
    let ctx = SpaceCtx::with_mode(space.clone(), mode);
    check(&ctx, entry)
}

/// Decide every claim on every space and aggregate per claim.
///
/// Spaces fan out across the current rayon pool; verdicts are merged back in
/// input order, so the report is identical for any thread count. A FORCED
/// claim failing anywhere aborts with [`ForcedInvariantViolated`].
pub fn check_all(
    spaces: &[InfraSpace],
    entries: &[TheoremEntry],
    mode: DeltaClosureMode,
) -> Result<CheckReport, ForcedInvariantViolated> {
    let per_space: Vec<Vec<TheoremVerdict>> = spaces
        .par_iter()
        .map(|s| {
            let ctx = SpaceCtx::with_mode(s.clone(), mode);
            entries.iter().map(|e| check(&ctx, e)).collect()
        })
        .collect();

    let mut report = CheckReport { entries: Vec::with_capacity(entries.len()) };
    for (i, entry) in entries.iter().enumerate() {
        let mut agg = EntryReport {
            theorem_id: entry.id.clone(),
            statement: entry.statement.clone(),
            expectation: entry.expectation,
            spaces_passed: 0,
            spaces_failed: 0,
            checked_count: 0,
            first_fail: None,
        };
        for verdicts in &per_space {
            let v = &verdicts[i];
            agg.checked_count += v.checked_count;
            match v.status {
                VerdictStatus::Pass => agg.spaces_passed += 1,
                VerdictStatus::Fail => {
                    agg.spaces_failed += 1;
                    if agg.first_fail.is_none() {
                        agg.first_fail = Some(FailExample {
                            space: v.space.clone(),
                            witness: v.witnesses[0].clone(),
                            witness_rendered: v.witnesses_rendered[0].clone(),
                        });
                    }
                }
            }
        }
        if entry.expectation == Expectation::Forced {
            if let Some(f) = &agg.first_fail {
                return Err(ForcedInvariantViolated {
                    theorem: entry.id.clone(),
                    space: f.space.clone(),
                    witness: f.witness_rendered.clone(),
                });
            }
        }
        report.entries.push(agg);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::{GroundSet, SetFamily};

    fn space(n: usize, opens: &[u32]) -> InfraSpace {
        let family = SetFamily::new(opens.iter().map(|m| Subset::from_bits(*m)));
        InfraSpace::new(GroundSet::alpha(n), family).unwrap()
    }

    fn ex41() -> InfraSpace {
        space(4, &[0, 1, 2, 5, 15])
    }

    fn s3() -> InfraSpace {
        space(3, &[0, 1, 2, 7])
    }

    fn entry<'a>(entries: &'a [TheoremEntry], id: &str) -> &'a TheoremEntry {
        entries.iter().find(|e| e.id == id).unwrap()
    }

    #[test]
    fn boundary_identity_passes_on_the_four_point_space() {
        let entries = registry();
        let ctx = SpaceCtx::new(ex41());
        let v = check(&ctx, entry(&entries, "T2.20.v"));
        assert_eq!(v.status, VerdictStatus::Pass);
        assert_eq!(v.checked_count, 16);
        assert!(v.witnesses.is_empty());
    }

    #[test]
    fn closure_fixed_point_converse_fails_with_the_pinned_witness() {
        let entries = registry();
        let ctx = SpaceCtx::new(s3());
        let v = check(&ctx, entry(&entries, "T2.16.i-converse"));
        assert_eq!(v.status, VerdictStatus::Fail);
        assert_eq!(v.witnesses, vec![vec![Subset::from_bits(0b100)]]);
        assert_eq!(v.witnesses_rendered, vec![vec!["{c}".to_string()]]);
    }

    #[test]
    fn interior_fixed_point_converse_fails_with_the_pinned_witness() {
        let entries = registry();
        let ctx = SpaceCtx::new(s3());
        let v = check(&ctx, entry(&entries, "T2.17.i-converse"));
        assert_eq!(v.status, VerdictStatus::Fail);
        assert_eq!(v.witnesses, vec![vec![Subset::from_bits(0b011)]]);
    }

    #[test]
    fn boundary_of_meet_fails_on_singletons_not_on_the_empty_set() {
        let entries = registry();
        let ctx = SpaceCtx::new(ex41());
        let v = check(&ctx, entry(&entries, "T2.19.ii"));
        assert_eq!(v.status, VerdictStatus::Fail);
        assert_eq!(
            v.witnesses,
            vec![vec![Subset::from_bits(0b01), Subset::from_bits(0b10)]]
        );
        assert_eq!(
            v.witnesses_rendered,
            vec![vec!["{a}".to_string(), "{b}".to_string()]]
        );
    }

    #[test]
    fn meets_of_closed_sets_fail_with_the_pinned_pair() {
        let entries = registry();
        let ctx = SpaceCtx::new(s3());
        let v = check(&ctx, entry(&entries, "T-ICS-INT"));
        assert_eq!(v.status, VerdictStatus::Fail);
        assert_eq!(
            v.witnesses,
            vec![vec![Subset::from_bits(0b101), Subset::from_bits(0b110)]]
        );
        assert_eq!(
            v.witnesses_rendered,
            vec![vec!["{a,c}".to_string(), "{b,c}".to_string()]]
        );
    }

    #[test]
    fn literal_meet_extension_law_fails_on_the_indiscrete_pair() {
        let entries = registry();
        let ctx = SpaceCtx::new(space(2, &[0b00, 0b11]));
        let v = check(&ctx, entry(&entries, "T2.18.v-literal"));
        assert_eq!(v.status, VerdictStatus::Fail);
        assert_eq!(
            v.witnesses,
            vec![vec![Subset::from_bits(0b01), Subset::from_bits(0b10)]]
        );
        let corrected = check(&ctx, entry(&entries, "T2.18.v-corrected"));
        assert_eq!(corrected.status, VerdictStatus::Pass);
    }

    #[test]
    fn aggregate_report_merges_in_registry_order() {
        let entries = registry();
        let spaces = vec![ex41()];
        let report = check_all(&spaces, &entries, DeltaClosureMode::RegularClosedMeet).unwrap();
        assert_eq!(report.entries.len(), entries.len());
        let meet = report.entries.iter().find(|e| e.theorem_id == "TH-AO-MEET").unwrap();
        assert_eq!(meet.status(), VerdictStatus::Pass);
        assert_eq!(meet.checked_count, 1);
        let bdy = report.entries.iter().find(|e| e.theorem_id == "T2.19.ii").unwrap();
        assert_eq!(bdy.spaces_failed, 1);
        assert_eq!(bdy.first_fail.as_ref().unwrap().witness_rendered, vec!["{a}", "{b}"]);
    }

    #[test]
    fn forced_failure_is_an_engine_error() {
        let bogus = TheoremEntry {
            id: "BOGUS".into(),
            statement: "int(A) = A".into(),
            arity: 1,
            expectation: Expectation::Forced,
            predicate: Box::new(|c, a, _| c.int(a) == a),
        };
        let err = check_all(&[s3()], &[bogus], DeltaClosureMode::RegularClosedMeet).unwrap_err();
        assert_eq!(err.theorem, "BOGUS");
        assert_eq!(err.witness, vec!["{c}".to_string()]);
    }

    #[test]
    fn jsonl_lines_are_stable() {
        let entries = registry();
        let ctx = SpaceCtx::new(s3());
        let v = check(&ctx, entry(&entries, "T2.16.i-converse"));
        assert_eq!(
            v.jsonl_line(),
            "{\"checked\":8,\"space_opens\":\"{{},{a},{b},{a,b,c}}\",\"status\":\"fail\",\
             \"theorem\":\"T2.16.i-converse\",\"witnesses\":[[\"{c}\"]]}"
        );
    }
}
