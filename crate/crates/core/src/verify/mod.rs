//! Exact verification of the main identity and its companions.
//!
//! Every check compares two exact values; there is no tolerance anywhere.
//! A record is [`Status::Skipped`] when the identity does not apply to the
//! input, and [`Status::Discrepancy`] when a published transcription of a
//! formula is reported alongside the identity it is meant to express but
//! does not gate the verdict.

mod checks;
mod low_order;

pub use checks::{
    verify_companions, verify_companions_with, verify_fel_main, verify_m2_closed_form, verify_semigroup,
    verify_series_lemmas, verify_thm_kp, CompanionSampler,
};
pub use low_order::{low_order_k, verify_low_order, LowOrderForm};

use std::fmt;

use crate::semigroup::SemigroupSpec;
use crate::{IntPolynomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    FelMain,
    ThmKp,
    LowOrderK,
    M2ClosedForm,
    LemmaSeriesC,
    LemmaSeriesPhi,
    LemmaSeriesP,
    LemmaSeriesPdiv,
    LemmaOneMinusQ,
    EqFinal,
    Fel1SignFlip,
    Fel2Zigzag,
}

impl IdentityId {
    pub const ALL: [IdentityId; 12] = [
        IdentityId::FelMain,
        IdentityId::ThmKp,
        IdentityId::LowOrderK,
        IdentityId::M2ClosedForm,
        IdentityId::LemmaSeriesC,
        IdentityId::LemmaSeriesPhi,
        IdentityId::LemmaSeriesP,
        IdentityId::LemmaSeriesPdiv,
        IdentityId::LemmaOneMinusQ,
        IdentityId::EqFinal,
        IdentityId::Fel1SignFlip,
        IdentityId::Fel2Zigzag,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::FelMain => "FEL_MAIN",
            IdentityId::ThmKp => "THM_KP",
            IdentityId::LowOrderK => "LOW_ORDER_K",
            IdentityId::M2ClosedForm => "M2_CLOSED_FORM",
            IdentityId::LemmaSeriesC => "LEMMA_SERIES_C",
            IdentityId::LemmaSeriesPhi => "LEMMA_SERIES_PHI",
            IdentityId::LemmaSeriesP => "LEMMA_SERIES_P",
            IdentityId::LemmaSeriesPdiv => "LEMMA_SERIES_PDIV",
            IdentityId::LemmaOneMinusQ => "LEMMA_ONE_MINUS_Q",
            IdentityId::EqFinal => "EQ_FINAL",
            IdentityId::Fel1SignFlip => "FEL1_SIGNFLIP",
            IdentityId::Fel2Zigzag => "FEL2_ZIGZAG",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    /// Non-gating: a transcribed formula disagrees with the exact value.
    Discrepancy,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
            Status::Discrepancy => "DISCREPANCY",
        }
    }
}

/// One side of a check.
#[derive(Clone, Debug, PartialEq)]
pub enum CheckValue {
    None,
    Scalar(Rational),
    /// Coefficient sequence of a truncated series (or of an EGF).
    Series(Vec<Rational>),
    Polynomial(IntPolynomial),
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckRecord {
    pub identity: IdentityId,
    /// `p`, `r`, `n` or the series order, depending on the identity; `-1`
    /// for checks without an index.
    pub parameter: i64,
    /// Index of the random sample point, for randomized checks.
    pub sample: Option<usize>,
    pub lhs: CheckValue,
    pub rhs: CheckValue,
    pub status: Status,
    pub note: Option<String>,
}

impl CheckRecord {
    /// Gating comparison: `Pass` iff `lhs == rhs`.
    pub fn compare(identity: IdentityId, parameter: i64, lhs: CheckValue, rhs: CheckValue) -> Self {
        let status = if lhs == rhs { Status::Pass } else { Status::Fail };
        CheckRecord { identity, parameter, sample: None, lhs, rhs, status, note: None }
    }

    /// Non-gating comparison: `Pass` iff equal, `Discrepancy` otherwise.
    pub fn reported(
        identity: IdentityId,
        parameter: i64,
        lhs: CheckValue,
        rhs: CheckValue,
        note: impl Into<String>,
    ) -> Self {
        let status = if lhs == rhs { Status::Pass } else { Status::Discrepancy };
        CheckRecord { identity, parameter, sample: None, lhs, rhs, status, note: Some(note.into()) }
    }

    pub fn skipped(identity: IdentityId, parameter: i64, note: impl Into<String>) -> Self {
        CheckRecord {
            identity,
            parameter,
            sample: None,
            lhs: CheckValue::None,
            rhs: CheckValue::None,
            status: Status::Skipped,
            note: Some(note.into()),
        }
    }

    pub fn with_sample(mut self, sample: usize) -> Self {
        self.sample = Some(sample);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn sort_key(&self) -> (IdentityId, i64, Option<usize>, Option<&str>) {
        (self.identity, self.parameter, self.sample, self.note.as_deref())
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct VerificationReport {
    /// `None` for checks that do not involve a semigroup.
    pub semigroup: Option<SemigroupSpec>,
    pub seed: Option<u64>,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn new(semigroup: Option<SemigroupSpec>) -> Self {
        VerificationReport { semigroup, seed: None, checks: Vec::new() }
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.checks.push(record);
    }

    /// Appends the checks of `other`, which must concern the same semigroup.
    pub fn absorb(&mut self, other: VerificationReport) {
        debug_assert_eq!(self.semigroup, other.semigroup);
        self.seed = self.seed.or(other.seed);
        self.checks.extend(other.checks);
    }

    /// No gating check failed.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn records(&self, identity: IdentityId) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(move |c| c.identity == identity)
    }

    /// Orders checks by `(identity, parameter, sample)`.
    pub fn sort(&mut self) {
        self.checks.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    }
}

/// Sorts reports by semigroup (companion reports first) and each report's
/// checks, so that assembly order never shows in the output.
pub fn sort_reports(reports: &mut [VerificationReport]) {
    for r in reports.iter_mut() {
        r.sort();
    }
    reports.sort_by(|a, b| a.semigroup.cmp(&b.semigroup));
}
