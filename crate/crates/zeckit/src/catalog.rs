//! A small regression catalog of multiplier identities, shipped inside the
//! crate. One entry ("4P") is deliberately kept in its broken published form
//! and flagged `erratum`; the checker is expected to catch it, so catching
//! it counts as success and *not* catching it counts as failure.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::identity::{self, IdentityPattern, Witness};
use crate::recurrence::{SeqValue, SequenceFamily};

/// Numeric check length used by [`check_all`]: indices min_n ..= min_n + span.
pub const DEFAULT_SPAN: i64 = 50;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub label: String,
    pub family: SequenceFamily,
    #[serde(with = "crate::json_num::bigint")]
    pub multiplier: SeqValue,
    pub offsets: Vec<i64>,
    pub min_n: i64,
    /// Entry is known to be wrong as stated.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub erratum: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CatalogEntry {
    pub fn pattern(&self) -> Result<IdentityPattern> {
        Ok(
            IdentityPattern::new(self.family.clone(), self.multiplier.clone(), self.offsets.clone())?
                .with_min_n(self.min_n),
        )
    }
}

/// The entries compiled into the crate.
pub fn builtin() -> Vec<CatalogEntry> {
    parse(include_str!("../data/catalog.json")).expect("embedded catalog parses")
}

pub fn parse(json: &str) -> std::result::Result<Vec<CatalogEntry>, serde_json::Error> {
    serde_json::from_str(json)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    /// Entry verifies and was expected to.
    Ok,
    /// Entry behaves contrary to its own metadata.
    Failed,
    /// Entry is flagged erratum and the checker did refute it.
    ErratumDetected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub label: String,
    pub status: CheckStatus,
    pub symbolic_holds: bool,
    pub numeric_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogReport {
    pub total: usize,
    pub ok: usize,
    pub errata_detected: usize,
    pub failed: usize,
    /// Worst entry status: failed > erratum-detected > ok.
    pub status: CheckStatus,
    pub entries: Vec<EntryReport>,
}

impl CatalogReport {
    /// True when every entry behaved as its metadata predicts. A detected
    /// erratum does not spoil this; an undetected one does.
    pub fn all_as_expected(&self) -> bool {
        self.failed == 0
    }
}

/// Runs both verifiers over one entry. Symbolic is the proof; the numeric
/// pass exists to produce a concrete witness when something is wrong.
pub fn check_entry(entry: &CatalogEntry, span: i64) -> Result<EntryReport> {
    let pattern = entry.pattern()?;
    let symbolic = identity::verify_symbolic(&pattern)?;
    let numeric = identity::verify_numeric(&pattern, pattern.min_n(), pattern.min_n() + span.max(0))?;
    let holds = symbolic.holds && numeric.holds;
    let status = match (entry.erratum, holds) {
        (false, true) => CheckStatus::Ok,
        (true, false) => CheckStatus::ErratumDetected,
        _ => CheckStatus::Failed,
    };
    Ok(EntryReport {
        label: entry.label.clone(),
        status,
        symbolic_holds: symbolic.holds,
        numeric_holds: numeric.holds,
        witness: numeric.witness,
    })
}

pub fn check_all(entries: &[CatalogEntry], span: i64) -> Result<CatalogReport> {
    let mut entries_out = Vec::with_capacity(entries.len());
    let (mut ok, mut errata, mut failed) = (0, 0, 0);
    for entry in entries {
        let report = check_entry(entry, span)?;
        match report.status {
            CheckStatus::Ok => ok += 1,
            CheckStatus::ErratumDetected => errata += 1,
            CheckStatus::Failed => failed += 1,
        }
        entries_out.push(report);
    }
    let status = if failed > 0 {
        CheckStatus::Failed
    } else if errata > 0 {
        CheckStatus::ErratumDetected
    } else {
        CheckStatus::Ok
    };
    Ok(CatalogReport {
        total: entries.len(),
        ok,
        errata_detected: errata,
        failed,
        status,
        entries: entries_out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn builtin_catalog_loads() {
        let entries = builtin();
        assert_eq!(entries.len(), 17);
        let mut labels: Vec<&str> = entries.iter().map(|e| e.label.as_str()).collect();
        labels.sort_unstable();
        labels.dedup();
        assert_eq!(labels.len(), 17, "labels must be distinct");
        assert_eq!(entries.iter().filter(|e| e.erratum).count(), 1);
    }

    #[test]
    fn builtin_catalog_checks_as_expected() {
        let report = check_all(&builtin(), DEFAULT_SPAN).unwrap();
        assert!(report.all_as_expected());
        assert_eq!(report.status, CheckStatus::ErratumDetected);
        assert_eq!(report.failed, 0);
        assert_eq!(report.errata_detected, 1);
        assert_eq!(report.ok, 16);

        let four_p = report.entries.iter().find(|e| e.label == "4P").unwrap();
        assert_eq!(four_p.status, CheckStatus::ErratumDetected);
        assert!(!four_p.symbolic_holds);
        let w = four_p.witness.as_ref().unwrap();
        assert_eq!(w.n, 2);
        assert_eq!(w.lhs.to_string(), "8");
        assert_eq!(w.rhs.to_string(), "6");
    }

    #[test]
    fn undetected_erratum_is_a_failure() {
        // A true identity wrongly flagged as erratum must come back failed.
        let entry = CatalogEntry {
            label: "bogus".into(),
            family: SequenceFamily::Fibonacci,
            multiplier: SeqValue::from(3),
            offsets: vec![2, -2],
            min_n: 2,
            erratum: true,
            note: None,
        };
        let report = check_entry(&entry, 10).unwrap();
        assert_eq!(report.status, CheckStatus::Failed);

        let report = check_all(&[entry], 10).unwrap();
        assert!(!report.all_as_expected());
        assert_eq!(report.status, CheckStatus::Failed);
    }

    #[test]
    fn entry_round_trips_through_json() {
        let entries = builtin();
        let json = serde_json::to_string(&entries).unwrap();
        let back = parse(&json).unwrap();
        assert_eq!(back, entries);
        // Flags keep their defaults when absent.
        let plain: CatalogEntry = serde_json::from_str(
            r#"{"label":"x","family":"lucas","multiplier":1,"offsets":[0],"min_n":0}"#,
        )
        .unwrap();
        assert!(!plain.erratum);
        assert!(plain.note.is_none());
        assert!(plain.multiplier.is_one());
    }

    #[test]
    fn status_names_are_kebab_case() {
        assert_eq!(
            serde_json::to_string(&CheckStatus::ErratumDetected).unwrap(),
            r#""erratum-detected""#
        );
        assert_eq!(serde_json::to_string(&CheckStatus::Ok).unwrap(), r#""ok""#);
    }
}
