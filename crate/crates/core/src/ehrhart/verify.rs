//! Verification of the tuple bounds over a classified dataset.

use rayon::prelude::*;

use crate::canonical::CanonicalKey;
use crate::enumeration::ClassificationDataset;
use crate::error::{Error, Result};

use super::tuples::{classify_tuple, ehrhart_tuple, Condition, EhrhartTuple};

/// A polygon whose tuple satisfies none of conditions (a)-(d).
#[derive(Debug, Clone)]
pub struct ExceptionEntry {
    pub key: CanonicalKey,
    pub tuple: EhrhartTuple,
    pub violated_inequalities: Vec<&'static str>,
}

/// A violation of one of the proven bounds.
#[derive(Debug, Clone)]
pub struct BoundViolation {
    pub key: CanonicalKey,
    pub tuple: EhrhartTuple,
    pub bound: &'static str,
}

/// Aggregated verdicts over a dataset.
#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub total: u64,
    pub zero_interior: bool,
    /// Counts for conditions a, b, c, d.
    pub condition_counts: [u64; 4],
    pub exceptions: Vec<ExceptionEntry>,
    /// Violations of `b(2P) >= max(3, 2b(P))` or, when `i(P) > 0`, of
    /// `i(2P) >= b(P) + 2i(P) - 1`. These bounds are proven without
    /// exception, so any entry here is a defect.
    pub unconditional_violations: Vec<BoundViolation>,
    /// Violations of the diagonal bound
    /// `b(2P) + i(2P) <= 2b(P) + 6i(P) + 7` (finitely many exceptions are
    /// conceivable; none are known).
    pub diagonal_violations: Vec<BoundViolation>,
}

/// Computes tuples and verdicts for every member of a denominator-2
/// dataset.
pub fn verify_dataset(ds: &ClassificationDataset, zero_interior: bool) -> Result<VerificationReport> {
    if ds.r != 2 {
        return Err(Error::Contract(format!(
            "verify_dataset requires a denominator-2 dataset, got r = {}",
            ds.r
        )));
    }
    let per_entry: Vec<(CanonicalKey, EhrhartTuple)> = ds
        .entries
        .par_iter()
        .map(|e| {
            let t = ehrhart_tuple(&e.polygon).expect("dataset has r = 2");
            (e.key.clone(), t)
        })
        .collect();

    let mut report = VerificationReport {
        total: per_entry.len() as u64,
        zero_interior,
        ..VerificationReport::default()
    };
    for (key, t) in per_entry {
        let verdict = classify_tuple(t);
        match verdict.condition {
            Condition::A => report.condition_counts[0] += 1,
            Condition::B => report.condition_counts[1] += 1,
            Condition::C => report.condition_counts[2] += 1,
            Condition::D => report.condition_counts[3] += 1,
            Condition::Exception => report.exceptions.push(ExceptionEntry {
                key: key.clone(),
                tuple: t,
                violated_inequalities: verdict.violated_inequalities,
            }),
        }
        if t.b2 < 3u64.max(2 * t.b1) {
            report.unconditional_violations.push(BoundViolation {
                key: key.clone(),
                tuple: t,
                bound: "b(2P) >= max(3, 2b(P))",
            });
        }
        if t.i1 > 0 && t.i2 + 1 < t.b1 + 2 * t.i1 {
            report.unconditional_violations.push(BoundViolation {
                key: key.clone(),
                tuple: t,
                bound: "i(2P) >= b(P) + 2i(P) - 1",
            });
        }
        if t.b2 + t.i2 > 2 * t.b1 + 6 * t.i1 + 7 {
            report.diagonal_violations.push(BoundViolation {
                key,
                tuple: t,
                bound: "b(2P) + i(2P) <= 2b(P) + 6i(P) + 7",
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::classify;

    #[test]
    fn classify_2_1_has_no_violations() {
        let ds = classify(2, 1).unwrap();
        let report = verify_dataset(&ds, false).unwrap();
        assert_eq!(report.total, 106);
        assert!(report.unconditional_violations.is_empty());
        assert!(report.diagonal_violations.is_empty());
        assert!(report.exceptions.is_empty());
    }
}
