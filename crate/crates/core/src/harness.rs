//! Bounded enumeration and the two-route verification report.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::acm::{classify_numeric_with, is_acm_oracle, is_initialized, NumericRules, TheoremCase};
use crate::cone::EffectiveCone;
use crate::error::{Error, Result};
use crate::lattice::DivisorClass;

/// Non-zero effective classes with `1 ≤ D·H ≤ max_degree`, sorted by degree
/// then coordinates.
pub fn enumerate_effective(cone: &EffectiveCone, max_degree: i64) -> Vec<DivisorClass> {
    (1..=max_degree)
        .flat_map(|e| cone.effective_classes_of_degree(e))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    pub coords: DivisorClass,
    pub square: i64,
    pub degree: i64,
    pub effective: bool,
    pub initialized: bool,
    pub case: TheoremCase,
    pub acm: bool,
    /// `acm ∧ initialized` matches `case ≠ none`.
    pub agree: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CaseCounts {
    pub case_a: usize,
    pub case_b: usize,
    pub case_c: usize,
    pub case_d: usize,
    pub none: usize,
    /// Classes the oracle finds ACM and initialized.
    pub acm_initialized: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    AllAgree,
    Disagreements(Vec<DivisorClass>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub lattice: String,
    pub max_degree: i64,
    pub records: Vec<ClassRecord>,
    pub counts: CaseCounts,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn all_agree(&self) -> bool {
        self.verdict == Verdict::AllAgree
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Tab-separated table: coords, sq, deg, eff, init, case, acm, agree.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("coords\tsq\tdeg\teff\tinit\tcase\tacm\tagree\n");
        for r in &self.records {
            let coords: Vec<String> = r.coords.coords().iter().map(i64::to_string).collect();
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                coords.join(","),
                r.square,
                r.degree,
                r.effective,
                r.initialized,
                r.case,
                r.acm,
                r.agree
            )
            .unwrap();
        }
        out
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
    pub rules: NumericRules,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            jobs: 1,
            rules: NumericRules::default(),
        }
    }
}

/// One record: both routes evaluated on a single class.
pub fn check_class(
    cone: &EffectiveCone,
    d: &DivisorClass,
    rules: &NumericRules,
) -> Result<ClassRecord> {
    let lat = cone.lattice();
    let effective = cone.is_effective(d);
    let initialized = is_initialized(cone, d);
    let case = classify_numeric_with(cone, d, rules);
    let acm = is_acm_oracle(cone, d)?;
    Ok(ClassRecord {
        coords: d.clone(),
        square: lat.square(d),
        degree: lat.degree(d),
        effective,
        initialized,
        case,
        acm,
        agree: (acm && initialized) == !case.is_none(),
    })
}

pub fn verify_theorem(cone: &EffectiveCone, max_degree: i64) -> Result<VerificationReport> {
    verify_theorem_with(cone, max_degree, &VerifyOptions::default())
}

/// Checks `ACM ∧ initialized ⟺ numeric case` on every enumerated class.
/// Output does not depend on `options.jobs`.
pub fn verify_theorem_with(
    cone: &EffectiveCone,
    max_degree: i64,
    options: &VerifyOptions,
) -> Result<VerificationReport> {
    let classes = enumerate_effective(cone, max_degree);
    let rules = options.rules;
    let records: Vec<ClassRecord> = if options.jobs <= 1 {
        classes
            .iter()
            .map(|d| check_class(cone, d, &rules))
            .collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .map_err(|e| Error::Parse(format!("cannot start worker pool: {e}")))?;
        pool.install(|| {
            classes
                .par_iter()
                .map(|d| check_class(cone, d, &rules))
                .collect::<Result<_>>()
        })?
    };

    let mut counts = CaseCounts::default();
    let mut disagreements = Vec::new();
    for r in &records {
        match r.case {
            TheoremCase::CaseA => counts.case_a += 1,
            TheoremCase::CaseB => counts.case_b += 1,
            TheoremCase::CaseC => counts.case_c += 1,
            TheoremCase::CaseD => counts.case_d += 1,
            TheoremCase::None(_) => counts.none += 1,
        }
        if r.acm && r.initialized {
            counts.acm_initialized += 1;
        }
        if !r.agree {
            disagreements.push(r.coords.clone());
        }
    }
    let verdict = if disagreements.is_empty() {
        Verdict::AllAgree
    } else {
        Verdict::Disagreements(disagreements)
    };
    Ok(VerificationReport {
        lattice: cone.lattice().name().to_string(),
        max_degree,
        records,
        counts,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn class(v: &[i64]) -> DivisorClass {
        DivisorClass::new(v.to_vec())
    }

    #[test]
    fn enumeration_examples() {
        let rank1 = EffectiveCone::new(catalog::rank1());
        assert_eq!(
            enumerate_effective(&rank1, 12),
            vec![class(&[1]), class(&[2]), class(&[3])]
        );
        let line = EffectiveCone::new(catalog::line());
        assert_eq!(enumerate_effective(&line, 1), vec![class(&[0, 1])]);
        let up_to_3 = enumerate_effective(&line, 3);
        for c in [[0, 1], [0, 2], [0, 3], [1, -1]] {
            assert!(up_to_3.contains(&class(&c)), "{c:?} missing");
        }
        assert!(!up_to_3.contains(&class(&[1, -2])));
    }

    #[test]
    fn rank1_report() {
        let rank1 = EffectiveCone::new(catalog::rank1());
        let report = verify_theorem(&rank1, 16).unwrap();
        assert!(report.all_agree());
        assert_eq!(report.counts.acm_initialized, 0);
        assert_eq!(report.records.len(), 4);
    }

    #[test]
    fn tsv_header_and_rows() {
        let line = EffectiveCone::new(catalog::line());
        let report = verify_theorem(&line, 1).unwrap();
        let tsv = report.to_tsv();
        let mut lines = tsv.lines();
        assert_eq!(
            lines.next(),
            Some("coords\tsq\tdeg\teff\tinit\tcase\tacm\tagree")
        );
        assert_eq!(lines.next(), Some("0,1\t-2\t1\ttrue\ttrue\tA\ttrue\ttrue"));
        assert_eq!(lines.next(), None);
    }
}
