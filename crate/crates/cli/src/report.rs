//! Machine-readable report types emitted with `--json`.
//!
//! Field order is fixed by declaration order; absent analyses are omitted
//! rather than written as `null`.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenPair {
    pub eigenvalue: u32,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub p: u32,
    pub n: usize,
    pub x: u32,
    pub y: u32,
    pub matrix: Vec<Vec<u32>>,
    pub spectrum: Vec<EigenPair>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scan: Option<Vec<EigenPair>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scan_matches: Option<bool>,
    pub diagonalizable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagonal: Option<Vec<u32>>,
}

/// Report for `build` and `analyze`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub p: u32,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<u32>,
    pub a: u32,
    pub length: usize,
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_distance: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mds: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detect: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub correct: Option<usize>,
    /// `"k/N"`, unreduced.
    pub rate: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<Vec<Vec<u32>>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SimulationMode {
    MonteCarlo,
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimulationReport {
    #[serde(flatten)]
    pub code: CodeJson,
    pub t: usize,
    pub mode: SimulationMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub trials: u64,
    pub successes: u64,
    pub ambiguous: u64,
    pub miscorrected: u64,
    pub within_capacity: bool,
    pub pass: bool,
}

/// One tuple of the theorem sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRow {
    pub p: u32,
    pub n: usize,
    pub x: u32,
    pub y: u32,
    pub a: u32,
    pub hypotheses_met: bool,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mds: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matches_theorem: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub p_max: u32,
    pub n_max: usize,
    pub rows: usize,
    pub hypothesis_rows: usize,
    pub matched: usize,
    pub mismatched: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub rows: Vec<VerifyRow>,
    pub summary: VerifySummary,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn code_json() -> impl Strategy<Value = CodeJson> {
        (
            (any::<u32>(), 0usize..64, any::<Option<u32>>(), any::<Option<u32>>(), any::<u32>()),
            (0usize..4096, 0usize..4096, any::<Option<usize>>(), any::<Option<bool>>()),
            (any::<Option<(usize, usize)>>(), ".*", any::<Option<Vec<Vec<u32>>>>()),
        )
            .prop_map(|((p, n, x, y, a), (length, dimension, min_distance, mds), (cap, rate, generator))| CodeJson {
                p,
                n,
                x,
                y,
                a,
                length,
                dimension,
                min_distance,
                mds,
                detect: cap.map(|c| c.0),
                correct: cap.map(|c| c.1),
                rate,
                generator,
            })
    }

    proptest! {
        #[test]
        fn code_json_round_trips(c in code_json()) {
            let text = serde_json::to_string(&c).unwrap();
            prop_assert_eq!(serde_json::from_str::<CodeJson>(&text).unwrap(), c);
        }

        #[test]
        fn simulation_round_trips(
            c in code_json(),
            t in 0usize..100,
            exhaustive in any::<bool>(),
            seed in any::<Option<u64>>(),
            counts in (0u64..1000, 0u64..1000, 0u64..1000),
            flags in (any::<bool>(), any::<bool>()),
        ) {
            let r = SimulationReport {
                code: c,
                t,
                mode: if exhaustive { SimulationMode::Exhaustive } else { SimulationMode::MonteCarlo },
                seed,
                trials: counts.0 + counts.1 + counts.2,
                successes: counts.0,
                ambiguous: counts.1,
                miscorrected: counts.2,
                within_capacity: flags.0,
                pass: flags.1,
            };
            let text = serde_json::to_string(&r).unwrap();
            prop_assert_eq!(serde_json::from_str::<SimulationReport>(&text).unwrap(), r);
        }

        #[test]
        fn verify_round_trips(
            rows in prop::collection::vec(
                (any::<(u32, usize, u32, u32, u32)>(), any::<bool>(), 0usize..40,
                 any::<Option<usize>>(), any::<Option<bool>>(), any::<Option<bool>>(), any::<Option<String>>()),
                0..8),
        ) {
            let rows: Vec<VerifyRow> = rows
                .into_iter()
                .map(|((p, n, x, y, a), h, dim, d, mds, m, note)| VerifyRow {
                    p, n, x, y, a, hypotheses_met: h, dim, d, mds, matches_theorem: m, note,
                })
                .collect();
            let report = VerifyReport {
                summary: VerifySummary {
                    p_max: 7, n_max: 5, rows: rows.len(), hypothesis_rows: 0, matched: 0, mismatched: 0,
                },
                rows,
            };
            let text = serde_json::to_string(&report).unwrap();
            prop_assert_eq!(serde_json::from_str::<VerifyReport>(&text).unwrap(), report);
        }

        #[test]
        fn spectrum_round_trips(
            p in any::<u32>(), n in 0usize..10, x in any::<u32>(), y in any::<u32>(),
            pairs in prop::collection::vec((any::<u32>(), 0usize..10), 0..4),
            scan in any::<Option<bool>>(), diag in any::<Option<Vec<u32>>>(),
        ) {
            let spectrum: Vec<EigenPair> = pairs.iter().map(|&(eigenvalue, multiplicity)| EigenPair { eigenvalue, multiplicity }).collect();
            let r = SpectrumReport {
                p, n, x, y,
                matrix: vec![vec![x; n]; n],
                scan: scan.map(|_| spectrum.clone()),
                scan_matches: scan,
                spectrum,
                diagonalizable: diag.is_some(),
                diagonal: diag,
            };
            let text = serde_json::to_string(&r).unwrap();
            prop_assert_eq!(serde_json::from_str::<SpectrumReport>(&text).unwrap(), r);
        }
    }

    #[test]
    fn absent_analyses_are_omitted() {
        let c = CodeJson {
            p: 3,
            n: 2,
            x: Some(1),
            y: Some(1),
            a: 2,
            length: 4,
            dimension: 1,
            min_distance: None,
            mds: None,
            detect: None,
            correct: None,
            rate: "1/4".into(),
            generator: None,
        };
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(
            text,
            r#"{"p":3,"n":2,"x":1,"y":1,"a":2,"length":4,"dimension":1,"rate":"1/4"}"#
        );
    }
}
