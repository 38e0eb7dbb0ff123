//! Run reports: the machine-readable output of every command.
//!
//! One JSON schema covers searches, obstruction runs and pipelines. The
//! schema is versioned, round-trips exactly through serde, and the text
//! rendering is a pure function of the report so identical inputs give
//! identical output.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::obstruction::ObstructionCert;
use crate::search::{CensusReport, SearchStats};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub engine_version: String,
    pub command: String,
    pub targets: Vec<TargetReport>,
    /// Set when a time budget stopped the run before all targets.
    pub truncated: bool,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TargetReport {
    pub group: String,
    pub label: String,
    pub order: usize,
    /// Certificates that settle the whole group (no admissible H, or the
    /// involution bound).
    pub group_certificates: Vec<ObstructionCert>,
    pub subgroups: Vec<SubgroupReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubgroupReport {
    #[serde(rename = "H")]
    pub h: Vec<usize>,
    /// Which engines ran and whether each fired.
    pub trials: Vec<EngineTrial>,
    pub certificate: Option<ObstructionCert>,
    pub witnesses: Vec<Vec<usize>>,
    pub search_stats: Option<SearchStats>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EngineTrial {
    pub engine: String,
    pub fired: bool,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            engine_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            targets: Vec::new(),
            truncated: false,
            elapsed_ms: 0,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn save(&self, path: &std::path::Path) -> Result<()> {
        std::fs::write(path, self.to_json()?)?;
        Ok(())
    }

    pub fn witness_count(&self) -> usize {
        self.targets
            .iter()
            .flat_map(|t| &t.subgroups)
            .map(|s| s.witnesses.len())
            .sum()
    }

    /// Human-readable rendering, stable for identical reports.
    pub fn render_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(out, "# {} (engine {})", self.command, self.engine_version);
        for t in &self.targets {
            let _ = writeln!(out, "{} [{}] order {}", t.group, t.label, t.order);
            for cert in &t.group_certificates {
                let _ = writeln!(out, "  certificate[{}]: {}", cert.kind(), cert.conclusion());
            }
            for s in &t.subgroups {
                let _ = writeln!(out, "  H = {:?}", s.h);
                for trial in &s.trials {
                    let _ = writeln!(
                        out,
                        "    {}: {}",
                        trial.engine,
                        if trial.fired { "fired" } else { "did not fire" }
                    );
                }
                if let Some(cert) = &s.certificate {
                    let _ = writeln!(out, "    certificate[{}]: {}", cert.kind(), cert.conclusion());
                }
                if let Some(st) = &s.search_stats {
                    let _ = writeln!(
                        out,
                        "    search: {} nodes, {} balance prunes, {} lambda prunes",
                        st.nodes, st.balance_prunes, st.lambda_prunes
                    );
                }
                for w in &s.witnesses {
                    let _ = writeln!(out, "    witness D = {w:?}");
                }
            }
        }
        if self.truncated {
            let _ = writeln!(out, "(truncated by time budget)");
        }
        out
    }
}

impl From<CensusReport> for RunReport {
    fn from(census: CensusReport) -> Self {
        let mut report = RunReport::new(format!("census --order {}", census.order));
        report.truncated = census
            .groups
            .iter()
            .flat_map(|g| &g.outcomes)
            .any(|o| o.stats.timed_out);
        for gc in census.groups {
            report.targets.push(TargetReport {
                group: gc.group,
                label: gc.label,
                order: census.order,
                group_certificates: gc.no_candidate_cert.into_iter().collect(),
                subgroups: gc
                    .outcomes
                    .into_iter()
                    .map(|o| SubgroupReport {
                        h: o.h,
                        trials: vec![EngineTrial {
                            engine: "search".into(),
                            fired: !o.witnesses.is_empty(),
                        }],
                        certificate: o.certificate,
                        witnesses: o.witnesses,
                        search_stats: Some(o.stats),
                    })
                    .collect(),
            });
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pseudo_random_report(seed: u64) -> RunReport {
        let mut state = seed;
        let mut next = move |n: u64| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 33) % n
        };
        let mut report = RunReport::new(format!("test --seed {seed}"));
        for t in 0..next(4) {
            let mut target = TargetReport {
                group: format!("16.{t}"),
                label: format!("L{t}"),
                order: 16,
                group_certificates: vec![],
                subgroups: vec![],
            };
            if next(2) == 0 {
                target.group_certificates.push(ObstructionCert::NoCandidateH {
                    group: format!("16.{t}"),
                    involution_subgroup_order: next(16) as usize,
                });
            }
            for _ in 0..next(3) {
                target.subgroups.push(SubgroupReport {
                    h: (0..next(5)).map(|x| x as usize).collect(),
                    trials: vec![EngineTrial {
                        engine: "parity".into(),
                        fired: next(2) == 1,
                    }],
                    certificate: (next(2) == 1).then(|| ObstructionCert::ExhaustedSearch {
                        group: format!("16.{t}"),
                        h: vec![0, 1],
                        nodes: next(1000),
                    }),
                    witnesses: (0..next(3))
                        .map(|_| (0..6).map(|_| next(16) as usize).collect())
                        .collect(),
                    search_stats: (next(2) == 1).then(|| SearchStats {
                        nodes: next(100),
                        balance_prunes: next(100),
                        lambda_prunes: next(100),
                        witnesses: next(3) as usize,
                        elapsed_ms: next(1000),
                        timed_out: next(2) == 1,
                    }),
                });
            }
            report.targets.push(target);
        }
        report.elapsed_ms = next(10_000);
        report
    }

    #[test]
    fn json_round_trip_on_random_reports() {
        for seed in 0..100 {
            let report = pseudo_random_report(seed);
            let json = report.to_json().unwrap();
            let back = RunReport::from_json(&json).unwrap();
            assert_eq!(report, back, "seed {seed}");
        }
    }

    #[test]
    fn schema_version_is_present() {
        let report = RunReport::new("x");
        let json = report.to_json().unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["schema_version"], SCHEMA_VERSION);
        assert!(value["engine_version"].is_string());
    }

    #[test]
    fn empty_census_is_valid_json() {
        let report = RunReport::new("census --order 16");
        let json = report.to_json().unwrap();
        let back = RunReport::from_json(&json).unwrap();
        assert_eq!(back.targets.len(), 0);
        assert!(!back.truncated);
    }

    #[test]
    fn text_rendering_is_stable() {
        let report = pseudo_random_report(7);
        assert_eq!(report.render_text(), report.render_text());
        let other = pseudo_random_report(7);
        assert_eq!(report.render_text(), other.render_text());
    }
}
