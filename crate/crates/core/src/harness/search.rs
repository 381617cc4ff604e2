use std::fmt;

use rayon::prelude::*;

use super::enumerate::{enumerate_nonisomorphic, labeled_graph, ENUMERATION_LIMIT};
use super::sampling::{sample_graph, SampleSpec};
use super::theorem::{evaluate, Inapplicable, Status, Theorem};
use crate::error::{ensure_capacity, Result};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::patterns::Embedding;

/// A theorem violation: the graph (graph6) and the induced pattern copy in its square.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ViolationRecord {
    pub graph6: String,
    pub theorem: Theorem,
    pub embedding: Embedding,
}

impl fmt::Display for ViolationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.theorem, self.graph6, self.embedding)
    }
}

/// Verdict tallies. Merging is associative and commutative, so parallel runs
/// produce the same report as sequential ones.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchReport {
    pub examined: u64,
    /// Sample indices that produced no graph (`require_eds` exhausted its attempts).
    pub rejected: u64,
    pub not_in_class: u64,
    pub class_with_eds: u64,
    pub class_without_eds: u64,
    pub holds: [u64; 2],
    pub violations: [u64; 2],
    /// Class members without a perfect code whose square contains P6.
    pub no_eds_square_has_p6: u64,
    /// Class members without a perfect code whose square contains a banner.
    pub no_eds_square_has_banner: u64,
    /// Least violation in [`ViolationRecord`] order.
    pub first_violation: Option<ViolationRecord>,
}

impl SearchReport {
    pub fn total_violations(&self) -> u64 {
        self.violations.iter().sum()
    }

    pub fn class_members(&self) -> u64 {
        self.class_with_eds + self.class_without_eds
    }

    pub fn merge(mut self, other: SearchReport) -> SearchReport {
        self.examined += other.examined;
        self.rejected += other.rejected;
        self.not_in_class += other.not_in_class;
        self.class_with_eds += other.class_with_eds;
        self.class_without_eds += other.class_without_eds;
        for t in 0..2 {
            self.holds[t] += other.holds[t];
            self.violations[t] += other.violations[t];
        }
        self.no_eds_square_has_p6 += other.no_eds_square_has_p6;
        self.no_eds_square_has_banner += other.no_eds_square_has_banner;
        self.first_violation = match (self.first_violation, other.first_violation) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self
    }

    /// Tallies one graph, reporting each violation through `on_violation`.
    pub fn record(&mut self, g: &Graph, on_violation: &(dyn Fn(&ViolationRecord) + Sync)) {
        self.examined += 1;
        let eval = evaluate(g);
        match eval.has_eds {
            None => self.not_in_class += 1,
            Some(true) => self.class_with_eds += 1,
            Some(false) => {
                self.class_without_eds += 1;
                self.no_eds_square_has_p6 += eval.square_witness[0].is_some() as u64;
                self.no_eds_square_has_banner += eval.square_witness[1].is_some() as u64;
            }
        }
        for (t, verdict) in eval.verdicts.into_iter().enumerate() {
            match verdict.status {
                Status::Holds => self.holds[t] += 1,
                Status::NotApplicable(Inapplicable::NotInClass | Inapplicable::NoEds) => {}
                Status::Violation(embedding) => {
                    self.violations[t] += 1;
                    let record = ViolationRecord {
                        graph6: emit_graph6(g).unwrap_or_else(|_| format!("{g:?}")),
                        theorem: verdict.theorem,
                        embedding,
                    };
                    on_violation(&record);
                    self.first_violation = Some(match self.first_violation.take() {
                        Some(prev) => prev.min(record),
                        None => record,
                    });
                }
            }
        }
    }
}

impl fmt::Display for SearchReport {
    /// `key=value` lines ending with a `SUMMARY` line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "examined={}", self.examined)?;
        writeln!(f, "rejected={}", self.rejected)?;
        writeln!(f, "not_in_class={}", self.not_in_class)?;
        writeln!(f, "class_with_eds={}", self.class_with_eds)?;
        writeln!(f, "class_without_eds={}", self.class_without_eds)?;
        for t in Theorem::ALL {
            let i = t as usize;
            writeln!(f, "{t}.holds={}", self.holds[i])?;
            writeln!(f, "{t}.not_applicable.not_in_class={}", self.not_in_class)?;
            writeln!(f, "{t}.not_applicable.no_eds={}", self.class_without_eds)?;
            writeln!(f, "{t}.violations={}", self.violations[i])?;
        }
        writeln!(f, "no_eds.square_has_P6={}", self.no_eds_square_has_p6)?;
        writeln!(f, "no_eds.square_has_banner={}", self.no_eds_square_has_banner)?;
        if let Some(v) = &self.first_violation {
            writeln!(f, "first_violation={v}")?;
        }
        let status = if self.total_violations() == 0 { "ok" } else { "violation" };
        write!(
            f,
            "SUMMARY examined={} class_with_eds={} violations={} status={status}",
            self.examined,
            self.class_with_eds,
            self.total_violations()
        )
    }
}

/// Evaluates sample indices `0..budget` of `spec` in parallel.
pub fn search_counterexamples(spec: &SampleSpec, budget: u64) -> SearchReport {
    search_counterexamples_with(spec, budget, &|_| {})
}

pub fn search_counterexamples_with(
    spec: &SampleSpec,
    budget: u64,
    on_violation: &(dyn Fn(&ViolationRecord) + Sync),
) -> SearchReport {
    (0..budget)
        .into_par_iter()
        .fold(SearchReport::default, |mut report, i| {
            match sample_graph(spec, i) {
                Some(g) => report.record(&g, on_violation),
                None => report.rejected += 1,
            }
            report
        })
        .reduce(SearchReport::default, SearchReport::merge)
}

/// Every graph with `n_min..=n_max` vertices: all labeled graphs, or one per
/// isomorphism class when `dedup` is set. `n_max <= 8`.
pub fn verify_exhaustive(
    n_min: usize,
    n_max: usize,
    dedup: bool,
    on_violation: &(dyn Fn(&ViolationRecord) + Sync),
) -> Result<SearchReport> {
    ensure_capacity("exhaustive verification", n_max, ENUMERATION_LIMIT)?;
    let mut total = SearchReport::default();
    for n in n_min..=n_max {
        let report = if dedup {
            enumerate_nonisomorphic(n)?
                .par_iter()
                .fold(SearchReport::default, |mut r, g| {
                    r.record(g, on_violation);
                    r
                })
                .reduce(SearchReport::default, SearchReport::merge)
        } else {
            (0..1u64 << (n * n.saturating_sub(1) / 2))
                .into_par_iter()
                .fold(SearchReport::default, |mut r, mask| {
                    r.record(&labeled_graph(n, mask), on_violation);
                    r
                })
                .reduce(SearchReport::default, SearchReport::merge)
        };
        total = total.merge(report);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::p6_banner;

    #[test]
    fn zero_budget_is_all_zero() {
        let spec = SampleSpec::new(5, 5, 0.5, 1).unwrap();
        assert_eq!(search_counterexamples(&spec, 0), SearchReport::default());
    }

    #[test]
    fn exhaustive_small_run_has_no_violations() {
        let r = verify_exhaustive(0, 6, false, &|v| panic!("violation {v}")).unwrap();
        assert_eq!(r.examined, (0..=6).map(|n| 1u64 << (n * (n.max(1) - 1) / 2)).sum::<u64>());
        assert_eq!(r.total_violations(), 0);
        assert_eq!(r.class_members() + r.not_in_class, r.examined);
        assert_eq!(r.holds, [r.class_with_eds; 2]);
    }

    #[test]
    fn search_is_deterministic() {
        let spec = SampleSpec::new(8, 16, 0.3, 5).unwrap().forbidding(p6_banner());
        let a = search_counterexamples(&spec, 300);
        let b = search_counterexamples(&spec, 300);
        assert_eq!(a, b);
        assert_eq!(a.to_string(), b.to_string());
        assert_eq!(a.examined, 300);
        assert_eq!(a.not_in_class, 0);
    }

    #[test]
    fn merge_keeps_least_violation() {
        let rec = |g: &str| ViolationRecord { graph6: g.into(), theorem: Theorem::T1, embedding: Embedding { map: vec![0] } };
        let mut a = SearchReport { examined: 2, first_violation: Some(rec("Dxx")), ..Default::default() };
        a.violations[0] = 1;
        let mut b = SearchReport { examined: 3, first_violation: Some(rec("Cxx")), ..Default::default() };
        b.violations[0] = 1;
        let m1 = a.clone().merge(b.clone());
        let m2 = b.merge(a);
        assert_eq!(m1, m2);
        assert_eq!(m1.total_violations(), 2);
        assert_eq!(m1.first_violation.unwrap().graph6, "Cxx");
        assert!(m2.to_string().ends_with("status=violation"));
    }

    #[test]
    fn report_schema() {
        let spec = SampleSpec::new(6, 9, 0.4, 2).unwrap().forbidding(p6_banner());
        let text = search_counterexamples(&spec, 20).to_string();
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[..lines.len() - 1].iter().all(|l| l.contains('=')));
        assert!(lines.last().unwrap().starts_with("SUMMARY "));
    }
}
