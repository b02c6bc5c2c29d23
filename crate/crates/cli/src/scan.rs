//! Resumable JSON Lines scan of a graph6 corpus.

use std::collections::{BTreeMap, HashSet};
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::time::{Duration, Instant};

use pmcover::coverings::{analyze, AnalyzeOptions, Report, Status};
use pmcover::graph::{parse_graph6, to_graph6};
use pmcover::Deadline;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph_spec::graph6_lines;
use crate::CliError;

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub tau_cap: usize,
    pub odd_cap: usize,
    pub timeout: Duration,
    pub jobs: usize,
    pub max_pm: Option<usize>,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            tau_cap: 6,
            odd_cap: 7,
            timeout: Duration::from_secs(60),
            jobs: 1,
            max_pm: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordStatus {
    Ok,
    Timeout,
    Infeasible,
    /// More perfect matchings than the configured cap.
    Skipped,
    Error,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanRecord {
    /// The graph re-encoded as graph6.
    pub graph_id: String,
    pub metrics: Option<serde_json::Value>,
    pub status: RecordStatus,
    pub elapsed_ms: u64,
    pub is_petersen: bool,
    pub flags: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub inputs: usize,
    pub computed: usize,
    pub resumed: usize,
    /// Count of computed graphs per τ value; `">cap"`, `"infeasible"`,
    /// `"skipped"`, `"timeout"` and `"error"` for the rest.
    pub by_tau: BTreeMap<String, usize>,
    pub flagged: Vec<(String, Vec<String>)>,
}

pub const FLAG_PETERSEN: &str = "petersen_exception";
pub const FLAG_PROBLEM_ONE: &str = "cyclically_4ec_tau_ge_5_not_petersen";
pub const FLAG_BERGE: &str = "berge_failure";
pub const FLAG_FULKERSON: &str = "fulkerson_failure";
pub const FLAG_TAU_ODD_FIVE: &str = "tau_and_tau_odd_both_5";

fn flags(report: &Report, is_petersen: bool) -> Vec<String> {
    let mut out = Vec::new();
    let tau_at_least_5 = match report.tau_status {
        Status::Exact => report.tau.is_some_and(|t| t >= 5),
        Status::Exceeds => report.tau_cap >= 4,
        _ => false,
    };
    if is_petersen {
        out.push(FLAG_PETERSEN);
    } else if tau_at_least_5 && report.cyclically4ec == Some(true) {
        out.push(FLAG_PROBLEM_ONE);
    }
    let bridgeless = report.bridges == 0;
    if bridgeless && report.berge5 == Some(false) {
        out.push(FLAG_BERGE);
    }
    if bridgeless && report.fulkerson == Some(false) {
        out.push(FLAG_FULKERSON);
    }
    if report.tau == Some(5) && report.tau_odd == Some(5) {
        out.push(FLAG_TAU_ODD_FIVE);
    }
    out.into_iter().map(String::from).collect()
}

/// Analyzes one graph6 line into a record. Parse failures become error
/// records.
pub fn scan_one(line: &str, opts: &ScanOptions) -> ScanRecord {
    let start = Instant::now();
    let g = match parse_graph6(line) {
        Ok(g) => g,
        Err(e) => {
            return ScanRecord {
                graph_id: line.to_string(),
                metrics: None,
                status: RecordStatus::Error,
                elapsed_ms: 0,
                is_petersen: false,
                flags: Vec::new(),
                error: Some(e.to_string()),
            }
        }
    };
    let analyze_opts = AnalyzeOptions {
        tau_cap: opts.tau_cap,
        odd_cap: opts.odd_cap,
        deadline: Deadline::after(opts.timeout),
        max_pm: opts.max_pm,
    };
    let report = analyze(&g, &analyze_opts);
    let is_petersen = g.is_petersen();
    let timed_out = [report.tau_status, report.tau_odd_status].contains(&Status::TimedOut)
        || (report.fulkerson.is_none() && report.pm_count.is_some());
    let status = if report.tau_status == Status::Infeasible {
        RecordStatus::Infeasible
    } else if report.pm_count.is_none() {
        RecordStatus::Skipped
    } else if timed_out {
        RecordStatus::Timeout
    } else {
        RecordStatus::Ok
    };
    ScanRecord {
        graph_id: to_graph6(&g).expect("parsed from graph6, hence simple"),
        flags: flags(&report, is_petersen),
        metrics: Some(serde_json::to_value(&report).expect("report serializes")),
        status,
        elapsed_ms: start.elapsed().as_millis() as u64,
        is_petersen,
        error: None,
    }
}

fn tau_bucket(rec: &ScanRecord) -> String {
    match rec.status {
        RecordStatus::Error => return "error".into(),
        RecordStatus::Infeasible => return "infeasible".into(),
        RecordStatus::Skipped => return "skipped".into(),
        _ => {}
    }
    let metrics = rec.metrics.as_ref();
    match metrics.and_then(|m| m["tau"].as_u64()) {
        Some(t) => t.to_string(),
        None if metrics.is_some_and(|m| m["tau_status"] == "exceeds") => ">cap".into(),
        None => "timeout".into(),
    }
}

/// Graph ids already present in an output file.
fn done_ids(output: &Path) -> Result<HashSet<String>, CliError> {
    if !output.exists() {
        return Ok(HashSet::new());
    }
    let mut ids = HashSet::new();
    for line in BufReader::new(File::open(output)?).lines() {
        let line = line?;
        if let Ok(rec) = serde_json::from_str::<ScanRecord>(&line) {
            ids.insert(rec.graph_id);
        }
    }
    Ok(ids)
}

/// Scans every graph of `input`, appending one record per graph not yet in
/// `output`. Graphs are analyzed `jobs` at a time and written in input order.
pub fn run_scan(input: &Path, output: &Path, opts: &ScanOptions) -> Result<ScanSummary, CliError> {
    let text = fs::read_to_string(input)?;
    let mut done = done_ids(output)?;
    let mut out = OpenOptions::new().create(true).append(true).open(output)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;

    let mut summary = ScanSummary::default();
    let mut pending: Vec<&str> = Vec::new();
    for line in graph6_lines(&text) {
        summary.inputs += 1;
        // Re-encode so that ids compare equal however the input was written.
        let id = parse_graph6(line).ok().and_then(|g| to_graph6(&g).ok());
        if id.as_ref().is_some_and(|id| done.contains(id)) {
            summary.resumed += 1;
        } else {
            if let Some(id) = id {
                done.insert(id);
            }
            pending.push(line);
        }
    }

    let batch = 4 * opts.jobs.max(1);
    for chunk in pending.chunks(batch) {
        let records: Vec<ScanRecord> = pool.install(|| chunk.par_iter().map(|l| scan_one(l, opts)).collect());
        for rec in records {
            writeln!(out, "{}", serde_json::to_string(&rec).expect("record serializes"))?;
            summary.computed += 1;
            *summary.by_tau.entry(tau_bucket(&rec)).or_default() += 1;
            if !rec.flags.is_empty() {
                summary.flagged.push((rec.graph_id.clone(), rec.flags.clone()));
            }
        }
        out.flush()?;
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use pmcover::generators;

    #[test]
    fn petersen_is_the_known_exception() {
        let rec = scan_one("IheA@GUAo", &ScanOptions::default());
        assert_eq!(rec.status, RecordStatus::Ok);
        assert!(rec.is_petersen);
        assert_eq!(rec.flags, vec![FLAG_PETERSEN.to_string()]);
        assert_eq!(rec.metrics.unwrap()["tau"], 5);
    }

    #[test]
    fn bad_lines_become_error_records() {
        let rec = scan_one("C~~", &ScanOptions::default());
        assert_eq!(rec.status, RecordStatus::Error);
        assert!(rec.error.is_some());
    }

    #[test]
    fn bridged_graphs_are_infeasible() {
        let g6 = to_graph6(&generators::bridged_k4_pair()).unwrap();
        let rec = scan_one(&g6, &ScanOptions::default());
        assert_eq!(rec.status, RecordStatus::Infeasible);
        assert!(rec.flags.is_empty());
    }
}
