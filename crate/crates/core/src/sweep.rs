//! Grid sweeps over the identity checks.
//!
//! A sweep expands a [`SweepConfig`] into independent cells, runs them on a
//! rayon pool and returns the records sorted by `(suite, series, key)`, so
//! the rendered report does not depend on the number of workers.

use std::fmt;
use std::str::FromStr;

use num::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::binomial::{
    jacobi_expansion_check, verify_binomial_bcd, verify_binomial_gl, verify_coherence_bcd,
    verify_coherence_gl,
};
use crate::characters::{
    chebyshev_identities, check_branch, littlewood_even_cols, littlewood_even_rows,
};
use crate::combinatorics::{partitions_iter, signatures_in_box, Partition, Series, Signature};
use crate::error::{Error, Result};
use crate::invariants::{brute_force_prop, mu_invariant, verify_orthogonality, AlgebraModel};
use crate::rational::{factorial, fmt_q, qbig, Q};
use crate::report::{CheckReport, Mismatch};
use crate::shifted::check_vanishing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Binomial,
    Vanishing,
    Coherence,
    Littlewood,
    Orthogonality,
    DoubleSum,
    Torus,
    Jacobi,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Binomial,
        Suite::Vanishing,
        Suite::Coherence,
        Suite::Littlewood,
        Suite::Orthogonality,
        Suite::DoubleSum,
        Suite::Torus,
        Suite::Jacobi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Binomial => "binomial",
            Suite::Vanishing => "vanishing",
            Suite::Coherence => "coherence",
            Suite::Littlewood => "littlewood",
            Suite::Orthogonality => "orthogonality",
            Suite::DoubleSum => "prop46",
            Suite::Torus => "torus",
            Suite::Jacobi => "jacobi",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            _ => Err(Error::Parse(format!("unknown format `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub series: Vec<Series>,
    pub max_rank: usize,
    /// Bound on `|λ|` (and on `|Λ|` for coherence, on the degree for
    /// littlewood and jacobi).
    pub max_lambda: usize,
    pub max_mu: usize,
    pub suites: Vec<Suite>,
    pub format: OutputFormat,
    /// Worker count; `None` lets rayon decide.
    pub threads: Option<usize>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            series: Series::ALL.to_vec(),
            max_rank: 2,
            max_lambda: 4,
            max_mu: 2,
            suites: Suite::ALL.to_vec(),
            format: OutputFormat::Json,
            threads: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// One line of a sweep report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub suite: Suite,
    pub series: String,
    pub key: String,
    pub checked: usize,
    pub status: Status,
    pub mismatches: Vec<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Record {
    fn from_report(suite: Suite, series: String, key: String, report: CheckReport) -> Self {
        let status = if report.passed() {
            Status::Pass
        } else {
            Status::Fail
        };
        Record {
            suite,
            series,
            key,
            checked: report.checked,
            status,
            mismatches: report.mismatches,
            note: None,
        }
    }

    fn from_error(suite: Suite, series: String, key: String, err: Error) -> Self {
        match err {
            Error::CostGuard { .. } => Record {
                suite,
                series,
                key,
                checked: 0,
                status: Status::Skip,
                mismatches: Vec::new(),
                note: Some(err.to_string()),
            },
            _ => Record {
                suite,
                series,
                key,
                checked: 0,
                status: Status::Fail,
                mismatches: vec![Mismatch {
                    at: "error".into(),
                    lhs: err.to_string(),
                    rhs: String::new(),
                }],
                note: None,
            },
        }
    }

    pub fn failed(&self) -> usize {
        self.mismatches.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub records: Vec<Record>,
}

impl SweepReport {
    pub fn checked(&self) -> usize {
        self.records.iter().map(|r| r.checked).sum()
    }

    pub fn failed(&self) -> usize {
        self.records.iter().map(Record::failed).sum()
    }

    pub fn passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn summary_line(&self) -> String {
        format!("checked={} failed={}", self.checked(), self.failed())
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(&self.records)
                    .map_err(|e| Error::Io(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            OutputFormat::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["suite", "series", "key", "checked", "failed", "status"])
                    .map_err(|e| Error::Io(e.to_string()))?;
                for r in &self.records {
                    let status =
                        serde_json::to_value(r.status).map_err(|e| Error::Io(e.to_string()))?;
                    w.write_record([
                        r.suite.name(),
                        &r.series,
                        &r.key,
                        &r.checked.to_string(),
                        &r.failed().to_string(),
                        status.as_str().unwrap_or_default(),
                    ])
                    .map_err(|e| Error::Io(e.to_string()))?;
                }
                let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
                String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
            }
            OutputFormat::Text => {
                let mut out = String::new();
                for r in &self.records {
                    let tag = match r.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::Skip => "SKIP",
                    };
                    out.push_str(&format!(
                        "{tag} {} {} {} checked={}\n",
                        r.suite, r.series, r.key, r.checked
                    ));
                    for m in &r.mismatches {
                        out.push_str(&format!("    at {}: {} != {}\n", m.at, m.lhs, m.rhs));
                    }
                }
                out.push_str(&self.summary_line());
                out.push('\n');
                Ok(out)
            }
        }
    }
}

#[derive(Clone, Debug)]
enum Cell {
    BinomialGl(Signature),
    BinomialBcd(Series, usize, Partition),
    Vanishing(Series, usize, Partition),
    CoherenceGl(usize, Partition, Signature),
    CoherenceBcd(Series, usize, Partition, Signature),
    Branch(Series, Signature),
    Littlewood(usize, usize),
    Orthogonality(Series, usize, usize),
    DoubleSum(Series, usize, Partition),
    Torus(usize, Partition, Partition),
    Jacobi(Series, usize),
    Chebyshev(usize),
}

impl Cell {
    fn suite(&self) -> Suite {
        match self {
            Cell::BinomialGl(_) | Cell::BinomialBcd(..) => Suite::Binomial,
            Cell::Vanishing(..) => Suite::Vanishing,
            Cell::CoherenceGl(..) | Cell::CoherenceBcd(..) | Cell::Branch(..) => Suite::Coherence,
            Cell::Littlewood(..) => Suite::Littlewood,
            Cell::Orthogonality(..) => Suite::Orthogonality,
            Cell::DoubleSum(..) => Suite::DoubleSum,
            Cell::Torus(..) => Suite::Torus,
            Cell::Jacobi(..) | Cell::Chebyshev(_) => Suite::Jacobi,
        }
    }

    fn series(&self) -> String {
        match self {
            Cell::BinomialGl(_) | Cell::CoherenceGl(..) => Series::A.to_string(),
            Cell::BinomialBcd(s, ..)
            | Cell::Vanishing(s, ..)
            | Cell::CoherenceBcd(s, ..)
            | Cell::Branch(s, _)
            | Cell::Orthogonality(s, ..)
            | Cell::DoubleSum(s, ..)
            | Cell::Jacobi(s, _) => s.to_string(),
            Cell::Littlewood(..) | Cell::Torus(..) | Cell::Chebyshev(_) => "-".into(),
        }
    }

    fn key(&self) -> String {
        match self {
            Cell::BinomialGl(l) => format!("n={}/lambda={l}", l.rank()),
            Cell::BinomialBcd(_, n, l) => format!("n={n}/lambda={l}"),
            Cell::Vanishing(_, n, mu) => format!("n={n}/mu={mu}"),
            Cell::CoherenceGl(n, mu, big) | Cell::CoherenceBcd(_, n, mu, big) => {
                format!("n={n}/mu={mu}/Lambda={big}")
            }
            Cell::Branch(_, big) => format!("branch/Lambda={big}"),
            Cell::Littlewood(n, d) => format!("n={n}/degree={d}"),
            Cell::Orthogonality(_, n, max_mu) => format!("n={n}/max_mu={max_mu}"),
            Cell::DoubleSum(_, n, mu) => format!("n={n}/mu={mu}"),
            Cell::Torus(n, mu, nu) => format!("n={n}/mu={mu}/nu={nu}"),
            Cell::Jacobi(_, k) => format!("k={k}"),
            Cell::Chebyshev(k) => format!("chebyshev/k<={k}"),
        }
    }

    fn run(&self) -> Result<CheckReport> {
        match self {
            Cell::BinomialGl(l) => Ok(binomial_report(verify_binomial_gl(l)?)),
            Cell::BinomialBcd(s, n, l) => Ok(binomial_report(verify_binomial_bcd(*s, l, *n)?)),
            Cell::Vanishing(s, n, mu) => {
                let r = check_vanishing(*s, mu, *n, 2)?;
                let mut report = CheckReport::new("vanishing", self.key());
                report.checked = r.checked;
                report.mismatches = r
                    .failures
                    .into_iter()
                    .map(|f| Mismatch {
                        at: f.lambda,
                        lhs: f.value,
                        rhs: format!("{:?}", f.kind),
                    })
                    .collect();
                Ok(report)
            }
            Cell::CoherenceGl(n, mu, big) => verify_coherence_gl(*n, mu, big),
            Cell::CoherenceBcd(s, n, mu, big) => verify_coherence_bcd(*s, *n, mu, big),
            Cell::Branch(s, big) => check_branch(*s, big),
            Cell::Littlewood(n, d) => {
                let mut r = littlewood_even_rows(*n, *d)?;
                r.absorb(littlewood_even_cols(*n, *d)?);
                Ok(r)
            }
            Cell::Orthogonality(s, n, max_mu) => {
                let model = AlgebraModel::new(*s, *n)?;
                let mut report = CheckReport::new("orthogonality", self.key());
                let grid: Vec<Partition> = partitions_iter(*n, *max_mu).collect();
                for mu in &grid {
                    for nu in &grid {
                        report.absorb(verify_orthogonality(&model, mu, nu)?);
                    }
                }
                Ok(report)
            }
            Cell::DoubleSum(s, n, mu) => {
                let model = AlgebraModel::new(*s, *n)?;
                let brute = brute_force_prop(&model, mu)?;
                let mut report = CheckReport::new("double-sum", self.key());
                report.compare("polynomial", &brute, &mu_invariant(&model, mu)?);
                Ok(report)
            }
            Cell::Torus(n, mu, nu) => {
                let got = crate::invariants::torus_schur_orthogonality(*n, mu, nu, 4)?;
                let expected = if mu == nu {
                    qbig(factorial(*n as u64))
                } else {
                    Q::zero()
                };
                let mut report = CheckReport::new("torus", self.key());
                report.compare("constant-term", &fmt_q(&got), &fmt_q(&expected));
                Ok(report)
            }
            Cell::Jacobi(s, k) => jacobi_expansion_check(*k, *s),
            Cell::Chebyshev(k) => chebyshev_identities(*k),
        }
    }
}

fn binomial_report(r: crate::binomial::BinomialReport) -> CheckReport {
    let mut report = CheckReport::new("binomial", r.lambda.to_string());
    let keys: std::collections::BTreeSet<&Partition> =
        r.lhs.support().chain(r.rhs.keys()).collect();
    report.checked = keys.len();
    report.mismatches = r.mismatches.clone();
    report
}

fn cells(config: &SweepConfig) -> Vec<Cell> {
    let mut out = Vec::new();
    let ranks = 1..=config.max_rank;
    let has = |s: Series| config.series.contains(&s);
    for &suite in &config.suites {
        match suite {
            Suite::Binomial => {
                for n in ranks.clone() {
                    for l in partitions_iter(n, config.max_lambda) {
                        if has(Series::A) {
                            out.push(Cell::BinomialGl(l.to_signature(n).expect("length bounded")));
                        }
                        for s in Series::BCD.into_iter().filter(|&s| has(s)) {
                            out.push(Cell::BinomialBcd(s, n, l.clone()));
                        }
                    }
                    if has(Series::A) && n <= 2 {
                        for sig in signatures_in_box(n, -2, 2)
                            .into_iter()
                            .filter(|s| s.to_partition().is_none())
                        {
                            out.push(Cell::BinomialGl(sig));
                        }
                    }
                }
            }
            Suite::Vanishing => {
                for s in config.series.iter().copied() {
                    for n in ranks.clone() {
                        out.extend(
                            partitions_iter(n, config.max_mu).map(|mu| Cell::Vanishing(s, n, mu)),
                        );
                    }
                }
            }
            Suite::Coherence => {
                for s in config.series.iter().copied() {
                    for n in ranks.clone() {
                        for big in partitions_iter(n + 1, config.max_lambda) {
                            let big = big.to_signature(n + 1).expect("length bounded");
                            out.push(Cell::Branch(s, big.clone()));
                            for mu in partitions_iter(n, config.max_mu) {
                                out.push(match s {
                                    Series::A => Cell::CoherenceGl(n, mu, big.clone()),
                                    _ => Cell::CoherenceBcd(s, n, mu, big.clone()),
                                });
                            }
                        }
                    }
                }
            }
            Suite::Littlewood => out.extend(
                ranks
                    .clone()
                    .map(|n| Cell::Littlewood(n, config.max_lambda)),
            ),
            Suite::Orthogonality => {
                for s in config.series.iter().copied() {
                    out.extend(
                        ranks
                            .clone()
                            .map(|n| Cell::Orthogonality(s, n, config.max_mu)),
                    );
                }
            }
            Suite::DoubleSum => {
                for s in config.series.iter().copied() {
                    for n in ranks.clone() {
                        out.extend(
                            partitions_iter(n, config.max_mu).map(|mu| Cell::DoubleSum(s, n, mu)),
                        );
                    }
                }
            }
            Suite::Torus => {
                for n in ranks.clone() {
                    let grid: Vec<Partition> = partitions_iter(n, config.max_mu).collect();
                    for mu in &grid {
                        out.extend(grid.iter().map(|nu| Cell::Torus(n, mu.clone(), nu.clone())));
                    }
                }
            }
            Suite::Jacobi => {
                out.push(Cell::Chebyshev(config.max_lambda));
                for s in Series::BCD.into_iter().filter(|&s| has(s)) {
                    out.extend((0..=config.max_lambda).map(|k| Cell::Jacobi(s, k)));
                }
            }
        }
    }
    out
}

/// Runs every cell of the configured grid.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    let cells = cells(config);
    let run = || -> Vec<Record> {
        cells
            .par_iter()
            .map(|cell| {
                let (suite, series, key) = (cell.suite(), cell.series(), cell.key());
                match cell.run() {
                    Ok(report) => Record::from_report(suite, series, key, report),
                    Err(e) => Record::from_error(suite, series, key, e),
                }
            })
            .collect()
    };
    let mut records = match config.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(run),
        None => run(),
    };
    records.sort_by(|a, b| (a.suite, &a.series, &a.key).cmp(&(b.suite, &b.series, &b.key)));
    Ok(SweepReport { records })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(suites: &[Suite]) -> SweepConfig {
        SweepConfig {
            max_rank: 1,
            max_lambda: 2,
            max_mu: 1,
            suites: suites.to_vec(),
            ..SweepConfig::default()
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn every_suite_passes_on_a_small_grid() {
        let r = run_sweep(&small(&Suite::ALL)).unwrap();
        assert!(r.passed(), "{}", r.render(OutputFormat::Text).unwrap());
        for s in Suite::ALL {
            assert!(r.records.iter().any(|rec| rec.suite == s), "{s}");
        }
        assert!(r.checked() > 0);
    }

    #[test]
    fn records_are_sorted_and_thread_independent() {
        let mut c = small(&[Suite::Vanishing, Suite::Torus, Suite::Binomial]);
        c.threads = Some(1);
        let a = run_sweep(&c).unwrap();
        c.threads = Some(4);
        let b = run_sweep(&c).unwrap();
        for f in [OutputFormat::Json, OutputFormat::Csv, OutputFormat::Text] {
            assert_eq!(a.render(f).unwrap(), b.render(f).unwrap());
        }
        let keys: Vec<_> = a
            .records
            .iter()
            .map(|r| (r.suite, r.series.clone(), r.key.clone()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn summary_and_formats() {
        let r = run_sweep(&small(&[Suite::Torus])).unwrap();
        assert_eq!(
            r.summary_line(),
            format!("checked={} failed=0", r.checked())
        );
        let json: serde_json::Value =
            serde_json::from_str(&r.render(OutputFormat::Json).unwrap()).unwrap();
        assert_eq!(json[0]["suite"], "torus");
        assert_eq!(json[0]["status"], "pass");
        let csv = r.render(OutputFormat::Csv).unwrap();
        assert!(csv.starts_with("suite,series,key,checked,failed,status\n"));
        assert!(r
            .render(OutputFormat::Text)
            .unwrap()
            .ends_with(&format!("{}\n", r.summary_line())));
    }

    #[test]
    fn cost_guard_cells_are_skipped() {
        let c = SweepConfig {
            series: vec![Series::B],
            max_rank: 2,
            max_mu: 3,
            suites: vec![Suite::DoubleSum],
            ..SweepConfig::default()
        };
        let cells: Vec<Cell> = cells(&c)
            .into_iter()
            .filter(|c| matches!(c, Cell::DoubleSum(_, 2, mu) if mu.size() == 3))
            .collect();
        let cell = &cells[0];
        let rec = match cell.run() {
            Err(e) => Record::from_error(cell.suite(), cell.series(), cell.key(), e),
            Ok(_) => panic!("expected the cost guard"),
        };
        assert_eq!(rec.status, Status::Skip);
        assert_eq!(rec.failed(), 0);
    }
}
