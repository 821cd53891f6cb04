//! Report persistence: one JSON file per check plus a CSV summary.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::check::CheckReport;

/// Paths produced by [`write_reports`].
#[derive(Debug)]
pub struct WrittenReports {
    pub json: Vec<PathBuf>,
    pub summary: PathBuf,
}

fn range_label(lo: usize, hi: usize) -> String {
    if lo == hi {
        lo.to_string()
    } else {
        format!("{lo}..{hi}")
    }
}

/// Writes `<name>.json` per report and a `summary.csv` with one row per
/// check: `name,n,words,mismatches,first_counterexample,seconds`.
pub fn write_reports(dir: &Path, reports: &[CheckReport]) -> std::io::Result<WrittenReports> {
    fs::create_dir_all(dir)?;
    let mut json_paths = Vec::with_capacity(reports.len());
    for report in reports {
        let path = dir.join(format!("{}.json", report.spec.name));
        let body = serde_json::to_string_pretty(report).expect("report serialization cannot fail");
        fs::write(&path, body)?;
        json_paths.push(path);
    }
    let summary = dir.join("summary.csv");
    let mut file = fs::File::create(&summary)?;
    writeln!(file, "name,n,words,mismatches,first_counterexample,seconds")?;
    for report in reports {
        writeln!(
            file,
            "{},{},{},{},{},{:.3}",
            report.spec.name,
            range_label(report.spec.n_lo, report.spec.n_hi),
            report.words_checked,
            report.mismatches,
            report
                .first_counterexample
                .as_ref()
                .map_or(String::new(), |c| c.input.clone()),
            report.seconds,
        )?;
    }
    Ok(WrittenReports {
        json: json_paths,
        summary,
    })
}
