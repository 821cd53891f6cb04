//! Implementations behind the command-line surface. Every command takes
//! plain parameters and a writer, so behavior is testable in-process.

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use dyck_core::{DyckWord, SemilengthOutOfRange, MAX_SEMILENGTH};
use dyck_harness::{run_suite, standard_suite, write_reports, CheckSpec};
use dyck_stats::{area, bounce, dinv, qt_catalan, QtMode};
use dyck_zeta::{
    scaffolding_conjugate, scaffolding_default, trace_scaffolding, zeta_area_vector, zeta_sweep,
    MapVariant,
};

use crate::CliError;

/// Environment variable naming the default report directory.
pub const REPORT_DIR_ENV: &str = "DYCK_ZETA_REPORT_DIR";

/// Map selected by `--algorithm`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    AreaVector,
    Sweep,
    Scaffolding,
    ScaffoldingConj,
}

impl Algorithm {
    fn apply(self, word: &DyckWord) -> Result<DyckWord, CliError> {
        match self {
            Algorithm::AreaVector => zeta_area_vector(word),
            Algorithm::Sweep => zeta_sweep(word),
            Algorithm::Scaffolding => scaffolding_default(word),
            Algorithm::ScaffoldingConj => scaffolding_conjugate(word),
        }
        .map_err(|err| CliError::Internal(err.to_string()))
    }
}

/// Where input words come from: explicit arguments, a file, or standard
/// input with one word per line. Lines are processed as they are read.
pub enum WordSource {
    Args(Vec<String>),
    File(PathBuf),
    Stdin,
}

impl WordSource {
    pub fn from_cli(words: Vec<String>, file: Option<PathBuf>) -> Result<Self, CliError> {
        match (words.is_empty(), file) {
            (false, None) => Ok(WordSource::Args(words)),
            (true, Some(path)) => Ok(WordSource::File(path)),
            (true, None) => Ok(WordSource::Stdin),
            (false, Some(_)) => Err(CliError::Usage(
                "pass words either as arguments or with --file, not both".into(),
            )),
        }
    }

    /// Feeds each nonempty line to `handle` with its 1-based line number.
    /// Argument words are all validated before any output is produced;
    /// file and stdin input streams line by line with bounded memory.
    fn for_each(
        self,
        mut handle: impl FnMut(usize, &str) -> Result<(), CliError>,
    ) -> Result<(), CliError> {
        match self {
            WordSource::Args(words) => {
                for (idx, word) in words.iter().enumerate() {
                    parse_line(idx + 1, word)?;
                }
                for (idx, word) in words.iter().enumerate() {
                    handle(idx + 1, word)?;
                }
                Ok(())
            }
            WordSource::File(path) => {
                let file = File::open(&path).map_err(|err| {
                    CliError::Usage(format!("cannot open {}: {err}", path.display()))
                })?;
                feed_lines(BufReader::new(file), handle)
            }
            WordSource::Stdin => feed_lines(std::io::stdin().lock(), handle),
        }
    }
}

fn feed_lines(
    reader: impl BufRead,
    mut handle: impl FnMut(usize, &str) -> Result<(), CliError>,
) -> Result<(), CliError> {
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|err| CliError::Internal(err.to_string()))?;
        let trimmed = line.trim();
        if !trimmed.is_empty() {
            handle(idx + 1, trimmed)?;
        }
    }
    Ok(())
}

fn parse_line(line_no: usize, text: &str) -> Result<DyckWord, CliError> {
    DyckWord::parse(text).map_err(|err| CliError::Usage(format!("line {line_no}: {err}")))
}

/// `map`: one output word per input word, order preserved.
pub fn cmd_map(
    algorithm: Algorithm,
    source: WordSource,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    source.for_each(|line_no, text| {
        let word = parse_line(line_no, text)?;
        let image = algorithm.apply(&word)?;
        writeln!(out, "{image}").map_err(|err| CliError::Internal(err.to_string()))
    })
}

/// `stats`: CSV lines `word,area,bounce,dinv`.
pub fn cmd_stats(source: WordSource, out: &mut dyn Write) -> Result<(), CliError> {
    source.for_each(|line_no, text| {
        let word = parse_line(line_no, text)?;
        writeln!(
            out,
            "{word},{},{},{}",
            area(&word),
            bounce(&word),
            dinv(&word)
        )
        .map_err(|err| CliError::Internal(err.to_string()))
    })
}

/// Output layout for `qtcatalan`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyFormat {
    Text,
    Json,
}

/// `qtcatalan`: the polynomial for one semilength.
pub fn cmd_qtcatalan(
    n: usize,
    mode: QtMode,
    format: PolyFormat,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let poly = qt_catalan(n, mode).map_err(CliError::usage)?;
    let body = match format {
        PolyFormat::Text => poly.to_string(),
        PolyFormat::Json => poly.to_json(),
    };
    writeln!(out, "{body}").map_err(|err| CliError::Internal(err.to_string()))
}

/// `trace`: the full agent-walk trace of one word as JSON.
pub fn cmd_trace(
    text: &str,
    variant: MapVariant,
    pretty: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let word = parse_line(1, text)?;
    let trace =
        trace_scaffolding(&word, variant).map_err(|err| CliError::Internal(err.to_string()))?;
    let body = if pretty {
        trace.to_json_pretty()
    } else {
        trace.to_json()
    };
    writeln!(out, "{body}").map_err(|err| CliError::Internal(err.to_string()))
}

/// An inclusive semilength range written as `N` or `LO..HI`.
pub fn parse_range(text: &str) -> Result<(usize, usize), CliError> {
    let parse_bound = |part: &str| {
        part.trim()
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("invalid semilength {part:?}")))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (parse_bound(lo)?, parse_bound(hi)?),
        None => {
            let n = parse_bound(text)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(CliError::Usage(format!("empty range {text:?}")));
    }
    SemilengthOutOfRange::check(lo, 1, MAX_SEMILENGTH).map_err(CliError::usage)?;
    SemilengthOutOfRange::check(hi, 1, MAX_SEMILENGTH).map_err(CliError::usage)?;
    Ok((lo, hi))
}

/// Restricts the standard suite to the requested checks.
pub fn select_checks(suite: Vec<CheckSpec>, selection: &str) -> Result<Vec<CheckSpec>, CliError> {
    if selection.trim() == "all" {
        return Ok(suite);
    }
    let mut selected = Vec::new();
    for name in selection.split(',') {
        let name = name.trim();
        match suite.iter().find(|spec| spec.name == name) {
            Some(spec) => selected.push(spec.clone()),
            None => {
                let known: Vec<&str> = suite.iter().map(|s| s.name.as_str()).collect();
                return Err(CliError::Usage(format!(
                    "unknown check {name:?}; available: {}",
                    known.join(", ")
                )));
            }
        }
    }
    Ok(selected)
}

/// `verify`: runs the selected checks over a semilength range, prints one
/// line per check, persists reports, and returns the process exit code.
pub fn cmd_verify(
    range: &str,
    checks: &str,
    workers: usize,
    report_dir: Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let (lo, hi) = parse_range(range)?;
    let suite: Vec<CheckSpec> = standard_suite(hi)
        .into_iter()
        .map(|mut spec| {
            spec.n_lo = spec.n_lo.max(lo);
            spec
        })
        .filter(|spec| spec.n_lo <= spec.n_hi)
        .collect();
    let selected = select_checks(suite, checks)?;
    if selected.is_empty() {
        return Err(CliError::Usage(format!(
            "no applicable checks for range {range:?}"
        )));
    }
    let outcome = run_suite(&selected, workers).map_err(CliError::usage)?;
    for report in &outcome.reports {
        let verdict = if report.passed() {
            "PASS"
        } else if report.spec.must_pass {
            "FAIL"
        } else {
            "INFO"
        };
        write!(
            out,
            "{verdict} {} n={}..{} words={} mismatches={} seconds={:.3}",
            report.spec.name,
            report.spec.n_lo,
            report.spec.n_hi,
            report.words_checked,
            report.mismatches,
            report.seconds,
        )
        .map_err(|err| CliError::Internal(err.to_string()))?;
        if let Some(counterexample) = &report.first_counterexample {
            write!(out, " first={}", counterexample.input)
                .map_err(|err| CliError::Internal(err.to_string()))?;
        }
        writeln!(out).map_err(|err| CliError::Internal(err.to_string()))?;
    }
    let dir = report_dir
        .or_else(|| std::env::var_os(REPORT_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("dyck-reports"));
    let written =
        write_reports(&dir, &outcome.reports).map_err(|err| CliError::Internal(err.to_string()))?;
    writeln!(out, "reports: {}", written.summary.display())
        .map_err(|err| CliError::Internal(err.to_string()))?;
    Ok(if outcome.all_must_pass_green() { 0 } else { 1 })
}

/// Opens `--out` or falls back to the given writer.
pub fn open_output<'a>(
    out: Option<&Path>,
    fallback: &'a mut dyn Write,
) -> Result<Box<dyn Write + 'a>, CliError> {
    match out {
        Some(path) => {
            let file = File::create(path).map_err(|err| {
                CliError::Usage(format!("cannot create {}: {err}", path.display()))
            })?;
            Ok(Box::new(std::io::BufWriter::new(file)))
        }
        None => Ok(Box::new(fallback)),
    }
}
