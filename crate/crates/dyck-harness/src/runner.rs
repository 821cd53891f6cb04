//! Chunked parallel execution of checks with scheduling-independent
//! reports.
//!
//! Each semilength's enumeration is split into fixed-size contiguous
//! rank chunks. Workers pull chunk indices from a shared counter, so any
//! worker count walks the same chunk decomposition; outcomes are merged
//! in chunk order with an associative combine, which pins counts and
//! first counterexamples regardless of scheduling.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::thread;
use std::time::Instant;

use serde_json::json;

use dyck_core::{catalan, DyckWord, Enumeration, SemilengthOutOfRange, Words};
use dyck_stats::{area, bounce, dinv, QtMode, QtPolynomial};
use dyck_zeta::{inverse_zeta, variant_search, InverseError};

use crate::check::{CheckKind, CheckReport, CheckSpec, Counterexample, MapId};

const CHUNK_WORDS: u64 = 4096;

/// Number of workers to use when the caller does not care.
pub fn default_workers() -> usize {
    thread::available_parallelism().map_or(1, |p| p.get())
}

/// Runs `eval` over fixed-size rank chunks on a worker pool and returns
/// the outcomes in chunk order.
fn map_chunks<T, F>(enumeration: &Enumeration, workers: usize, eval: F) -> Vec<T>
where
    T: Send,
    F: Fn(Words) -> T + Sync,
{
    let count = enumeration.count();
    let chunks = count.div_ceil(CHUNK_WORDS).max(1) as usize;
    let workers = workers.max(1).min(chunks);
    let next = AtomicUsize::new(0);
    let (sender, receiver) = mpsc::channel::<(usize, T)>();
    thread::scope(|scope| {
        for _ in 0..workers {
            let sender = sender.clone();
            let next = &next;
            let eval = &eval;
            scope.spawn(move || loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                if idx >= chunks {
                    break;
                }
                let start = idx as u64 * CHUNK_WORDS;
                let end = (start + CHUNK_WORDS).min(count);
                let outcome = eval(enumeration.range(start, end));
                sender
                    .send((idx, outcome))
                    .expect("receiver outlives the scope");
            });
        }
    });
    drop(sender);
    let mut slots: Vec<Option<T>> = (0..chunks).map(|_| None).collect();
    for (idx, outcome) in receiver {
        slots[idx] = Some(outcome);
    }
    slots
        .into_iter()
        .map(|slot| slot.expect("every chunk was evaluated"))
        .collect()
}

#[derive(Default)]
struct Scan {
    checked: u64,
    mismatches: u64,
    first: Option<Counterexample>,
}

impl Scan {
    fn absorb(&mut self, other: Scan) {
        self.checked += other.checked;
        self.mismatches += other.mismatches;
        if self.first.is_none() {
            self.first = other.first;
        }
    }
}

/// Evaluates a per-word predicate over a whole semilength; `judge`
/// returns a counterexample for failing words.
fn scan_semilength<F>(enumeration: &Enumeration, workers: usize, judge: F) -> Scan
where
    F: Fn(&DyckWord) -> Option<Counterexample> + Sync,
{
    let chunks = map_chunks(enumeration, workers, |words| {
        let mut scan = Scan::default();
        for word in words {
            scan.checked += 1;
            if let Some(counterexample) = judge(&word) {
                scan.mismatches += 1;
                if scan.first.is_none() {
                    scan.first = Some(counterexample);
                }
            }
        }
        scan
    });
    let mut merged = Scan::default();
    for chunk in chunks {
        merged.absorb(chunk);
    }
    merged
}

fn render_outcome(result: &Result<DyckWord, dyck_zeta::MapError>) -> String {
    match result {
        Ok(word) => word.render(),
        Err(err) => format!("error: {err}"),
    }
}

fn run_map_equivalence(
    enumeration: &Enumeration,
    left: MapId,
    right: MapId,
    workers: usize,
) -> Scan {
    scan_semilength(enumeration, workers, |word| {
        let lhs = left.apply(word);
        let rhs = right.apply(word);
        match (&lhs, &rhs) {
            (Ok(a), Ok(b)) if a == b => None,
            _ => Some(Counterexample {
                input: word.render(),
                expected: render_outcome(&rhs),
                actual: render_outcome(&lhs),
            }),
        }
    })
}

fn run_statistic_exchange(enumeration: &Enumeration, map: MapId, workers: usize) -> Scan {
    scan_semilength(enumeration, workers, |word| {
        let lhs = (area(word), bounce(word));
        let image = match map.apply(word) {
            Ok(image) => image,
            Err(err) => {
                return Some(Counterexample {
                    input: word.render(),
                    expected: format!("(area, bounce) = {lhs:?}"),
                    actual: format!("error: {err}"),
                })
            }
        };
        let rhs = (dinv(&image), area(&image));
        if lhs == rhs {
            None
        } else {
            Some(Counterexample {
                input: word.render(),
                expected: format!("(area, bounce)(w) = {lhs:?}"),
                actual: format!("(dinv, area)({image}) = {rhs:?}"),
            })
        }
    })
}

fn run_bijection(enumeration: &Enumeration, map: MapId, workers: usize) -> Scan {
    let n = enumeration.semilength();
    debug_assert_eq!(
        map,
        MapId::Sweep,
        "the inverse table is built for the sweep"
    );
    let table = match inverse_zeta(n) {
        Ok(table) => table,
        Err(InverseError::NotInjective {
            image,
            first,
            second,
        }) => {
            return Scan {
                checked: enumeration.count(),
                mismatches: 1,
                first: Some(Counterexample {
                    input: first,
                    expected: "a unique image".into(),
                    actual: format!("{second} shares the image {image}"),
                }),
            }
        }
        Err(err) => {
            return Scan {
                checked: enumeration.count(),
                mismatches: 1,
                first: Some(Counterexample {
                    input: format!("Dyck({n})"),
                    expected: "an inverse table".into(),
                    actual: format!("error: {err}"),
                }),
            }
        }
    };
    // distinctness holds; verify the round trip word by word
    let table = &table;
    let mut scan = scan_semilength(enumeration, workers, move |word| {
        let image = match map.apply(word) {
            Ok(image) => image,
            Err(err) => {
                return Some(Counterexample {
                    input: word.render(),
                    expected: "a valid image".into(),
                    actual: format!("error: {err}"),
                })
            }
        };
        match table.lookup(&image) {
            Some(back) if back == *word => None,
            other => Some(Counterexample {
                input: word.render(),
                expected: word.render(),
                actual: format!("{other:?}"),
            }),
        }
    });
    if table.len() as u64 != enumeration.count() {
        scan.mismatches += 1;
        if scan.first.is_none() {
            scan.first = Some(Counterexample {
                input: format!("Dyck({n})"),
                expected: format!("image count {}", enumeration.count()),
                actual: format!("image count {}", table.len()),
            });
        }
    }
    scan
}

/// Known closed forms for the smallest semilengths.
fn frozen_table(n: usize) -> Option<&'static str> {
    match n {
        1 => Some("1"),
        2 => Some("q + t"),
        3 => Some("q^3 + q^2*t + q*t^2 + q*t + t^3"),
        _ => None,
    }
}

fn qt_both_modes(enumeration: &Enumeration, workers: usize) -> (QtPolynomial, QtPolynomial) {
    let partials = map_chunks(enumeration, workers, |words| {
        let mut ab = QtPolynomial::new();
        let mut da = QtPolynomial::new();
        for word in words {
            let (q, t) = QtMode::AreaBounce.exponents(&word);
            ab.add_term(q, t, 1);
            let (q, t) = QtMode::DinvArea.exponents(&word);
            da.add_term(q, t, 1);
        }
        (ab, da)
    });
    let mut ab = QtPolynomial::new();
    let mut da = QtPolynomial::new();
    for (partial_ab, partial_da) in partials {
        ab.merge(&partial_ab);
        da.merge(&partial_da);
    }
    (ab, da)
}

fn run_qt_table(
    enumeration: &Enumeration,
    workers: usize,
    details: &mut serde_json::Map<String, serde_json::Value>,
) -> Scan {
    let n = enumeration.semilength();
    let (ab, da) = qt_both_modes(enumeration, workers);
    let mut scan = Scan {
        checked: enumeration.count(),
        ..Scan::default()
    };
    let term_diffs = ab.difference_count(&da) as u64;
    if term_diffs > 0 {
        scan.mismatches += term_diffs;
        scan.first = Some(Counterexample {
            input: format!("C_{n}(q,t)"),
            expected: ab.to_string(),
            actual: da.to_string(),
        });
    }
    if ab.mass() != catalan(n) {
        scan.mismatches += 1;
        scan.first.get_or_insert_with(|| Counterexample {
            input: format!("C_{n}(1,1)"),
            expected: catalan(n).to_string(),
            actual: ab.mass().to_string(),
        });
    }
    if let Some(expected) = frozen_table(n) {
        for (mode, poly) in [("area/bounce", &ab), ("dinv/area", &da)] {
            if poly.to_string() != expected {
                scan.mismatches += 1;
                scan.first.get_or_insert_with(|| Counterexample {
                    input: format!("C_{n}(q,t) [{mode}]"),
                    expected: expected.into(),
                    actual: poly.to_string(),
                });
            }
        }
        details.insert(n.to_string(), json!({ "polynomial": ab.to_string() }));
    }
    scan
}

fn run_qt_symmetry(enumeration: &Enumeration, workers: usize) -> Scan {
    let n = enumeration.semilength();
    let (poly, _) = qt_both_modes(enumeration, workers);
    let mut scan = Scan {
        checked: enumeration.count(),
        ..Scan::default()
    };
    for (q, t, coeff) in poly.terms() {
        if poly.coefficient(t, q) != Some(coeff) {
            scan.mismatches += 1;
            scan.first.get_or_insert_with(|| Counterexample {
                input: format!("C_{n}(q,t) term q^{q} t^{t}"),
                expected: format!("coefficient {coeff} at q^{t} t^{q}"),
                actual: format!("{:?}", poly.coefficient(t, q).map(|c| c.to_string())),
            });
        }
    }
    scan
}

fn run_variant_search(
    n: usize,
    details: &mut serde_json::Map<String, serde_json::Value>,
) -> Result<Scan, SemilengthOutOfRange> {
    let report = variant_search(n)?;
    let words = report.outcomes.iter().map(|o| o.words_checked).sum();
    let default = report.default_outcome();
    let mut scan = Scan {
        checked: words,
        ..Scan::default()
    };
    if !default.matches_conjugated_zeta {
        scan.mismatches = 1;
        scan.first = default
            .first_conjugate_mismatch
            .as_ref()
            .map(|m| Counterexample {
                input: m.input.clone(),
                expected: m.expected.clone(),
                actual: m.actual.clone(),
            });
    }
    details.insert(
        n.to_string(),
        serde_json::to_value(&report).expect("report serialization cannot fail"),
    );
    Ok(scan)
}

/// Runs one check over its semilength range.
pub fn run_check(spec: &CheckSpec, workers: usize) -> Result<CheckReport, SemilengthOutOfRange> {
    spec.validate()?;
    let started = Instant::now();
    let mut total = Scan::default();
    let mut details = serde_json::Map::new();
    for n in spec.semilengths() {
        let scan = match spec.kind {
            CheckKind::MapEquivalence { left, right } => {
                let enumeration = Enumeration::new(n)?;
                run_map_equivalence(&enumeration, left, right, workers)
            }
            CheckKind::Bijection { map } => {
                let enumeration = Enumeration::new(n)?;
                run_bijection(&enumeration, map, workers)
            }
            CheckKind::StatisticExchange { map } => {
                let enumeration = Enumeration::new(n)?;
                run_statistic_exchange(&enumeration, map, workers)
            }
            CheckKind::QtTable => {
                let enumeration = Enumeration::new(n)?;
                run_qt_table(&enumeration, workers, &mut details)
            }
            CheckKind::QtSymmetry => {
                let enumeration = Enumeration::new(n)?;
                run_qt_symmetry(&enumeration, workers)
            }
            CheckKind::VariantSearch => run_variant_search(n, &mut details)?,
        };
        total.absorb(scan);
    }
    Ok(CheckReport {
        spec: spec.clone(),
        words_checked: total.checked,
        mismatches: total.mismatches,
        first_counterexample: total.first,
        seconds: started.elapsed().as_secs_f64(),
        worker_count: workers.max(1),
        details: if details.is_empty() {
            None
        } else {
            Some(serde_json::Value::Object(details))
        },
    })
}

/// Outcome of a whole suite run.
#[derive(Debug)]
pub struct SuiteOutcome {
    pub reports: Vec<CheckReport>,
    /// Names of must-pass checks that recorded mismatches.
    pub failed_must_pass: Vec<String>,
}

impl SuiteOutcome {
    pub fn all_must_pass_green(&self) -> bool {
        self.failed_must_pass.is_empty()
    }
}

/// Runs every check; the outcome is failing iff a must-pass check
/// recorded mismatches.
pub fn run_suite(
    specs: &[CheckSpec],
    workers: usize,
) -> Result<SuiteOutcome, SemilengthOutOfRange> {
    for spec in specs {
        spec.validate()?;
    }
    let mut reports = Vec::with_capacity(specs.len());
    let mut failed = Vec::new();
    for spec in specs {
        let report = run_check(spec, workers)?;
        if spec.must_pass && !report.passed() {
            failed.push(spec.name.clone());
        }
        reports.push(report);
    }
    Ok(SuiteOutcome {
        reports,
        failed_must_pass: failed,
    })
}
