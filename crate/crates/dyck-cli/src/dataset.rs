//! Word/image pair emission for sequence-learning datasets, and the
//! token-line parser used to validate the emitted format.

use std::collections::BTreeMap;
use std::io::Write;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::thread;

use dyck_core::{DyckWord, Enumeration, SemilengthOutOfRange, Step};
use dyck_zeta::{scaffolding_default, zeta_sweep};

use crate::CliError;

/// Largest semilength the dataset emitter accepts.
pub const MAX_DATASET_SEMILENGTH: usize = 14;

const CHUNK_WORDS: u64 = 8192;

/// Which map produces the target sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DatasetMap {
    Sweep,
    Scaffolding,
}

impl DatasetMap {
    fn apply(self, word: &DyckWord) -> Result<DyckWord, CliError> {
        match self {
            DatasetMap::Sweep => zeta_sweep(word),
            DatasetMap::Scaffolding => scaffolding_default(word),
        }
        .map_err(|err| CliError::Internal(err.to_string()))
    }
}

/// Pair line layout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DatasetFormat {
    /// `w,image` per line.
    Csv,
    /// `bos w_1 … w_2n eos<TAB>bos z_1 … z_2n eos`, one token per symbol.
    Tokens,
}

fn tokenize(word: &DyckWord) -> String {
    let mut out = String::with_capacity(4 * word.len() + 8);
    out.push_str("bos");
    for step in word.steps() {
        out.push(' ');
        out.push(step.symbol());
    }
    out.push_str(" eos");
    out
}

/// Formats one input/image pair as a dataset line (without newline).
pub fn format_pair(word: &DyckWord, image: &DyckWord, format: DatasetFormat) -> String {
    match format {
        DatasetFormat::Csv => format!("{word},{image}"),
        DatasetFormat::Tokens => format!("{}\t{}", tokenize(word), tokenize(image)),
    }
}

fn parse_token_sequence(text: &str) -> Result<DyckWord, String> {
    let mut tokens = text.split(' ');
    if tokens.next() != Some("bos") {
        return Err(format!("token sequence {text:?} does not start with bos"));
    }
    let mut steps = Vec::new();
    let mut saw_eos = false;
    for token in tokens {
        if saw_eos {
            return Err(format!("trailing tokens after eos in {text:?}"));
        }
        match token {
            "1" => steps.push(Step::Up),
            "0" => steps.push(Step::Down),
            "eos" => saw_eos = true,
            other => return Err(format!("unknown token {other:?} in {text:?}")),
        }
    }
    if !saw_eos {
        return Err(format!("token sequence {text:?} does not end with eos"));
    }
    DyckWord::from_steps(&steps).map_err(|err| format!("invalid word in {text:?}: {err}"))
}

/// Parses a token-format dataset line back into its word pair.
pub fn parse_token_pair(line: &str) -> Result<(DyckWord, DyckWord), String> {
    let (input, target) = line
        .split_once('\t')
        .ok_or_else(|| format!("line {line:?} has no tab separator"))?;
    Ok((parse_token_sequence(input)?, parse_token_sequence(target)?))
}

fn render_chunk(
    enumeration: &Enumeration,
    start: u64,
    end: u64,
    map: DatasetMap,
    format: DatasetFormat,
) -> Result<String, CliError> {
    let mut buffer = String::new();
    for word in enumeration.range(start, end) {
        let image = map.apply(&word)?;
        buffer.push_str(&format_pair(&word, &image, format));
        buffer.push('\n');
    }
    Ok(buffer)
}

/// Emits every `(w, map(w))` pair of semilength `n` in enumeration order
/// and returns the pair count. Chunks are rendered on `workers` threads
/// and written strictly in order, so the output is byte-identical for
/// any worker count.
pub fn write_dataset(
    n: usize,
    map: DatasetMap,
    format: DatasetFormat,
    workers: usize,
    out: &mut dyn Write,
) -> Result<u64, CliError> {
    SemilengthOutOfRange::check(n, 1, MAX_DATASET_SEMILENGTH).map_err(CliError::usage)?;
    let enumeration = Enumeration::new(n).map_err(CliError::usage)?;
    let count = enumeration.count();
    let chunks = count.div_ceil(CHUNK_WORDS).max(1) as usize;
    let workers = workers.max(1).min(chunks);
    if workers == 1 {
        for chunk in 0..chunks as u64 {
            let start = chunk * CHUNK_WORDS;
            let end = (start + CHUNK_WORDS).min(count);
            let body = render_chunk(&enumeration, start, end, map, format)?;
            out.write_all(body.as_bytes())
                .map_err(|err| CliError::Internal(err.to_string()))?;
        }
        return Ok(count);
    }
    let next = AtomicUsize::new(0);
    let (sender, receiver) = mpsc::channel::<(usize, Result<String, CliError>)>();
    let mut result = Ok(count);
    thread::scope(|scope| {
        for _ in 0..workers {
            let sender = sender.clone();
            let next = &next;
            let enumeration = &enumeration;
            scope.spawn(move || loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                if idx >= chunks {
                    break;
                }
                let start = idx as u64 * CHUNK_WORDS;
                let end = (start + CHUNK_WORDS).min(count);
                let body = render_chunk(enumeration, start, end, map, format);
                if sender.send((idx, body)).is_err() {
                    break;
                }
            });
        }
        drop(sender);
        // drain in chunk order, buffering only out-of-order arrivals
        let mut pending: BTreeMap<usize, Result<String, CliError>> = BTreeMap::new();
        let mut expected = 0usize;
        for (idx, body) in receiver {
            pending.insert(idx, body);
            while let Some(body) = pending.remove(&expected) {
                match body {
                    Ok(body) => {
                        if let Err(err) = out.write_all(body.as_bytes()) {
                            result = Err(CliError::Internal(err.to_string()));
                            return;
                        }
                    }
                    Err(err) => {
                        result = Err(err);
                        return;
                    }
                }
                expected += 1;
            }
        }
    });
    result
}
