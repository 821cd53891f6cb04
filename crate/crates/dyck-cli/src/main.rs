use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dyck_cli::{
    cmd_map, cmd_qtcatalan, cmd_stats, cmd_trace, cmd_verify, open_output, write_dataset,
    Algorithm, CliError, DatasetFormat, DatasetMap, PolyFormat, WordSource,
};
use dyck_harness::default_workers;
use dyck_stats::QtMode;
use dyck_zeta::{LevelConvention, MapVariant, PeakInQueue, QueueOrder, SpawnTiming};

/// Zeta maps, statistics and exhaustive verification on Dyck words.
#[derive(Parser)]
#[command(name = "dyck-zeta", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    AreaVector,
    Sweep,
    Scaffolding,
    ScaffoldingConj,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(arg: AlgorithmArg) -> Self {
        match arg {
            AlgorithmArg::AreaVector => Algorithm::AreaVector,
            AlgorithmArg::Sweep => Algorithm::Sweep,
            AlgorithmArg::Scaffolding => Algorithm::Scaffolding,
            AlgorithmArg::ScaffoldingConj => Algorithm::ScaffoldingConj,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    AreaBounce,
    DinvArea,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TraceFormatArg {
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelConventionArg {
    PostStep,
    PreStep,
}

#[derive(Clone, Copy, ValueEnum)]
enum QueueOrderArg {
    Decreasing,
    Increasing,
}

#[derive(Clone, Copy, ValueEnum)]
enum PeakInQueueArg {
    Yes,
    No,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpawnTimingArg {
    AfterUpdate,
    BeforeUpdate,
}

#[derive(Clone, Copy, ValueEnum)]
enum DatasetMapArg {
    Sweep,
    Scaffolding,
}

#[derive(Clone, Copy, ValueEnum)]
enum DatasetFormatArg {
    Csv,
    Tokens,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a zeta-map algorithm to words (arguments, --file, or stdin).
    Map {
        #[arg(long, value_enum)]
        algorithm: AlgorithmArg,
        /// Words as arguments; omit to read --file or stdin.
        words: Vec<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit CSV lines `word,area,bounce,dinv`.
    Stats {
        words: Vec<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate the q,t-Catalan polynomial for one semilength.
    Qtcatalan {
        n: usize,
        #[arg(long, value_enum, default_value = "area-bounce")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "text")]
        format: PolyFormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Trace the scaffolding agent walk of one word as JSON.
    Trace {
        word: String,
        #[arg(long, value_enum, default_value = "post-step")]
        level_convention: LevelConventionArg,
        #[arg(long, value_enum, default_value = "decreasing")]
        queue_order: QueueOrderArg,
        #[arg(long, value_enum, default_value = "yes")]
        peak_in_queue: PeakInQueueArg,
        #[arg(long, value_enum, default_value = "after-update")]
        spawn_timing: SpawnTimingArg,
        #[arg(long, value_enum, default_value = "json")]
        format: TraceFormatArg,
        /// Pretty-print the JSON.
        #[arg(long)]
        pretty: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification checks over a semilength range (`N` or `LO..HI`).
    Verify {
        range: String,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long)]
        workers: Option<usize>,
        /// Report directory (default: $DYCK_ZETA_REPORT_DIR or ./dyck-reports).
        #[arg(long)]
        report_dir: Option<PathBuf>,
    },
    /// Emit `(w, zeta(w))` pairs for one semilength.
    Dataset {
        n: usize,
        #[arg(long, value_enum, default_value = "sweep")]
        map: DatasetMapArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: DatasetFormatArg,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(command: Command) -> Result<i32, CliError> {
    let stdout = std::io::stdout();
    match command {
        Command::Map {
            algorithm,
            words,
            file,
            out,
        } => {
            let source = WordSource::from_cli(words, file)?;
            let mut lock = stdout.lock();
            let mut sink = open_output(out.as_deref(), &mut lock)?;
            cmd_map(algorithm.into(), source, &mut sink)?;
            sink.flush()
                .map_err(|err| CliError::Internal(err.to_string()))?;
            Ok(0)
        }
        Command::Stats { words, file, out } => {
            let source = WordSource::from_cli(words, file)?;
            let mut lock = stdout.lock();
            let mut sink = open_output(out.as_deref(), &mut lock)?;
            cmd_stats(source, &mut sink)?;
            sink.flush()
                .map_err(|err| CliError::Internal(err.to_string()))?;
            Ok(0)
        }
        Command::Qtcatalan {
            n,
            mode,
            format,
            out,
        } => {
            let mode = match mode {
                ModeArg::AreaBounce => QtMode::AreaBounce,
                ModeArg::DinvArea => QtMode::DinvArea,
            };
            let format = match format {
                PolyFormatArg::Text => PolyFormat::Text,
                PolyFormatArg::Json => PolyFormat::Json,
            };
            let mut lock = stdout.lock();
            let mut sink = open_output(out.as_deref(), &mut lock)?;
            cmd_qtcatalan(n, mode, format, &mut sink)?;
            sink.flush()
                .map_err(|err| CliError::Internal(err.to_string()))?;
            Ok(0)
        }
        Command::Trace {
            word,
            level_convention,
            queue_order,
            peak_in_queue,
            spawn_timing,
            format: TraceFormatArg::Json,
            pretty,
            out,
        } => {
            let variant = MapVariant {
                level_convention: match level_convention {
                    LevelConventionArg::PostStep => LevelConvention::PostStep,
                    LevelConventionArg::PreStep => LevelConvention::PreStep,
                },
                queue_order: match queue_order {
                    QueueOrderArg::Decreasing => QueueOrder::Decreasing,
                    QueueOrderArg::Increasing => QueueOrder::Increasing,
                },
                peak_in_queue: match peak_in_queue {
                    PeakInQueueArg::Yes => PeakInQueue::Yes,
                    PeakInQueueArg::No => PeakInQueue::No,
                },
                spawn_timing: match spawn_timing {
                    SpawnTimingArg::AfterUpdate => SpawnTiming::AfterUpdate,
                    SpawnTimingArg::BeforeUpdate => SpawnTiming::BeforeUpdate,
                },
            };
            let mut lock = stdout.lock();
            let mut sink = open_output(out.as_deref(), &mut lock)?;
            cmd_trace(&word, variant, pretty, &mut sink)?;
            sink.flush()
                .map_err(|err| CliError::Internal(err.to_string()))?;
            Ok(0)
        }
        Command::Verify {
            range,
            checks,
            workers,
            report_dir,
        } => {
            let workers = workers.unwrap_or_else(default_workers);
            let mut lock = stdout.lock();
            cmd_verify(&range, &checks, workers, report_dir, &mut lock)
        }
        Command::Dataset {
            n,
            map,
            format,
            workers,
            out,
        } => {
            let map = match map {
                DatasetMapArg::Sweep => DatasetMap::Sweep,
                DatasetMapArg::Scaffolding => DatasetMap::Scaffolding,
            };
            let format = match format {
                DatasetFormatArg::Csv => DatasetFormat::Csv,
                DatasetFormatArg::Tokens => DatasetFormat::Tokens,
            };
            let workers = workers.unwrap_or_else(|| if n >= 12 { default_workers() } else { 1 });
            let mut lock = stdout.lock();
            let mut sink = open_output(out.as_deref(), &mut lock)?;
            write_dataset(n, map, format, workers, &mut sink)?;
            sink.flush()
                .map_err(|err| CliError::Internal(err.to_string()))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
