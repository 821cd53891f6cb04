//! The scaffolding map: an agent walk over the peaks of a Dyck path that
//! emits the word level by level from the top.
//!
//! Peaks seed agents that walk outward, left through ascending runs and
//! right through descending runs, one step per iteration. Each iteration
//! drains a queue of current agent positions plus the peaks at the
//! current level, appends the corresponding word symbols, then moves all
//! agents simultaneously and lowers the level. The resolved reading is
//! pinned down by [`MapVariant`]; the default variant is the one whose
//! emission order provably matches the closed form
//! [`scaffolding_grouped`].

use std::collections::BTreeSet;

use serde::Serialize;

use dyck_core::{render_steps, DyckWord, PeakSet, RightStepSet, Step};

use crate::classical::validate_output;
use crate::error::MapError;

/// Which height is attached to a peak position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LevelConvention {
    /// Height after the peak's up-step (the peak height).
    PostStep,
    /// Height before the peak's up-step.
    PreStep,
}

/// Order in which a queue is drained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QueueOrder {
    Decreasing,
    Increasing,
}

/// Whether current-level peaks emit alongside the agents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PeakInQueue {
    Yes,
    No,
}

/// Whether peaks spawn their neighbour agents after or before the
/// simultaneous agent update of the same iteration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpawnTiming {
    AfterUpdate,
    BeforeUpdate,
}

/// A point in the grid of readings of the agent procedure. The default
/// is the consistent reading under which every position is emitted
/// exactly once, at its own level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MapVariant {
    pub level_convention: LevelConvention,
    pub queue_order: QueueOrder,
    pub peak_in_queue: PeakInQueue,
    pub spawn_timing: SpawnTiming,
}

impl Default for MapVariant {
    fn default() -> Self {
        MapVariant {
            level_convention: LevelConvention::PostStep,
            queue_order: QueueOrder::Decreasing,
            peak_in_queue: PeakInQueue::Yes,
            spawn_timing: SpawnTiming::AfterUpdate,
        }
    }
}

impl MapVariant {
    /// Every combination of the four readings, default first.
    pub fn all() -> Vec<MapVariant> {
        let mut grid = vec![MapVariant::default()];
        for level_convention in [LevelConvention::PostStep, LevelConvention::PreStep] {
            for queue_order in [QueueOrder::Decreasing, QueueOrder::Increasing] {
                for peak_in_queue in [PeakInQueue::Yes, PeakInQueue::No] {
                    for spawn_timing in [SpawnTiming::AfterUpdate, SpawnTiming::BeforeUpdate] {
                        let variant = MapVariant {
                            level_convention,
                            queue_order,
                            peak_in_queue,
                            spawn_timing,
                        };
                        if variant != MapVariant::default() {
                            grid.push(variant);
                        }
                    }
                }
            }
        }
        grid
    }
}

/// One iteration of the agent walk, 1-based positions throughout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceRecord {
    pub step: usize,
    #[serde(rename = "level")]
    pub current_level: i32,
    pub queue: Vec<usize>,
    pub emitted: String,
    pub agents_before: Vec<usize>,
    pub agents_after: Vec<usize>,
    pub spawned: Vec<usize>,
}

/// A full run of the agent walk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScaffoldTrace {
    pub input: String,
    pub variant: MapVariant,
    pub steps: Vec<TraceRecord>,
    pub output: String,
}

impl ScaffoldTrace {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serialization cannot fail")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serialization cannot fail")
    }
}

/// Live state of the agent walk.
pub struct ScaffoldState {
    word: DyckWord,
    variant: MapVariant,
    out: Vec<Step>,
    agents: BTreeSet<usize>,
    current_level: i32,
    peaks: PeakSet,
    right_steps: RightStepSet,
    iterations: usize,
}

impl ScaffoldState {
    pub fn new(word: &DyckWord, variant: MapVariant) -> Self {
        let peaks = word.peaks();
        // Peaks are stored by peak height; the pre-step reading shifts
        // every key down by one, so only the level numbering changes.
        let start = match variant.level_convention {
            LevelConvention::PostStep => peaks.max_level() as i32,
            LevelConvention::PreStep => peaks.max_level() as i32 - 1,
        };
        ScaffoldState {
            word: *word,
            variant,
            out: Vec::with_capacity(word.len()),
            agents: BTreeSet::new(),
            current_level: start,
            peaks,
            right_steps: word.right_steps(),
            iterations: 0,
        }
    }

    pub fn is_done(&self) -> bool {
        self.out.len() >= self.word.len()
    }

    pub fn output(&self) -> &[Step] {
        &self.out
    }

    pub fn agents(&self) -> impl Iterator<Item = usize> + '_ {
        self.agents.iter().copied()
    }

    pub fn current_level(&self) -> i32 {
        self.current_level
    }

    fn peaks_here(&self) -> &[usize] {
        let key = match self.variant.level_convention {
            LevelConvention::PostStep => self.current_level,
            LevelConvention::PreStep => self.current_level + 1,
        };
        if key < 0 {
            return &[];
        }
        self.peaks.at_level(key as u32)
    }

    fn insert_agent(&mut self, position: usize) -> Result<(), MapError> {
        if !self.agents.insert(position) {
            return Err(MapError::DuplicateAgent {
                position,
                input: self.word.render(),
            });
        }
        Ok(())
    }

    /// Moves every agent one step from the pre-update snapshot: right
    /// through descending runs, left through ascending runs, dropping
    /// agents that leave their run.
    fn update_agents(&mut self) -> Result<(), MapError> {
        let len = self.word.len();
        let snapshot: Vec<usize> = self.agents.iter().copied().collect();
        self.agents.clear();
        for position in snapshot {
            let target = if self.right_steps.contains(position) {
                (position + 1 <= len && self.right_steps.contains(position + 1))
                    .then_some(position + 1)
            } else {
                (position >= 2 && !self.right_steps.contains(position - 1)).then_some(position - 1)
            };
            if let Some(next) = target {
                self.insert_agent(next)?;
            }
        }
        Ok(())
    }

    fn spawn_from_peaks(&mut self, peaks: &[usize]) -> Result<Vec<usize>, MapError> {
        let len = self.word.len();
        let mut spawned = Vec::new();
        for &peak in peaks {
            if peak + 1 <= len && self.right_steps.contains(peak + 1) {
                self.insert_agent(peak + 1)?;
                spawned.push(peak + 1);
            }
            if peak >= 2 && !self.right_steps.contains(peak - 1) {
                self.insert_agent(peak - 1)?;
                spawned.push(peak - 1);
            }
        }
        spawned.sort_unstable();
        Ok(spawned)
    }

    /// Runs one iteration: drain the queue, update agents, spawn from the
    /// current peaks, lower the level.
    pub fn advance(&mut self) -> Result<TraceRecord, MapError> {
        self.iterations += 1;
        if self.iterations > self.word.len() + 1 {
            return Err(MapError::NonTermination {
                input: self.word.render(),
                iterations: self.iterations,
            });
        }
        let peaks_here: Vec<usize> = self.peaks_here().to_vec();
        let mut queue: Vec<usize> = self.agents.iter().copied().collect();
        if self.variant.peak_in_queue == PeakInQueue::Yes {
            queue.extend(&peaks_here);
        }
        match self.variant.queue_order {
            QueueOrder::Decreasing => queue.sort_unstable_by(|a, b| b.cmp(a)),
            QueueOrder::Increasing => queue.sort_unstable(),
        }
        let emitted: Vec<Step> = queue.iter().map(|&i| self.word.step(i)).collect();
        self.out.extend(&emitted);
        let agents_before: Vec<usize> = self.agents.iter().copied().collect();
        let spawned = match self.variant.spawn_timing {
            SpawnTiming::AfterUpdate => {
                self.update_agents()?;
                self.spawn_from_peaks(&peaks_here)?
            }
            SpawnTiming::BeforeUpdate => {
                let spawned = self.spawn_from_peaks(&peaks_here)?;
                self.update_agents()?;
                spawned
            }
        };
        let record = TraceRecord {
            step: self.iterations,
            current_level: self.current_level,
            queue,
            emitted: render_steps(&emitted),
            agents_before,
            agents_after: self.agents.iter().copied().collect(),
            spawned,
        };
        self.current_level -= 1;
        Ok(record)
    }
}

/// Scaffolding map under a chosen reading.
pub fn scaffolding(word: &DyckWord, variant: MapVariant) -> Result<DyckWord, MapError> {
    let mut state = ScaffoldState::new(word, variant);
    while !state.is_done() {
        state.advance()?;
    }
    validate_output("scaffolding", word, state.output())
}

/// Scaffolding map under the default reading.
pub fn scaffolding_default(word: &DyckWord) -> Result<DyckWord, MapError> {
    scaffolding(word, MapVariant::default())
}

/// Full per-iteration trace of the agent walk. The concatenated
/// `emitted` fields equal the scaffolding output.
pub fn trace_scaffolding(word: &DyckWord, variant: MapVariant) -> Result<ScaffoldTrace, MapError> {
    let mut state = ScaffoldState::new(word, variant);
    let mut steps = Vec::new();
    while !state.is_done() {
        steps.push(state.advance()?);
    }
    let output = validate_output("scaffolding", word, state.output())?;
    Ok(ScaffoldTrace {
        input: word.render(),
        variant,
        steps,
        output: output.render(),
    })
}

/// Closed form of the default-variant agent dynamics: concatenate, for
/// each height from the path maximum down to 0, the steps whose
/// post-step height equals it, taken right to left.
pub fn scaffolding_grouped(word: &DyckWord) -> Result<DyckWord, MapError> {
    let levels = word.levels();
    let mut steps = Vec::with_capacity(word.len());
    for target in (0..=levels.max()).rev() {
        for position in (1..=word.len()).rev() {
            if levels.level(position) == target {
                steps.push(word.step(position));
            }
        }
    }
    validate_output("scaffolding_grouped", word, &steps)
}

/// The scaffolding map conjugated by reverse-complement on both sides.
/// This composite coincides with the sweep zeta on every word.
pub fn scaffolding_conjugate(word: &DyckWord) -> Result<DyckWord, MapError> {
    let inner = scaffolding_default(&word.rev_complement())?;
    Ok(inner.rev_complement())
}
