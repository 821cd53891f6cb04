//! Empirical survey of the scaffolding reading grid.
//!
//! For every [`MapVariant`] this runs the agent walk over all words of
//! one semilength and reports whether the outputs are always valid Dyck
//! words, whether they reproduce the sweep zeta directly, and whether
//! they reproduce it up to reverse-complement conjugation on both sides.

use serde::Serialize;

use dyck_core::{enumerate, DyckWord, SemilengthOutOfRange};

use crate::classical::zeta_sweep;
use crate::scaffolding::{scaffolding, MapVariant};

/// Semilength range accepted by the search.
pub const VARIANT_SEARCH_RANGE: (usize, usize) = (2, 10);

/// A word on which a variant deviated from a reference map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one variant over the whole semilength.
#[derive(Clone, Debug, Serialize)]
pub struct VariantOutcome {
    pub variant: MapVariant,
    pub words_checked: u64,
    /// All runs terminated with a valid Dyck word.
    pub always_valid: bool,
    pub first_failure: Option<Mismatch>,
    /// Output equals the sweep zeta on every word.
    pub matches_zeta_sweep: bool,
    pub first_sweep_mismatch: Option<Mismatch>,
    /// Output equals `rc . zeta_sweep . rc` on every word.
    pub matches_conjugated_zeta: bool,
    pub first_conjugate_mismatch: Option<Mismatch>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VariantSearchReport {
    pub n: usize,
    pub outcomes: Vec<VariantOutcome>,
}

impl VariantSearchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }

    /// The default-variant row.
    pub fn default_outcome(&self) -> &VariantOutcome {
        self.outcomes
            .iter()
            .find(|o| o.variant == MapVariant::default())
            .expect("grid contains the default variant")
    }
}

fn conjugated_sweep(word: &DyckWord) -> DyckWord {
    zeta_sweep(&word.rev_complement())
        .expect("sweep of a valid word")
        .rev_complement()
}

/// Runs the 16-variant grid over all of `Dyck(n)`.
pub fn variant_search(n: usize) -> Result<VariantSearchReport, SemilengthOutOfRange> {
    let (min, max) = VARIANT_SEARCH_RANGE;
    SemilengthOutOfRange::check(n, min, max)?;
    let mut outcomes = Vec::new();
    for variant in MapVariant::all() {
        let mut outcome = VariantOutcome {
            variant,
            words_checked: 0,
            always_valid: true,
            first_failure: None,
            matches_zeta_sweep: true,
            first_sweep_mismatch: None,
            matches_conjugated_zeta: true,
            first_conjugate_mismatch: None,
        };
        for word in enumerate(n).expect("search range is enumerable").iter() {
            outcome.words_checked += 1;
            let sweep = zeta_sweep(&word).expect("sweep of a valid word");
            let conjugated = conjugated_sweep(&word);
            match scaffolding(&word, variant) {
                Ok(image) => {
                    if image != sweep && outcome.matches_zeta_sweep {
                        outcome.matches_zeta_sweep = false;
                        outcome.first_sweep_mismatch = Some(Mismatch {
                            input: word.render(),
                            expected: sweep.render(),
                            actual: image.render(),
                        });
                    }
                    if image != conjugated && outcome.matches_conjugated_zeta {
                        outcome.matches_conjugated_zeta = false;
                        outcome.first_conjugate_mismatch = Some(Mismatch {
                            input: word.render(),
                            expected: conjugated.render(),
                            actual: image.render(),
                        });
                    }
                }
                Err(err) => {
                    if outcome.always_valid {
                        outcome.always_valid = false;
                        outcome.first_failure = Some(Mismatch {
                            input: word.render(),
                            expected: "a valid Dyck word".into(),
                            actual: err.to_string(),
                        });
                    }
                    if outcome.matches_zeta_sweep {
                        outcome.matches_zeta_sweep = false;
                        outcome.first_sweep_mismatch = Some(Mismatch {
                            input: word.render(),
                            expected: sweep.render(),
                            actual: err.to_string(),
                        });
                    }
                    if outcome.matches_conjugated_zeta {
                        outcome.matches_conjugated_zeta = false;
                        outcome.first_conjugate_mismatch = Some(Mismatch {
                            input: word.render(),
                            expected: conjugated.render(),
                            actual: err.to_string(),
                        });
                    }
                }
            }
        }
        outcomes.push(outcome);
    }
    Ok(VariantSearchReport { n, outcomes })
}
