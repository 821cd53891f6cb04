//! Check specifications and reports.

use serde::Serialize;

use dyck_core::{DyckWord, SemilengthOutOfRange, MAX_SEMILENGTH};
use dyck_zeta::{
    scaffolding_conjugate, scaffolding_default, scaffolding_grouped, zeta_area_vector, zeta_sweep,
    MapError, VARIANT_SEARCH_RANGE,
};

/// Largest semilength for exhaustive per-word map checks; counting-only
/// checks go up to the enumeration cap.
pub const MAX_CHECK_SEMILENGTH: usize = 14;

/// The maps a check can refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MapId {
    AreaVector,
    Sweep,
    Scaffolding,
    ScaffoldingGrouped,
    ScaffoldingConjugate,
}

impl MapId {
    pub fn apply(self, word: &DyckWord) -> Result<DyckWord, MapError> {
        match self {
            MapId::AreaVector => zeta_area_vector(word),
            MapId::Sweep => zeta_sweep(word),
            MapId::Scaffolding => scaffolding_default(word),
            MapId::ScaffoldingGrouped => scaffolding_grouped(word),
            MapId::ScaffoldingConjugate => scaffolding_conjugate(word),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            MapId::AreaVector => "zeta_area_vector",
            MapId::Sweep => "zeta_sweep",
            MapId::Scaffolding => "scaffolding",
            MapId::ScaffoldingGrouped => "scaffolding_grouped",
            MapId::ScaffoldingConjugate => "scaffolding_conjugate",
        }
    }
}

/// What a check evaluates per semilength.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CheckKind {
    /// `left(w) == right(w)` for every word.
    MapEquivalence { left: MapId, right: MapId },
    /// The map's image has one element per word and the materialized
    /// inverse table round-trips.
    Bijection { map: MapId },
    /// `(area, bounce)(w) == (dinv, area)(map(w))` for every word.
    StatisticExchange { map: MapId },
    /// Both q,t-Catalan modes agree term by term, carry Catalan mass,
    /// and reproduce the known closed forms for the smallest
    /// semilengths.
    QtTable,
    /// The q,t-Catalan polynomial is symmetric in `q` and `t`.
    QtSymmetry,
    /// Survey of the sixteen scaffolding readings (informational).
    VariantSearch,
}

impl CheckKind {
    /// Inclusive semilength bounds the kind supports.
    pub fn supported_range(self) -> (usize, usize) {
        match self {
            CheckKind::VariantSearch => VARIANT_SEARCH_RANGE,
            _ => (1, MAX_CHECK_SEMILENGTH),
        }
    }
}

/// A named check over an inclusive semilength range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckSpec {
    pub name: String,
    pub n_lo: usize,
    pub n_hi: usize,
    pub kind: CheckKind,
    /// Whether a mismatch fails the whole suite.
    pub must_pass: bool,
}

impl CheckSpec {
    pub fn new(
        name: impl Into<String>,
        n_lo: usize,
        n_hi: usize,
        kind: CheckKind,
        must_pass: bool,
    ) -> Self {
        CheckSpec {
            name: name.into(),
            n_lo,
            n_hi,
            kind,
            must_pass,
        }
    }

    /// Checks the range against the kind's bounds and the global cap.
    pub fn validate(&self) -> Result<(), SemilengthOutOfRange> {
        let (min, max) = self.kind.supported_range();
        SemilengthOutOfRange::check(self.n_lo, min, max)?;
        SemilengthOutOfRange::check(self.n_hi, self.n_lo, max.min(MAX_SEMILENGTH))?;
        Ok(())
    }

    pub fn semilengths(&self) -> impl Iterator<Item = usize> {
        self.n_lo..=self.n_hi
    }
}

/// A word (or derived object) on which a check failed, with the
/// expected and observed values rendered as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Result of one check over its whole range.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub spec: CheckSpec,
    pub words_checked: u64,
    pub mismatches: u64,
    /// Counterexample with the lexicographically smallest input at the
    /// smallest failing semilength; independent of scheduling.
    pub first_counterexample: Option<Counterexample>,
    pub seconds: f64,
    pub worker_count: usize,
    /// Kind-specific payload (per-variant outcomes, polynomial text).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<serde_json::Value>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }

    /// Scheduling-independent content: everything except timing and the
    /// worker count.
    pub fn comparable(&self) -> (&CheckSpec, u64, u64, &Option<Counterexample>) {
        (
            &self.spec,
            self.words_checked,
            self.mismatches,
            &self.first_counterexample,
        )
    }
}

/// The standard verification suite over `1..=n_hi` (clamped per kind).
///
/// Must-pass checks: the two classical zeta routes agree, the sweep is a
/// bijection with a round-tripping inverse table, the statistic-exchange
/// identity, the q,t-Catalan tables and their symmetry, the agent
/// simulation against its closed form, and the conjugated scaffolding
/// against the sweep. The direct scaffolding-vs-sweep comparison is
/// informational: the two maps agree only up to reverse-complement
/// conjugation, and its report documents exactly how far apart they are.
pub fn standard_suite(n_hi: usize) -> Vec<CheckSpec> {
    let equivalence = |left, right| CheckKind::MapEquivalence { left, right };
    let catalog: [(&str, CheckKind, bool); 9] = [
        (
            "classical-equivalence",
            equivalence(MapId::AreaVector, MapId::Sweep),
            true,
        ),
        (
            "bijectivity",
            CheckKind::Bijection { map: MapId::Sweep },
            true,
        ),
        (
            "statistic-exchange",
            CheckKind::StatisticExchange { map: MapId::Sweep },
            true,
        ),
        ("qt-table", CheckKind::QtTable, true),
        ("qt-symmetry", CheckKind::QtSymmetry, true),
        (
            "scaffolding-grouped",
            equivalence(MapId::Scaffolding, MapId::ScaffoldingGrouped),
            true,
        ),
        (
            "scaffolding-conjugate-zeta",
            equivalence(MapId::ScaffoldingConjugate, MapId::Sweep),
            true,
        ),
        (
            "scaffolding-direct-zeta",
            equivalence(MapId::Scaffolding, MapId::Sweep),
            false,
        ),
        ("variant-search", CheckKind::VariantSearch, false),
    ];
    catalog
        .into_iter()
        .filter_map(|(name, kind, must_pass)| {
            let (lo, hi) = kind.supported_range();
            let hi = n_hi.min(hi);
            (lo <= hi).then(|| CheckSpec::new(name, lo, hi, kind, must_pass))
        })
        .collect()
}
