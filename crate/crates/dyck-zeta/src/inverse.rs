//! Table-based inverse of the sweep zeta.
//!
//! No direct inversion algorithm is provided; the inverse is materialized
//! by sweeping every word of one semilength and indexing the images.

use thiserror::Error;

use dyck_core::{DyckWord, Enumeration, SemilengthOutOfRange};

use crate::classical::zeta_sweep;
use crate::error::MapError;

/// Largest semilength for which the full inverse table is materialized.
pub const MAX_INVERSE_SEMILENGTH: usize = 14;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum InverseError {
    #[error(transparent)]
    OutOfRange(#[from] SemilengthOutOfRange),
    #[error("zeta is not injective: {first} and {second} share the image {image}")]
    NotInjective {
        image: String,
        first: String,
        second: String,
    },
    #[error(transparent)]
    Map(#[from] MapError),
}

/// The bijection table `zeta(w) -> w` over one semilength. Entries are
/// sorted by packed image pattern; pre-images are stored as enumeration
/// ranks and reconstructed on lookup.
#[derive(Clone, Debug)]
pub struct InverseTable {
    enumeration: Enumeration,
    entries: Vec<(u32, u32)>,
}

impl InverseTable {
    pub fn semilength(&self) -> usize {
        self.enumeration.semilength()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Pre-image of a word under the sweep zeta.
    pub fn lookup(&self, image: &DyckWord) -> Option<DyckWord> {
        if image.semilength() != self.semilength() {
            return None;
        }
        self.entries
            .binary_search_by_key(&image.bits(), |&(img, _)| img)
            .ok()
            .map(|idx| self.enumeration.unrank(u64::from(self.entries[idx].1)))
    }
}

/// Materializes the inverse of the sweep zeta over all of `Dyck(n)`.
pub fn inverse_zeta(n: usize) -> Result<InverseTable, InverseError> {
    SemilengthOutOfRange::check(n, 1, MAX_INVERSE_SEMILENGTH)?;
    let enumeration = Enumeration::new(n).expect("inverse cap is below the enumeration cap");
    let mut entries = Vec::with_capacity(enumeration.count() as usize);
    for (rank, word) in enumeration.iter().enumerate() {
        let image = zeta_sweep(&word)?;
        entries.push((image.bits(), rank as u32));
    }
    entries.sort_unstable_by_key(|&(img, _)| img);
    for pair in entries.windows(2) {
        if pair[0].0 == pair[1].0 {
            let first = enumeration.unrank(u64::from(pair[0].1));
            let second = enumeration.unrank(u64::from(pair[1].1));
            return Err(InverseError::NotInjective {
                image: zeta_sweep(&first)?.render(),
                first: first.render(),
                second: second.render(),
            });
        }
    }
    Ok(InverseTable {
        enumeration,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> DyckWord {
        DyckWord::parse(text).unwrap()
    }

    #[test]
    fn table_for_semilength_one() {
        let table = inverse_zeta(1).unwrap();
        assert_eq!(table.len(), 1);
        assert_eq!(table.lookup(&w("10")), Some(w("10")));
    }

    #[test]
    fn table_for_semilength_two() {
        let table = inverse_zeta(2).unwrap();
        assert_eq!(table.len(), 2);
        assert_eq!(table.lookup(&w("1100")), Some(w("1010")));
        assert_eq!(table.lookup(&w("1010")), Some(w("1100")));
    }

    #[test]
    fn inverts_the_semilength_eight_example() {
        let table = inverse_zeta(8).unwrap();
        assert_eq!(
            table.lookup(&w("1011010111001000")),
            Some(w("1110101100011000"))
        );
    }

    #[test]
    fn round_trips_exhaustively() {
        for n in 1..=8 {
            let table = inverse_zeta(n).unwrap();
            assert_eq!(table.len() as u64, dyck_core::catalan_u64(n));
            for word in dyck_core::enumerate(n).unwrap().iter() {
                let image = zeta_sweep(&word).unwrap();
                assert_eq!(table.lookup(&image), Some(word), "{word}");
            }
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(inverse_zeta(15), Err(InverseError::OutOfRange(_))));
        assert!(matches!(inverse_zeta(0), Err(InverseError::OutOfRange(_))));
    }

    #[test]
    fn lookup_of_wrong_semilength_is_none() {
        let table = inverse_zeta(2).unwrap();
        assert_eq!(table.lookup(&w("10")), None);
    }
}
