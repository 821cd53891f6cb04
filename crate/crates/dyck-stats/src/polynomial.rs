//! Sparse bivariate polynomials in `q` and `t` with nonnegative
//! arbitrary-precision coefficients, and the q,t-Catalan generators.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use dyck_core::{DyckWord, Enumeration, SemilengthOutOfRange};

use crate::statistics::{area, bounce, dinv};

/// Largest semilength for which the exhaustive q,t-Catalan sum runs.
pub const MAX_QT_SEMILENGTH: usize = 14;

/// Which statistic pair generates the polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QtMode {
    /// `q^area(w) * t^bounce(w)`
    AreaBounce,
    /// `q^dinv(w) * t^area(w)`
    DinvArea,
}

impl QtMode {
    pub fn exponents(self, word: &DyckWord) -> (u32, u32) {
        match self {
            QtMode::AreaBounce => (area(word), bounce(word)),
            QtMode::DinvArea => (dinv(word), area(word)),
        }
    }
}

/// A polynomial in `q` and `t` with nonnegative integer coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QtPolynomial {
    terms: BTreeMap<(u32, u32), BigUint>,
}

#[derive(Serialize)]
struct TermJson {
    q: u32,
    t: u32,
    c: String,
}

impl QtPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `count` to the coefficient of `q^q_exp * t^t_exp`.
    pub fn add_term(&mut self, q_exp: u32, t_exp: u32, count: u64) {
        if count == 0 {
            return;
        }
        *self
            .terms
            .entry((q_exp, t_exp))
            .or_insert_with(|| BigUint::from(0u32)) += count;
    }

    /// Merges another polynomial by coefficient-wise addition. Merging is
    /// commutative, so chunked partial sums combine in any order.
    pub fn merge(&mut self, other: &QtPolynomial) {
        for (&key, coeff) in &other.terms {
            *self.terms.entry(key).or_insert_with(|| BigUint::from(0u32)) += coeff;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct monomials.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms ordered by descending `q` exponent, then descending `t`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigUint)> {
        self.terms.iter().rev().map(|(&(q, t), c)| (q, t, c))
    }

    pub fn coefficient(&self, q_exp: u32, t_exp: u32) -> Option<&BigUint> {
        self.terms.get(&(q_exp, t_exp))
    }

    /// Value at `q = t = 1`, the total coefficient mass.
    pub fn mass(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// Whether the polynomial is invariant under swapping `q` and `t`.
    pub fn is_qt_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&(q, t), c)| self.terms.get(&(t, q)) == Some(c))
    }

    /// Monomials of `self` that differ from `other` (missing, extra, or
    /// with another coefficient), counted over the union of supports.
    pub fn difference_count(&self, other: &QtPolynomial) -> usize {
        let mut diffs = 0;
        for (key, coeff) in &self.terms {
            if other.terms.get(key) != Some(coeff) {
                diffs += 1;
            }
        }
        diffs
            + other
                .terms
                .keys()
                .filter(|key| !self.terms.contains_key(*key))
                .count()
    }

    /// JSON form: an array of `{"q": int, "t": int, "c": "coefficient"}`
    /// objects in rendering order.
    pub fn to_json(&self) -> String {
        let terms: Vec<TermJson> = self
            .terms()
            .map(|(q, t, c)| TermJson {
                q,
                t,
                c: c.to_string(),
            })
            .collect();
        serde_json::to_string(&terms).expect("term serialization cannot fail")
    }
}

impl fmt::Display for QtPolynomial {
    /// Text form: terms joined by ` + ` in descending `(q, t)` order,
    /// e.g. `q^3 + q^2*t + q*t^2 + q*t + t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let one = BigUint::from(1u32);
        for (idx, (q, t, coeff)) in self.terms().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            if *coeff != one || (q == 0 && t == 0) {
                factors.push(coeff.to_string());
            }
            for (var, exp) in [("q", q), ("t", t)] {
                match exp {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{exp}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// The q,t-Catalan polynomial `C_n(q, t)` as the exhaustive sum of
/// `q^a * t^b` over all Dyck words of semilength `n`, with `(a, b)`
/// given by the mode.
pub fn qt_catalan(n: usize, mode: QtMode) -> Result<QtPolynomial, SemilengthOutOfRange> {
    SemilengthOutOfRange::check(n, 1, MAX_QT_SEMILENGTH)?;
    let enumeration = Enumeration::new(n).expect("qt cap is below the enumeration cap");
    Ok(qt_partial_sum(&enumeration, 0, enumeration.count(), mode))
}

/// Partial q,t-Catalan sum over a contiguous rank range. Summands are
/// independent, so disjoint ranges may be evaluated concurrently and
/// merged; the result does not depend on the chunking.
pub fn qt_partial_sum(
    enumeration: &Enumeration,
    start: u64,
    end: u64,
    mode: QtMode,
) -> QtPolynomial {
    let mut poly = QtPolynomial::new();
    for word in enumeration.range(start, end) {
        let (q, t) = mode.exponents(&word);
        poly.add_term(q, t, 1);
    }
    poly
}
