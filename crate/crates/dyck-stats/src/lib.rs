//! Dyck-path statistics and q,t-Catalan polynomial generation.
//!
//! `area`, `bounce` and `dinv` are the classical statistics whose joint
//! distributions generate the q,t-Catalan numbers: summing
//! `q^area * t^bounce` or `q^dinv * t^area` over all Dyck words of one
//! semilength yields the same symmetric polynomial `C_n(q, t)`, whose
//! value at `q = t = 1` is the Catalan number.

mod polynomial;
mod statistics;

pub use polynomial::{qt_catalan, qt_partial_sum, QtMode, QtPolynomial, MAX_QT_SEMILENGTH};
pub use statistics::{area, bounce, dinv};
